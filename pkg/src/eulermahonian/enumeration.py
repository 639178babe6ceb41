"""Exhaustive enumeration of multipermutations and joint statistic distributions.

Words are streamed in lexicographic order.  Distributions are computed on
chunks of words packed into numpy arrays; the per-word functions in
``stats`` are the reference these batch evaluators are tested against.
"""

from __future__ import annotations

import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import stats
from .core import BivarPoly, Multiset, ParameterError, ParseError

__all__ = [
    "StatSpec", "words_of", "word_chunks", "evaluate_batch",
    "joint_dist", "joint_dists", "single_dist", "stat_table",
]

CHUNK = 4096

_PARAMS = {
    "des": "gl", "maj": "gl", "gdes": "gl", "gmaj": "gl",
    "exc": "gl", "gexc": "gl", "den": "gh", "gden": "gh",
    "inv": "", "imv": "",
}
_CANON = {"gdes": "des", "gmaj": "maj", "gexc": "exc", "gden": "den"}
_SPEC_RE = re.compile(r"^(\d+)?([a-z]+)((?::[glh]=\d+)*)$")


@dataclass(frozen=True)
class StatSpec:
    """A statistic name plus its gap/level parameters.

    ``des``/``maj``/``exc`` take g and l, ``den`` takes g and h, ``inv`` and
    ``imv`` take none.  The g-prefixed names are synonyms.
    """

    name: str
    g: int = 1
    level: int = 1
    h: int = 1

    def __post_init__(self):
        name = _CANON.get(self.name, self.name)
        if name not in _PARAMS:
            raise ParseError(f"unknown statistic {self.name!r}")
        object.__setattr__(self, "name", name)
        for key, letter in (("g", "g"), ("level", "l"), ("h", "h")):
            value = getattr(self, key)
            if value < 1:
                raise ParameterError(f"{key} must be >= 1 in {self.name}")
            if value != 1 and letter not in _PARAMS[name]:
                raise ParseError(f"statistic {name} takes no {letter} parameter")

    @classmethod
    def parse(cls, text: str) -> "StatSpec":
        """Grammar ``[r]name[:g=G][:l=L][:h=H]``; a numeric prefix r sets g."""
        m = _SPEC_RE.match(text.strip())
        if not m:
            raise ParseError(f"cannot parse statistic {text!r}")
        prefix, name, rest = m.groups()
        params = {"g": 1, "l": 1, "h": 1}
        seen = set()
        for item in filter(None, rest.split(":")):
            key, value = item.split("=")
            if key in seen:
                raise ParseError(f"parameter {key} repeated in {text!r}")
            seen.add(key)
            params[key] = int(value)
        if prefix is not None:
            if "g" in seen:
                raise ParseError(f"gap given twice in {text!r}")
            params["g"] = int(prefix)
        return cls(name, params["g"], params["l"], params["h"])

    def __str__(self) -> str:
        extra = [f"{k}={v}" for k, v in (("g", self.g), ("l", self.level), ("h", self.h)) if v != 1]
        return ":".join([self.name] + extra)

    def of_word(self, w: Sequence[int]) -> int:
        """Per-word value computed by the reference functions."""
        if self.name == "des":
            return stats.gdes_gmaj(w, self.g, self.level).gdes
        if self.name == "maj":
            return stats.gdes_gmaj(w, self.g, self.level).gmaj
        if self.name == "exc":
            return stats.gexc(w, self.g, self.level)
        if self.name == "den":
            return stats.gden(w, self.g, self.h)
        if self.name == "inv":
            return stats.inv(w)
        return stats.imv(w)


def _next_permutation(a: list[int]) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def words_of(multiset: Multiset, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every word of the multiset once, in lexicographic order.

    With ``first`` set, only the words beginning with that letter; these
    ranges are disjoint and together cover the whole set.
    """
    letters = list(multiset.letters())
    if first is not None:
        if not 1 <= first <= multiset.n:
            raise ParameterError(f"first letter {first} not in the multiset")
        letters.remove(first)
        letters = [first] + letters
    while True:
        yield tuple(letters)
        if not _next_permutation(letters) or (first is not None and letters[0] != first):
            return


def word_chunks(multiset: Multiset, first: int | None = None, size: int = CHUNK) -> Iterator[np.ndarray]:
    buf = []
    for w in words_of(multiset, first):
        buf.append(w)
        if len(buf) == size:
            yield np.array(buf, dtype=np.int16)
            buf = []
    if buf:
        yield np.array(buf, dtype=np.int16)


class _Batch:
    """Arrays shared by the statistics of one chunk, built lazily."""

    def __init__(self, words: np.ndarray):
        self.W = words
        self.m = words.shape[1]
        self.x = np.sort(words[0]).astype(np.int16)
        self.pos = np.arange(1, self.m + 1)
        self._pair = None

    def pairs(self):
        if self._pair is None:
            A = self.W[:, :, None]
            B = self.W[:, None, :]
            upper = np.triu(np.ones((self.m, self.m), dtype=bool), 1)
            self._pair = (A, B, upper)
        return self._pair

    def gdes_gmaj(self, g, level):
        W = self.W
        a, b = W[:, :-1], W[:, 1:]
        D = (a >= b + g) & (b >= level)
        A, B, upper = self.pairs()
        P = (A > B) & ((B < level) | (A < B + g)) & upper
        return D.sum(1), D.astype(np.int64) @ self.pos[:-1] + P.sum((1, 2))

    def gexc(self, g, level):
        return ((self.W >= self.x + g) & (self.x >= level)).sum(1)

    def gden(self, g, h):
        W, x = self.W, self.x
        E = (W >= x + g) & (W >= h)
        top = int(x[-1]) + 1
        bw = np.array([int(((v - g < x) & (x < v)).sum()) for v in range(top)], dtype=np.int64)
        place = (E * (self.pos + bw[W])).sum(1)
        A, B, upper = self.pairs()
        both = E[:, :, None] & E[:, None, :]
        neither = ~E[:, :, None] & ~E[:, None, :]
        weak = (both & (A >= B) & upper).sum((1, 2))
        strict = (neither & (A > B) & upper).sum((1, 2))
        return place + weak + strict

    def inv_imv(self):
        A, B, upper = self.pairs()
        return ((A > B) & upper).sum((1, 2)), ((A >= B) & upper).sum((1, 2))


def _evaluate(batch: _Batch, spec: StatSpec, cache: dict) -> np.ndarray:
    if spec.name in ("des", "maj"):
        key = ("dm", spec.g, spec.level)
        if key not in cache:
            cache[key] = batch.gdes_gmaj(spec.g, spec.level)
        return cache[key][0 if spec.name == "des" else 1]
    if spec.name == "exc":
        key = ("exc", spec.g, spec.level)
        if key not in cache:
            cache[key] = batch.gexc(spec.g, spec.level)
        return cache[key]
    if spec.name == "den":
        key = ("den", spec.g, spec.h)
        if key not in cache:
            cache[key] = batch.gden(spec.g, spec.h)
        return cache[key]
    if "ii" not in cache:
        cache["ii"] = batch.inv_imv()
    return cache["ii"][0 if spec.name == "inv" else 1]


def evaluate_batch(words: np.ndarray, spec: StatSpec) -> np.ndarray:
    """Vectorized value of ``spec`` for each row of a 2-d array of words."""
    return _evaluate(_Batch(np.asarray(words, dtype=np.int16)), spec, {})


def _count_pairs(t: np.ndarray, q: np.ndarray, into: Counter) -> None:
    keys, counts = np.unique(np.stack([t, q], axis=1), axis=0, return_counts=True)
    for (a, b), c in zip(keys.tolist(), counts.tolist()):
        into[(a, b)] += c


def _partial(args) -> list[dict]:
    multiset, first, pairs = args
    acc = [Counter() for _ in pairs]
    for chunk in word_chunks(multiset, first):
        batch, cache = _Batch(chunk), {}
        for k, (a, b) in enumerate(pairs):
            _count_pairs(_evaluate(batch, a, cache), _evaluate(batch, b, cache), acc[k])
    return [dict(c) for c in acc]


def joint_dists(
    multiset: Multiset,
    pairs: Sequence[tuple[StatSpec, StatSpec]],
    workers: int = 1,
) -> list[BivarPoly]:
    """One pass over the words, one polynomial sum t^a q^b per requested pair."""
    pairs = list(pairs)
    if workers <= 1 or multiset.n == 1:
        parts = [_partial((multiset, None, pairs))]
    else:
        jobs = [(multiset, a, pairs) for a in range(1, multiset.n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_partial, jobs))
    out = []
    for k in range(len(pairs)):
        total: Counter = Counter()
        for part in parts:
            total.update(part[k])
        out.append(BivarPoly(total))
    return out


def joint_dist(multiset: Multiset, t_stat: StatSpec, q_stat: StatSpec, workers: int = 1) -> BivarPoly:
    return joint_dists(multiset, [(t_stat, q_stat)], workers)[0]


def single_dist(multiset: Multiset, spec: StatSpec) -> dict[int, int]:
    """Distribution of one statistic, keyed by value."""
    return joint_dist(multiset, spec, spec).q_marginal()


def stat_table(multiset: Multiset, pairs: Sequence[tuple[StatSpec, StatSpec]]) -> Iterator[tuple]:
    """Rows (word, [(a, b) per pair]) in lexicographic word order."""
    for w in words_of(multiset):
        yield w, [(a.of_word(w), b.of_word(w)) for a, b in pairs]
