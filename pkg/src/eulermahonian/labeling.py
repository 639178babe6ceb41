"""Space-labeling schemes used to insert copies of the largest letter.

A word of length L has gaps 0..L; gap s is the space after the first s
letters, so "the space before the letter at position j" (1-indexed) is gap
j - 1.  A gap is either starred (``None``) or carries an integer label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import ParameterError, letter_counts
from .stats import excedance_places

__all__ = ["LabeledSpaces", "gden_labeling", "gmaj_labeling", "maj_set"]


@dataclass(frozen=True)
class LabeledSpaces:
    word: tuple[int, ...]
    gap_status: tuple[int | None, ...]

    @property
    def word_length(self) -> int:
        return len(self.word)

    @property
    def label_index(self) -> dict[int, int]:
        return {v: s for s, v in enumerate(self.gap_status) if v is not None}

    def unstarred(self) -> list[int]:
        return [s for s, v in enumerate(self.gap_status) if v is not None]

    def starred(self) -> list[int]:
        return [s for s, v in enumerate(self.gap_status) if v is None]

    def labels(self) -> tuple[int, ...]:
        """Labels of the unstarred gaps, read left to right."""
        return tuple(v for v in self.gap_status if v is not None)

    def render(self) -> str:
        """Letters interleaved with gap marks, e.g. ``{5}3{6}2{*}5{0}``."""
        out = []
        for s, v in enumerate(self.gap_status):
            out.append("{*}" if v is None else "{%d}" % v)
            if s < len(self.word):
                out.append(str(self.word[s]))
        return "".join(out)


def _assign(length: int, star: set[int], fixed: dict[int, int], start: int) -> tuple:
    status: list[int | None] = [None] * (length + 1)
    for s, v in fixed.items():
        status[s] = v
    nxt = start
    for s in range(length + 1):
        if s not in star and s not in fixed:
            status[s] = nxt
            nxt += 1
    return tuple(status)


def _gamma_of(w: Sequence[int], n: int, g: int) -> int:
    return sum(1 for a in w if n - g + 1 <= a <= n - 1)


def gden_labeling(w: Sequence[int], n: int, g: int, h: int) -> LabeledSpaces:
    """Labeling used by the Denert-side insertion map.

    The word may already contain some copies of n.  Gaps past the first m'
    letters (m' = number of letters below n) are starred, by position.
    """
    w = tuple(w)
    if g < 1 or h < 1:
        raise ParameterError("g and h must be >= 1")
    if n < max(g + 1, h):
        raise ParameterError(f"need n >= max(g+1, h), got n={n}, g={g}, h={h}")
    if any(a > n for a in w):
        raise ParameterError(f"letters must not exceed n={n}")
    m1 = sum(1 for a in w if a < n)
    gam = _gamma_of(w, n, g)
    fixed = {m1 - v: v for v in range(gam + 1)}
    places = excedance_places(w, g, h).places
    for v, i in enumerate(reversed(places), gam + 1):
        if i - 1 in fixed:
            raise AssertionError(f"excedance gap {i - 1} collides with a reserved gap")
        fixed[i - 1] = v
    star = set(range(m1 + 1, len(w) + 1))
    return LabeledSpaces(w, _assign(len(w), star, fixed, gam + len(places) + 1))


def maj_set(w: Sequence[int], n: int, g: int, level: int) -> tuple[int, ...]:
    """Positions j whose preceding gap gets a small label in the major-index scheme."""
    out = []
    for j in range(1, len(w) + 1):
        a = w[j - 1]
        drop = j >= 2 and w[j - 2] >= a + g and a >= level
        if drop or a < level or n > a >= n - g + 1:
            out.append(j)
    return tuple(out)


def gmaj_labeling(w: Sequence[int], n: int, g: int, level: int) -> tuple[tuple[int, ...], LabeledSpaces]:
    """Labeling used by the major-index insertion; returns (S, labeled gaps)."""
    w = tuple(w)
    if g < 1 or level < 1:
        raise ParameterError("g and level must be >= 1")
    if n < g + level:
        raise ParameterError(f"need n >= g + level, got n={n}, g={g}, level={level}")
    if any(a > n for a in w):
        raise ParameterError(f"letters must not exceed n={n}")
    s_set = maj_set(w, n, g, level)
    star = {j - 1 for j in range(1, len(w) + 1) if w[j - 1] == n}
    fixed = {len(w): 0}
    for v, j in enumerate(reversed(s_set), 1):
        fixed[j - 1] = v
    return s_set, LabeledSpaces(w, _assign(len(w), star, fixed, len(s_set) + 1))


def multiplicity_sums(w: Sequence[int], n: int, g: int, level: int) -> tuple[int, int]:
    """(delta_level, gamma_g) read off the letters of w below n."""
    ks = letter_counts([a for a in w if a < n], n)
    return sum(ks[: level - 1]), sum(ks[n - g: n - 1])
