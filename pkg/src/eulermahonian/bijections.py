"""Insertion maps phi/psi and the iterated bijections for the Denert and major-index sides.

Words are tuples of ints.  Internally positions are 0-indexed; the trace
objects report 1-indexed positions (``y``) like everything else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import ParameterError, Partition
from .labeling import gden_labeling, gmaj_labeling
from .stats import excedance_places, gden, gdes_gmaj

__all__ = [
    "TraceStep", "MapTrace",
    "phi", "psi", "phi_den", "phi_den_inverse", "phi_maj", "phi_maj_inverse",
    "labeled_position",
]


@dataclass(frozen=True)
class TraceStep:
    b: int
    word: tuple[int, ...]
    labels: tuple[int, ...]
    y: int
    label: int
    remaining: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "b": self.b, "word": list(self.word), "labels": list(self.labels),
            "y": self.y, "label": self.label, "remaining": list(self.remaining),
        }


@dataclass(frozen=True)
class MapTrace:
    steps: tuple[TraceStep, ...] = field(default_factory=tuple)
    result: tuple[int, ...] = ()

    def ys(self) -> tuple[int, ...]:
        return tuple(s.y for s in self.steps)

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps], "result": list(self.result)}


def _count_below(w: Sequence[int], n: int) -> int:
    return sum(1 for a in w if a < n)


def labeled_position(w: Sequence[int], c: int, n: int, g: int, h: int) -> int:
    """1-indexed position y whose preceding gap carries label c (m'+1 when c = 0)."""
    m1 = _count_below(w, n)
    if c == 0:
        return m1 + 1
    return gden_labeling(w, n, g, h).label_index[c] + 1


def phi(w: Sequence[int], c: int, n: int, g: int, h: int) -> tuple[int, ...]:
    """Insert one more n into w, raising gden_h by c when no n precedes the labeled gap."""
    w = tuple(w)
    m1 = _count_below(w, n)
    if not 0 <= c <= m1:
        raise ParameterError(f"label must lie in 0..{m1}, got {c}")
    if c == 0:
        return w[:m1] + (n,) + w[m1:]
    lab = gden_labeling(w, n, g, h)
    y = lab.label_index[c]
    size = len(w)
    x = sorted(w)
    exc = {i - 1 for i in excedance_places(w, g, h).places}
    u: list[int | None] = list(w) + [None]
    if y in exc:
        chain = [i for i in sorted(exc) if i >= y]
        k = next(
            z for z in range(len(chain))
            if w[chain[z]] < (x[chain[z + 1]] if z + 1 < len(chain) else n) + g
        )
        p = x.index(w[chain[k]] - g + 1)
        js = [j for j in range(p, size) if j not in exc] + [size]
        u[chain[0]] = n
        for z in range(1, k + 1):
            u[chain[z]] = w[chain[z - 1]]
        u[js[0]] = w[chain[k]]
    else:
        js = [y] + [j for j in range(y + 1, size) if j not in exc] + [size]
        u[y] = n
    for z in range(len(js) - 1):
        u[js[z + 1]] = w[js[z]]
    return tuple(u)


def psi(u: Sequence[int], n: int, g: int, h: int) -> tuple[tuple[int, ...], int]:
    """Remove the leftmost n; returns (w, c) with c = gden_h(u) - gden_h(w)."""
    u = tuple(u)
    if n not in u:
        raise ParameterError(f"word contains no letter {n}")
    m1 = _count_below(u, n)
    y = u.index(n)
    if y == m1:
        return u[:y] + u[y + 1:], 0
    x = sorted(u)
    exc = {i - 1 for i in excedance_places(u, g, h).places}
    js = [y] + [j for j in range(y + 1, len(u)) if j not in exc]
    top = len(js) - 1
    pivot = 0
    for z in range(top, 0, -1):
        if u[js[z]] >= x[js[z - 1]] + g and u[js[z]] >= h:
            pivot = z
            break
    w = list(u)
    if pivot == 0:
        for z in range(top):
            w[js[z]] = u[js[z + 1]]
    else:
        p = x.index(u[js[pivot]] - g + 1)
        ii = [y] + [i for i in sorted(exc) if y < i < p] + [js[pivot]]
        for z in range(len(ii) - 1):
            w[ii[z]] = u[ii[z + 1]]
        for z in range(pivot, top):
            w[js[z]] = u[js[z + 1]]
    del w[js[top]]
    w = tuple(w)
    return w, gden(u, g, h) - gden(w, g, h)


def _as_parts(lam, n_mult: int | None, m1: int) -> Partition:
    if isinstance(lam, Partition):
        parts = lam.parts
    else:
        parts = tuple(lam)
    height = len(parts) if n_mult is None else n_mult
    try:
        return Partition(parts, height, m1)
    except ParameterError as exc:
        raise ParameterError(f"partition {parts} is not in P({height}, {m1}): {exc}") from None


def _check_base(w: Sequence[int]) -> int:
    if not w:
        raise ParameterError("base word must be nonempty")
    n = max(w) + 1
    present = set(w)
    if present != set(range(1, n)):
        raise ParameterError(f"base word must use every letter 1..{n - 1}")
    return n


def _select(labels: Sequence[int], remaining: list[int]) -> int:
    for y in range(len(labels), 0, -1):
        if labels[y - 1] in remaining:
            return y
    raise AssertionError("no label of the current word lies in the partition")


def phi_den(w: Sequence[int], lam, g: int, h: int, n_mult: int | None = None) -> tuple[tuple[int, ...], MapTrace]:
    """Map (w, lambda) to a word with k_n extra copies of n = max(w) + 1.

    ``lam`` is consumed as a multiset of parts; its number of parts (after
    padding to ``n_mult``) is the multiplicity of the new letter.
    """
    w = tuple(w)
    n = _check_base(w)
    if n < max(g + 1, h):
        raise ParameterError(f"need n >= max(g+1, h), got n={n}, g={g}, h={h}")
    part = _as_parts(lam, n_mult, len(w))
    remaining = list(part.parts)
    steps = []
    for b in range(part.height):
        labels = gden_labeling(w, n, g, h).labels()
        y = _select(labels, remaining)
        c = labels[y - 1]
        steps.append(TraceStep(b, w, labels, y, c, tuple(remaining)))
        remaining.remove(c)
        w = phi(w, c, n, g, h)
    return w, MapTrace(tuple(steps), w)


def phi_den_inverse(u: Sequence[int], g: int, h: int) -> tuple[tuple[int, ...], Partition]:
    u = tuple(u)
    n = max(u)
    k_n = u.count(n)
    m1 = len(u) - k_n
    if n < max(g + 1, h):
        raise ParameterError(f"need n >= max(g+1, h), got n={n}, g={g}, h={h}")
    labels = []
    for _ in range(k_n):
        u, c = psi(u, n, g, h)
        labels.append(c)
    return u, Partition(tuple(sorted(labels, reverse=True)), k_n, m1)


def phi_maj(w: Sequence[int], lam, g: int, level: int, n_mult: int | None = None) -> tuple[tuple[int, ...], MapTrace]:
    """Insert k_n copies of n = max(w) + 1, each into a gap chosen by the gmaj labeling."""
    w = tuple(w)
    n = _check_base(w)
    if n < g + level:
        raise ParameterError(f"need n >= g + level, got n={n}, g={g}, level={level}")
    part = _as_parts(lam, n_mult, len(w))
    remaining = list(part.parts)
    steps = []
    for b in range(part.height):
        lab = gmaj_labeling(w, n, g, level)[1]
        labels = lab.labels()
        y = _select(labels, remaining)
        c = labels[y - 1]
        steps.append(TraceStep(b, w, labels, y, c, tuple(remaining)))
        remaining.remove(c)
        s = lab.unstarred()[y - 1]
        w = w[:s] + (n,) + w[s:]
    return w, MapTrace(tuple(steps), w)


def phi_maj_inverse(u: Sequence[int], g: int, level: int) -> tuple[tuple[int, ...], Partition]:
    u = tuple(u)
    n = max(u)
    k_n = u.count(n)
    if n < g + level:
        raise ParameterError(f"need n >= g + level, got n={n}, g={g}, level={level}")
    labels = []
    for _ in range(k_n):
        y = u.index(n)
        w = u[:y] + u[y + 1:]
        labels.append(gdes_gmaj(u, g, level).gmaj - gdes_gmaj(w, g, level).gmaj)
        u = w
    return u, Partition(tuple(sorted(labels, reverse=True)), k_n, len(u))
