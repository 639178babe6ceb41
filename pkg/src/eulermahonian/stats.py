"""Classical and g-gap l-level statistics of a single word.

Every function takes a plain sequence of positive ints.  Positions in the
returned sets are 1-indexed.  These are direct O(m^2) scans and double as the
reference implementation for the vectorized evaluators in ``enumeration``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import ParameterError

__all__ = [
    "DesMaj", "InvImv", "GapMaj", "Excedances", "StatReport",
    "des_maj", "inv_imv", "inv", "imv", "gdes_gmaj", "excedance_places",
    "b_weight", "gden", "gexc", "exc", "den", "report",
    "permutation_gden", "permutation_gexc",
]


class DesMaj(NamedTuple):
    descents: tuple[int, ...]
    des: int
    maj: int


class InvImv(NamedTuple):
    inv: int
    imv: int


class GapMaj(NamedTuple):
    descents: tuple[int, ...]
    inversions: tuple[tuple[int, int], ...]
    gdes: int
    gmaj: int


class Excedances(NamedTuple):
    places: tuple[int, ...]
    non_places: tuple[int, ...]
    letters: tuple[int, ...]
    non_letters: tuple[int, ...]


def _check(**params):
    for name, value in params.items():
        if value < 1:
            raise ParameterError(f"{name} must be >= 1, got {value}")


def des_maj(w: Sequence[int]) -> DesMaj:
    descents = tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])
    return DesMaj(descents, len(descents), sum(descents))


def inv_imv(w: Sequence[int]) -> InvImv:
    m = len(w)
    strict = weak = 0
    for i in range(m):
        for j in range(i + 1, m):
            if w[i] > w[j]:
                strict += 1
                weak += 1
            elif w[i] == w[j]:
                weak += 1
    return InvImv(strict, weak)


def inv(w: Sequence[int]) -> int:
    return inv_imv(w).inv


def imv(w: Sequence[int]) -> int:
    return inv_imv(w).imv


def gdes_gmaj(w: Sequence[int], g: int = 1, level: int = 1) -> GapMaj:
    """g-gap l-level descents, the retained inversion pairs, gdes and gmaj.

    A descent at i needs w_i >= w_{i+1} + g and w_{i+1} >= level.  An
    inversion (i, j) is retained when w_j < level or the drop is below g.
    """
    _check(g=g, level=level)
    m = len(w)
    descents = tuple(i for i in range(1, m) if w[i - 1] >= w[i] + g and w[i] >= level)
    pairs = tuple(
        (i + 1, j + 1)
        for i in range(m)
        for j in range(i + 1, m)
        if w[i] > w[j] and (w[j] < level or w[i] < w[j] + g)
    )
    return GapMaj(descents, pairs, len(descents), sum(descents) + len(pairs))


def excedance_places(w: Sequence[int], g: int = 1, h: int = 1) -> Excedances:
    """Places i with w_i >= x_i + g and w_i >= h, where x is w sorted."""
    _check(g=g, h=h)
    x = sorted(w)
    places, rest = [], []
    for i, (a, b) in enumerate(zip(w, x), 1):
        (places if a >= b + g and a >= h else rest).append(i)
    return Excedances(
        tuple(places), tuple(rest),
        tuple(w[i - 1] for i in places), tuple(w[i - 1] for i in rest),
    )


def b_weight(w: Sequence[int], i: int, g: int) -> int:
    """Number of sorted letters strictly between w_i - g and w_i."""
    _check(g=g)
    if not 1 <= i <= len(w):
        raise ParameterError(f"position {i} outside 1..{len(w)}")
    a = w[i - 1]
    return sum(1 for x in w if a - g < x < a)


def gden(w: Sequence[int], g: int = 1, h: int = 1) -> int:
    e = excedance_places(w, g, h)
    return (
        sum(i + b_weight(w, i, g) for i in e.places)
        + inv_imv(e.letters).imv
        + inv_imv(e.non_letters).inv
    )


def gexc(w: Sequence[int], g: int = 1, level: int = 1) -> int:
    """Count of i with w_i >= x_i + g and x_i >= level (the floor is on x_i)."""
    _check(g=g, level=level)
    x = sorted(w)
    return sum(1 for a, b in zip(w, x) if a >= b + g and b >= level)


def exc(w: Sequence[int]) -> int:
    x = sorted(w)
    return sum(1 for a, b in zip(w, x) if a > b)


def den(w: Sequence[int]) -> int:
    # written out separately from gden so the g = h = 1 reduction is a real check
    x = sorted(w)
    places = [i for i in range(len(w)) if w[i] > x[i]]
    others = [i for i in range(len(w)) if w[i] <= x[i]]
    return (
        sum(i + 1 for i in places)
        + imv([w[i] for i in places])
        + inv([w[i] for i in others])
    )


def permutation_gden(pi: Sequence[int], g: int = 1, level: int = 1) -> int:
    """Closed form of gden valid when ``pi`` is a permutation of 1..m."""
    places = [i for i in range(1, len(pi) + 1) if pi[i - 1] >= i + g and pi[i - 1] >= level]
    others = [i for i in range(1, len(pi) + 1) if i not in places]
    return (
        sum(i + g - 1 for i in places)
        + inv([pi[i - 1] for i in places])
        + inv([pi[i - 1] for i in others])
    )


def permutation_gexc(pi: Sequence[int], g: int = 1, level: int = 1) -> int:
    return sum(1 for i in range(1, len(pi) + 1) if pi[i - 1] >= i + g and i >= level)


@dataclass(frozen=True)
class StatReport:
    word: tuple[int, ...]
    g: int
    level: int
    h: int
    descents: tuple[int, ...]
    des: int
    maj: int
    inv: int
    imv: int
    excedance_places: tuple[int, ...]
    exc: int
    den: int
    gap_descents: tuple[int, ...]
    gap_inversions: tuple[tuple[int, int], ...]
    gdes: int
    gmaj: int
    gap_excedance_places: tuple[int, ...]
    gexc: int
    gden: int

    def to_dict(self) -> dict:
        out = {}
        for key, value in self.__dict__.items():
            out[key] = [list(v) for v in value] if key == "gap_inversions" else (
                list(value) if isinstance(value, tuple) else value)
        return out


def report(w: Sequence[int], g: int = 1, level: int = 1, h: int = 1) -> StatReport:
    w = tuple(w)
    dm = des_maj(w)
    ii = inv_imv(w)
    gm = gdes_gmaj(w, g, level)
    return StatReport(
        word=w, g=g, level=level, h=h,
        descents=dm.descents, des=dm.des, maj=dm.maj,
        inv=ii.inv, imv=ii.imv,
        excedance_places=excedance_places(w).places, exc=exc(w), den=den(w),
        gap_descents=gm.descents, gap_inversions=gm.inversions,
        gdes=gm.gdes, gmaj=gm.gmaj,
        gap_excedance_places=excedance_places(w, g, h).places,
        gexc=gexc(w, g, level), gden=gden(w, g, h),
    )
