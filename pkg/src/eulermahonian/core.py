"""Value types shared across the package: multisets, words, partitions, polynomials.

Letters and positions are 1-indexed in everything that leaves this package
(reports, serialization).  Words are plain tuples of ints internally; the
:class:`Word` type is a thin tuple subclass that adds parsing and printing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "ParseError", "ParameterError",
    "Multiset", "Word", "Partition", "BivarPoly", "StatParams",
    "sorted_word", "delta", "gamma", "letter_counts",
]


class ParseError(ValueError):
    """Malformed textual input (word, multiset, partition, statistic spec)."""


class ParameterError(ValueError):
    """A value is well-formed but violates a precondition of the operation."""


def _parse_ints(text: str, what: str) -> list[int]:
    text = text.strip()
    if not text:
        raise ParseError(f"empty {what}")
    if "," in text:
        items = [s.strip() for s in text.split(",")]
    elif text.isdigit():
        # compact digit-string form, one letter per character
        items = list(text)
    else:
        items = [text]
    try:
        return [int(s) for s in items]
    except ValueError:
        raise ParseError(f"cannot parse {what} {text!r}") from None


def letter_counts(letters: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Multiplicity vector (k_1, ..., k_n) of a sequence of letters; zeros allowed."""
    counts = Counter(letters)
    if n is None:
        n = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, n + 1))


@dataclass(frozen=True)
class Multiset:
    """The multiset {1^k_1, ..., n^k_n} with every k_i >= 1."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        ks = tuple(int(k) for k in self.multiplicities)
        object.__setattr__(self, "multiplicities", ks)
        if not ks:
            raise ParameterError("a multiset needs at least one letter")
        if any(k < 1 for k in ks):
            raise ParameterError(f"every multiplicity must be >= 1, got {ks}")

    @classmethod
    def of(cls, letters: Iterable[int]) -> "Multiset":
        letters = list(letters)
        if any(a < 1 for a in letters):
            raise ParameterError("letters must be positive")
        return cls(letter_counts(letters))

    @classmethod
    def uniform(cls, n: int, k: int) -> "Multiset":
        return cls((k,) * n)

    @classmethod
    def parse(cls, text: str) -> "Multiset":
        """Accept "1:3,2:3,3:4" (letter:multiplicity) or an element list "1,2,2,3,3"."""
        text = text.strip()
        if ":" not in text:
            try:
                return cls.of(_parse_ints(text, "multiset"))
            except ParameterError as exc:
                raise ParseError(str(exc)) from None
        mult: dict[int, int] = {}
        for item in text.split(","):
            try:
                letter, k = (int(s) for s in item.split(":"))
            except ValueError:
                raise ParseError(f"bad multiset entry {item!r}") from None
            if letter in mult:
                raise ParseError(f"letter {letter} given twice")
            mult[letter] = k
        n = max(mult)
        if sorted(mult) != list(range(1, n + 1)):
            raise ParseError(f"multiset must use every letter 1..{n}: {text!r}")
        try:
            return cls(tuple(mult[i] for i in range(1, n + 1)))
        except ParameterError as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    @property
    def m(self) -> int:
        return sum(self.multiplicities)

    def k(self, i: int) -> int:
        return self.multiplicities[i - 1]

    def letters(self) -> tuple[int, ...]:
        """The weakly increasing word using every element once."""
        return tuple(i for i, k in enumerate(self.multiplicities, 1) for _ in range(k))

    def without_largest(self) -> tuple["Multiset", int]:
        """Split M into (M', k_n) where M' drops every copy of n."""
        if self.n < 2:
            raise ParameterError("removing the largest letter would leave an empty multiset")
        return Multiset(self.multiplicities[:-1]), self.multiplicities[-1]

    def count(self) -> int:
        """Number of multipermutations, the multinomial m!/(k_1!...k_n!)."""
        from math import comb
        total, seen = 1, 0
        for k in self.multiplicities:
            seen += k
            total *= comb(seen, k)
        return total

    def __str__(self) -> str:
        return ",".join(f"{i}:{k}" for i, k in enumerate(self.multiplicities, 1))


class Word(tuple):
    """A multipermutation, stored as a tuple of positive ints."""

    def __new__(cls, letters: Iterable[int] = ()):
        self = super().__new__(cls, (int(a) for a in letters))
        if any(a < 1 for a in self):
            raise ParameterError(f"letters must be positive: {tuple(self)}")
        return self

    @classmethod
    def parse(cls, text: str) -> "Word":
        try:
            return cls(_parse_ints(text, "word"))
        except ParameterError as exc:
            raise ParseError(str(exc)) from None

    def multiplicities(self) -> tuple[int, ...]:
        return letter_counts(self)

    def realizes(self, multiset: Multiset) -> bool:
        return letter_counts(self, max(multiset.n, max(self, default=0))) == multiset.multiplicities

    def sorted(self) -> "Word":
        return Word(sorted(self))

    def __str__(self) -> str:
        if all(a <= 9 for a in self):
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Word('{self}')"


def sorted_word(w: Sequence[int]) -> Word:
    """The weakly increasing rearrangement of ``w``."""
    return Word(sorted(w))


def delta(multiset: Multiset, level: int) -> int:
    """k_1 + ... + k_{level-1}; zero at level 1."""
    if not 1 <= level <= multiset.n:
        raise ParameterError(f"level must lie in 1..{multiset.n}, got {level}")
    return sum(multiset.multiplicities[: level - 1])


def gamma(multiset: Multiset, g: int) -> int:
    """k_{n-g+1} + ... + k_{n-1}; zero at gap 1."""
    n = multiset.n
    if not 1 <= g <= n:
        raise ParameterError(f"gap must lie in 1..{n}, got {g}")
    return sum(multiset.multiplicities[n - g: n - 1])


@dataclass(frozen=True)
class Partition:
    """A partition confined to the box P(height, width), zero-padded to ``height`` parts."""

    parts: tuple[int, ...]
    height: int
    width: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if len(parts) > self.height:
            raise ParameterError(f"{len(parts)} parts do not fit a box of height {self.height}")
        parts = parts + (0,) * (self.height - len(parts))
        if any(p < 0 for p in parts):
            raise ParameterError("parts must be nonnegative")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParameterError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[0] > self.width:
            raise ParameterError(f"part {parts[0]} exceeds box width {self.width}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str, height: int | None = None, width: int | None = None) -> "Partition":
        parts = _parse_ints(text, "partition") if "," in text else [int(text)] if text.strip().isdigit() else None
        if parts is None:
            raise ParseError(f"cannot parse partition {text!r}")
        height = len(parts) if height is None else height
        width = max(parts, default=0) if width is None else width
        return cls(tuple(parts), height, width)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> float:
        """1-indexed part with the conventions lambda_0 = inf and lambda_{height+1} = 0."""
        if i <= 0:
            return float("inf")
        if i > self.height:
            return 0
        return self.parts[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


class BivarPoly:
    """Sparse polynomial in t and q with exact integer coefficients.

    Stored as ``{(t_exponent, q_exponent): coefficient}`` with zero
    coefficients dropped.  Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = int(c)
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "BivarPoly":
        """Generating polynomial sum t^a q^b over an iterable of (a, b)."""
        return cls(Counter(pairs))

    @classmethod
    def one(cls) -> "BivarPoly":
        return cls({(0, 0): 1})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def coefficient(self, t_exp: int, q_exp: int) -> int:
        return self._terms.get((t_exp, q_exp), 0)

    def monomials(self) -> list[tuple[int, int]]:
        return sorted(self._terms)

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return BivarPoly(out)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self._terms.items():
            for (d, e), f in other._terms.items():
                out[(a + d, b + e)] = out.get((a + d, b + e), 0) + c * f
        return BivarPoly(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def evaluate(self, t: int = 1, q: int = 1) -> int:
        return sum(c * t ** i * q ** j for (i, j), c in self._terms.items())

    def q_marginal(self) -> dict[int, int]:
        """Coefficients of the polynomial at t = 1, keyed by q-exponent."""
        out: dict[int, int] = {}
        for (_, j), c in self._terms.items():
            out[j] = out.get(j, 0) + c
        return {j: out[j] for j in sorted(out) if out[j]}

    def t_groups(self) -> dict[int, dict[int, int]]:
        groups: dict[int, dict[int, int]] = {}
        for (i, j), c in sorted(self._terms.items()):
            groups.setdefault(i, {})[j] = c
        return groups

    def grid(self) -> list[list[int]]:
        """Dense coefficient grid, rows indexed by t-exponent and columns by q-exponent."""
        if not self._terms:
            return []
        rows = max(i for i, _ in self._terms) + 1
        cols = max(j for _, j in self._terms) + 1
        return [[self.coefficient(i, j) for j in range(cols)] for i in range(rows)]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        groups = self.t_groups()
        pieces = []
        for i, qs in groups.items():
            inner = " + ".join(_monomial(c, "q", j) for j, c in qs.items())
            if i == 0:
                pieces.append(inner if len(qs) == 1 or len(groups) == 1 else f"({inner})")
            elif len(qs) == 1:
                (j, c), = qs.items()
                pieces.append(_monomial(c, "t", i, _monomial(1, "q", j)))
            else:
                pieces.append(f"{_monomial(1, 't', i)}*({inner})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"BivarPoly({self._terms!r})"


def _monomial(c: int, var: str, e: int, rest: str = "1") -> str:
    power = "" if e == 0 else var if e == 1 else f"{var}^{e}"
    factors = [f for f in (power, "" if rest == "1" else rest) if f]
    if c != 1 or not factors:
        factors.insert(0, str(c))
    return "*".join(factors)


@dataclass(frozen=True)
class StatParams:
    """Gap g, level l and Denert level h of the g-gap l-level statistics."""

    g: int = 1
    level: int = 1
    h: int = 1

    def __post_init__(self):
        for name in ("g", "level", "h"):
            if getattr(self, name) < 1:
                raise ParameterError(f"{name} must be >= 1, got {getattr(self, name)}")
