"""q-integers, q-factorials, q-multinomials, Gaussian polynomials and box partitions."""

from __future__ import annotations

from typing import Iterator, Mapping, Sequence

from .core import ParameterError, Partition

__all__ = [
    "QPoly", "q_integer", "q_factorial", "q_multinomial", "q_multinomial_by_binomials",
    "gauss_binomial", "partitions_in_box", "box_generating_function",
]


class QPoly:
    """Univariate polynomial in q with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_mapping(cls, terms: Mapping[int, int]) -> "QPoly":
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for e, a in terms.items():
            c[e] += a
        return cls(c)

    @classmethod
    def from_exponents(cls, exponents) -> "QPoly":
        terms: dict[int, int] = {}
        for e in exponents:
            terms[int(e)] = terms.get(int(e), 0) + 1
        return cls.from_mapping(terms)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        """Nonzero coefficients keyed by exponent."""
        return {e: a for e, a in enumerate(self.coeffs) if a}

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)])

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Long division that must leave no remainder."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        quot = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            a, r = divmod(rem[k + len(other.coeffs) - 1], lead)
            if r:
                raise ArithmeticError("non-integral quotient")
            quot[k] = a
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= a * b
        if any(rem):
            raise ArithmeticError("polynomial division left a remainder")
        return QPoly(quot)

    def __call__(self, q: int) -> int:
        total = 0
        for a in reversed(self.coeffs):
            total = total * q + a
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        parts = []
        for e, a in self.terms().items():
            mono = "" if e == 0 else "q" if e == 1 else f"q^{e}"
            parts.append(str(a) if not mono else mono if a == 1 else f"{a}*{mono}")
        return " + ".join(parts) or "0"


ONE = QPoly([1])


def q_integer(n: int) -> QPoly:
    if n < 0:
        raise ParameterError("q-integers need n >= 0")
    return QPoly([1] * n)


def q_factorial(n: int) -> QPoly:
    out = ONE
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


def q_multinomial(ks: Sequence[int]) -> QPoly:
    """[s]_q! / prod [k_i]_q! by exact division."""
    if any(k < 0 for k in ks):
        raise ParameterError("block sizes must be nonnegative")
    out = q_factorial(sum(ks))
    for k in ks:
        out = out.exact_div(q_factorial(k))
    return out


def gauss_binomial(s: int, t: int) -> QPoly:
    """The Gaussian polynomial [s+t choose s]_q."""
    if s < 0 or t < 0:
        raise ParameterError("box dimensions must be nonnegative")
    return q_factorial(s + t).exact_div(q_factorial(s) * q_factorial(t))


def q_multinomial_by_binomials(ks: Sequence[int]) -> QPoly:
    """Same value as :func:`q_multinomial`, built as a product of Gaussian polynomials."""
    out, seen = ONE, 0
    for k in ks:
        out = out * gauss_binomial(k, seen)
        seen += k
    return out


def partitions_in_box(s: int, t: int) -> Iterator[Partition]:
    """Every partition with s parts (zeros allowed) and parts at most t.

    Order is lexicographically decreasing on the part sequence, so the
    full box (t, ..., t) comes first and the zero partition last.
    """
    if s < 0 or t < 0:
        raise ParameterError("box dimensions must be nonnegative")

    def rec(prefix: list[int], cap: int) -> Iterator[list[int]]:
        if len(prefix) == s:
            yield prefix
            return
        for part in range(cap, -1, -1):
            yield from rec(prefix + [part], part)

    for parts in rec([], t):
        yield Partition(tuple(parts), s, t)


def box_generating_function(s: int, t: int) -> QPoly:
    return QPoly.from_exponents(p.weight for p in partitions_in_box(s, t))
