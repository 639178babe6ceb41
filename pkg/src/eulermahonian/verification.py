"""Exhaustive checkers for the equidistribution identities and bijection properties.

Each checker returns a :class:`Report`.  A failing report carries the first
counterexample in a fixed order (lexicographic on words, then on partitions),
so re-running a checker always reproduces the same failure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from . import stats
from .bijections import (
    labeled_position, phi, phi_den, phi_den_inverse, phi_maj, phi_maj_inverse, psi,
)
from .core import BivarPoly, Multiset, ParameterError, Word, delta, gamma, letter_counts
from .enumeration import StatSpec, joint_dists, words_of
from .qseries import partitions_in_box, q_multinomial

__all__ = [
    "Report", "multisets_up_to",
    "check_equidistribution", "check_theorem_den_r_h", "check_theorem_regular",
    "check_mahonian", "check_bijection_den", "check_bijection_maj", "check_phi_psi",
    "sweep", "sweep_theorem_den_r_h", "sweep_theorem_regular", "sweep_mahonian",
    "sweep_bijection_den", "sweep_bijection_maj", "sweep_phi_psi",
]


@dataclass
class Report:
    claim: str
    params: dict
    instances: int = 0
    passed: bool = True
    counterexample: dict | None = None
    elapsed: float = 0.0
    ranges: dict = field(default_factory=dict)

    def fail(self, **details) -> "Report":
        if self.passed:
            self.passed = False
            self.counterexample = details
        return self

    def to_dict(self, timing: bool = False) -> dict:
        # elapsed is left out by default so serialized reports are reproducible
        out = {
            "claim": self.claim,
            "params": self.params,
            "ranges": self.ranges,
            "instances": self.instances,
            "outcome": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed = time.perf_counter() - start
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _wstr(w) -> str:
    return str(Word(w))


def multisets_up_to(max_m: int, max_n: int, min_n: int = 1) -> Iterator[Multiset]:
    """All multisets {1^k1..n^kn} with min_n <= n <= max_n and m <= max_m."""
    def comps(total, parts):
        if parts == 1:
            yield (total,)
            return
        for k in range(1, total - parts + 2):
            for rest in comps(total - k, parts - 1):
                yield (k,) + rest

    for n in range(min_n, max_n + 1):
        for m in range(n, max_m + 1):
            for ks in comps(m, n):
                yield Multiset(ks)


def _first_difference(pa: BivarPoly, pb: BivarPoly):
    keys = sorted(set(pa.terms) | set(pb.terms))
    for key in keys:
        if pa.coefficient(*key) != pb.coefficient(*key):
            return key
    return None


def _compare_pairs(
    rep: Report, multiset: Multiset, pair_a: tuple[StatSpec, StatSpec],
    pair_b: tuple[StatSpec, StatSpec], pa: BivarPoly, pb: BivarPoly,
) -> Report:
    rep.instances += multiset.count()
    key = _first_difference(pa, pb)
    if key is None:
        return rep
    side, pair = ("a", pair_a) if pa.coefficient(*key) else ("b", pair_b)
    witness = next(
        w for w in words_of(multiset)
        if (pair[0].of_word(w), pair[1].of_word(w)) == key
    )
    return rep.fail(
        multiset=str(multiset), monomial=list(key),
        coefficient_a=pa.coefficient(*key), coefficient_b=pb.coefficient(*key),
        witness=_wstr(witness), witness_side=side,
        poly_a=str(pa), poly_b=str(pb),
    )


@_timed
def check_equidistribution(
    multiset: Multiset, pair_a: tuple[StatSpec, StatSpec], pair_b: tuple[StatSpec, StatSpec],
    workers: int = 1,
) -> Report:
    """Pass iff the two joint distributions agree as polynomials in t and q."""
    rep = Report("equi", {
        "multiset": str(multiset),
        "a": [str(s) for s in pair_a], "b": [str(s) for s in pair_b],
    })
    pa, pb = joint_dists(multiset, [tuple(pair_a), tuple(pair_b)], workers)
    return _compare_pairs(rep, multiset, pair_a, pair_b, pa, pb)


def _maj_pair(g, level):
    return StatSpec("des", g, level), StatSpec("maj", g, level)


def _den_pair(g, level, h):
    return StatSpec("exc", g, level), StatSpec("den", g, 1, h)


def _check_h(g, level, h):
    if g < 1 or level < 1:
        raise ParameterError("g and l must be >= 1")
    if not 1 <= h <= g + level:
        raise ParameterError(f"need 1 <= h <= g + l, got h={h}, g={g}, l={level}")


@_timed
def check_theorem_den_r_h(multiset: Multiset, g: int, level: int, h: int, workers: int = 1) -> Report:
    """(gdes_l, gmaj_l) against (gexc_l, gden_h) over all words of the multiset."""
    _check_h(g, level, h)
    rep = Report("den-r-h", {"multiset": str(multiset), "g": g, "l": level, "h": h})
    a, b = _maj_pair(g, level), _den_pair(g, level, h)
    pa, pb = joint_dists(multiset, [a, b], workers)
    return _compare_pairs(rep, multiset, a, b, pa, pb)


@_timed
def check_theorem_regular(n: int, k: int, g: int, level: int, h: int, workers: int = 1) -> Report:
    """(r-gap des, r-gap maj) with r = g + l - 1 against (gexc_l, gden_h) on {1^k..n^k}."""
    _check_h(g, level, h)
    if n < 1 or k < 1:
        raise ParameterError("n and k must be >= 1")
    multiset = Multiset.uniform(n, k)
    r = g + level - 1
    rep = Report("regular", {"n": n, "k": k, "g": g, "l": level, "h": h, "r": r})
    a, b = _maj_pair(r, 1), _den_pair(g, level, h)
    pa, pb = joint_dists(multiset, [a, b], workers)
    return _compare_pairs(rep, multiset, a, b, pa, pb)


def uniform_shape(multiset: Multiset) -> tuple[int, int]:
    ks = set(multiset.multiplicities)
    if len(ks) != 1:
        raise ParameterError(f"multiset {multiset} is not of the form {{1^k..n^k}}")
    return multiset.n, ks.pop()


@_timed
def check_mahonian(multiset: Multiset, g: int, h: int, workers: int = 1) -> Report:
    """sum q^gden_h, the q-multinomial and sum q^inv coincide."""
    if g < 1 or h < 1:
        raise ParameterError("g and h must be >= 1")
    rep = Report("mahonian", {"multiset": str(multiset), "g": g, "h": h})
    den_spec, inv_spec = StatSpec("den", g, 1, h), StatSpec("inv")
    pd, pi = joint_dists(multiset, [(den_spec, den_spec), (inv_spec, inv_spec)], workers)
    rep.instances = multiset.count()
    dd, di = pd.q_marginal(), pi.q_marginal()
    qm = q_multinomial(multiset.multiplicities).terms()
    if dd == qm and di == qm:
        return rep
    bad_side, dist = ("den", dd) if dd != qm else ("inv", di)
    exp = min(e for e in set(dist) | set(qm) if dist.get(e, 0) != qm.get(e, 0))
    spec = den_spec if bad_side == "den" else inv_spec
    witness = next((w for w in words_of(multiset) if spec.of_word(w) == exp), None)
    return rep.fail(
        multiset=str(multiset), statistic=bad_side, exponent=exp,
        coefficient=dist.get(exp, 0), expected=qm.get(exp, 0),
        witness=None if witness is None else _wstr(witness),
    )


def _bracket(parts: Sequence[int], s: int, t: int, kappa: int) -> bool:
    """lambda_{t-s} >= t + kappa >= lambda_{t-s+1} with lambda_0 = inf, lambda_{k+1} = 0."""
    k = len(parts)
    d = t - s
    if not 0 <= d <= k:
        return False
    upper = float("inf") if d == 0 else parts[d - 1]
    lower = 0 if d == k else parts[d]
    return upper >= t + kappa >= lower


def _base_split(multiset: Multiset) -> tuple[Multiset, int]:
    if multiset.n < 2:
        raise ParameterError("bijection checks need at least two letter values")
    return multiset.without_largest()


def _levels_for(multiset: Multiset, g: int, h: int, level) -> list[int]:
    n = multiset.n
    if level is None:
        return [l for l in range(1, n + 1) if h <= g + l and n >= g + l]
    return [l for l in ([level] if isinstance(level, int) else level) if h <= g + l and n >= g + l]


@_timed
def check_bijection_den(multiset: Multiset, g: int, h: int, level=None) -> Report:
    """Bijectivity, gden additivity, inverse, monotone y_b and the gexc bracket.

    ``level`` may be an int, a list, or None for every level satisfying the
    bracket hypotheses h <= g + l <= n.
    """
    base, k_n = _base_split(multiset)
    n = multiset.n
    if n < max(g + 1, h):
        raise ParameterError(f"need n >= max(g+1, h), got n={n}, g={g}, h={h}")
    levels = _levels_for(multiset, g, h, level)
    rep = Report("bij-den", {"multiset": str(multiset), "g": g, "h": h, "levels": levels})
    kappas = {l: delta(multiset, l) + gamma(multiset, g) for l in levels}
    seen = {}
    for w in words_of(base):
        w_den = stats.gden(w, g, h)
        w_exc = {l: stats.gexc(w, g, l) for l in levels}
        for lam in partitions_in_box(k_n, base.m):
            rep.instances += 1
            ctx = dict(word=_wstr(w), partition=list(lam.parts))
            u, trace = phi_den(w, lam, g, h)
            if letter_counts(u) != multiset.multiplicities:
                return rep.fail(reason="output does not realize the multiset", output=_wstr(u), **ctx)
            if u in seen:
                return rep.fail(reason="output repeated", output=_wstr(u), first=seen[u], **ctx)
            seen[u] = ctx
            if stats.gden(u, g, h) != w_den + lam.weight:
                return rep.fail(reason="gden not additive", output=_wstr(u), **ctx)
            ys = trace.ys()
            if any(a < b for a, b in zip(ys, ys[1:])):
                return rep.fail(reason="y sequence increases", ys=list(ys), **ctx)
            for l in levels:
                if not _bracket(lam.parts, w_exc[l], stats.gexc(u, g, l), kappas[l]):
                    return rep.fail(reason="gexc bracket", level=l, output=_wstr(u), **ctx)
            if phi_den_inverse(u, g, h) != (w, lam):
                return rep.fail(reason="inverse mismatch", output=_wstr(u), **ctx)
    if len(seen) != multiset.count():
        return rep.fail(reason="image size differs from word count", image=len(seen), expected=multiset.count())
    return rep


@_timed
def check_bijection_maj(multiset: Multiset, g: int, level: int) -> Report:
    """Bijectivity, gmaj additivity, inverse, monotone y_b and the gdes bracket."""
    base, k_n = _base_split(multiset)
    n = multiset.n
    if n < g + level:
        raise ParameterError(f"need n >= g + l, got n={n}, g={g}, l={level}")
    rep = Report("bij-maj", {"multiset": str(multiset), "g": g, "l": level})
    kappa = delta(multiset, level) + gamma(multiset, g)
    seen = {}
    for w in words_of(base):
        gm = stats.gdes_gmaj(w, g, level)
        for lam in partitions_in_box(k_n, base.m):
            rep.instances += 1
            ctx = dict(word=_wstr(w), partition=list(lam.parts))
            u, trace = phi_maj(w, lam, g, level)
            if letter_counts(u) != multiset.multiplicities:
                return rep.fail(reason="output does not realize the multiset", output=_wstr(u), **ctx)
            if u in seen:
                return rep.fail(reason="output repeated", output=_wstr(u), first=seen[u], **ctx)
            seen[u] = ctx
            um = stats.gdes_gmaj(u, g, level)
            if um.gmaj != gm.gmaj + lam.weight:
                return rep.fail(reason="gmaj not additive", output=_wstr(u), **ctx)
            ys = trace.ys()
            if any(a < b for a, b in zip(ys, ys[1:])):
                return rep.fail(reason="y sequence increases", ys=list(ys), **ctx)
            if not _bracket(lam.parts, gm.gdes, um.gdes, kappa):
                return rep.fail(reason="gdes bracket", output=_wstr(u), **ctx)
            if phi_maj_inverse(u, g, level) != (w, lam):
                return rep.fail(reason="inverse mismatch", output=_wstr(u), **ctx)
    if len(seen) != multiset.count():
        return rep.fail(reason="image size differs from word count", image=len(seen), expected=multiset.count())
    return rep


def _base_with_n(base: Multiset, n: int) -> tuple[int, ...]:
    ks = base.multiplicities
    if base.n == n - 1:
        return ks + (0,)
    if base.n == n:
        return ks
    raise ParameterError(f"base multiset must use letters 1..{n - 1} and optionally {n}")


def _words_with_counts(ks: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if ks[-1]:
        yield from words_of(Multiset(ks))
    else:
        yield from words_of(Multiset(ks[:-1]))


@_timed
def check_phi_psi(base: Multiset, n: int, g: int, h: int) -> Report:
    """Round trip, excedance-set law, gden law and gexc law for single insertions.

    ``base`` is N' = M' plus a - 1 copies of n (pass M' alone for a = 1).
    Only pairs (w, c) whose labeled position has no n to its left are checked.
    """
    if g < 1 or h < 1:
        raise ParameterError("g and h must be >= 1")
    if n < max(g + 1, h):
        raise ParameterError(f"need n >= max(g+1, h), got n={n}, g={g}, h={h}")
    ks = _base_with_n(base, n)
    m1 = sum(ks[:-1])
    full = Multiset(ks[:-1] + (ks[-1] + 1,))
    gam = gamma(full, g)
    levels = [l for l in range(1, n + 1) if h <= g + l and n >= g + l]
    kappas = {l: delta(full, l) + gam for l in levels}
    rep = Report("phi-psi", {"base": ",".join(map(str, ks)), "n": n, "g": g, "h": h, "levels": levels})
    for w in _words_with_counts(ks):
        places = set(stats.excedance_places(w, g, h).places)
        w_den = stats.gden(w, g, h)
        w_exc = {l: stats.gexc(w, g, l) for l in levels}
        for c in range(m1 + 1):
            y = labeled_position(w, c, n, g, h)
            if n in w[: y - 1]:
                continue
            rep.instances += 1
            ctx = dict(word=_wstr(w), label=c, y=y)
            u = phi(w, c, n, g, h)
            if psi(u, n, g, h) != (w, c):
                return rep.fail(reason="psi does not invert phi", output=_wstr(u), **ctx)
            expect = places if c <= len(places) + gam else places | {y}
            if set(stats.excedance_places(u, g, h).places) != expect:
                return rep.fail(reason="excedance places law", output=_wstr(u), **ctx)
            if stats.gden(u, g, h) != w_den + c:
                return rep.fail(reason="gden law", output=_wstr(u), **ctx)
            for l in levels:
                bump = 0 if c <= w_exc[l] + kappas[l] else 1
                if stats.gexc(u, g, l) != w_exc[l] + bump:
                    return rep.fail(reason="gexc law", level=l, output=_wstr(u), **ctx)
    return rep


def sweep(claim: str, reports: Iterable[Report], ranges: dict) -> Report:
    """Fold many reports into one; the first failure in iteration order is kept."""
    start = time.perf_counter()
    out = Report(claim, {}, ranges=ranges)
    runs = 0
    for rep in reports:
        runs += 1
        out.instances += rep.instances
        if not rep.passed and out.passed:
            out.passed = False
            out.counterexample = {"params": rep.params, **(rep.counterexample or {})}
    out.params = {"runs": runs}
    out.elapsed = time.perf_counter() - start
    return out


def sweep_theorem_den_r_h(max_m=8, max_n=4, gs=(1, 2, 3), levels=(1, 2, 3), workers=1) -> Report:
    def gen():
        for M in multisets_up_to(max_m, max_n):
            pairs, tags = [], []
            for g in gs:
                for l in levels:
                    pairs.append(_maj_pair(g, l))
                    for h in range(1, g + l + 1):
                        pairs.append(_den_pair(g, l, h))
                        tags.append((g, l, h, len(pairs) - 1))
            polys = joint_dists(M, pairs, workers)
            for g, l, h, idx in tags:
                a = _maj_pair(g, l)
                rep = Report("den-r-h", {"multiset": str(M), "g": g, "l": l, "h": h})
                yield _compare_pairs(rep, M, a, pairs[idx], polys[pairs.index(a)], polys[idx])
    return sweep("den-r-h", gen(), {"max_m": max_m, "max_n": max_n, "g": list(gs), "l": list(levels), "h": "1..g+l"})


def sweep_theorem_regular(max_size=8, workers=1) -> Report:
    """Uniform multisets with n*k <= max_size and every g, l with g + l <= n + 1."""
    def gen():
        for n in range(1, max_size + 1):
            for k in range(1, max_size // n + 1):
                for g in range(1, n + 1):
                    for l in range(1, n + 2 - g):
                        for h in range(1, g + l + 1):
                            yield check_theorem_regular(n, k, g, l, h, workers)
    return sweep("regular", gen(), {"max_nk": max_size, "g+l": "<= n+1", "h": "1..g+l"})


def sweep_mahonian(max_m=8, max_n=None, gs=(1, 2, 3), hs=(1, 2, 3, 4), workers=1) -> Report:
    def gen():
        for M in multisets_up_to(max_m, max_n or max_m):
            for g in gs:
                for h in hs:
                    yield check_mahonian(M, g, h, workers)
    return sweep("mahonian", gen(), {"max_m": max_m, "max_n": max_n or max_m, "g": list(gs), "h": list(hs)})


def sweep_bijection_den(max_m=8, max_n=4, gs=(1, 2, 3)) -> Report:
    def gen():
        for M in multisets_up_to(max_m, max_n, min_n=2):
            for g in gs:
                for h in range(1, M.n + 1):
                    if M.n >= max(g + 1, h):
                        yield check_bijection_den(M, g, h)
    return sweep("bij-den", gen(), {"max_m": max_m, "max_n": max_n, "g": list(gs), "h": "1..n", "l": "h <= g+l <= n"})


def sweep_bijection_maj(max_m=8, max_n=4, gs=(1, 2, 3), levels=(1, 2, 3)) -> Report:
    def gen():
        for M in multisets_up_to(max_m, max_n, min_n=2):
            for g in gs:
                for l in levels:
                    if M.n >= g + l:
                        yield check_bijection_maj(M, g, l)
    return sweep("bij-maj", gen(), {"max_m": max_m, "max_n": max_n, "g": list(gs), "l": list(levels)})


def sweep_phi_psi(max_m=7, max_n=4, max_extra=2, gs=(1, 2, 3)) -> Report:
    """Bases M' + (a-1) copies of n with |M'| + a - 1 <= max_m and a - 1 <= max_extra."""
    def gen():
        for Mp in multisets_up_to(max_m, max_n - 1):
            n = Mp.n + 1
            for extra in range(0, max_extra + 1):
                if Mp.m + extra > max_m:
                    break
                base = Multiset(Mp.multiplicities + (extra,)) if extra else Mp
                for g in gs:
                    for h in range(1, n + 1):
                        if n >= max(g + 1, h):
                            yield check_phi_psi(base, n, g, h)
    return sweep("phi-psi", gen(), {"max_m": max_m, "max_n": max_n, "max_extra": max_extra, "g": list(gs)})
