"""Acceptance criteria 1-11, each at its stated tolerance."""

import os
import time
from math import comb

import pytest

from eulermahonian import stats, verification as ver
from eulermahonian.bijections import phi, phi_den, phi_den_inverse, phi_maj, phi_maj_inverse, psi
from eulermahonian.cli import TABLE_PAIRS
from eulermahonian.core import BivarPoly, Multiset
from eulermahonian.enumeration import StatSpec, joint_dist, stat_table
from eulermahonian.qseries import gauss_binomial, partitions_in_box, q_multinomial

from fixtures import digits, multinomial, reference_rows

WORKERS = os.cpu_count() or 1
M12233 = Multiset((1, 2, 2))


def poly(rows):
    return BivarPoly({(t, q): c for t, row in rows.items() for q, c in row.items()})


@pytest.mark.criterion(1)
def test_worked_statistic_values():
    w1, w2 = digits("4121155325"), digits("4231156125")
    evaluations = [
        (lambda: stats.des_maj(w1)[1:], (4, 19)),
        (lambda: stats.inv_imv(w1), (13, 20)),
        (lambda: stats.gdes_gmaj(w1, 2, 3)[2:], (1, 18)),
        (lambda: stats.exc(w1), 4),
        (lambda: stats.den(w1), 20),
        (lambda: stats.gexc(w2, 2, 4), 1),
        (lambda: stats.gden(w2, 2, 4), 25),
    ]
    for fn, expected in evaluations:
        start = time.perf_counter()
        got = fn()
        elapsed = time.perf_counter() - start
        assert got == expected
        assert elapsed < 1e-3, f"evaluation took {elapsed * 1e3:.3f} ms"


@pytest.mark.criterion(2)
def test_reference_table():
    start = time.perf_counter()
    specs = [tuple(map(StatSpec.parse, p)) for p in TABLE_PAIRS]
    rows = [(w, values) for w, values in stat_table(M12233, specs)]
    elapsed = time.perf_counter() - start
    assert rows == [(digits(w), cells) for w, cells in reference_rows()]
    assert elapsed < 1.0


@pytest.mark.criterion(3)
def test_distribution_polynomials():
    des2 = joint_dist(M12233, StatSpec.parse("des:l=2"), StatSpec.parse("maj:l=2"))
    two = joint_dist(M12233, StatSpec.parse("2des"), StatSpec.parse("2maj"))
    assert des2 == poly({
        0: {0: 1, 1: 2, 2: 3, 3: 2, 4: 1},
        1: {2: 1, 3: 3, 4: 5, 5: 5, 6: 3, 7: 1},
        2: {6: 1, 7: 1, 8: 1},
    })
    assert two == poly({
        0: {0: 1, 1: 2, 2: 4, 3: 4, 4: 4, 5: 2, 6: 1},
        1: {3: 1, 4: 2, 5: 3, 6: 3, 7: 2, 8: 1},
    })
    assert des2 != two


@pytest.mark.criterion(4)
def test_phi_psi_golden():
    w = digits("5121264732165")
    assert phi(w, 7, 7, 3, 3) == digits("71212547632165")
    assert phi(w, 11, 7, 3, 3) == digits("51217627432165")
    assert psi(digits("71212547632165"), 7, 3, 3) == (w, 7)
    assert psi(digits("51217627432165"), 7, 3, 3) == (w, 11)


@pytest.mark.criterion(5)
def test_den_insertion_golden_trace():
    u, trace = phi_den(digits("3224143121"), (9, 9, 5, 4), 2, 3)
    assert u == digits("32245551543121")
    assert trace.ys() == (7, 6, 5, 5)
    assert trace.steps[0].labels == (5, 6, 7, 4, 8, 3, 9, 10, 2, 1, 0)
    assert [s.labels for s in trace.steps[1:]] == [
        (6, 7, 8, 5, 9, 4, 3, 10, 2, 1, 0),
        (6, 7, 8, 5, 9, 4, 3, 10, 2, 1, 0),
        (7, 8, 9, 6, 5, 4, 3, 10, 2, 1, 0),
    ]
    assert [s.remaining for s in trace.steps] == [(9, 9, 5, 4), (9, 5, 4), (9, 5), (5,)]
    assert phi_den_inverse(u, 2, 3)[1].parts == (9, 9, 5, 4)


@pytest.mark.criterion(6)
def test_maj_insertion_golden_output():
    u, trace = phi_maj(digits("4151652413"), (9, 9, 6, 3), 2, 3)
    assert u == digits("41571675727413")
    assert trace.steps[0].labels == (6, 5, 7, 4, 3, 8, 2, 9, 1, 10, 0)
    w, lam = phi_maj_inverse(u, 2, 3)
    assert (w, lam.parts) == (digits("4151652413"), (9, 9, 6, 3))


@pytest.mark.criterion(7)
def test_sweep_gap_level_pairs():
    rep = ver.sweep_theorem_den_r_h(max_m=8, max_n=4, workers=WORKERS)
    assert rep.passed, rep.counterexample
    assert rep.elapsed < 120


@pytest.mark.criterion(8)
def test_sweep_uniform_multisets():
    rep = ver.sweep_theorem_regular(max_size=8, workers=WORKERS)
    assert rep.passed, rep.counterexample
    assert rep.elapsed < 60


@pytest.mark.criterion(9)
def test_sweep_mahonian():
    rep = ver.sweep_mahonian(max_m=8, workers=WORKERS)
    assert rep.passed, rep.counterexample


@pytest.mark.criterion(10)
def test_bijection_suite_den():
    rep = ver.sweep_bijection_den(max_m=8, max_n=4)
    assert rep.passed, rep.counterexample


@pytest.mark.criterion(10)
def test_bijection_suite_maj():
    rep = ver.sweep_bijection_maj(max_m=8, max_n=4)
    assert rep.passed, rep.counterexample


@pytest.mark.criterion(10)
def test_bijection_suite_single_insertion():
    rep = ver.sweep_phi_psi(max_m=7, max_n=4, max_extra=2)
    assert rep.passed, rep.counterexample


@pytest.mark.criterion(11)
def test_q_series():
    for s in range(11):
        for t in range(11):
            gb = gauss_binomial(s, t)
            counts: dict[int, int] = {}
            for lam in partitions_in_box(s, t):
                counts[lam.weight] = counts.get(lam.weight, 0) + 1
            assert gb.terms() == counts
            assert gb == gauss_binomial(t, s)
            assert gb(1) == comb(s + t, s)
    for ks in [(1,), (2, 3), (1, 2, 2), (3, 1, 2, 2), (2, 2, 2, 2), (1, 1, 1, 1, 1, 1)]:
        assert q_multinomial(ks)(1) == multinomial(ks)
