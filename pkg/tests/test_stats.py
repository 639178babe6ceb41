import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from eulermahonian import stats
from eulermahonian.core import ParameterError
from eulermahonian.enumeration import words_of
from eulermahonian.core import Multiset

from fixtures import brute_words, digits

W1 = digits("4121155325")
W2 = digits("4231156125")


def test_des_maj_examples():
    assert stats.des_maj(W1) == ((1, 3, 7, 8), 4, 19)
    assert stats.des_maj(digits("1223")) == ((), 0, 0)
    assert stats.des_maj(digits("321")) == ((1, 2), 2, 3)


def test_inv_imv_examples():
    assert stats.inv_imv(W1) == (13, 20)
    assert stats.inv_imv(digits("12345")) == (0, 0)
    assert stats.imv(digits("4255")) == 2
    assert stats.inv(digits("111325")) == 1


def test_gdes_gmaj_example():
    r = stats.gdes_gmaj(W1, 2, 3)
    assert r.descents == (7,)
    assert r.gdes == 1
    assert len(r.inversions) == 11
    assert r.gmaj == 18


def test_gdes_gmaj_rejects_bad_params():
    with pytest.raises(ParameterError):
        stats.gdes_gmaj(W1, 0, 1)
    with pytest.raises(ParameterError):
        stats.gdes_gmaj(W1, 1, 0)


def test_unit_gap_and_level_is_classical():
    for w in brute_words((1, 2, 2)):
        r = stats.gdes_gmaj(w, 1, 1)
        assert r.inversions == ()
        assert (r.gdes, r.gmaj) == stats.des_maj(w)[1:]


@pytest.mark.parametrize("g, l", [(1, 1), (2, 3), (3, 1)])
def test_weakly_increasing_has_no_gap_descents(g, l):
    assert stats.gdes_gmaj(digits("1122334"), g, l)[2:] == (0, 0)


def test_excedance_examples():
    e = stats.excedance_places(W1)
    assert e.places == (1, 3, 6, 7)
    assert e.letters == digits("4255") and e.non_letters == digits("111325")
    e = stats.excedance_places(W2, 2, 4)
    assert e.places == (1, 6, 7)
    assert e.letters == digits("456") and e.non_letters == digits("2311125")
    assert stats.excedance_places(digits("112233"), 1, 1).places == ()


def test_b_weight_examples():
    assert [stats.b_weight(W2, i, 2) for i in (1, 6, 7)] == [1, 1, 2]
    assert all(stats.b_weight(W1, i, 1) == 0 for i in range(1, 11))
    # sorted word 1112234555: the letters strictly between 1 and 4 are 2, 2, 3
    assert stats.b_weight(W1, 1, 3) == 3
    with pytest.raises(ParameterError):
        stats.b_weight(W1, 11, 1)


def test_gden_examples():
    assert stats.gden(W2, 2, 4) == 25
    assert stats.gden(W1, 1, 1) == 20
    assert stats.den(W1) == 20
    assert stats.gden(digits("1122333"), 2, 2) == 0


def test_gexc_examples():
    assert stats.gexc(W2, 2, 4) == 1
    assert stats.gexc(W1, 1, 1) == 4 == stats.exc(W1)
    assert stats.gexc(digits("11223"), 1, 1) == 0


def test_reductions_at_unit_parameters():
    for ks in [(1, 2, 2), (2, 2, 2), (3, 1, 2, 1), (1, 1, 1, 1, 1)]:
        for w in words_of(Multiset(ks)):
            assert stats.gden(w, 1, 1) == stats.den(w)
            assert stats.gexc(w, 1, 1) == stats.exc(w)


@pytest.mark.parametrize("n", range(1, 8))
def test_permutation_closed_forms(n):
    for pi in itertools.permutations(range(1, n + 1)):
        for g in range(1, 4):
            for l in range(1, 4):
                assert stats.gden(pi, g, l) == stats.permutation_gden(pi, g, l)
                assert stats.gexc(pi, g, l) == stats.permutation_gexc(pi, g, l)


words = st.lists(st.integers(1, 5), min_size=1, max_size=10)


@given(words, st.integers(1, 4), st.integers(1, 4), st.integers(1, 5))
def test_report_reproducible_from_sets(w, g, l, h):
    r = stats.report(w, g, l, h)
    assert r.des == len(r.descents) and r.maj == sum(r.descents)
    assert r.gdes == len(r.gap_descents)
    assert r.gmaj == sum(r.gap_descents) + len(r.gap_inversions)
    assert r.exc == len(r.excedance_places)
    assert all(w[i - 1] > w[j - 1] for i, j in r.gap_inversions)
    assert r.inv <= r.imv


@given(words, st.integers(1, 4), st.integers(1, 4))
def test_gden_matches_definition_by_pairs(w, g, h):
    # recount the definition with explicit index pairs instead of subwords
    x = sorted(w)
    E = [i for i in range(len(w)) if w[i] >= x[i] + g and w[i] >= h]
    total = sum(i + 1 + sum(1 for v in x if w[i] - g < v < w[i]) for i in E)
    for i, j in itertools.combinations(range(len(w)), 2):
        if i in E and j in E and w[i] >= w[j]:
            total += 1
        elif i not in E and j not in E and w[i] > w[j]:
            total += 1
    assert stats.gden(w, g, h) == total


def test_excedance_floor_reading_matters():
    # Conditioning the excedance number on the letter instead of on the sorted
    # letter breaks equidistribution already on {1, 2} with l = 2.
    def letter_floor(w, g, l):
        return sum(1 for a, b in zip(w, sorted(w)) if a >= b + g and a >= l)

    ws = brute_words((1, 1))
    maj_side = Counter(stats.gdes_gmaj(w, 1, 2)[2:] for w in ws)
    sorted_floor = Counter((stats.gexc(w, 1, 2), stats.gden(w, 1, 1)) for w in ws)
    letter = Counter((letter_floor(w, 1, 2), stats.gden(w, 1, 1)) for w in ws)
    assert maj_side == sorted_floor
    assert maj_side != letter
