import pytest
from hypothesis import given, settings, strategies as st

from eulermahonian import stats
from eulermahonian.core import Multiset, ParameterError, delta, gamma
from eulermahonian.enumeration import words_of
from eulermahonian.labeling import gden_labeling, gmaj_labeling, multiplicity_sums

from fixtures import digits


def test_gden_labeling_display():
    lab = gden_labeling(digits("5121264732165"), 7, 3, 3)
    before = lab.gap_status[:12]
    assert before == (7, 8, 9, 10, 11, 6, 12, 5, 4, 3, 2, 1)
    assert lab.gap_status[12] == 0
    assert lab.gap_status[13] is None
    assert lab.render() == "{7}5{8}1{9}2{10}1{11}2{6}6{12}4{5}7{4}3{3}2{2}1{1}6{0}5{*}"


def test_gden_labeling_trace_start():
    lab = gden_labeling(digits("3224143121"), 5, 2, 3)
    assert lab.labels() == (5, 6, 7, 4, 8, 3, 9, 10, 2, 1, 0)


def test_gden_labeling_sorted_word_without_n():
    lab = gden_labeling(digits("11223"), 4, 1, 1)
    # gamma_1 = 0: only the final gap and the left-to-right rule fire
    assert lab.gap_status == (1, 2, 3, 4, 5, 0)


def test_gmaj_labeling_display():
    s_set, lab = gmaj_labeling(digits("312117248656625"), 8, 2, 2)
    assert s_set == (2, 4, 5, 6, 7, 10, 14)
    small = {j: lab.gap_status[j - 1] for j in s_set}
    assert small == {14: 1, 10: 2, 7: 3, 6: 4, 5: 5, 4: 6, 2: 7}
    rest = {j: lab.gap_status[j - 1] for j in (1, 3, 8, 11, 12, 13, 15)}
    assert rest == {1: 8, 3: 9, 8: 10, 11: 11, 12: 12, 13: 13, 15: 14}
    assert lab.gap_status[8] is None
    assert lab.gap_status[15] == 0


def test_gmaj_labeling_trace_start():
    _, lab = gmaj_labeling(digits("4151652413"), 7, 2, 3)
    assert lab.labels() == (6, 5, 7, 4, 3, 8, 2, 9, 1, 10, 0)


def test_gmaj_labeling_no_small_labels():
    s_set, lab = gmaj_labeling(digits("2233"), 5, 2, 2)
    assert s_set == ()
    assert lab.gap_status == (1, 2, 3, 4, 0)


def test_labelings_check_parameters():
    with pytest.raises(ParameterError):
        gden_labeling(digits("121"), 2, 2, 1)
    with pytest.raises(ParameterError):
        gmaj_labeling(digits("121"), 3, 2, 2)


def _mixed_words(ks, extra):
    """Words over the letters of ks plus ``extra`` copies of n = len(ks) + 1."""
    return words_of(Multiset(tuple(ks) + (extra,))) if extra else words_of(Multiset(ks))


@pytest.mark.parametrize("ks", [(1, 2, 2), (2, 1, 1), (1, 1, 2, 1), (2, 2, 1, 1)])
@pytest.mark.parametrize("extra", [0, 1, 2])
def test_gden_labels_are_a_permutation(ks, extra):
    n = len(ks) + 1
    m1 = sum(ks)
    for w in _mixed_words(ks, extra):
        for g in range(1, n):
            for h in range(1, n + 1):
                lab = gden_labeling(w, n, g, h)
                assert sorted(lab.labels()) == list(range(m1 + 1))
                assert lab.starred() == list(range(m1 + 1, len(w) + 1))
                places = stats.excedance_places(w, g, h).places
                gam = sum(ks[n - g: n - 1])
                middle = [v for v in lab.gap_status if v is not None and gam < v <= gam + len(places)]
                assert len(middle) == len(places)


@pytest.mark.parametrize("ks", [(1, 2, 2), (2, 1, 1), (1, 1, 2, 1), (2, 2, 1, 1), (1, 1, 1, 1)])
@pytest.mark.parametrize("extra", [0, 1, 2])
def test_gmaj_labels_and_small_label_count(ks, extra):
    n = len(ks) + 1
    full = Multiset(tuple(ks) + (max(extra, 1),))
    for w in _mixed_words(ks, extra):
        for g in range(1, n):
            for l in range(1, n - g + 1):
                s_set, lab = gmaj_labeling(w, n, g, l)
                assert sorted(lab.labels()) == list(range(sum(ks) + 1))
                assert len(lab.starred()) == extra
                kappa = delta(full, l) + gamma(full, g)
                assert multiplicity_sums(w, n, g, l) == (delta(full, l), gamma(full, g))
                assert len(s_set) == stats.gdes_gmaj(w, g, l).gdes + kappa


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=4, max_size=5), st.integers(0, 3), st.data())
def test_gden_labeling_random_larger(ks, extra, data):
    n = len(ks) + 1
    w = data.draw(st.permutations([i for i, k in enumerate(ks, 1) for _ in range(k)] + [n] * extra))
    g = data.draw(st.integers(1, n - 1))
    h = data.draw(st.integers(1, n))
    lab = gden_labeling(w, n, g, h)
    assert sorted(lab.labels()) == list(range(sum(ks) + 1))
