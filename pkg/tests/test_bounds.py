from fractions import Fraction
from math import comb, floor

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rif.bounds import (
    bound_report,
    brc_obstruction,
    ekr_bound,
    existence_threshold,
    general_bound,
    hoffman_bound,
    hoffman_bound_eigen,
    hoffman_floor,
    is_sum_of_two_squares,
    largest_feasible_size,
    lower_bound_regular,
    nonexistent,
    prop1_bound,
    tightness_integrality_check,
)
from rif.errors import InvalidParameters, InvalidS

nk_pairs = st.integers(3, 14).flatmap(lambda k: st.tuples(st.integers(2 * k, k * k + 3), st.just(k)))


def test_small_values():
    assert ekr_bound(7, 3) == 15
    assert prop1_bound(9, 4) == 3 * comb(6, 2) + comb(6, 1)
    assert existence_threshold(4) == 13
    assert nonexistent(14, 4) and not nonexistent(13, 4)


@pytest.mark.parametrize("k, value", [(3, 7), (4, 36), (5, 154), (6, 624)])
def test_hoffman_at_2k_plus_1(k, value):
    # at n = 2k+1 the bound equals (k-2)/(2k-1) * C(2k+1, k)
    assert hoffman_bound(2 * k + 1, k) == value == Fraction(k - 2, 2 * k - 1) * comb(2 * k + 1, k)


@given(nk_pairs, st.sampled_from([1, 3, 5]))
def test_hoffman_forms_agree(nk, s):
    n, k = nk
    if k < s + 2:
        return
    assert hoffman_bound(n, k, s) == hoffman_bound_eigen(n, k, s)


@given(nk_pairs)
def test_hoffman_below_ekr(nk):
    n, k = nk
    assert hoffman_bound(n, k) <= ekr_bound(n, k)


def test_s_validation():
    with pytest.raises(InvalidS):
        hoffman_bound(11, 5, 2)
    with pytest.raises(InvalidS):
        hoffman_bound(11, 5, 0)
    with pytest.raises(InvalidParameters):
        hoffman_bound(11, 4, 3)
    with pytest.raises(InvalidS):
        tightness_integrality_check(11, 5, 3)


def test_tightness():
    # Fano: a non-line 3-set meets 3 lines in two points
    assert tightness_integrality_check(7, 3) == (3, False)
    t, obstructed = tightness_integrality_check(8, 3)
    assert t == Fraction(18, 11) and obstructed
    assert tightness_integrality_check(9, 4) == (6, False)


def test_lower_bound():
    assert lower_bound_regular(8, 3) == 16
    assert lower_bound_regular(9, 4) == 4
    with pytest.raises(InvalidParameters):
        lower_bound_regular(16, 4)


@pytest.mark.parametrize("m", range(0, 60))
def test_sum_of_two_squares_brute(m):
    assert is_sum_of_two_squares(m) == any(a * a + b * b == m for a in range(9) for b in range(9))


def test_brc():
    assert [q for q in range(2, 23) if brc_obstruction(q)] == [6, 14, 21, 22]
    with pytest.raises(InvalidParameters):
        brc_obstruction(1)


def test_general_bound_k4_row():
    assert [general_bound(n, 4) for n in range(8, 14)] == [34, 36, 35, 33, 33, 13]
    assert general_bound(14, 4) == 0


@given(nk_pairs)
def test_general_bound_has_integral_degree(nk):
    n, k = nk
    g = general_bound(n, k)
    assert (k * g) % n == 0
    if n < k * k - k + 1:
        assert g <= floor(hoffman_bound(n, k))
        assert g > floor(hoffman_bound(n, k)) - n


def test_largest_feasible_size():
    assert largest_feasible_size(10, 4, 36) == 35
    assert largest_feasible_size(12, 4, 34) == 33


@given(nk_pairs)
def test_report_consistent(nk):
    n, k = nk
    rep = bound_report(n, k, with_lp=False)
    assert rep.consistent()
    assert rep.get("ekr").value == ekr_bound(n, k)
    assert (rep.verdict == "Nonexistent") == bool(rep.notes)
    if n > k * k - k + 1:
        assert rep.verdict == "Nonexistent"


def test_report_lp_and_brc():
    rep = bound_report(9, 4)
    assert rep.get("delsarte-lp").value == 36
    assert rep.get("general").value == 36
    assert rep.verdict == "Open"
    rep = bound_report(43, 7, with_lp=False)
    assert rep.get("brc").value == 6
    assert rep.verdict == "Nonexistent"
    assert "junta(thm-regular)" in [e.name for e in rep.entries]
    assert not rep.get("junta(alpha-irregular)").applicable


def test_report_subset_hoffman():
    rep = bound_report(11, 5, s=3, with_lp=False)
    entry = rep.get("hoffman(s=3)")
    assert entry.value == floor(hoffman_bound(11, 5, 3))
    assert not entry.applicable  # only for s-subset-regular families


def test_hoffman_floor():
    assert hoffman_floor(8, 3) == 5
