from fractions import Fraction

import pytest

from oddcovers import covers
from oddcovers.ratmap import INFINITY, fiber_profile, hurwitz_total, vanishing_order


def test_family_condition_alpha1():
    assert covers.family_condition_deg5_alpha1()


def test_family_condition_alpha2():
    assert covers.family_condition_deg5_alpha2()


def test_quartic_cover_check():
    assert covers.check_quartic_cover()


def test_quartic_cover_fibers_directly():
    f = covers.quartic_cover_map()
    assert fiber_profile(f, 0) == [3, 1]
    assert fiber_profile(f, -16) == [3, 1]
    assert fiber_profile(f, INFINITY) == [3, 1]
    assert hurwitz_total(f) == 6


def test_paired_quartic_report():
    report = covers.check_paired_quartic_maps()
    assert report.profiles_ok
    assert report.triple_points_ok
    assert report.no_extra_simple_ramification
    assert report.relation == "identity"
    assert report.target_mobius is None
    assert report.ok()


def test_paired_quartic_maps_share_branch_structure():
    first, second = covers.paired_quartic_maps()
    for f in (first, second):
        assert f.degree == 4
        assert vanishing_order(f, 0, 0) == 2
        assert vanishing_order(f, 0, 1) == 2
        assert hurwitz_total(f) == 6
    assert vanishing_order(second, INFINITY, INFINITY) == 3


def test_deg3_maps():
    assert covers.check_deg3_maps()
    f, conj = covers.deg3_maps()
    assert f(0) == f(1)
    assert vanishing_order(f, f(INFINITY), INFINITY) == 3


def test_chern_upper_bound():
    assert covers.chern_upper_bound(2, 5) == 4
    assert covers.chern_upper_bound(0, 0) == 0
    assert 4 * covers.chern_upper_bound(2, 5) == 16


def test_c1_dma():
    assert covers.c1_dma(1, 3) == 3
    assert covers.c1_dma(2, 4) == 8
    assert covers.c1_dma(0, 9) == 0
    # the bundle inputs feeding the Chern bound: c1(V) = 8 - 3 = 5
    assert covers.c1_dma(2, 4) - covers.c1_dma(1, 3) == 5


def test_veronese_bound():
    assert covers.VERONESE_PER_SPIN == 4
    assert covers.veronese_bound() == 16


def test_admissible_tallies():
    assert covers.admissible_tally(5) == 16
    assert covers.admissible_tally(4) == 16
    with pytest.raises(ValueError):
        covers.admissible_tally(6)


def test_tally_case_breakdown():
    deg5 = [case.contribution() for case in covers.DEG5_CASES]
    assert deg5 == [8, 8]
    # a single end-node configuration contributes 2 * 4 * 1/2 = 4
    assert covers.DEG5_CASES[0].contribution() / covers.DEG5_CASES[0].multiplicity == 4
    deg4 = [case.contribution() for case in covers.DEG4_CASES]
    assert deg4 == [4, 8, 4]


def test_three_routes_to_sixteen_coincide():
    chern_total = 4 * covers.chern_upper_bound(2, 5)
    assert chern_total == covers.veronese_bound() == covers.admissible_tally(4) \
        == covers.admissible_tally(5) == 16


def test_j_invariant():
    assert covers.j_invariant(4, 0) == 1728
    assert covers.j_invariant(0, 1) == 0
    assert covers.j_invariant(4, 1) == Fraction(1728 * 64, 37)
    with pytest.raises(ZeroDivisionError):
        covers.j_invariant(3, 1)  # 27 - 27 = 0
