from fractions import Fraction
from math import comb

import pytest

from circllt import colorings as col
from circllt import diagrams as dg
from circllt import formulas as fm
from circllt.qalgebra import ONE, QLaurent, QPoly, is_unimodal, parse_qpoly, q, q_int
from circllt.symfunc import SymFunc, change_basis, omega

TC5 = "5*q^10+25*q^9+75*q^8+175*q^7+325*q^6+500*q^5+600*q^4+550*q^3+450*q^2+300*q+120"


def E(d):
    return SymFunc(sum(next(iter(d))), "e", {k: (parse_qpoly(v) if isinstance(v, str) else v) for k, v in d.items()})


def test_families():
    assert fm.path_area(4) == (1, 1, 1, 0)
    assert fm.cycle_area(4) == (1, 1, 1, 1)
    assert fm.complete_area(3) == (2, 1, 0)
    assert fm.double_complete_area(3) == (2, 2, 2)
    assert fm.disjoint_union((1, 0), (0,)) == (1, 0, 0)


def test_sector_expansion_examples():
    assert fm.e_expansion_by_sectors(fm.cycle_area(3)) == E({(3,): "3*q+3*q^2"})
    assert fm.e_expansion_by_sectors(fm.path_area(2), "llt") == E({(1, 1): ONE, (2,): q})
    assert fm.e_expansion_by_sectors(fm.path_area(3)) == E({(3,): "1+q+q^2", (2, 1): q})


@pytest.mark.parametrize("n", range(1, 7))
def test_sector_expansions_match_direct(n):
    cases = [fm.path_area(n), fm.complete_area(n), fm.double_complete_area(n)]
    if n >= 3:
        cases += [fm.cycle_area(n), fm.disjoint_union(fm.path_area(n - 2), fm.complete_area(2))]
    for a in cases:
        assert fm.e_expansion_by_sectors(a) == change_basis(col.chromatic_qsf(a), "e"), a
    llt_cases = [fm.path_area(n), fm.complete_area(n)] + ([fm.cycle_area(n)] if n >= 3 else [])
    for a in llt_cases:
        assert fm.e_expansion_by_sectors(a, "llt") == change_basis(col.llt_poly(a, True), "e"), a


def test_printed_path_formula_small_cases():
    assert fm.path_e_coeff((2,)) == parse_qpoly("1+q")
    assert fm.path_e_coeff((3,)) == parse_qpoly("1+q+q^2")


def test_printed_formulas_diverge_from_brute_force():
    x_p3 = change_basis(col.chromatic_qsf(fm.path_area(3)), "e")
    assert fm.path_e_coeff((2, 1)) == 2 * q
    assert x_p3[(2, 1)] == q
    x_c3 = change_basis(col.chromatic_qsf(fm.cycle_area(3)), "e")
    assert fm.cycle_e_coeff((3,)) == 3 * q
    assert x_c3[(3,)] == parse_qpoly("3*q+3*q^2")


def test_generating_function_examples():
    assert fm.gf_expand("path", "chromatic", 3).coefficient(2) == E({(2,): "1+q"})
    assert fm.gf_expand("path", "llt", 3).coefficient(2) == E({(1, 1): ONE, (2,): q})
    assert fm.gf_expand("cycle", "llt", 3).coefficient(2) == E({(1, 1): ONE, (2,): "2*q"})


def test_generating_functions_through_degree_seven():
    for kind in ("path", "cycle"):
        for side in ("chromatic", "llt"):
            series = fm.gf_expand(kind, side, 7)
            for n in range(2, 8):
                a = fm.path_area(n) if kind == "path" else fm.cycle_area(n)
                direct = col.chromatic_qsf(a) if side == "chromatic" else col.llt_poly(a, True)
                assert series.coefficient(n) == change_basis(direct, "e"), (kind, side, n)


def test_complete_graph_recurrence():
    assert fm.kn_llt_via_recurrence(1) == E({(1,): ONE})
    assert fm.kn_llt_via_recurrence(2) == E({(1, 1): ONE, (2,): q})
    for n in range(3, 6):
        assert fm.kn_llt_via_recurrence(n) == change_basis(col.llt_poly(fm.complete_area(n), True), "e")


def test_p_expansion_calibration_instance():
    a = dg.validate((1, 0))
    assert fm.is_admissible(a, (1, 2), (2,))
    assert not fm.is_admissible(a, (2, 1), (2,))
    assert fm.perm_stat(a, (1, 2)) == 0
    assert fm.perm_stat(a, (2, 1)) == 1
    got = fm.p_expansion_admissible(a)
    assert fm.p_coeffs(got)[(2,)] == parse_qpoly("1+q")


def test_p_expansion_statistic_is_pinned():
    # regression pin of the admissibility/statistic convention on a 4-vertex diagram
    from itertools import permutations

    a = dg.validate((2, 1, 1, 0))

    def table(lam):
        return [(pi, fm.perm_stat(a, pi)) for pi in permutations(range(1, 5)) if fm.is_admissible(a, pi, lam)]

    assert table((4,)) == [((1, 2, 3, 4), 0), ((2, 1, 3, 4), 1)]
    assert table((2, 2)) == [((1, 2, 3, 4), 0), ((3, 4, 1, 2), 2)]
    c4 = fm.p_coeffs(fm.p_expansion_admissible(a))[(4,)]
    assert c4 == q_int(4) * (1 + q)


@pytest.mark.parametrize("side", ["chromatic", "llt"])
def test_p_expansion_matches_change_of_basis(side):
    for n in range(1, 5):
        for a in dg.enumerate_diagrams(n, "dyck"):
            direct = col.chromatic_qsf(a) if side == "chromatic" else col.llt_poly(a, True)
            assert fm.p_expansion_admissible(a, side) == omega(direct), a


def test_p_expansion_rejects_circular():
    with pytest.raises(dg.CircularNotSupported):
        fm.p_expansion_admissible(dg.validate((1, 1)))


def test_hatc():
    assert fm.hatc_coefficients(dg.validate((0,))) == {(1,): ONE}
    hc = fm.hatc_coefficients(dg.validate((1, 1)))
    assert all(c.nonnegative() and c.is_integral() for c in hc.values())
    for a in dg.enumerate_diagrams(4, "dyck"):
        assert fm.hatc_coefficients(a) == fm.chromatic_p_coeffs(a)


def test_plethysm_identity():
    assert fm.pleth_identity_check(dg.validate((1, 0))) == (True, None)
    assert fm.pleth_identity_check(dg.validate((0, 0))) == (True, None)
    for n in range(1, 5):
        for a in dg.enumerate_diagrams(n, "dyck"):
            assert fm.pleth_identity_check(a)[0]


def test_omega_transpose():
    for n in range(1, 5):
        for d in dg.enumerate_diagrams(n, "ribbon"):
            assert fm.omega_transpose_check(d)


def test_double_complete_tower():
    log = fm.tildec_from_log(5)
    assert log[0] == ONE
    assert log[4] == parse_qpoly(TC5)
    assert fm.tildec_from_recurrence(5) == log
    assert fm.tildec_from_h(5) == log[4]
    assert is_unimodal(log[4])
    g, tc = fm.g_series_and_tildec(4)
    assert tc == log[:4]


def test_parking_small():
    f1, i1, c1 = fm.parking_polys(1)
    assert (f1, i1, c1) == (ONE, q, 1)
    f2, _, c2 = fm.parking_polys(2)
    assert f2 == parse_qpoly("2+q") and c2 == 3
    assert sorted(fm.parking_functions(2)) == [(1, 1), (1, 2), (2, 1)]
    assert fm.parking_polys(3)[2] == 16


@pytest.mark.parametrize("n", range(1, 7))
def test_parking_identities(n):
    s = fm.parking_suite(n)
    assert s["count"] == (n + 1) ** (n - 1)
    assert s["reflection"]
    assert s["tildec_shifted"]
    if n <= 4:
        assert s["connected_shifted"]


def test_parking_printed_forms_are_off_by_one():
    # the relations hold once f and I are taken one size lower
    assert not fm.parking_suite(3)["tildec_printed"]
    assert not fm.parking_suite(3)["connected_printed"]
    assert not fm.kreweras_printed(4)
    assert fm.kreweras_shifted(6)


def test_connected_graph_poly():
    # one triangle and three paths on three labelled vertices
    assert fm.connected_graph_poly(3) == QLaurent({0: 1, -1: 3})


@pytest.mark.parametrize("n", range(2, 8))
def test_eulerian_specializations(n):
    assert fm.eulerian_specialization("path", n) == fm.eulerian_expected("path", n)
    assert fm.eulerian_specialization("cycle", n) == fm.eulerian_expected("cycle", n)


def test_eulerian_examples():
    assert fm.eulerian_specialization("path", 2) == parse_qpoly("1+q")
    assert fm.eulerian_specialization("path", 3) == parse_qpoly("1+4*q+q^2")
    assert fm.eulerian_specialization("cycle", 3) == parse_qpoly("3*q+3*q^2")
