import random

import pytest

from circllt import colorings as col
from circllt import diagrams as dg
from circllt.diagrams import LLTTuple, MarkedDiagram, NaturalPoset
from circllt.qalgebra import ONE, QPoly, parse_qpoly, q, q_int
from circllt.symfunc import SymFunc, change_basis, to_quasisymmetric, to_symmetric


def E(d):
    return SymFunc(sum(next(iter(d))), "e", {k: (parse_qpoly(v) if isinstance(v, str) else v) for k, v in d.items()})


def M(d):
    return SymFunc(sum(next(iter(d))), "m", {k: (parse_qpoly(v) if isinstance(v, str) else v) for k, v in d.items()})


def A(*a):
    return dg.validate(a)


def test_packed_word_counts():
    # ordered set partitions (Fubini numbers)
    assert [len(col.packed_words(n)[0]) for n in range(1, 8)] == [1, 3, 13, 75, 541, 4683, 47293]


def test_chromatic_examples():
    assert change_basis(col.chromatic_qsf(A(0, 0)), "e") == E({(1, 1): ONE})
    assert col.chromatic_qsf(A(0, 0)) == M({(2,): ONE, (1, 1): QPoly.const(2)})
    assert change_basis(col.chromatic_qsf(A(1, 0)), "e") == E({(2,): "1+q"})


def test_chromatic_of_full_circular_diagram():
    from math import comb, factorial

    for n in range(1, 6):
        a = dg.validate((n - 1,) * n)
        want = E({(n,): QPoly.monomial(comb(n, 2), factorial(n))})
        assert change_basis(col.chromatic_qsf(a), "e") == want


def test_llt_examples():
    assert change_basis(col.llt_poly(A(0, 0), True), "e") == E({(1, 1): ONE})
    assert col.llt_poly(A(1, 0)) == M({(2,): ONE, (1, 1): "1+q"})
    assert change_basis(col.llt_poly(A(1, 0), True), "e") == E({(1, 1): ONE, (2,): q})
    assert col.llt_poly(A(1, 1)) == M({(2,): ONE, (1, 1): "2*q"})
    assert change_basis(col.llt_poly(A(1, 1), True), "e") == E({(1, 1): ONE, (2,): "2*q"})


def test_strict_marks_force_inequality():
    d = MarkedDiagram(A(0, 0), frozenset({(1, 2)}))
    assert change_basis(col.llt_poly(d), "e") == E({(2,): ONE})
    w = MarkedDiagram(A(0, 0), frozenset(), frozenset({(1, 2)}))
    assert change_basis(col.llt_poly(w), "h") == SymFunc(2, "h", {(2,): ONE})


def test_tutte_and_double_complete():
    assert change_basis(col.tutte_mono(A(0, 0)), "e") == E({(1, 1): ONE})
    assert col.tutte_mono(A(1, 0)) == M({(2,): "1+q", (1, 1): QPoly.const(2)})
    assert col.h_double_complete(1) == M({(1,): ONE})
    assert col.h_double_complete(2) == M({(2,): q, (1, 1): QPoly.const(2)})
    assert col.h_double_complete(3) == M({(3,): "q^3", (2, 1): "3*q", (1, 1, 1): QPoly.const(6)})


def test_tutte_at_zero_is_e1_power():
    for a in dg.enumerate_diagrams(4, "circular"):
        t = col.tutte_mono(a).map_coeffs(lambda c: QPoly.const(c[0]))
        assert change_basis(t, "e") == E({(1, 1, 1, 1): ONE})


def test_poset_functions():
    anti = NaturalPoset(2, frozenset())
    chain2 = NaturalPoset(2, frozenset({(1, 2)}))
    chain3 = NaturalPoset(3, frozenset({(1, 2), (1, 3), (2, 3)}))
    assert to_symmetric(col.poset_xp(anti)) == change_basis(E({(1, 1): ONE}), "m")
    assert col.poset_xp(chain2) == to_quasisymmetric(E({(2,): ONE}))
    assert to_symmetric(col.poset_xp(chain3)) == change_basis(E({(3,): ONE}), "m")


def test_orientation_sum_examples():
    lhs, rhs = col.coeff_qt_orientation_sum(A(1, 0))
    assert lhs == rhs and change_basis(lhs, "e") == E({(1, 1): ONE, (2,): q})
    lhs, rhs = col.coeff_qt_orientation_sum(A(1, 1))
    assert lhs == rhs and change_basis(lhs, "e") == E({(1, 1): ONE, (2,): "2*q"})
    lhs, rhs = col.coeff_qt_orientation_sum(A(0, 0, 0))
    assert change_basis(lhs, "e") == E({(1, 1, 1): ONE})


def test_orientation_sum_on_circular_vstrips():
    for n in range(1, 4):
        for d in dg.enumerate_diagrams(n, "circular_vstrip"):
            lhs, rhs = col.coeff_qt_orientation_sum(d)
            assert lhs == rhs, dg.format_marked(d)


def test_oracle_small_tuples():
    single = LLTTuple((((0, 0),),), None)
    assert change_basis(col.classical_llt_oracle(single), "e") == E({(1,): ONE})
    two = LLTTuple((((0, 0),), ((0, 0),)), None)
    assert col.classical_llt_oracle(two) == M({(2,): ONE, (1, 1): "1+q"})


def test_oracle_matches_colorings():
    for n in range(1, 5):
        for d in dg.enumerate_diagrams(n, "ribbon"):
            assert col.classical_llt_oracle(dg.marked_to_llt_tuple(d)) == col.llt_poly(d), dg.format_marked(d)


def test_symmetry_of_circular_polynomials():
    for n in range(1, 5):
        for d in dg.enumerate_diagrams(n, "circular_ribbon"):
            col.llt_poly(d)
        for a in dg.enumerate_diagrams(n, "circular"):
            col.chromatic_qsf(a)


def test_weak_edge_elimination():
    for d in dg.enumerate_diagrams(4, "circular_ribbon"):
        for e in d.weak:
            lhs = col.llt_poly(d)
            r1 = col.llt_poly(MarkedDiagram(d.a, d.strict, d.weak - {e}))
            r2 = col.llt_poly(MarkedDiagram(d.a, d.strict | {e}, d.weak - {e}))
            assert lhs == r1 - r2


def test_e1n_coefficient_is_one():
    for n in range(1, 6):
        for a in dg.enumerate_diagrams(n, "circular"):
            assert change_basis(col.llt_poly(a, True), "e")[(1,) * n] == ONE


def test_double_complete_relation():
    from math import comb

    for n in range(1, 5):
        g = col.llt_poly(dg.validate((n - 1,) * n))
        rhs = g.map_coeffs(lambda c: c.subs_q_inverse() * QPoly.monomial(comb(n, 2)))
        assert col.h_double_complete(n) == rhs


def test_weak_chain_not_fundamental_positive():
    from circllt.symfunc import qsym_to_fundamental

    a = A(1, 1, 1)
    d = MarkedDiagram(a, frozenset(), frozenset(dg.corner_edges(a)))
    f = qsym_to_fundamental(col.llt_qsym(d, True))
    assert any(not c.nonnegative() for c in f.coeffs.values())
    # a single weak corner on the same diagram is still fine
    one = MarkedDiagram(a, frozenset(), frozenset({(1, 3)}))
    assert all(c.nonnegative() for c in qsym_to_fundamental(col.llt_qsym(one, True)).coeffs.values())


def test_restricted_llt_matches_symmetric_function():
    from circllt.symfunc import expand_in_variables

    rng = random.Random(1)
    fam = list(dg.enumerate_diagrams(4, "circular_vstrip"))
    for d in rng.sample(fam, 15):
        assert col.restricted_llt(d, 3) == expand_in_variables(col.llt_poly(d), 3)


def test_golden_small_instance():
    e = change_basis(col.chromatic_qsf(A(2, 3, 2, 1, 0)), "e")
    assert e[(5,)] == parse_qpoly("1+4*q+8*q^2+11*q^3+12*q^4+11*q^5+8*q^6+4*q^7+q^8")
    assert e[(4, 1)] == parse_qpoly("q^2+3*q^3+4*q^4+3*q^5+q^6")


def test_chromatic_sum_of_coefficients():
    for a in dg.enumerate_diagrams(5, "dyck"):
        total = sum(change_basis(col.chromatic_qsf(a), "e").coeffs.values(), QPoly())
        want = ONE
        for x in a:
            want = want * q_int(x + 1)
        assert total == want
