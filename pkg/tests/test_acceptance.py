"""Acceptance gate: one pass/fail line per criterion (see the terminal summary).

Every comparison is exact (zero tolerance); the only numeric bound is the
5 s runtime budget for the single golden expansion.
"""

import os
import time
from math import comb

import pytest

from circllt import colorings as col
from circllt import diagrams as dg
from circllt import formulas as fm
from circllt import harness as hs
from circllt.qalgebra import parse_qpoly
from circllt.symfunc import change_basis

from conftest import ACCEPTANCE_LINES

JOBS = os.cpu_count() or 1
GOLDEN_BUDGET_S = 5.0

PRINTED = [parse_qpoly(s) for s in hs.PRINTED_X_COEFFS]
PRINTED_TC5 = parse_qpoly(hs.PRINTED_TILDEC5)


def record(k: int, ok: bool, title: str, detail: str = "") -> None:
    line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
    ACCEPTANCE_LINES[k] = line
    print(line)


@pytest.fixture(scope="module")
def theorem_reports():
    reps = hs.run_identity_suite(None, jobs=JOBS)
    return {r.check: r for r in reps}


@pytest.fixture(scope="module")
def conjecture_reports():
    reps = hs.sweep_conjectures(5, "all", jobs=JOBS)
    return {r.check: r for r in reps}


def _all_pass(reports, names):
    bad = [f"{n}: {reports[n].failures[:1]}" for n in names if reports[n].status != "pass"]
    return not bad, "; ".join(bad)


def test_criterion_01_golden_expansion():
    t0 = time.perf_counter()
    e = change_basis(col.chromatic_qsf(dg.validate((2, 2, 3, 2, 1, 0))), "e")
    elapsed = time.perf_counter() - t0
    values = set(e.coeffs.values())
    found = [p in values for p in PRINTED]
    ok = all(found) and elapsed < GOLDEN_BUDGET_S
    detail = f"{elapsed:.2f}s; printed polynomials present: {found}; actual support {sorted(e.coeffs)}"
    record(1, ok, "X_(2,2,3,2,1,0) reproduces both printed e-coefficients", detail)
    assert elapsed < GOLDEN_BUDGET_S
    assert all(found), f"printed coefficients not found; actual expansion {e}"


def test_criterion_02_tildec5():
    routes = {
        "log": fm.tildec_from_log(5)[4],
        "recurrence": fm.tildec_from_recurrence(5)[4],
        "H_5": fm.tildec_from_h(5),
    }
    ok = all(v == PRINTED_TC5 for v in routes.values())
    record(2, ok, "tilde-c_(5) by formal log, recurrence and H_5 equals the printed polynomial")
    assert ok, routes


def test_criterion_03_counts():
    checks = {
        "circular n=3": (dg.count_diagrams(3, "circular"), 18),
        "vstrip 1..6": ([dg.count_diagrams(n, "vstrip") for n in range(1, 7)], [1, 3, 11, 45, 197, 903]),
        "circular vstrip 1..6": (
            [dg.count_diagrams(n, "circular_vstrip") for n in range(1, 7)],
            [1, 9, 65, 449, 3009, 19721],
        ),
    }
    for n in range(1, 9):
        checks[f"dyck n={n}"] = (dg.count_diagrams(n, "dyck"), dg.catalan(n))
    for n in range(1, 8):
        checks[f"circular n={n}"] = (
            dg.count_diagrams(n, "circular"),
            (n + 2) * comb(2 * n - 1, n - 1) - 2 ** (2 * n - 1),
        )
    bad = [k for k, (got, want) in checks.items() if got != want]
    record(3, not bad, "diagram counts (Catalan, circular formula, Schroeder, circular vstrip)", ", ".join(bad))
    assert not bad


IDENTITIES = [
    "row_column_product",
    "unique_sink",
    "sink_identity",
    "half_sink_identity",
    "e1n_coefficient",
    "d_mu_sum",
    "bounce_vanishing",
    "palindromicity",
    "symmetry",
]


def test_criterion_04_identity_suite(theorem_reports):
    ok, bad = _all_pass(theorem_reports, IDENTITIES)
    sizes = ", ".join(f"{n}<= {theorem_reports[n].n}" for n in IDENTITIES)
    record(4, ok, "orientation, product, sink, bounce, palindromicity and symmetry identities", bad or sizes)
    assert ok, bad


def test_criterion_05_oracle(theorem_reports):
    r = theorem_reports["llt_oracle"]
    ok = r.status == "pass" and r.n >= 5
    record(5, ok, "coloring LLT equals classical SSYT-tuple LLT", f"{r.tested} marked diagrams, n<={r.n}")
    assert ok, r.failures[:3]


def test_criterion_06_plethysm_and_omega(theorem_reports):
    ok, bad = _all_pass(theorem_reports, ["plethysm_and_hatc", "omega_transpose"])
    record(6, ok, "plethystic identity, hat-c = c, omega-transpose", bad)
    assert ok, bad


def test_criterion_07_p_expansions(theorem_reports):
    ok, bad = _all_pass(theorem_reports, ["p_expansion"])
    a = dg.validate((1, 0))
    pinned = fm.perm_stat(a, (1, 2)) == 0 and fm.perm_stat(a, (2, 1)) == 1 and fm.is_admissible(a, (1, 2), (2,))
    ok = ok and pinned
    record(7, ok, "admissible-word p-expansions (both sides, dyck n<=5), statistic pinned", bad)
    assert ok


def test_criterion_08_generating_functions(theorem_reports):
    ok, bad = _all_pass(theorem_reports, ["generating_functions", "complete_graph_recurrence", "sector_expansions"])
    record(8, ok, "generating functions to z^7, K_n recurrence, sector expansions", bad)
    assert ok, bad


def test_criterion_09_eulerian(theorem_reports):
    ok, bad = _all_pass(theorem_reports, ["eulerian"])
    record(9, ok and theorem_reports["eulerian"].n >= 7, "squarefree coefficients of X_P and X_C (n<=7)", bad)
    assert ok, bad


def test_criterion_10_bijections(theorem_reports):
    ok, bad = _all_pass(theorem_reports, ["decode_and_rooks"])
    record(10, ok, "orientation decoder and rook map are weight-preserving bijections (dyck n<=6)", bad)
    assert ok, bad


def test_criterion_11_parking():
    suites = {n: fm.parking_suite(n) for n in range(1, 7)}
    parts = {
        "reflection": all(s["reflection"] for s in suites.values()),
        "count": all(s["count_ok"] for s in suites.values()),
        "q^n tilde-c_n = n[n] f_n": all(s["tildec_printed"] for s in suites.values()),
        "I_n(q+1) connected graphs": all(suites[n]["connected_printed"] for n in range(1, 6)),
    }
    shifted = all(s["tildec_shifted"] for s in suites.values()) and all(
        suites[n]["connected_shifted"] for n in range(1, 5)
    )
    ok = all(parts.values())
    detail = ", ".join(f"{k}: {v}" for k, v in parts.items()) + f"; index-shifted forms hold: {shifted}"
    record(11, ok, "parking-function identities as printed", detail)
    assert parts["reflection"] and parts["count"]
    assert ok, detail


def test_criterion_12_known_discrepancies(theorem_reports):
    r = theorem_reports["printed_path_cycle_coefficients"]
    wits = {w for _, w in r.failures}
    want = {"e[2, 1]: printed 2*q, actual q", "e[3]: printed 3*q, actual 3*q+3*q^2"}
    ok = r.status == "reproduced" and want <= wits
    record(12, ok, "printed path/cycle e-coefficients diverge on P_3 (2,1) and C_3 (3)")
    assert ok, wits


CONJ = [
    "chromatic_e_positivity",
    "llt_vstrip_e_positivity",
    "vstrip_p_positivity",
    "schur_difference",
    "strict_marking_difference",
    "hatc_positivity",
]


def test_criterion_13_conjecture_sweeps(conjecture_reports):
    clean = [n for n in CONJ if conjecture_reports[n].status == "pass"]
    findings = {n: conjecture_reports[n].failures[:2] for n in CONJ if n not in clean}
    chain = conjecture_reports["weak_chain_f_positivity"]
    ok = not findings and chain.status == "reproduced"
    detail = ", ".join(f"{n}: {conjecture_reports[n].tested}" for n in CONJ)
    record(13, ok, "conjecture sweeps clean, weak-chain counterexample reproduced", str(findings) if findings else detail)
    assert ok, findings
