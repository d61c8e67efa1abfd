"""Identity suites, conjecture sweeps and reports.

Every check is a pure function ``fn(n) -> (tested, failures)`` registered
under a name.  A check has a kind:

* ``theorem``: a failure is a bug (drives the exit code);
* ``conjecture``: a failure is a finding and is reported, not raised;
* ``expected_failure``: a printed statement known to disagree with ground
  truth; the report records the divergence as its witness.

Sweeps fan out over (check, n) tasks with a process pool; results are
collected and ordered deterministically, so the output does not depend on
the number of workers.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from . import colorings as col
from . import diagrams as dg
from . import formulas as fm
from . import orientations as ori
from .qalgebra import ONE, ZERO, NotDivisible, QPoly, TPoly, is_palindromic, is_unimodal, parse_qpoly, q_int
from .symfunc import (
    NotSymmetric,
    SymFunc,
    change_basis,
    omega,
    partitions,
    phi_stanley,
    qsym_to_fundamental,
)

SCHEMA = 1

PRINTED_X_COEFFS = (
    "1+4*q+8*q^2+11*q^3+12*q^4+11*q^5+8*q^6+4*q^7+q^8",
    "q^2+3*q^3+4*q^4+3*q^5+q^6",
)
PRINTED_TILDEC5 = "5*q^10+25*q^9+75*q^8+175*q^7+325*q^6+500*q^5+600*q^4+550*q^3+450*q^2+300*q+120"
VSTRIP_COUNTS = {1: 1, 2: 9, 3: 65, 4: 449, 5: 3009, 6: 19721}


@dataclass
class CheckReport:
    check: str
    kind: str
    family: str
    n: int
    tested: int = 0
    failures: list = field(default_factory=list)
    ms: int = 0

    @property
    def status(self) -> str:
        if self.kind == "expected_failure":
            return "reproduced" if self.failures else "unexpected-pass"
        if not self.failures:
            return "pass"
        return "fail" if self.kind == "theorem" else "finding"

    @property
    def blocking(self) -> bool:
        return self.kind == "theorem" and bool(self.failures)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "check": self.check,
            "kind": self.kind,
            "family": self.family,
            "n": self.n,
            "tested": self.tested,
            "status": self.status,
            "failures": [{"diagram": d, "witness": w} for d, w in self.failures],
            "ms": self.ms,
        }


def _lbl(d) -> str:
    return dg.format_marked(d) if isinstance(d, dg.MarkedDiagram) else dg.format_area(d)


def e_tpoly(f: SymFunc) -> TPoly:
    out = TPoly()
    for lam, c in change_basis(f, "e").coeffs.items():
        out = out + TPoly({len(lam): c})
    return out


def _run(items, predicate):
    """Apply predicate(item) -> None or witness; returns (tested, failures)."""
    tested, fails = 0, []
    for item in items:
        tested += 1
        try:
            w = predicate(item)
        except (NotSymmetric, NotDivisible) as exc:
            w = f"{type(exc).__name__}: {exc}"
        if w is not None:
            fails.append((_lbl(item), str(w)))
    return tested, fails


def _e_nonneg(f: SymFunc, unimodal=True):
    for lam, c in sorted(change_basis(f, "e").coeffs.items()):
        if not (c.is_polynomial() and c.nonnegative()):
            return f"e{list(lam)}: {c}"
        if unimodal and not is_unimodal(c):
            return f"e{list(lam)} not unimodal: {c}"
    return None


# ---------------------------------------------------------------------------
# theorem checks


def chk_symmetry(n):
    def p(d):
        col.llt_poly(d)
        if d.unmarked:
            col.chromatic_qsf(d.a)
        return None

    fam = "circular_vstrip" if n <= 5 else "circular"
    return _run((dg.as_marked(a) for a in dg.enumerate_diagrams(n, fam)), p)


def chk_orientation_sum(n):
    def p(d):
        lhs, rhs = col.coeff_qt_orientation_sum(d)
        return None if lhs == rhs else "orientation sum differs"

    return _run(dg.enumerate_diagrams(n, "circular_vstrip"), p)


def chk_sinks(n):
    return _run(
        dg.enumerate_diagrams(n, "circular"),
        lambda a: None if e_tpoly(col.chromatic_qsf(a)) == ori.sink_tpoly(a) else "sink sum differs",
    )


def chk_half_sinks(n):
    def p(d):
        g = e_tpoly(col.llt_poly(d, True))
        if g != ori.ostar_tpoly(d, "half_sinks"):
            return "half-sink sum differs"
        if g != ori.ostar_tpoly(d, "half_sources"):
            return "half-source sum differs"
        return None

    return _run(dg.enumerate_diagrams(n, "circular_vstrip"), p)


def chk_e1n(n):
    def p(a):
        c = change_basis(col.llt_poly(a, True), "e")[(1,) * n]
        return None if c == ONE else f"e_1^n coefficient {c}"

    return _run(dg.enumerate_diagrams(n, "circular"), p)


def chk_row_column(n):
    def p(a):
        total = ZERO
        for c in change_basis(col.chromatic_qsf(a), "e").coeffs.values():
            total = total + c
        pa = prod((q_int(x + 1) for x in a), start=ONE)
        pb = prod((q_int(x + 1) for x in dg.column_area(a)), start=ONE)
        if sorted(dg.column_area(a)) != sorted(a):
            return "column sequence is not a permutation"
        if total != pa or total != pb:
            return f"sum {total} vs {pa}"
        if ori.rook_tpoly(ori.board_of(a)) != pa:
            return "rook sum differs"
        return None

    return _run(dg.enumerate_diagrams(n, "dyck"), p)


def chk_unique_sink(n):
    def p(a):
        pa = prod((q_int(x) for x in a[:-1]), start=ONE)
        us = ori.unique_sink_sum(a, 1)
        if us != pa:
            return f"unique-sink sum {us} vs {pa}"
        cn = change_basis(col.chromatic_qsf(a), "e")[(n,)]
        if cn != q_int(n) * pa:
            return f"c_(n) {cn}"
        return None

    return _run((a for a in dg.enumerate_diagrams(n, "dyck") if dg.is_connected(a)), p)


def chk_bounce(n):
    def p(a):
        r = len(dg.bounce_blocks(a))
        for lam in change_basis(col.chromatic_qsf(a), "e").coeffs:
            if len(lam) > r:
                return f"e{list(lam)} with {r} bounce blocks"
        return None

    return _run(dg.enumerate_diagrams(n, "circular"), p)


def chk_palindromic(n):
    def p(a):
        for lam, c in change_basis(col.chromatic_qsf(a), "e").coeffs.items():
            if not is_palindromic(c, Fraction(a.area, 2)):
                return f"e{list(lam)}: {c}"
        return None

    return _run(dg.enumerate_diagrams(n, "circular"), p)


def chk_dmu_sum(n):
    def p(d):
        total = ZERO
        for c in change_basis(col.llt_poly(d, True), "e").coeffs.values():
            total = total + c
        want = QPoly({0: 1, 1: 1}) ** len(dg.edges(d.a))
        return None if total == want else f"{total} vs {want}"

    return _run(dg.enumerate_diagrams(n, "vstrip"), p)


def chk_two_var_epos(n):
    def p(a):
        e = change_basis(col.llt_poly(a, True), "e")
        for lam, c in e.coeffs.items():
            if lam[0] <= 2 and not c.nonnegative():
                return f"e{list(lam)}: {c}"
        return None

    return _run(dg.enumerate_diagrams(n, "circular"), p)


def chk_full_adjacency(n):
    def p(a):
        e = change_basis(col.chromatic_qsf(a), "e")
        if set(e.coeffs) != {(n,)}:
            return str(e)
        c = e[(n,)]
        return None if c.nonnegative() and c.is_integral() else str(c)

    fam = (a for a in dg.enumerate_diagrams(n, "circular") if min(a) >= n / 2 or max(a) == n - 1)
    return _run(fam, p)


def chk_oracle(n):
    def p(d):
        t = dg.marked_to_llt_tuple(d)
        if not all(dg.is_ribbon(c) and dg.is_skew_shape(c) for c in t.cells):
            return "not a ribbon tuple"
        return None if col.classical_llt_oracle(t) == col.llt_poly(d) else "polynomials differ"

    return _run(dg.enumerate_diagrams(n, "ribbon"), p)


def chk_weak_elimination(n):
    def p(d):
        g = col.llt_poly(d)
        for e in sorted(d.weak):
            r1 = col.llt_poly(dg.MarkedDiagram(d.a, d.strict, d.weak - {e}))
            r2 = col.llt_poly(dg.MarkedDiagram(d.a, d.strict | {e}, d.weak - {e}))
            if g != r1 - r2:
                return f"edge {e}"
        return None

    return _run(dg.enumerate_diagrams(n, "ribbon"), p)


def chk_pleth(n):
    def p(a):
        ok, w = fm.pleth_identity_check(a)
        if not ok:
            return f"lambda {w}"
        if fm.hatc_coefficients(a) != fm.chromatic_p_coeffs(a):
            return "hat-c differs from c"
        return None

    return _run(dg.enumerate_diagrams(n, "dyck"), p)


def chk_omega_transpose(n):
    return _run(
        dg.enumerate_diagrams(n, "ribbon"),
        lambda d: None if fm.omega_transpose_check(d) else "identity fails",
    )


def chk_p_expansion(n):
    def p(a):
        if fm.p_expansion_admissible(a, "chromatic") != omega(col.chromatic_qsf(a)):
            return "chromatic side"
        if fm.p_expansion_admissible(a, "llt") != omega(col.llt_poly(a, True)):
            return "llt side"
        return None

    return _run(dg.enumerate_diagrams(n, "dyck"), p)


def chk_gf(n):
    fails, tested = [], 0
    for kind in ("path", "cycle"):
        for side in ("chromatic", "llt"):
            if kind == "cycle" and side == "chromatic" and n == 1:
                continue  # the one-vertex cycle is a loop: no proper colorings
            tested += 1
            a = fm.path_area(n) if kind == "path" else fm.cycle_area(n) if n > 1 else dg.AreaSeq((0,))
            direct = col.chromatic_qsf(a) if side == "chromatic" else col.llt_poly(a, True)
            if kind == "cycle" and n == 1:
                direct = SymFunc(1, "e", {(1,): ONE})
            if fm.gf_expand(kind, side, n).coefficient(n) != direct:
                fails.append((f"{kind}/{side}", f"z^{n}"))
    return tested, fails


def chk_kn(n):
    a = fm.complete_area(n)
    ok = fm.kn_llt_via_recurrence(n) == col.llt_poly(a, True)
    return 1, [] if ok else [(_lbl(a), "recurrence differs")]


def _sector_family(n):
    out = [("chromatic", fm.path_area(n)), ("chromatic", fm.complete_area(n)), ("chromatic", fm.double_complete_area(n))]
    out += [("llt", fm.path_area(n)), ("llt", fm.complete_area(n))]
    if n >= 3:
        out += [("chromatic", fm.cycle_area(n)), ("llt", fm.cycle_area(n))]
    if n >= 3:
        out.append(("chromatic", fm.disjoint_union(fm.path_area(n - 2), fm.complete_area(2))))
        out.append(("chromatic", fm.disjoint_union(fm.complete_area(n - 1), (0,))))
    return out


def chk_sectors(n):
    def p(item):
        side, a = item
        direct = col.chromatic_qsf(a) if side == "chromatic" else col.llt_poly(a, True)
        return None if fm.e_expansion_by_sectors(a, side) == direct else f"{side} side"

    tested, fails = 0, []
    for item in _sector_family(n):
        tested += 1
        w = p(item)
        if w:
            fails.append((_lbl(item[1]), w))
    return tested, fails


def chk_eulerian(n):
    fails, tested = [], 0
    for kind in ("path", "cycle"):
        if kind == "cycle" and n < 2:
            continue
        tested += 1
        got = fm.eulerian_specialization(kind, n)
        if got != fm.eulerian_expected(kind, n):
            fails.append((kind, str(got)))
    return tested, fails


def chk_decode(n):
    from itertools import product as iprod

    def p(a):
        ao = {th.arcs for th in ori.enum_acyclic(a)}
        seen, rooks = set(), set()
        for v in iprod(*[range(x + 1) for x in a]):
            arcs = ori.decode_acyclic(a, v)
            if arcs not in ao or ori.row_ascents(a, arcs) != v:
                return f"vector {v}"
            seen.add(arcs)
            r = ori.orientation_to_rook(a, arcs)
            if r.inversions != v:
                return f"rook weights for {v}"
            rooks.add(r.cols)
        if seen != ao:
            return "decoder is not onto"
        if len(rooks) != len(ao) or len(rooks) != sum(1 for _ in ori.enum_rooks(ori.board_of(a))):
            return "rook map is not a bijection"
        return None

    return _run(dg.enumerate_diagrams(n, "dyck"), p)


def chk_phi_law(n):
    fam = list(dg.enumerate_diagrams(n, "circular_vstrip"))
    if n >= 5:
        fam = random.Random(n).sample(fam, 30)

    def p(d):
        for th in ori.enum_ostar(d):
            xp = col.relation_xp(n, th.relation(d.strict))
            if phi_stanley(xp) != TPoly({len(th.half_sources): ONE}):
                return f"subset {sorted(th.ascending)}"
        return None

    return _run(fam, p)


def chk_two_variable(n):
    fam = list(dg.enumerate_diagrams(n, "circular"))
    if n >= 6:
        fam = random.Random(n).sample(fam, 50)

    def p(a):
        for u in range(1, n + 1):
            au, prev = a[u - 1], a[(u - 2) % n]
            if not (au >= 1 and prev <= au):
                continue
            b = list(a)
            b[u - 1] -= 1
            b = dg.AreaSeq(b)
            v = (u + au - 1) % n + 1
            rest = [x for x in range(1, n + 1) if x not in (u, v)]
            gc = col.restricted_llt(dg.induced(a, rest), 2) if rest else {(0, 0): ONE}
            rhs = dict(col.restricted_llt(b, 2))
            fac = QPoly.monomial(au - 1) * (QPoly.monomial(1) - ONE)
            for (i, j), val in gc.items():
                rhs[(i + 1, j + 1)] = rhs.get((i + 1, j + 1), ZERO) + fac * val
            rhs = {k: v for k, v in rhs.items() if not v.is_zero()}
            if rhs != col.restricted_llt(a, 2):
                return f"corner at {u}"
        return None

    return _run(fam, p)


def chk_h_identity(n):
    g = col.llt_poly(fm.double_complete_area(n))
    rhs = g.map_coeffs(lambda c: c.subs_q_inverse() * QPoly.monomial(comb(n, 2)))
    return 1, [] if col.h_double_complete(n) == rhs else [(f"B_{n}", "H_n differs")]


def chk_f_positivity(n):
    def p(d):
        f = qsym_to_fundamental(col.llt_qsym(d, True))
        for k, c in f.coeffs.items():
            if not c.nonnegative():
                return f"F{list(k)}: {c}"
        return None

    return _run(dg.enumerate_diagrams(n, "vstrip"), p)


def chk_counts(n):
    fails = []
    checks = [("dyck", dg.count_diagrams(n, "dyck"), dg.catalan(n))]
    if n <= 7:
        checks.append(("circular", dg.count_diagrams(n, "circular"), dg.circular_count_formula(n)))
        checks.append(("vstrip", dg.count_diagrams(n, "vstrip"), dg.small_schroeder(n)))
    if n in VSTRIP_COUNTS:
        checks.append(("circular_vstrip", dg.count_diagrams(n, "circular_vstrip"), VSTRIP_COUNTS[n]))
    for fam, got, want in checks:
        if got != want:
            fails.append((f"{fam} n={n}", f"{got} != {want}"))
    return len(checks), fails


def chk_parking(n):
    s = fm.parking_suite(n)
    fails = []
    for key in ("count_ok", "reflection", "tildec_shifted", "connected_shifted"):
        if key in s and not s[key]:
            fails.append((f"PF({n})", key))
    if not fm.kreweras_shifted(n):
        fails.append((f"n<={n}", "log series with I_(n-1)"))
    return 1, fails


def chk_golden(n):
    fails = []
    e = change_basis(col.chromatic_qsf(dg.AreaSeq((2, 3, 2, 1, 0))), "e")
    want = {(5,): parse_qpoly(PRINTED_X_COEFFS[0]), (4, 1): parse_qpoly(PRINTED_X_COEFFS[1])}
    if e.coeffs != want:
        fails.append(("2,3,2,1,0", str(e)))
    target = parse_qpoly(PRINTED_TILDEC5)
    routes = {
        "log": fm.tildec_from_log(5)[4],
        "recurrence": fm.tildec_from_recurrence(5)[4],
        "H_5": fm.tildec_from_h(5),
    }
    for k, v in routes.items():
        if v != target:
            fails.append((f"tilde-c_5/{k}", str(v)))
    return 1 + len(routes), fails


# ---------------------------------------------------------------------------
# printed statements that disagree with ground truth


def xf_golden_223210(n):
    e = change_basis(col.chromatic_qsf(dg.AreaSeq((2, 2, 3, 2, 1, 0))), "e")
    printed = {parse_qpoly(s) for s in PRINTED_X_COEFFS}
    got = set(e.coeffs.values())
    if printed <= got:
        return 1, []
    return 1, [("2,2,3,2,1,0", str(e))]


def xf_path_cycle_formulas(n):
    fails = []
    if n < 2:
        return 0, []
    for kind in ("path", "cycle"):
        a = fm.path_area(n) if kind == "path" else fm.cycle_area(n)
        e = change_basis(col.chromatic_qsf(a), "e")
        f = fm.path_e_coeff if kind == "path" else fm.cycle_e_coeff
        for lam in partitions(n):
            if f(lam) != e[lam]:
                fails.append((f"{kind}_{n}", f"e{list(lam)}: printed {f(lam)}, actual {e[lam]}"))
    return 2, fails


def xf_tildec_parking(n):
    s = fm.parking_suite(n)
    return 1, [] if s["tildec_printed"] else [(f"PF({n})", "q^n tilde-c_n != n[n]_q f_n")]


def xf_connected_graphs(n):
    s = fm.parking_suite(n)
    return 1, [] if s.get("connected_printed", True) else [(f"n={n}", "I_n(q+1) != sum over connected graphs")]


def xf_kreweras(n):
    return 1, [] if fm.kreweras_printed(n) else [(f"n<={n}", "series differs from the log")]


def xf_weak_chain(n):
    a = dg.AreaSeq((1, 1, 1))
    d = dg.MarkedDiagram(a, frozenset(), frozenset(dg.corner_edges(a)))
    f = qsym_to_fundamental(col.llt_qsym(d, True))
    neg = [(k, c) for k, c in sorted(f.coeffs.items()) if not c.nonnegative()]
    return 1, [(_lbl(d), "; ".join(f"F{list(k)}: {c}" for k, c in neg))] if neg else []


# ---------------------------------------------------------------------------
# conjectures


def cj_chromatic_epos(n):
    def p(a):
        x = col.chromatic_qsf(a)
        w = _e_nonneg(x)
        if w:
            return w
        for lam, c in change_basis(x, "e").coeffs.items():
            if not is_palindromic(c, Fraction(a.area, 2)):
                return f"e{list(lam)} not palindromic"
        return None

    return _run(dg.enumerate_diagrams(n, "circular"), p)


def cj_llt_epos(n):
    return _run(dg.enumerate_diagrams(n, "circular_vstrip"), lambda d: _e_nonneg(col.llt_poly(d, True)))


def cj_ppos(n):
    def p(d):
        for lam, c in sorted(fm.p_coeffs(omega(col.llt_poly(d, True))).items()):
            if not (c.is_integral() and c.nonnegative() and is_unimodal(c)):
                return f"p{list(lam)}: {c}"
        return None

    return _run(dg.enumerate_diagrams(n, "circular_vstrip"), p)


def cj_schur_diff(n):
    def p(a):
        diff = change_basis(col.llt_poly(a, True) - col.chromatic_qsf(a), "s")
        for lam, c in sorted(diff.coeffs.items()):
            if not c.nonnegative():
                return f"s{list(lam)}: {c}"
        return None

    return _run(dg.enumerate_diagrams(n, "circular"), p)


def strict_marked_pairs(n: int):
    """(Gamma, H, k): H turns k removable cells of Gamma into strict corner edges.

    A cell u -> u+a_u is removable when a_u >= 1 and a_{u-1} <= a_u.  Removing
    a set S of them lowers a_u by one for u in S; each removed edge is then a
    corner edge of the smaller diagram and is marked strict there.
    """
    from itertools import combinations

    for a in dg.enumerate_diagrams(n, "circular"):
        rem = [u for u in range(1, n + 1) if a[u - 1] >= 1 and a[(u - 2) % n] <= a[u - 1]]
        for k in range(1, len(rem) + 1):
            for S in combinations(rem, k):
                b = list(a)
                for u in S:
                    b[u - 1] -= 1
                s = frozenset((u, (u + a[u - 1] - 1) % n + 1) for u in S)
                yield a, dg.MarkedDiagram(dg.validate(b), s), k


def cj_strict_diff(n):
    tested, fails = 0, []
    for a, h, k in strict_marked_pairs(n):
        tested += 1
        diff = col.llt_poly(a, True) - col.llt_poly(h, True).scale(QPoly.monomial(k))
        w = _e_nonneg(diff, unimodal=False)
        if w:
            fails.append((f"{_lbl(a)} -> {_lbl(h)}", w))
    return tested, fails


def cj_hatc(n):
    def p(a):
        hc = fm.hatc_coefficients(a)
        c = fm.chromatic_p_coeffs(a)
        for lam in partitions(n):
            h = hc.get(lam, ZERO)
            if not (h.is_integral() and h.nonnegative() and is_unimodal(h)):
                return f"hat-c{list(lam)}: {h}"
            diff = h - c.get(lam, ZERO)
            if not diff.nonnegative():
                return f"hat-c - c at {list(lam)}: {diff}"
        return None

    return _run(dg.enumerate_diagrams(n, "circular"), p)


# name -> (kind, family, default max n, function)
THEOREMS = {
    "counts": ("theorem", "all", 8, chk_counts),
    "golden_values": ("theorem", "fixed", 1, chk_golden),
    "symmetry": ("theorem", "circular_vstrip", 6, chk_symmetry),
    "orientation_sum": ("theorem", "circular_vstrip", 4, chk_orientation_sum),
    "sink_identity": ("theorem", "circular", 6, chk_sinks),
    "half_sink_identity": ("theorem", "circular_vstrip", 5, chk_half_sinks),
    "e1n_coefficient": ("theorem", "circular", 6, chk_e1n),
    "row_column_product": ("theorem", "dyck", 7, chk_row_column),
    "unique_sink": ("theorem", "dyck", 6, chk_unique_sink),
    "bounce_vanishing": ("theorem", "circular", 6, chk_bounce),
    "palindromicity": ("theorem", "circular", 6, chk_palindromic),
    "d_mu_sum": ("theorem", "vstrip", 6, chk_dmu_sum),
    "two_variable_e_positivity": ("theorem", "circular", 6, chk_two_var_epos),
    "full_adjacency": ("theorem", "circular", 6, chk_full_adjacency),
    "llt_oracle": ("theorem", "ribbon", 5, chk_oracle),
    "weak_elimination": ("theorem", "ribbon", 5, chk_weak_elimination),
    "plethysm_and_hatc": ("theorem", "dyck", 5, chk_pleth),
    "omega_transpose": ("theorem", "ribbon", 5, chk_omega_transpose),
    "p_expansion": ("theorem", "dyck", 5, chk_p_expansion),
    "generating_functions": ("theorem", "path/cycle", 7, chk_gf),
    "complete_graph_recurrence": ("theorem", "complete", 6, chk_kn),
    "sector_expansions": ("theorem", "path/cycle/complete", 6, chk_sectors),
    "eulerian": ("theorem", "path/cycle", 7, chk_eulerian),
    "decode_and_rooks": ("theorem", "dyck", 6, chk_decode),
    "phi_law": ("theorem", "circular_vstrip", 5, chk_phi_law),
    "two_variable_recursion": ("theorem", "circular", 6, chk_two_variable),
    "double_complete": ("theorem", "double_complete", 5, chk_h_identity),
    "fundamental_positivity": ("theorem", "vstrip", 5, chk_f_positivity),
    "parking": ("theorem", "parking", 6, chk_parking),
    "printed_golden_223210": ("expected_failure", "fixed", 1, xf_golden_223210),
    "printed_path_cycle_coefficients": ("expected_failure", "path/cycle", 3, xf_path_cycle_formulas),
    "printed_tildec_parking": ("expected_failure", "parking", 6, xf_tildec_parking),
    "printed_connected_graphs": ("expected_failure", "parking", 5, xf_connected_graphs),
    "printed_kreweras": ("expected_failure", "parking", 1, xf_kreweras),
}

CONJECTURES = {
    "chromatic_e_positivity": ("conjecture", "circular", 5, cj_chromatic_epos),
    "llt_vstrip_e_positivity": ("conjecture", "circular_vstrip", 5, cj_llt_epos),
    "vstrip_p_positivity": ("conjecture", "circular_vstrip", 5, cj_ppos),
    "schur_difference": ("conjecture", "circular", 4, cj_schur_diff),
    "strict_marking_difference": ("conjecture", "circular_vstrip", 4, cj_strict_diff),
    "hatc_positivity": ("conjecture", "circular", 5, cj_hatc),
    "weak_chain_f_positivity": ("expected_failure", "circular_ribbon", 1, xf_weak_chain),
}

# checks that evaluate a single fixed object: run once at their own n
_SINGLE = {"golden_values", "printed_golden_223210", "weak_chain_f_positivity", "printed_kreweras"}


def _task(args):
    registry, name, n = args
    table = THEOREMS if registry == "theorems" else CONJECTURES
    kind, family, _, fn = table[name]
    t0 = time.perf_counter()
    tested, fails = fn(n)
    return name, n, tested, fails, int((time.perf_counter() - t0) * 1000)


def _plan(table_name: str, names, n_max: int | None):
    table = THEOREMS if table_name == "theorems" else CONJECTURES
    tasks = []
    for name in names:
        _, _, default, _ = table[name]
        if name in _SINGLE:
            ns = [default if name != "printed_kreweras" else 6]
        else:
            top = default if n_max is None else min(default, n_max)
            ns = list(range(1, top + 1))
        tasks.extend((table_name, name, n) for n in ns)
    return tasks


def _execute(tasks, jobs: int):
    if jobs <= 1:
        return [_task(t) for t in tasks]
    # longest tasks first keeps the pool busy
    order = sorted(range(len(tasks)), key=lambda i: -tasks[i][2])
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        results = list(ex.map(_task, [tasks[i] for i in order], chunksize=1))
    back = [None] * len(tasks)
    for i, r in zip(order, results):
        back[i] = r
    return back


def _aggregate(table, names, results) -> list:
    by = {name: CheckReport(name, table[name][0], table[name][1], 0) for name in names}
    for name, n, tested, fails, ms in results:
        r = by[name]
        r.n = max(r.n, n)
        r.tested += tested
        r.failures.extend(fails)
        r.ms += ms
    return [by[name] for name in names]


def run_identity_suite(n_max: int | None = None, jobs: int = 1, only=None) -> list:
    names = [k for k in THEOREMS if only is None or k in only]
    return _aggregate(THEOREMS, names, _execute(_plan("theorems", names, n_max), jobs))


def sweep_conjectures(n_max: int | None = None, which="all", jobs: int = 1) -> list:
    if which in (None, "all"):
        names = list(CONJECTURES)
    else:
        names = [w for w in (which.split(",") if isinstance(which, str) else which)]
        for w in names:
            if w not in CONJECTURES:
                raise KeyError(w)
    return _aggregate(CONJECTURES, names, _execute(_plan("conjectures", names, n_max), jobs))


def reports_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], sort_keys=True, indent=1)


def strip_timing(reports) -> list:
    out = []
    for r in reports:
        d = r.to_json()
        d.pop("ms")
        out.append(d)
    return out


# ---------------------------------------------------------------------------
# coefficient tables

KINDS = ("chromatic", "llt", "llt-shifted", "tutte")
BASES = ("m", "e", "p", "s", "F")


@dataclass
class ExpansionRecord:
    diagram: str
    kind: str
    basis: str
    coeffs: dict  # "(2,1)" -> polynomial string, in index order

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "diagram": self.diagram,
            "kind": self.kind,
            "basis": self.basis,
            "coeffs": self.coeffs,
        }

    def csv_rows(self) -> list:
        return [(self.diagram, self.basis, k, v) for k, v in self.coeffs.items()]


def _key(idx) -> str:
    return "(" + ",".join(str(x) for x in idx) + ")"


def expand(diagram: str, kind: str = "chromatic", basis: str = "e") -> ExpansionRecord:
    """Coefficient table of one polynomial attached to a diagram."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    d = dg.parse_marked(diagram) if ";" in diagram else dg.as_marked(dg.parse_area(diagram))
    if kind == "chromatic":
        if not d.unmarked:
            raise ValueError("chromatic expansion takes an unmarked diagram")
        f = col.chromatic_qsf(d.a)
    elif kind == "tutte":
        f = col.tutte_mono(d.a)
    else:
        f = col.llt_poly(d, kind == "llt-shifted")
    if basis == "F":
        from .symfunc import to_quasisymmetric

        g = qsym_to_fundamental(to_quasisymmetric(f))
        items = sorted(g.coeffs.items(), key=lambda kv: kv[0])
    else:
        g = change_basis(f, basis)
        items = sorted(g.coeffs.items(), key=lambda kv: kv[0], reverse=True)
    return ExpansionRecord(_lbl(d if not d.unmarked else d.a), kind, basis, {_key(k): str(v) for k, v in items})


def write_csv(records, fh) -> None:
    import csv

    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["diagram", "basis", "index", "polynomial"])
    for r in records:
        w.writerows(r.csv_rows())
