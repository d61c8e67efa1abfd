"""Closed forms and structural identities built on the coloring engine.

Sector-sum e-expansions, the explicit path/cycle e-coefficients (as
printed), the path and cycle generating functions, the complete-graph
recurrence, admissible-permutation p-expansions, the hat-c coefficients,
the double-complete tower (g_r, tilde-c, parking functions) and Eulerian
specializations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial

from .colorings import chromatic_qsf, h_double_complete, llt_poly
from .diagrams import AreaSeq, CircularNotSupported, as_marked, edges, validate
from .orientations import sector_e_terms
from .qalgebra import ONE, ZERO, QLaurent, QPoly, eulerian_poly, exact_div, q_int
from .symfunc import (
    SymFunc,
    change_basis,
    coeff_squarefree,
    multiplicities,
    omega,
    partitions,
    sort_partition,
    z_of,
)

q = QPoly.monomial(1)


def path_area(n: int) -> AreaSeq:
    return AreaSeq((1,) * (n - 1) + (0,))


def cycle_area(n: int) -> AreaSeq:
    """The n-cycle for n >= 2 (n = 2 is the double edge 1 <-> 2)."""
    return AreaSeq((1,) * n)


def complete_area(n: int) -> AreaSeq:
    return AreaSeq(range(n - 1, -1, -1))


def double_complete_area(n: int) -> AreaSeq:
    return AreaSeq((n - 1,) * n)


def disjoint_union(*seqs) -> AreaSeq:
    """Concatenate non-circular sequences (each keeps its own last zero)."""
    out = []
    for a in seqs:
        a = validate(a)
        if a.circular:
            raise CircularNotSupported("disjoint unions of circular pieces are not area sequences")
        out.extend(a)
    return AreaSeq(out)


# ---------------------------------------------------------------------------
# sector sums and printed e-coefficients


def e_expansion_by_sectors(a, side: str = "chromatic") -> SymFunc:
    a = validate(a)
    return SymFunc(len(a), "e", sector_e_terms(a, side))


def _elem(k: int, xs) -> QPoly:
    out = ZERO
    for sub in combinations(xs, k):
        t = ONE
        for x in sub:
            t = t * x
        out = out + t
    return out


def _mult_fact(mu) -> int:
    out = 1
    for m in multiplicities(mu).values():
        out *= factorial(m)
    return out


def path_e_coeff(mu) -> QPoly:
    """Printed closed form for [e_mu] X_{P_n}."""
    mu = tuple(mu)
    k = len(mu)
    nu = [q_int(x - 1) for x in mu]
    num = _elem(k - 1, nu) * QPoly.monomial(k - 1) + _elem(k, nu) * QPoly.monomial(k)
    return num.scale(Fraction(factorial(k), _mult_fact(mu)))


def cycle_e_coeff(mu) -> QPoly:
    """Printed closed form for [e_mu] X_{C_n}."""
    mu = tuple(mu)
    k = len(mu)
    out = ZERO
    for j in sorted(set(mu)):
        rest = list(mu)
        rest.remove(j)
        term = _elem(k - 1, [q_int(x - 1) for x in rest]) * QPoly.monomial(k)
        out = out + term.scale(Fraction(factorial(k - 1) * j, _mult_fact(rest)))
    return out


# ---------------------------------------------------------------------------
# e-basis power series in z (z^n pairs with degree n)


class ESeries:
    """Truncated series sum_n f_n z^n with f_n a degree-n e-basis dict."""

    def __init__(self, N: int, terms=None):
        self.N = N
        self.terms = [dict() for _ in range(N + 1)]
        for n, d in (terms or {}).items():
            if n <= N:
                for lam, c in d.items():
                    self._add(n, lam, c)

    def _add(self, n, lam, c):
        t = self.terms[n]
        v = t.get(lam, ZERO) + c
        if v.is_zero():
            t.pop(lam, None)
        else:
            t[lam] = v

    def __add__(self, other):
        out = ESeries(self.N)
        for s in (self, other):
            for n, d in enumerate(s.terms):
                for lam, c in d.items():
                    out._add(n, lam, c)
        return out

    def __mul__(self, other):
        out = ESeries(min(self.N, other.N))
        for n1, d1 in enumerate(self.terms):
            for n2, d2 in enumerate(other.terms):
                if n1 + n2 > out.N:
                    break
                for l1, c1 in d1.items():
                    for l2, c2 in d2.items():
                        out._add(n1 + n2, sort_partition(l1 + l2), c1 * c2)
        return out

    def geometric(self):
        """1 / (1 - self), for self with zero constant term."""
        if self.terms[0]:
            raise ValueError("constant term must vanish")
        out = ESeries(self.N, {0: {(): ONE}})
        power = ESeries(self.N, {0: {(): ONE}})
        for _ in range(self.N):
            power = power * self
            out = out + power
        return out

    def coefficient(self, n: int) -> SymFunc:
        return SymFunc(n, "e", self.terms[n])


def gf_expand(kind: str, side: str, N: int) -> ESeries:
    """The closed generating functions for paths and cycles, expanded to z^N."""
    if side == "chromatic":
        den = ESeries(N, {i: {(i,): q * q_int(i - 1)} for i in range(2, N + 1)})
        if kind == "path":
            num = ESeries(N, {i: {((i,) if i else ()): ONE} for i in range(0, N + 1)})
        else:
            num = ESeries(N, {i: {(i,): (q * q_int(i - 1)).scale(i)} for i in range(2, N + 1)})
    else:
        den = ESeries(N, {i: {(i,): QPoly.monomial(i - 1)} for i in range(1, N + 1)})
        if kind == "path":
            num = ESeries(N, {0: {(): ONE}})
        else:
            num = ESeries(N, {i: {(i,): QPoly.monomial(i - 1, i)} for i in range(1, N + 1)})
    return num * den.geometric()


# ---------------------------------------------------------------------------
# complete graph recurrence


def kn_llt_via_recurrence(n: int) -> SymFunc:
    """G_{K_n}(x; q+1) from the sector recurrence, e basis."""
    Q1 = QPoly({0: 1, 1: 1})
    memo = [SymFunc(0, "e", {(): ONE})]
    for m in range(1, n + 1):
        acc: dict = {}
        for i in range(m):
            w = ONE
            for k in range(i + 1, m):
                w = w * (Q1 ** k - ONE)
            for lam, c in memo[i].coeffs.items():
                key = sort_partition(lam + (m - i,))
                acc[key] = acc.get(key, ZERO) + c * w
        memo.append(SymFunc(m, "e", acc))
    return memo[n]


# ---------------------------------------------------------------------------
# p-expansions


def p_coeffs(f: SymFunc) -> dict:
    """lambda -> z_lambda [p_lambda] f, i.e. coefficients against p_lambda / z_lambda."""
    p = change_basis(f, "p")
    return {lam: c.scale(z_of(lam)) for lam, c in p.coeffs.items()}


def _p_less(a, i, j) -> bool:
    return i < j and j - i > a[i - 1]


def is_admissible(a, pi, lam) -> bool:
    """Blocks of sizes lam: no P-increasing consecutive pair, last letter is the block maximum."""
    k = 0
    for m in lam:
        b = pi[k : k + m]
        k += m
        if any(_p_less(a, b[t], b[t + 1]) for t in range(m - 1)):
            return False
        if any(x > b[-1] for x in b[:-1]):
            return False
    return True


def perm_stat(a, pi) -> int:
    """Edges i -> j of Gamma_a with j placed before i in pi."""
    pos = {v: k for k, v in enumerate(pi)}
    return sum(1 for i, j in edges(a) if pos[i] > pos[j])


def admissible_sums(a, lam, weight) -> QPoly:
    n = len(a)
    out = ZERO
    for pi in permutations(range(1, n + 1)):
        if is_admissible(a, pi, lam):
            out = out + weight(perm_stat(a, pi))
    return out


def p_expansion_admissible(a, side: str = "chromatic") -> SymFunc:
    """omega X_a (chromatic) or omega G_a(q+1) (llt) in the p basis via admissible words."""
    a = validate(a)
    if a.circular:
        raise CircularNotSupported("admissible-word expansion needs a_n = 0")
    n = len(a)
    Q1 = QPoly({0: 1, 1: 1})
    coeffs = {}
    for lam in partitions(n):
        if side == "chromatic":
            c = admissible_sums(a, lam, QPoly.monomial)
            for x in lam:
                c = c * q_int(x)
        else:
            c = admissible_sums(a, lam, lambda s: Q1 ** s) * QPoly.monomial(n - len(lam))
        if not c.is_zero():
            coeffs[lam] = c.scale(Fraction(1, z_of(lam)))
    return SymFunc(n, "p", coeffs)


def chromatic_p_coeffs(a) -> dict:
    return p_coeffs(omega(chromatic_qsf(a)))


def hatc_coefficients(d) -> dict:
    """hat-c_lambda = z_lambda [p_lambda] omega G * prod(q^lambda_i - 1) / (q-1)^n."""
    d = as_marked(d)
    n = d.n
    pc = p_coeffs(omega(llt_poly(d)))
    den = QPoly({0: -1, 1: 1}) ** n
    out = {}
    for lam, c in pc.items():
        num = c
        for x in lam:
            num = num * (QPoly.monomial(x) - ONE)
        out[lam] = exact_div(num, den)
    return out


def pleth_identity_check(a):
    """d_lambda prod(q^lambda_i - 1) == c_lambda (q-1)^n for all lambda; returns (ok, witness)."""
    a = validate(a)
    if a.circular:
        raise CircularNotSupported("needs a_n = 0")
    n = len(a)
    d = p_coeffs(llt_poly(a))
    c = p_coeffs(chromatic_qsf(a))
    qm1n = QPoly({0: -1, 1: 1}) ** n
    for lam in partitions(n):
        lhs = d.get(lam, ZERO)
        for x in lam:
            lhs = lhs * (QPoly.monomial(x) - ONE)
        rhs = c.get(lam, ZERO) * qm1n
        if lhs != rhs:
            return False, lam
    return True, None


def omega_transpose_check(d) -> bool:
    """omega G_(a,s,w)(q) == q^|a| G_(a^T,w^T,s^T)(q^-1)."""
    from .diagrams import transpose_marked

    d = as_marked(d)
    lhs = omega(llt_poly(d))
    t = llt_poly(transpose_marked(d))
    qa = QPoly.monomial(d.a.area)
    rhs = t.map_coeffs(lambda c: c.subs_q_inverse() * qa)
    return change_basis(lhs, "m").coeffs == change_basis(rhs, "m").coeffs


# ---------------------------------------------------------------------------
# the double-complete tower


def g_series(nmax: int) -> list:
    """g_r(q) for r = 1..nmax from log(sum_j q^C(j,2) x^j / j!)."""
    # u = sum_{j>=1} q^C(j,2) x^j / j!
    u = [ZERO] + [QPoly.monomial(comb(j, 2), Fraction(1, factorial(j))) for j in range(1, nmax + 1)]

    def mul(s, t):
        out = [ZERO] * (nmax + 1)
        for i, a in enumerate(s):
            if a.is_zero():
                continue
            for j in range(nmax + 1 - i):
                if not t[j].is_zero():
                    out[i + j] = out[i + j] + a * t[j]
        return out

    log = [ZERO] * (nmax + 1)
    power = list(u)
    for k in range(1, nmax + 1):
        sgn = Fraction((-1) ** (k - 1), k)
        for r in range(nmax + 1):
            log[r] = log[r] + power[r].scale(sgn)
        power = mul(power, u)
    return [log[r].scale(factorial(r)) for r in range(1, nmax + 1)]


def tildec_from_log(nmax: int) -> list:
    g = g_series(nmax)
    out = []
    qm1 = QPoly({0: -1, 1: 1})
    for n in range(1, nmax + 1):
        out.append(exact_div((q_int(n) * g[n - 1]).scale(n), qm1 ** (n - 1)))
    return out


def tildec_from_recurrence(nmax: int) -> list:
    """tilde-c_(m) from the printed recurrence, denominators cleared."""
    qm1 = QPoly({0: -1, 1: 1})
    out: list = []
    for m in range(1, nmax + 1):
        if m == 1:
            out.append(ONE)
            continue
        P = ONE
        for r in range(1, m):
            P = P * q_int(r)
        bracket = QPoly.monomial(comb(m, 2)) * P
        for r in range(1, m):
            cofactor = exact_div(P, q_int(r))
            term = QPoly.monomial(comb(m - r, 2)) * qm1 ** (r - 1) * cofactor * out[r - 1]
            bracket = bracket - term.scale(Fraction(comb(m - 1, r - 1), r))
        out.append(exact_div((q_int(m) * bracket).scale(m), qm1 ** (m - 1) * P))
    return out


def tildec_from_h(n: int) -> QPoly:
    """tilde-c_(n) = n (1-q^n)/(1-q)^n z-normalised [p_n] omega H_n."""
    c = p_coeffs(omega(h_double_complete(n))).get((n,), ZERO)
    one_minus = QPoly({0: 1, 1: -1})
    return exact_div((c * (ONE - QPoly.monomial(n))).scale(1), one_minus ** n)


def g_series_and_tildec(nmax: int):
    return g_series(nmax), tildec_from_log(nmax)


def parking_functions(n: int):
    """All parking functions of length n (sorted entries satisfy s_i <= i)."""
    for a in product(range(1, n + 1), repeat=n):
        s = sorted(a)
        if all(s[i] <= i + 1 for i in range(n)):
            yield a


def _sorted_parking(n: int):
    # weakly increasing parking sequences with their number of rearrangements
    def rec(prefix):
        k = len(prefix)
        if k == n:
            mult = factorial(n)
            for m in multiplicities(prefix).values():
                mult //= factorial(m)
            yield tuple(prefix), mult
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, k + 2):
            yield from rec(prefix + [v])

    yield from rec([])


def parking_polys(n: int):
    """(f_n, I_n, |PF(n)|): area and sum enumerators of parking functions."""
    f, I, total = ZERO, ZERO, 0
    top = comb(n + 1, 2)
    for s, mult in _sorted_parking(n):
        f = f + QPoly.monomial(top - sum(s), mult)
        I = I + QPoly.monomial(sum(s), mult)
        total += mult
    return f, I, total


def connected_graph_poly(n: int, shift: int | None = None) -> QLaurent:
    """sum over connected simple graphs on [n] of q^(e - shift); shift defaults to n."""
    from .diagrams import _components

    if shift is None:
        shift = n
    pairs = list(combinations(range(1, n + 1), 2))
    acc: dict = {}
    for mask in range(1 << len(pairs)):
        chosen = [p for k, p in enumerate(pairs) if mask >> k & 1]
        if len(_components(n, chosen)) == 1:
            acc[len(chosen)] = acc.get(len(chosen), 0) + 1
    return QLaurent({e - shift: c for e, c in acc.items()})


def parking_suite(n: int) -> dict:
    """f_n, I_n and the printed identities around them (each as a bool)."""
    f, I, total = parking_polys(n)
    tc = tildec_from_log(n)[n - 1]
    out = {
        "f": f,
        "I": I,
        "count": total,
        "count_ok": total == (n + 1) ** (n - 1),
        "reflection": (I.subs_q_inverse() * QPoly.monomial(comb(n + 1, 2))) == f,
        "tildec_printed": tc * QPoly.monomial(n) == (q_int(n) * f).scale(n),
    }
    if n >= 2:
        f_prev = parking_polys(n - 1)[0]
        out["tildec_shifted"] = tc == (q_int(n) * f_prev).scale(n)
    else:
        out["tildec_shifted"] = tc == ONE
    if n <= 5:
        out["connected_printed"] = I.subs_q_plus_one() == connected_graph_poly(n)
    if n <= 4:
        out["connected_shifted"] = f.subs_q_plus_one() == connected_graph_poly(n + 1, shift=n)
    return out


def kreweras_printed(nmax: int) -> bool:
    """sum q^C(n,2) (q-1)^(n-1) I_n(1/q) x^n/n! against the log series, as printed."""
    g = g_series(nmax)
    qm1 = QPoly({0: -1, 1: 1})
    for n in range(1, nmax + 1):
        I = parking_polys(n)[1]
        lhs = QPoly.monomial(comb(n, 2)) * qm1 ** (n - 1) * I.subs_q_inverse()
        if lhs != g[n - 1]:
            return False
    return True


def kreweras_shifted(nmax: int) -> bool:
    """Same series with I_(n-1) in place of I_n (I_0 = 1)."""
    g = g_series(nmax)
    qm1 = QPoly({0: -1, 1: 1})
    for n in range(1, nmax + 1):
        I = parking_polys(n - 1)[1] if n > 1 else ONE
        lhs = QPoly.monomial(comb(n, 2)) * qm1 ** (n - 1) * I.subs_q_inverse()
        if lhs != g[n - 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# Eulerian specializations


def eulerian_specialization(kind: str, n: int) -> QPoly:
    a = path_area(n) if kind == "path" else cycle_area(n)
    return coeff_squarefree(chromatic_qsf(a))


def eulerian_expected(kind: str, n: int) -> QPoly:
    if kind == "path":
        return eulerian_poly(n)
    return (q * eulerian_poly(n - 1)).scale(n)
