"""Coloring sums: chromatic quasisymmetric functions, LLT polynomials and relatives.

A homogeneous degree-n quasisymmetric function is determined by its
M-coefficients on compositions of n, and the coefficient of M_alpha only
sees colorings whose colour set is exactly {1, ..., len(alpha)} with colour j
used alpha_j times ("packed" words).  So every sum below runs over packed
words of length n, vectorised with numpy, and is then collected per
composition.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .diagrams import LLTTuple, MarkedDiagram, NaturalPoset, as_marked, content, edges, validate
from .qalgebra import ONE, ZERO, QPoly, q_int
from .symfunc import QSymFunc, SymFunc, compositions, to_symmetric


@lru_cache(maxsize=None)
def packed_words(n: int):
    """(words, composition index) for all packed words of length n.

    ``words`` is an int8 array of shape (W, n) with entries 1..k.
    """
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8), np.zeros(1, dtype=np.int64)
    rows = []

    def rec(prefix, k):
        if len(prefix) == n:
            if k == max(prefix):
                rows.append(list(prefix))
            return
        left = n - len(prefix)
        for c in range(1, n + 1):
            kk = max(k, c)
            # colours not yet used below kk must still fit
            used = set(prefix) | {c}
            if kk - len(used) > left - 1:
                continue
            prefix.append(c)
            rec(prefix, kk)
            prefix.pop()

    rec([], 0)
    words = np.array(rows, dtype=np.int8)
    words = words[[len(set(r)) == r.max() for r in words]]
    comps = compositions(n)
    cidx = {c: i for i, c in enumerate(comps)}
    idx = np.array(
        [cidx[tuple(int(x) for x in np.bincount(w, minlength=w.max() + 1)[1:])] for w in words], dtype=np.int64
    )
    words.setflags(write=False)
    idx.setflags(write=False)
    return words, idx


def _collect(n: int, mask, stat, weight) -> QSymFunc:
    """Sum weight(stat) over packed words passing ``mask``, per composition."""
    words, cidx = packed_words(n)
    comps = compositions(n)
    if mask is not None:
        cidx = cidx[mask]
        stat = stat[mask]
    top = int(stat.max()) + 1 if stat.size else 1
    counts = np.bincount(cidx * top + stat, minlength=len(comps) * top).reshape(len(comps), top)
    coeffs = {}
    for ci in np.nonzero(counts.any(axis=1))[0]:
        poly = ZERO
        for s in np.nonzero(counts[ci])[0]:
            poly = poly + weight(int(s)).scale(int(counts[ci, s]))
        coeffs[comps[ci]] = poly
    return QSymFunc(n, "M", coeffs)


def _qpow(s: int) -> QPoly:
    return QPoly.monomial(s)


def _edge_arrays(pairs):
    if not pairs:
        z = np.zeros(0, dtype=np.int64)
        return z, z
    src = np.array([u - 1 for u, _ in pairs], dtype=np.int64)
    dst = np.array([v - 1 for _, v in pairs], dtype=np.int64)
    return src, dst


def _ascents(W, pairs):
    src, dst = _edge_arrays(pairs)
    if len(src) == 0:
        return np.zeros(len(W), dtype=np.int64)
    return (W[:, src] < W[:, dst]).sum(axis=1).astype(np.int64)


def _all(W, pairs, op):
    src, dst = _edge_arrays(pairs)
    if len(src) == 0:
        return np.ones(len(W), dtype=bool)
    return op(W[:, src], W[:, dst]).all(axis=1)


def chromatic_qsym(a) -> QSymFunc:
    a = validate(a)
    n = len(a)
    W, _ = packed_words(n)
    E = edges(a)
    mask = _all(W, E, np.not_equal)
    return _collect(n, mask, _ascents(W, E), _qpow)


def chromatic_qsf(a) -> SymFunc:
    """X_a = sum over proper colorings of x^F q^asc(F), in the m basis."""
    return to_symmetric(chromatic_qsym(a))


def llt_qsym(d, shifted: bool = False) -> QSymFunc:
    d = as_marked(d)
    n = d.n
    W, _ = packed_words(n)
    E = edges(d.a)
    mask = _all(W, sorted(d.strict), np.less) & _all(W, sorted(d.weak), np.greater_equal)
    f = _collect(n, mask, _ascents(W, E), _qpow)
    if shifted:
        f = QSymFunc(n, "M", {k: v.subs_q_plus_one() for k, v in f.coeffs.items()})
    return f


def llt_poly(d, shifted: bool = False) -> SymFunc:
    """G_d: all colorings respecting the marks, q counting ascents of Gamma's edges."""
    return to_symmetric(llt_qsym(d, shifted))


def tutte_mono(a) -> SymFunc:
    """sum_F x^F (1+q)^m(F), m(F) = monochromatic directed edges."""
    a = validate(a)
    n = len(a)
    W, _ = packed_words(n)
    src, dst = _edge_arrays(edges(a))
    mono = (W[:, src] == W[:, dst]).sum(axis=1).astype(np.int64) if len(src) else np.zeros(len(W), dtype=np.int64)
    one_q = QPoly({0: 1, 1: 1})
    return to_symmetric(_collect(n, None, mono, lambda s: one_q ** s))


def h_double_complete(n: int) -> SymFunc:
    """H_n = sum over all colorings of K_n of x^F q^(monochromatic pairs)."""
    W, _ = packed_words(n)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    src, dst = _edge_arrays(pairs)
    mono = (W[:, src] == W[:, dst]).sum(axis=1).astype(np.int64) if pairs else np.zeros(len(W), dtype=np.int64)
    return to_symmetric(_collect(n, None, mono, _qpow))


def poset_xp(P: NaturalPoset) -> QSymFunc:
    """X_P = sum of x_F over strictly order-preserving F (i <_P j implies F(i) < F(j))."""
    n = P.n
    W, _ = packed_words(n)
    mask = _all(W, sorted(P.relations), np.less)
    return _collect(n, mask, np.zeros(len(W), dtype=np.int64), _qpow)


def relation_xp(n: int, rel) -> QSymFunc:
    """X_P for the poset generated by an acyclic relation (no closure needed)."""
    W, _ = packed_words(n)
    mask = _all(W, sorted(rel), np.less)
    return _collect(n, mask, np.zeros(len(W), dtype=np.int64), _qpow)


# ---------------------------------------------------------------------------
# classical definition via tuples of semistandard fillings


def classical_llt_oracle(t: LLTTuple) -> SymFunc:
    """Sum over SSYT tuples of q^inv, inversions read off cell contents.

    A pair of cells u (shape i), v (shape j) is an inversion when T(u) > T(v)
    and either i < j with equal contents, or i > j with content(u) =
    content(v) + 1.  Rows weakly increase to the right, columns strictly
    increase upward.
    """
    cells = t.flat()
    N = len(cells)
    W, _ = packed_words(N)
    pos = {c: k for k, c in enumerate(cells)}
    weak, strict = [], []
    for (s, r, c), k in pos.items():
        right = pos.get((s, r, c + 1))
        if right is not None:
            weak.append((k, right))
        up = pos.get((s, r + 1, c))
        if up is not None:
            strict.append((k, up))
    inv_pairs = []  # (u, v): inversion when T(u) > T(v)
    for ku, u in enumerate(cells):
        for kv, v in enumerate(cells):
            if u[0] < v[0] and content(u) == content(v):
                inv_pairs.append((ku, kv))
            elif u[0] > v[0] and content(u) == content(v) + 1:
                inv_pairs.append((ku, kv))
    mask = np.ones(len(W), dtype=bool)
    for x, y in weak:
        mask &= W[:, x] <= W[:, y]
    for x, y in strict:
        mask &= W[:, x] < W[:, y]
    inv = np.zeros(len(W), dtype=np.int64)
    for x, y in inv_pairs:
        inv += W[:, x] > W[:, y]
    return to_symmetric(_collect(N, mask, inv, _qpow))


# ---------------------------------------------------------------------------
# explicit colourings in a fixed number of variables


def restricted_llt(d, nvars: int) -> dict:
    """G_d(x_1..x_nvars; q) as a map exponent-vector -> QPoly (brute force)."""
    d = as_marked(d)
    n = d.n
    E = edges(d.a)
    out: dict = {}
    for F in product(range(1, nvars + 1), repeat=n):
        if any(F[u - 1] >= F[v - 1] for u, v in d.strict):
            continue
        if any(F[u - 1] < F[v - 1] for u, v in d.weak):
            continue
        asc = sum(1 for u, v in E if F[u - 1] < F[v - 1])
        expo = tuple(F.count(c) for c in range(1, nvars + 1))
        out[expo] = out.get(expo, ZERO) + QPoly.monomial(asc)
    return out


def coeff_qt_orientation_sum(d):
    """(sum over O* subsets of q^asc X_theta, G_d(q+1)) for an equality check.

    X_theta counts colourings strictly increasing along every ascending edge
    of theta and along every strict edge.
    """
    from .orientations import enum_ostar

    d = as_marked(d)
    n = d.n
    total = QSymFunc(n, "M", {})
    for th in enum_ostar(d):
        # a single X_theta is only quasisymmetric; the sum is symmetric
        total = total + relation_xp(n, th.relation(d.strict)).scale(QPoly.monomial(th.asc))
    return to_symmetric(total), llt_poly(d, shifted=True)
