"""Homogeneous symmetric and quasisymmetric functions with q-polynomial coefficients.

A degree-n symmetric function is stored as a map from partitions of n to
:class:`~circllt.qalgebra.QPoly` in one of the bases m, e, p, s.  Change of
basis goes through m: the forward matrices (e, p, s -> m) are computed by
counting (0-1 matrices, part assignments, semistandard tableaux) and the
reverse direction solves those systems exactly over the rationals.

Quasisymmetric functions live in the monomial (M) or fundamental (F) basis,
indexed by compositions of n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Iterable, Mapping

from .qalgebra import ONE, ZERO, QLaurent, QPoly, TPoly, _norm

Partition = tuple
Composition = tuple

SYM_BASES = ("m", "e", "p", "s", "h")
QSYM_BASES = ("M", "F")


class NotSymmetric(ValueError):
    """An M-expansion whose coefficient differs on two rearrangements."""

    def __init__(self, alpha, beta, ca=None, cb=None):
        self.witness = (alpha, beta)
        super().__init__(
            f"coefficients of M{list(alpha)} ({ca}) and M{list(beta)} ({cb}) differ"
        )


# ---------------------------------------------------------------------------
# partitions and compositions


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """Partitions of n in reverse lexicographic order, as tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        for rest in compositions(n - k):
            out.append((k,) + rest)
    return tuple(out)


def is_partition(lam) -> bool:
    return all(x >= 1 for x in lam) and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def sort_partition(alpha) -> Partition:
    return tuple(sorted((x for x in alpha if x), reverse=True))


def multiplicities(lam) -> dict:
    m: dict = {}
    for x in lam:
        m[x] = m.get(x, 0) + 1
    return m


def z_of(lam: Partition) -> int:
    """z_lambda = prod_i i^(m_i) m_i!."""
    out = 1
    for i, mi in multiplicities(lam).items():
        out *= i ** mi * factorial(mi)
    return out


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0])) if lam else ()


def composition_to_descents(alpha: Composition) -> frozenset:
    out, s = [], 0
    for x in alpha[:-1]:
        s += x
        out.append(s)
    return frozenset(out)


def descents_to_composition(S: Iterable[int], n: int) -> Composition:
    pts = [0] + sorted(S) + [n]
    return tuple(pts[i + 1] - pts[i] for i in range(len(pts) - 1))


def format_partition(lam) -> str:
    return ",".join(map(str, lam))


def parse_partition(s: str) -> Partition:
    s = s.strip().strip("()")
    return tuple(int(x) for x in s.replace(" ", "").split(",") if x)


def format_composition(alpha) -> str:
    return "|".join(map(str, alpha))


def parse_composition(s: str) -> Composition:
    return tuple(int(x) for x in s.split("|") if x)


# ---------------------------------------------------------------------------
# transition matrices into the monomial basis


def _count_01_matrices(rows: Partition, cols: Partition) -> int:
    # fill rows one at a time, choosing which columns get a 1
    @lru_cache(maxsize=None)
    def rec(i, remaining):
        if i == len(rows):
            return 1 if not any(remaining) else 0
        total = 0
        idx = [j for j, r in enumerate(remaining) if r > 0]
        for chosen in combinations(idx, rows[i]):
            rem = list(remaining)
            for j in chosen:
                rem[j] -= 1
            total += rec(i + 1, tuple(rem))
        return total

    return rec(0, tuple(cols))


def _count_part_assignments(parts: Partition, target: Partition) -> int:
    # functions parts -> positions of target with prescribed sums
    @lru_cache(maxsize=None)
    def rec(i, remaining):
        if i == len(parts):
            return 1 if not any(remaining) else 0
        total = 0
        for j, r in enumerate(remaining):
            if r >= parts[i]:
                rem = list(remaining)
                rem[j] -= parts[i]
                total += rec(i + 1, tuple(rem))
        return total

    return rec(0, tuple(target))


def ssyt(shape, content) -> Iterable[tuple]:
    """Semistandard tableaux (English rows) of a straight or skew shape.

    ``shape`` is a partition or a pair (outer, inner); entries come from
    1..len(content) with multiplicities given by ``content``.
    """
    if shape and isinstance(shape[0], tuple):
        outer, inner = shape
    else:
        outer, inner = shape, ()
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]
    cells.sort()
    letters = len(content)

    filling: dict = {}
    counts = [0] * letters

    def rec(k):
        if k == len(cells):
            if list(counts) == list(content):
                yield tuple(filling[c] for c in cells)
            return
        r, c = cells[k]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, filling[(r, c - 1)])
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, letters + 1):
            if counts[v - 1] < content[v - 1]:
                counts[v - 1] += 1
                filling[(r, c)] = v
                yield from rec(k + 1)
                del filling[(r, c)]
                counts[v - 1] -= 1

    yield from rec(0)


def kostka(lam: Partition, mu: Partition) -> int:
    return sum(1 for _ in ssyt(lam, mu))


@lru_cache(maxsize=None)
def to_m_matrix(basis: str, n: int) -> tuple:
    """Rows: basis elements; columns: m_mu.  Entry = [m_mu] b_lambda."""
    P = partitions(n)
    if basis == "m":
        return tuple(tuple(int(i == j) for j in range(len(P))) for i in range(len(P)))
    if basis == "e":
        f = _count_01_matrices
    elif basis == "h":
        def f(lam, mu):
            return _count_nonneg_matrices(lam, mu)
    elif basis == "p":
        f = _count_part_assignments
    elif basis == "s":
        f = kostka
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return tuple(tuple(f(lam, mu) for mu in P) for lam in P)


def _count_nonneg_matrices(rows, cols) -> int:
    @lru_cache(maxsize=None)
    def rec(i, remaining):
        if i == len(rows):
            return 1 if not any(remaining) else 0
        total = 0

        def spread(j, left, rem):
            nonlocal total
            if j == len(rem):
                if left == 0:
                    total_inner.append(tuple(rem))
                return
            for v in range(min(left, rem[j]) + 1):
                rem2 = list(rem)
                rem2[j] -= v
                spread(j + 1, left - v, rem2)

        total_inner: list = []
        spread(0, rows[i], list(remaining))
        for rem in total_inner:
            total += rec(i + 1, rem)
        return total

    return rec(0, tuple(cols))


def _invert(mat) -> tuple:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(_norm(x) for x in row[n:]) for row in a)


@lru_cache(maxsize=None)
def from_m_matrix(basis: str, n: int) -> tuple:
    """Rows: m_lambda; columns: basis elements."""
    return _invert(to_m_matrix(basis, n))


# ---------------------------------------------------------------------------


def _clean(coeffs: Mapping) -> dict:
    out = {}
    for k, v in coeffs.items():
        if not isinstance(v, QLaurent):
            v = QPoly.const(v)
        if not v.is_zero():
            out[tuple(k)] = v
    return out


class SymFunc:
    """Homogeneous degree-n symmetric function in one of the bases m, e, p, s, h."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping | None = None):
        if basis not in SYM_BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.degree = degree
        self.basis = basis
        self.coeffs = _clean(coeffs or {})
        for lam in self.coeffs:
            if sum(lam) != degree or not is_partition(lam):
                raise ValueError(f"{lam} is not a partition of {degree}")

    @classmethod
    def basis_element(cls, basis: str, lam, coeff=ONE):
        lam = tuple(lam)
        return cls(sum(lam), basis, {lam: coeff})

    def __getitem__(self, lam) -> QLaurent:
        return self.coeffs.get(tuple(lam), ZERO)

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to(self, basis: str) -> "SymFunc":
        return change_basis(self, basis)

    def _same(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return other if other.basis == self.basis else change_basis(other, self.basis)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        other = self._same(other)
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, ZERO) + v
        return SymFunc(self.degree, self.basis, c)

    def __neg__(self):
        return SymFunc(self.degree, self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "SymFunc":
        if isinstance(s, QLaurent):
            return SymFunc(self.degree, self.basis, {k: v * s for k, v in self.coeffs.items()})
        return SymFunc(self.degree, self.basis, {k: v.scale(s) for k, v in self.coeffs.items()})

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {k: fn(v) for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        if self.basis != other.basis:
            other = change_basis(other, self.basis)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(change_basis(self, "m").coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v})*{self.basis}{list(k)}" for k, v in self.items())

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "coeffs": {format_partition(k): str(v) for k, v in self.items()},
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "SymFunc":
        from .qalgebra import parse_qpoly

        return cls(
            d["degree"], d["basis"], {parse_partition(k): parse_qpoly(v) for k, v in d["coeffs"].items()}
        )


def change_basis(f: SymFunc, target: str) -> SymFunc:
    """Exact change of basis among m, e, p, s, h."""
    if f.basis == target:
        return f
    n = f.degree
    P = partitions(n)
    idx = {lam: i for i, lam in enumerate(P)}
    if f.basis == "m":
        mvec = f.coeffs
    else:
        A = to_m_matrix(f.basis, n)
        acc: dict = {}
        for lam, c in f.coeffs.items():
            row = A[idx[lam]]
            for j, a in enumerate(row):
                if a:
                    acc[P[j]] = acc.get(P[j], ZERO) + c.scale(a)
        mvec = acc
    if target == "m":
        return SymFunc(n, "m", mvec)
    B = from_m_matrix(target, n)
    acc = {}
    for mu, c in mvec.items():
        row = B[idx[mu]]
        for j, b in enumerate(row):
            if b:
                acc[P[j]] = acc.get(P[j], ZERO) + c.scale(b)
    return SymFunc(n, target, acc)


def omega(f: SymFunc) -> SymFunc:
    """The involution omega, applied in the power-sum basis."""
    g = change_basis(f, "p")
    n = f.degree
    out = SymFunc(n, "p", {lam: (c if (n - len(lam)) % 2 == 0 else -c) for lam, c in g.coeffs.items()})
    return change_basis(out, f.basis)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product, computed in the (multiplicative) e basis."""
    fe, ge = change_basis(f, "e"), change_basis(g, "e")
    acc: dict = {}
    for l1, c1 in fe.coeffs.items():
        for l2, c2 in ge.coeffs.items():
            lam = sort_partition(l1 + l2)
            acc[lam] = acc.get(lam, ZERO) + c1 * c2
    return SymFunc(f.degree + g.degree, "e", acc)


def one() -> SymFunc:
    return SymFunc(0, "e", {(): ONE})


def coeff_squarefree(f) -> QLaurent:
    """Coefficient of x_1 x_2 ... x_n."""
    if isinstance(f, QSymFunc):
        return to_M(f)[(1,) * f.degree]
    return change_basis(f, "m")[(1,) * f.degree]


def is_positive(f) -> bool:
    """All coefficients are polynomials with non-negative coefficients."""
    return all(v.is_polynomial() and v.nonnegative() for v in f.coeffs.values())


# ---------------------------------------------------------------------------
# quasisymmetric functions


class QSymFunc:
    """Homogeneous degree-n quasisymmetric function in the M or F basis."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping | None = None):
        if basis not in QSYM_BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.degree = degree
        self.basis = basis
        self.coeffs = _clean(coeffs or {})
        for a in self.coeffs:
            if sum(a) != degree or any(x < 1 for x in a):
                raise ValueError(f"{a} is not a composition of {degree}")

    def __getitem__(self, alpha) -> QLaurent:
        return self.coeffs.get(tuple(alpha), ZERO)

    def items(self):
        return sorted(self.coeffs.items())

    def __add__(self, other: "QSymFunc") -> "QSymFunc":
        if other.basis != self.basis:
            other = to_M(other) if self.basis == "M" else qsym_to_fundamental(other)
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, ZERO) + v
        return QSymFunc(self.degree, self.basis, c)

    def scale(self, s) -> "QSymFunc":
        if isinstance(s, QLaurent):
            return QSymFunc(self.degree, self.basis, {k: v * s for k, v in self.coeffs.items()})
        return QSymFunc(self.degree, self.basis, {k: v.scale(s) for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, QSymFunc):
            return NotImplemented
        return self.degree == other.degree and to_M(self).coeffs == to_M(other).coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v})*{self.basis}[{format_composition(k)}]" for k, v in self.items())

    __repr__ = __str__


def to_quasisymmetric(f: SymFunc) -> QSymFunc:
    """M-expansion of a symmetric function."""
    m = change_basis(f, "m")
    n = f.degree
    return QSymFunc(n, "M", {a: m[sort_partition(a)] for a in compositions(n) if sort_partition(a) in m.coeffs})


def to_symmetric(f: QSymFunc) -> SymFunc:
    """Collapse an M-expansion that is constant on rearrangement classes."""
    f = to_M(f)
    n = f.degree
    seen: dict = {}
    for a in compositions(n):
        lam = sort_partition(a)
        c = f[a]
        if lam in seen:
            b, cb = seen[lam]
            if cb != c:
                raise NotSymmetric(b, a, cb, c)
        else:
            seen[lam] = (a, c)
    return SymFunc(n, "m", {lam: c for lam, (_, c) in seen.items()})


def qsym_to_fundamental(f: QSymFunc) -> QSymFunc:
    """M -> F by inclusion-exclusion over descent sets (M_S = sum_{T>=S} (-1)^|T-S| F_T)."""
    if f.basis == "F":
        return f
    n = f.degree
    full = range(1, n)
    acc: dict = {}
    for a, c in f.coeffs.items():
        S = composition_to_descents(a)
        rest = [i for i in full if i not in S]
        for k in range(len(rest) + 1):
            for extra in combinations(rest, k):
                T = descents_to_composition(S | set(extra), n)
                acc[T] = acc.get(T, ZERO) + (c if k % 2 == 0 else -c)
    return QSymFunc(n, "F", acc)


def to_M(f: QSymFunc) -> QSymFunc:
    """F -> M: F_S = sum over T containing S of M_T."""
    if f.basis == "M":
        return f
    n = f.degree
    full = range(1, n)
    acc: dict = {}
    for a, c in f.coeffs.items():
        S = composition_to_descents(a)
        rest = [i for i in full if i not in S]
        for k in range(len(rest) + 1):
            for extra in combinations(rest, k):
                T = descents_to_composition(S | set(extra), n)
                acc[T] = acc.get(T, ZERO) + c
    return QSymFunc(n, "M", acc)


def phi_stanley(f: QSymFunc, n: int | None = None) -> TPoly:
    """Linear map F_S -> t(t-1)^i when S = {i+1, ..., n-1}, and 0 otherwise.

    Normalised so that phi(e_lambda) = t^len(lambda); the full descent set
    {1, ..., n-1} (i = 0) goes to t.
    """
    F = qsym_to_fundamental(f)
    n = F.degree if n is None else n
    out = TPoly()
    for a, c in F.coeffs.items():
        S = composition_to_descents(a)
        i = n - 1 - len(S)
        if S != frozenset(range(i + 1, n)):
            continue
        # t (t-1)^i expanded
        from math import comb

        poly = {j + 1: comb(i, j) * (-1) ** (i - j) for j in range(i + 1)}
        out = out + TPoly({e: c.scale(v) for e, v in poly.items()})
    return out


def expand_in_variables(f: SymFunc, nvars: int) -> dict:
    """Explicit monomial expansion in x_1..x_nvars: exponent tuple -> QPoly."""
    m = change_basis(f, "m")
    out: dict = {}
    for lam, c in m.coeffs.items():
        if len(lam) > nvars:
            continue
        padded = lam + (0,) * (nvars - len(lam))
        for expo in set(_perms(padded)):
            out[expo] = out.get(expo, ZERO) + c
    return {k: v for k, v in out.items() if not v.is_zero()}


def _perms(t):
    from itertools import permutations

    return permutations(t)
