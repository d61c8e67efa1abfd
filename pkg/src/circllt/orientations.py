"""Acyclic orientations, ascending-edge subsets, sectors and rook placements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .diagrams import (
    _components,
    as_marked,
    edges,
    undirected_pairs,
    validate,
)
from .qalgebra import ONE, QPoly, TPoly
from .symfunc import sort_partition


class NoDividers(ValueError):
    pass


class BadRange(ValueError):
    def __init__(self, i, msg="value out of range"):
        self.index = i
        super().__init__(f"row {i}: {msg}")


@dataclass(frozen=True)
class Orientation:
    """One arrow per adjacent pair: ``arcs`` holds (u, v) meaning u -> v."""

    n: int
    arcs: frozenset
    asc: int
    sinks: tuple
    sources: tuple

    def text(self, a) -> str:
        out = []
        for i, j in edges(a):
            out.append(f"{i}<{j}" if (i, j) in self.arcs else f"{i}>{j}")
        return " ".join(out)


@dataclass(frozen=True)
class OStarSubset:
    """Ascending subset S of Gamma's edges with S + strict edges acyclic."""

    n: int
    ascending: frozenset
    asc: int
    half_sinks: tuple
    half_sources: tuple

    def relation(self, strict=()) -> frozenset:
        return frozenset(self.ascending) | frozenset(strict)


def _acyclic_subsets(n: int, candidates, forced=(), choose_one_of_pair: bool = False):
    """Backtracking over arcs, keeping transitive reachability as bitmasks.

    With ``choose_one_of_pair`` the candidates are (u, v) pairs and exactly
    one direction is chosen for each; otherwise each arc is in or out.
    Yields frozensets of chosen arcs (the forced arcs are not included).
    """
    reach = [1 << v for v in range(n + 1)]  # reach[v] includes v itself

    def add(reach, u, v):
        if reach[v] >> u & 1:
            return None
        new = list(reach)
        rv = reach[v]
        for w in range(1, n + 1):
            if new[w] >> u & 1:
                new[w] |= rv
        return new

    for u, v in forced:
        reach = add(reach, u, v)
        if reach is None:
            return
    cands = list(candidates)
    chosen: list = []

    def rec(k, reach):
        if k == len(cands):
            yield frozenset(chosen)
            return
        u, v = cands[k]
        if choose_one_of_pair:
            options = [(u, v), (v, u)]
        else:
            options = [None, (u, v)]
        for opt in options:
            if opt is None:
                yield from rec(k + 1, reach)
                continue
            r2 = add(reach, *opt)
            if r2 is None:
                continue
            chosen.append(opt)
            yield from rec(k + 1, r2)
            chosen.pop()

    yield from rec(0, reach)


def enum_acyclic(a) -> Iterator[Orientation]:
    """All acyclic orientations of the underlying simple graph of Gamma_a."""
    a = validate(a)
    n = len(a)
    E = edges(a)
    pairs = undirected_pairs(a)
    nbrs = {v: set() for v in range(1, n + 1)}
    for u, v in pairs:
        nbrs[u].add(v)
        nbrs[v].add(u)
    for arcs in _acyclic_subsets(n, pairs, choose_one_of_pair=True):
        asc = sum(1 for e in E if e in arcs)
        out_deg = {v: 0 for v in range(1, n + 1)}
        in_deg = {v: 0 for v in range(1, n + 1)}
        for u, v in arcs:
            out_deg[u] += 1
            in_deg[v] += 1
        sinks = tuple(v for v in range(1, n + 1) if out_deg[v] == 0)
        sources = tuple(v for v in range(1, n + 1) if in_deg[v] == 0)
        yield Orientation(n, arcs, asc, sinks, sources)


def enum_ostar(d) -> Iterator[OStarSubset]:
    d = as_marked(d)
    n = d.n
    E = edges(d.a)
    strict = sorted(d.strict)
    for S in _acyclic_subsets(n, E, forced=strict):
        rel = set(S) | set(strict)
        outs = {u for u, _ in rel}
        ins = {v for _, v in rel}
        hs = tuple(v for v in range(1, n + 1) if v not in outs)
        hsrc = tuple(v for v in range(1, n + 1) if v not in ins)
        yield OStarSubset(n, S, len(S), hs, hsrc)


def sector_shape(n: int, dividers, comps=None) -> tuple:
    """Sector sizes: each divider owns itself and the non-dividers cyclically below it.

    Sectors are cut inside each connected component (given as sorted vertex
    lists), traversed cyclically in label order.
    """
    dividers = set(dividers)
    if comps is None:
        comps = [list(range(1, n + 1))]
    parts = []
    for comp in comps:
        ds = [k for k, v in enumerate(comp) if v in dividers]
        if not ds:
            raise NoDividers(f"no divider in component {comp}")
        m = len(comp)
        for x, y in zip(ds, ds[1:] + [ds[0] + m]):
            parts.append(y - x)
    return sort_partition(parts)


def sink_tpoly(a) -> TPoly:
    """sum over acyclic orientations of q^asc t^#sinks."""
    acc: dict = {}
    for th in enum_acyclic(a):
        key = (len(th.sinks), th.asc)
        acc[key] = acc.get(key, 0) + 1
    return _tpoly(acc)


def ostar_tpoly(d, which: str = "half_sinks") -> TPoly:
    acc: dict = {}
    for th in enum_ostar(d):
        key = (len(getattr(th, which)), th.asc)
        acc[key] = acc.get(key, 0) + 1
    return _tpoly(acc)


def _tpoly(acc) -> TPoly:
    coeffs: dict = {}
    for (t, s), c in acc.items():
        coeffs[t] = coeffs.get(t, QPoly()) + QPoly.monomial(s, c)
    return TPoly(coeffs)


# ---------------------------------------------------------------------------
# row statistics and the unique-orientation decoder


def row_ascents(a, arcs) -> tuple:
    """v_i = number of edges i -> j (j in row i) oriented i -> j."""
    a = validate(a)
    v = [0] * len(a)
    for i, j in edges(a):
        if (i, j) in arcs:
            v[i - 1] += 1
    return tuple(v)


def decode_acyclic(a, v) -> frozenset:
    """The acyclic orientation with v_i ascending edges in row i.

    Rows are processed bottom-up while a linear order of the processed
    vertices is maintained (arcs point forward in it).  Vertex i points to
    the v_i latest of its row neighbours and is inserted just after the
    latest of the others.
    """
    a = validate(a)
    if a.circular:
        raise BadRange(len(a), "needs a_n = 0")
    n = len(a)
    if len(v) != n:
        raise BadRange(0, "length mismatch")
    order: list = []
    arcs = set()
    for i in range(n, 0, -1):
        vi = v[i - 1]
        if not 0 <= vi <= a[i - 1]:
            raise BadRange(i, f"need 0 <= v <= {a[i - 1]}")
        nb = list(range(i + 1, i + a[i - 1] + 1))
        nb.sort(key=order.index)
        chosen = nb[len(nb) - vi :] if vi else []
        rest = nb[: len(nb) - vi]
        for j in chosen:
            arcs.add((i, j))
        for j in rest:
            arcs.add((j, i))
        at = order.index(rest[-1]) + 1 if rest else 0
        order.insert(at, i)
    return frozenset(arcs)


# ---------------------------------------------------------------------------
# rook placements


@dataclass(frozen=True)
class FerrersBoard:
    n: int
    rows: tuple  # row lengths l_i = a_i + i, rightmost cells of an n x n square

    def columns(self, i: int) -> range:
        return range(self.n - self.rows[i - 1] + 1, self.n + 1)


@dataclass(frozen=True)
class RookPlacement:
    board: FerrersBoard
    cols: tuple  # column of the rook in row i
    inversions: tuple  # per row

    @property
    def inv(self) -> int:
        return sum(self.inversions)


def board_of(a) -> FerrersBoard:
    a = validate(a)
    if a.circular:
        raise BadRange(len(a), "needs a_n = 0")
    n = len(a)
    return FerrersBoard(n, tuple(a[i - 1] + i for i in range(1, n + 1)))


def rook_inversions(b: FerrersBoard, cols) -> tuple:
    """Per row: board cells with no rook above in their column and none to their left."""
    out = []
    for i in range(1, b.n + 1):
        above = set(cols[: i - 1])
        c0 = cols[i - 1]
        out.append(sum(1 for c in b.columns(i) if c < c0 and c not in above))
    return tuple(out)


def enum_rooks(b: FerrersBoard) -> Iterator[RookPlacement]:
    n = b.n
    cols: list = []

    def rec(i):
        if i > n:
            t = tuple(cols)
            yield RookPlacement(b, t, rook_inversions(b, t))
            return
        for c in b.columns(i):
            if c not in cols:
                cols.append(c)
                yield from rec(i + 1)
                cols.pop()

    yield from rec(1)


def rook_decode(b: FerrersBoard, v) -> RookPlacement:
    """Rook in row i goes to the (v_i + 1)-th free column from the left."""
    cols: list = []
    for i in range(1, b.n + 1):
        free = [c for c in b.columns(i) if c not in cols]
        if not 0 <= v[i - 1] < len(free):
            raise BadRange(i, f"need 0 <= v < {len(free)}")
        cols.append(free[v[i - 1]])
    t = tuple(cols)
    return RookPlacement(b, t, rook_inversions(b, t))


def orientation_to_rook(a, arcs) -> RookPlacement:
    return rook_decode(board_of(a), row_ascents(a, arcs))


def rook_tpoly(b: FerrersBoard) -> QPoly:
    out = QPoly()
    for r in enum_rooks(b):
        out = out + QPoly.monomial(r.inv)
    return out


def unique_sink_sum(a, sink: int = 1) -> QPoly:
    out = QPoly()
    for th in enum_acyclic(a):
        if th.sinks == (sink,):
            out = out + QPoly.monomial(th.asc)
    return out


def sector_e_terms(a, side: str = "chromatic") -> dict:
    """partition -> QPoly: sum of q^asc over (half-)sink sector shapes."""
    a = validate(a)
    n = len(a)
    comps = _components(n, undirected_pairs(a))
    acc: dict = {}
    if side == "chromatic":
        for th in enum_acyclic(a):
            mu = sector_shape(n, th.sinks, comps)
            acc[mu] = acc.get(mu, QPoly()) + QPoly.monomial(th.asc)
    else:
        for th in enum_ostar(a):
            mu = sector_shape(n, th.half_sinks, comps)
            acc[mu] = acc.get(mu, QPoly()) + QPoly.monomial(th.asc)
    return acc
