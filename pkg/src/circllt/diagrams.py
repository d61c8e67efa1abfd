"""Circular area sequences, their digraphs, corner edges and markings.

Vertices are 1-based.  An area sequence ``a`` of length n gives the digraph
with edges i -> i+1, ..., i -> i+a_i (indices mod n).  It is non-circular
(a Dyck diagram) when a_n = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator


class DiagramError(ValueError):
    pass


class OutOfRange(DiagramError):
    def __init__(self, i, value=None):
        self.index = i
        super().__init__(f"a_{i} = {value} is out of range")


class SlopeViolation(DiagramError):
    def __init__(self, i):
        self.index = i
        super().__init__(f"a_{i} - 1 > a_{i + 1} (indices mod n)")


class CircularNotSupported(DiagramError):
    pass


class BadMarking(DiagramError):
    pass


def _wrap(i: int, n: int) -> int:
    return (i - 1) % n + 1


class AreaSeq(tuple):
    """A validated circular area sequence (a tuple of ints)."""

    def __new__(cls, a: Iterable[int]):
        a = tuple(int(x) for x in a)
        n = len(a)
        if n == 0:
            raise DiagramError("empty area sequence")
        for i, x in enumerate(a, 1):
            if x < 0 or x > n - 1:
                raise OutOfRange(i, x)
        for i in range(n):
            if a[i] - 1 > a[(i + 1) % n]:
                raise SlopeViolation(i + 1)
        return super().__new__(cls, a)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def area(self) -> int:
        return sum(self)

    @property
    def circular(self) -> bool:
        return self[-1] != 0

    def __repr__(self):
        return f"AreaSeq({format_area(self)})"


def validate(a) -> AreaSeq:
    return a if isinstance(a, AreaSeq) else AreaSeq(a)


def format_area(a) -> str:
    return ",".join(map(str, a))


def parse_area(s: str) -> AreaSeq:
    s = s.strip().strip("()")
    parts = [x for x in s.split(",") if x.strip()] if "," in s else list(s)
    if not parts:
        raise DiagramError("empty area sequence")
    try:
        return AreaSeq(int(x) for x in parts)
    except ValueError:
        raise DiagramError(f"cannot parse area sequence {s!r}") from None


def edges(a) -> list:
    """Directed edges (i, j), ordered by source then distance."""
    a = validate(a)
    n = len(a)
    return [(i, _wrap(i + d, n)) for i in range(1, n + 1) for d in range(1, a[i - 1] + 1)]


def adjacency(a) -> list:
    """Bitmask of undirected neighbours per vertex (index 0 unused)."""
    n = len(a)
    adj = [0] * (n + 1)
    for i, j in edges(a):
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def undirected_pairs(a) -> list:
    return sorted({(min(i, j), max(i, j)) for i, j in edges(a)})


def corner_edges(a, wrap: bool | None = None) -> list:
    """Non-edges i -> j with i -> j-1 and i+1 -> j both present.

    The diagonal cell counts as present, so a_i = 0 is allowed.  By default
    corners may wrap around only for circular sequences; pass ``wrap``
    explicitly to override.
    """
    a = validate(a)
    n = len(a)
    if wrap is None:
        wrap = a.circular
    out = []
    for i in range(1, n + 1):
        ai = a[i - 1]
        if ai + 1 > n - 1:
            continue
        j = i + ai + 1
        if j > n and not wrap:
            continue
        if i == n and not wrap:
            continue
        if a[i % n] >= ai:
            out.append((i, _wrap(j, n)))
    return out


def _components(n: int, pairs) -> list:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        parent[find(u)] = find(v)
    groups: dict = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def components(a) -> list:
    return _components(len(a), undirected_pairs(a))


def is_connected(a) -> bool:
    return len(components(a)) == 1


@dataclass(frozen=True)
class MarkedDiagram:
    """Area sequence with corner edges marked strict (F(u) < F(v)) or weak (F(u) >= F(v))."""

    a: AreaSeq
    strict: frozenset = field(default_factory=frozenset)
    weak: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "a", validate(self.a))
        object.__setattr__(self, "strict", frozenset(tuple(e) for e in self.strict))
        object.__setattr__(self, "weak", frozenset(tuple(e) for e in self.weak))
        if self.strict & self.weak:
            raise BadMarking("an edge is marked both strict and weak")
        allowed = set(corner_edges(self.a, wrap=True))
        for e in self.strict | self.weak:
            if e not in allowed:
                raise BadMarking(f"{e[0]}-{e[1]} is not a corner edge")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def circular(self) -> bool:
        return self.a.circular or any(u > v for u, v in self.strict | self.weak)

    @property
    def unmarked(self) -> bool:
        return not self.strict and not self.weak

    def __str__(self):
        return format_marked(self)


def as_marked(d) -> MarkedDiagram:
    if isinstance(d, MarkedDiagram):
        return d
    return MarkedDiagram(validate(d))


def format_marked(d: MarkedDiagram) -> str:
    def es(s):
        return ",".join(f"{u}-{v}" for u, v in sorted(s))

    if d.unmarked:
        return format_area(d.a)
    return f"{format_area(d.a)};strict={es(d.strict)};weak={es(d.weak)}"


def parse_marked(s: str) -> MarkedDiagram:
    parts = s.split(";")
    a = parse_area(parts[0])
    sets = {"strict": set(), "weak": set()}
    for p in parts[1:]:
        if not p.strip():
            continue
        key, _, val = p.partition("=")
        key = key.strip()
        if key not in sets:
            raise DiagramError(f"unknown marking {key!r}")
        for tok in val.split(","):
            tok = tok.strip()
            if tok:
                u, v = tok.split("-")
                sets[key].add((int(u), int(v)))
    return MarkedDiagram(a, frozenset(sets["strict"]), frozenset(sets["weak"]))


# ---------------------------------------------------------------------------
# posets, transposes, bounce path


@dataclass(frozen=True)
class NaturalPoset:
    n: int
    relations: frozenset  # pairs (i, j) meaning i < j, transitively closed

    def less(self, i, j) -> bool:
        return (i, j) in self.relations

    def minimal(self) -> list:
        above = {j for _, j in self.relations}
        return [v for v in range(1, self.n + 1) if v not in above]

    def maximal(self) -> list:
        below = {i for i, _ in self.relations}
        return [v for v in range(1, self.n + 1) if v not in below]


def transitive_closure(n: int, rel) -> frozenset:
    reach = [0] * (n + 1)
    for i, j in rel:
        reach[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for i in range(1, n + 1):
            r = reach[i]
            new = r
            m = r
            while m:
                low = m & -m
                j = low.bit_length() - 1
                new |= reach[j]
                m ^= low
            if new != r:
                reach[i] = new
                changed = True
    return frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if reach[i] >> j & 1)


def poset_of(a) -> NaturalPoset:
    """i < j iff j - i > a_i (the cell (i, j) lies outside the diagram)."""
    a = validate(a)
    if a.circular:
        raise CircularNotSupported("poset_of needs a_n = 0")
    n = len(a)
    rel = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if j - i > a[i - 1]}
    return NaturalPoset(n, transitive_closure(n, rel))


def column_area(a) -> tuple:
    """b_j = number of edges ending at j (the column counts of the diagram)."""
    a = validate(a)
    b = [0] * len(a)
    for _, j in edges(a):
        b[j - 1] += 1
    return tuple(b)


def transpose_marked(d) -> MarkedDiagram:
    """Reflect a non-circular diagram in the anti-diagonal; strict and weak swap."""
    d = as_marked(d)
    if d.circular:
        raise CircularNotSupported("transpose needs a non-circular diagram")
    n = d.n
    b = column_area(d.a)
    at = AreaSeq(b[n - k] for k in range(1, n + 1))

    def flip(s):
        return frozenset((n + 1 - j, n + 1 - i) for i, j in s)

    return MarkedDiagram(at, flip(d.weak), flip(d.strict))


def bounce_blocks(a) -> list:
    """Greedy split of 1..n into consecutive runs of mutually adjacent vertices."""
    a = validate(a)
    n = len(a)
    adj = adjacency(a)
    blocks, cur = [], []
    for v in range(1, n + 1):
        if all(adj[v] >> u & 1 for u in cur):
            cur.append(v)
        else:
            blocks.append(cur)
            cur = [v]
    blocks.append(cur)
    return blocks


def induced(a, keep: Iterable[int]) -> AreaSeq:
    """Area sequence of the subgraph induced on ``keep`` (relabelled in cyclic order)."""
    a = validate(a)
    n = len(a)
    keep = sorted(set(keep))
    idx = {v: k for k, v in enumerate(keep)}
    m = len(keep)
    new = []
    for v in keep:
        cnt = 0
        for d in range(1, a[v - 1] + 1):
            if _wrap(v + d, n) in idx:
                cnt += 1
        new.append(cnt)
    return AreaSeq(new)


# ---------------------------------------------------------------------------
# enumeration

FAMILIES = ("dyck", "circular", "vstrip", "circular_vstrip", "ribbon", "circular_ribbon")


def _area_seqs(n: int, circular: bool) -> Iterator[AreaSeq]:
    # depth-first over a_1..a_n with the slope condition checked as we go
    seq = [0] * n

    def rec(i):
        if i == n:
            if seq[n - 1] - 1 <= seq[0]:
                yield AreaSeq(seq)
            return
        hi = n - 1 if circular else n - 1 - i
        lo = max(0, seq[i - 1] - 1) if i else 0
        if i == n - 1 and not circular:
            hi = lo = 0
            if seq[i - 1] > 1:
                return
        for x in range(lo, hi + 1):
            seq[i] = x
            yield from rec(i + 1)

    yield from rec(0)


def _subsets(items) -> Iterator[tuple]:
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def enumerate_diagrams(n: int, family: str = "dyck") -> Iterator:
    """Exhaustive, duplicate-free enumeration; rotations are distinct objects."""
    family = family.replace("-", "_")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    circular = family.startswith("circular")
    for a in _area_seqs(n, circular):
        if family in ("dyck", "circular"):
            yield a
            continue
        corners = corner_edges(a, wrap=circular)
        if family.endswith("vstrip"):
            for s in _subsets(corners):
                yield MarkedDiagram(a, frozenset(s))
        else:
            for labels in product((0, 1, 2), repeat=len(corners)):
                s = frozenset(e for e, l in zip(corners, labels) if l == 1)
                w = frozenset(e for e, l in zip(corners, labels) if l == 2)
                yield MarkedDiagram(a, s, w)


def count_diagrams(n: int, family: str = "dyck") -> int:
    return sum(1 for _ in enumerate_diagrams(n, family))


def circular_count_formula(n: int) -> int:
    return (n + 2) * comb(2 * n - 1, n - 1) - 2 ** (2 * n - 1)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def small_schroeder(n: int) -> int:
    """1, 1, 3, 11, 45, 197, ... (n = 0, 1, 2, ...)."""
    if n <= 1:
        return 1
    # large Schroeder numbers halved
    big = [1]
    for m in range(1, n + 1):
        big.append(big[-1] + sum(big[k] * big[m - 1 - k] for k in range(m)))
    return big[n] // 2


# ---------------------------------------------------------------------------
# marked diagram -> tuple of ribbon shapes


@dataclass(frozen=True)
class LLTTuple:
    """Ordered skew shapes, French convention: rows go up, content = row - col.

    ``cells[k]`` is the tuple of (row, col) cells of shape k; ``label`` maps
    (shape, row, col) to the vertex it came from, when known.
    """

    cells: tuple
    label: tuple = ()

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cells)

    def flat(self) -> list:
        return [(k, r, c) for k, cs in enumerate(self.cells) for r, c in cs]


def content(cell) -> int:
    r, c = cell[-2], cell[-1]
    return r - c


def is_ribbon(cells) -> bool:
    s = set(cells)
    return not any({(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= s for r, c in s)


def is_skew_shape(cells) -> bool:
    """Rows contiguous with left and right ends weakly decreasing going up."""
    rows: dict = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
    rs = sorted(rows)
    if rs and rs != list(range(rs[0], rs[-1] + 1)):
        return False
    prev = None
    for r in rs:
        cs = sorted(rows[r])
        if cs != list(range(cs[0], cs[-1] + 1)):
            return False
        if prev is not None and (cs[0] > prev[0] or cs[-1] > prev[1]):
            return False
        if prev is not None and cs[-1] < prev[0]:
            return False
        prev = (cs[0], cs[-1])
    return True


def marked_to_llt_tuple(d) -> LLTTuple:
    """Ribbon tuple whose classical LLT polynomial equals G_d.

    Each bounce block becomes a diagonal (block index = content).  Unmarked
    vertices are single cells; a marked edge x -> y glues y onto x's ribbon
    (directly above for strict, directly left for weak).  Shapes are then
    ordered so that same-diagonal cells read in label order and an edge
    between adjacent diagonals is exactly an attacking pair.
    """
    d = as_marked(d)
    if d.circular:
        raise CircularNotSupported("needs a non-circular diagram")
    a, n = d.a, d.n
    blocks = bounce_blocks(a)
    blk = {v: k for k, bl in enumerate(blocks) for v in bl}
    edge_set = set(edges(a))

    # merge marked pairs into ribbons
    nxt = {}
    for u, v in d.strict:
        nxt[u] = (v, "s")
    for u, v in d.weak:
        nxt[u] = (v, "w")
    has_pred = {v for v, _ in nxt.values()}
    classes = []
    cls_of = {}
    for v in range(1, n + 1):
        if v in has_pred:
            continue
        chain = [v]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]][0])
        for x in chain:
            cls_of[x] = len(classes)
        classes.append(chain)
    for u, v in list(d.strict) + list(d.weak):
        if blk[v] != blk[u] + 1:
            raise DiagramError(f"marked edge {u}-{v} does not join consecutive bounce blocks")

    # pos(class A) > pos(class B) constraints as edges B -> A
    m = len(classes)
    succ = [set() for _ in range(m)]
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            cx, cy = cls_of[x], cls_of[y]
            if cx == cy:
                continue
            if blk[x] == blk[y]:
                succ[cy].add(cx)  # smaller label gets the larger position
            elif blk[y] == blk[x] + 1:
                if (x, y) in edge_set:
                    succ[cx].add(cy)
                else:
                    succ[cy].add(cx)
    indeg = [0] * m
    for s in succ:
        for t in s:
            indeg[t] += 1
    ready = sorted(k for k in range(m) if indeg[k] == 0)
    order = []
    while ready:
        k = ready.pop(0)
        order.append(k)
        for t in sorted(succ[k]):
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
        ready.sort()
    if len(order) != m:
        raise DiagramError("inconsistent shape ordering")

    shapes, labels = [], []
    for k in order:
        chain = classes[k]
        x0 = chain[0]
        r, c = blk[x0], 0
        cells = [(r, c)]
        lab = [x0]
        for x in chain[:-1]:
            _, kind = nxt[x]
            r, c = (r + 1, c) if kind == "s" else (r, c - 1)
            cells.append((r, c))
        lab = chain
        shapes.append(tuple(cells))
        labels.append(tuple(lab))
    label = tuple(((si, r, c), v) for si, (cs, ls) in enumerate(zip(shapes, labels)) for (r, c), v in zip(cs, ls))
    return LLTTuple(tuple(shapes), label)
