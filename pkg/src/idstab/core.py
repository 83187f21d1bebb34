"""Immutable bitmask graphs of order at most 64 and their set primitives.

Vertices are the integers 0..n-1 and every vertex set is a plain bit mask,
so neighborhood algebra is integer arithmetic.  Graphs validate their own
invariants (symmetry, no loops, no stray bits) on construction, which means
every operation that returns a ``Graph`` re-asserts them for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyGraph, LoopEdge, OrderTooLarge, VertexNotInSet, VertexOutOfRange

MAX_ORDER = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def upper_triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Vertex pairs (i, j), i < j, in column-major order: (0,1), (0,2), (1,2), (0,3), ...

    This is the bit order used by the graph6 codec and by labeled-graph
    enumeration, so edge masks mean the same thing everywhere.
    """
    for j in range(1, n):
        for i in range(j):
            yield i, j


@dataclass(frozen=True)
class VertexSet:
    """A vertex subset stored as a bit mask.

    A value is only meaningful against the graph it was produced for; it does
    not remember that graph.
    """

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        m = 0
        for v in vertices:
            m |= 1 << v
        return cls(m)

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool((self.mask >> v) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int


@dataclass(frozen=True)
class SetClassification:
    independent: bool
    dominating: bool
    maximal_independent: bool


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; row v is the open neighborhood N(v) as a bit mask.

    The order-0 graph is a valid value.  Instances are immutable and safe to
    share between threads or processes.
    """

    order: int
    adj: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise OrderTooLarge(f"order {n} outside 0..{MAX_ORDER}")
        if len(self.adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(self.adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex {n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, ascending by u then v."""
        for v in range(self.order):
            for u in iter_bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield v, u

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(row == full ^ (1 << v) for v, row in enumerate(self.adj))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.order - 1}")


def _check_subset(g: Graph, s: VertexSet) -> None:
    if s.mask & ~g.full_mask:
        raise VertexOutOfRange(f"set {s.members()} has vertices outside 0..{g.order - 1}")


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an order and unordered vertex pairs.

    Duplicate pairs are allowed and collapse to a single edge.
    """
    if order < 0 or order > MAX_ORDER:
        raise OrderTooLarge(f"order {order} outside 0..{MAX_ORDER}")
    rows = [0] * order
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"loop edge ({u}, {v})")
        if not (0 <= u < order and 0 <= v < order):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def degree_stats(g: Graph) -> DegreeProfile:
    if g.order == 0:
        raise EmptyGraph("degree profile of the null graph is undefined")
    degrees = tuple(row.bit_count() for row in g.adj)
    return DegreeProfile(degrees, min(degrees), max(degrees))


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.adj[v])


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.adj[v] | (1 << v))


def private_neighbors(g: Graph, v: int, s: VertexSet) -> VertexSet:
    """Vertices whose only neighbor inside ``s`` is ``v``.

    Computed as {u : N(u) & S == {v}}, which is equivalent to
    N(v) - N(S - {v}).  Members of ``s`` other than ``v`` can qualify.
    """
    _check_subset(g, s)
    if v not in s:
        raise VertexNotInSet(f"vertex {v} is not a member of {s.members()}")
    bit = 1 << v
    m = 0
    for u in range(g.order):
        if g.adj[u] & s.mask == bit:
            m |= 1 << u
    return VertexSet(m)


def external_private_neighbors(g: Graph, v: int, s: VertexSet) -> VertexSet:
    """Private neighbors of ``v`` that lie outside ``s``."""
    return VertexSet(private_neighbors(g, v, s).mask & ~s.mask)


def delete_vertices(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V - s, relabeled compactly, plus the old->new map.

    Kept vertices preserve their relative order.  Deleting every vertex
    yields the null graph.
    """
    _check_subset(g, s)
    keep = [v for v in range(g.order) if v not in s]
    mapping = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = g.adj[old]
        m = 0
        for new, src in enumerate(keep):
            m |= ((row >> src) & 1) << new
        rows.append(m)
    return Graph(len(keep), tuple(rows)), mapping


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    return Graph(g.order, rows)


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest member."""
    out: list[VertexSet] = []
    unseen = g.full_mask
    while unseen:
        comp = 0
        frontier = unseen & -unseen
        while frontier:
            comp |= frontier
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
        out.append(VertexSet(comp))
        unseen &= ~comp
    return out


def classify_set(g: Graph, s: VertexSet) -> SetClassification:
    """Flags saying whether ``s`` is independent, dominating, and maximal independent.

    ``maximal_independent`` is computed from its own definition (independent,
    and every outside vertex has a neighbor inside); its equivalence with
    independent-and-dominating is an invariant, not an implementation shortcut.
    """
    if g.order == 0:
        raise EmptyGraph("set classification needs at least one vertex")
    _check_subset(g, s)
    independent = all(g.adj[v] & s.mask == 0 for v in iter_bits(s.mask))
    closed = s.mask
    for v in iter_bits(s.mask):
        closed |= g.adj[v]
    dominating = closed == g.full_mask
    outside = g.full_mask & ~s.mask
    maximal = independent and all(g.adj[u] & s.mask for u in iter_bits(outside))
    return SetClassification(independent, dominating, maximal)
