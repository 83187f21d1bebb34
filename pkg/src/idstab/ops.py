"""Binary graph operations: union, join, Cartesian and lexicographic products, corona.

Product labelings are row-major on (left, right): vertex (a, x) becomes
a * |V(right)| + x.  The corona places the left graph's vertices first and
the i-th copy of the right graph at offset n1 + i * n2.  These labelings are
frozen so witness sets stay reproducible.
"""

from __future__ import annotations

from .core import MAX_ORDER, Graph
from .errors import EmptyLeft, OrderTooLarge


def _require_order(total: int, what: str) -> None:
    if total > MAX_ORDER:
        raise OrderTooLarge(f"{what} would have {total} vertices (cap {MAX_ORDER})")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    _require_order(g1.order + g2.order, "disjoint union")
    shift = g1.order
    rows = list(g1.adj) + [row << shift for row in g2.adj]
    return Graph(g1.order + g2.order, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    _require_order(g1.order + g2.order, "join")
    shift = g1.order
    left_mask = (1 << shift) - 1
    right_mask = ((1 << g2.order) - 1) << shift
    rows = [row | right_mask for row in g1.adj]
    rows += [(row << shift) | left_mask for row in g2.adj]
    return Graph(g1.order + g2.order, tuple(rows))


def cartesian(g1: Graph, g2: Graph) -> Graph:
    """(a, x) ~ (b, y) iff (a == b and x ~ y) or (x == y and a ~ b)."""
    n1, n2 = g1.order, g2.order
    _require_order(n1 * n2, "Cartesian product")
    rows = []
    for a in range(n1):
        for x in range(n2):
            row = g2.adj[x] << (a * n2)
            m = g1.adj[a]
            while m:
                low = m & -m
                b = low.bit_length() - 1
                m ^= low
                row |= 1 << (b * n2 + x)
            rows.append(row)
    return Graph(n1 * n2, tuple(rows))


def lexicographic(g1: Graph, g2: Graph) -> Graph:
    """(a, x) ~ (b, y) iff a ~ b, or a == b and x ~ y."""
    n1, n2 = g1.order, g2.order
    _require_order(n1 * n2, "lexicographic product")
    copy_full = (1 << n2) - 1
    expanded = []
    for a in range(n1):
        row = 0
        m = g1.adj[a]
        while m:
            low = m & -m
            b = low.bit_length() - 1
            m ^= low
            row |= copy_full << (b * n2)
        expanded.append(row)
    rows = []
    for a in range(n1):
        for x in range(n2):
            rows.append(expanded[a] | (g2.adj[x] << (a * n2)))
    return Graph(n1 * n2, tuple(rows))


def corona(g1: Graph, g2: Graph) -> Graph:
    """One copy of g2 per vertex of g1, each copy joined to its host vertex."""
    n1, n2 = g1.order, g2.order
    if n1 == 0:
        raise EmptyLeft("corona needs a nonempty left operand")
    _require_order(n1 * (1 + n2), "corona")
    rows = list(g1.adj)
    for v in range(n1):
        offset = n1 + v * n2
        copy_mask = ((1 << n2) - 1) << offset
        rows[v] |= copy_mask
        for x in range(n2):
            rows.append((g2.adj[x] << offset) | (1 << v))
    return Graph(n1 * (1 + n2), tuple(rows))
