import pytest

from idstab import errors
from idstab.core import build_graph, components
from idstab.families import complete, complete_bipartite, cycle, empty, path, star
from idstab.ops import cartesian, corona, disjoint_union, join, lexicographic

from conftest import all_graphs


class TestDisjointUnion:
    def test_two_singletons(self):
        assert disjoint_union(empty(1), empty(1)) == empty(2)

    def test_shifted_labels(self):
        g = disjoint_union(path(2), path(3))
        assert g.order == 5 and g.edge_count == 3
        assert sorted(g.edges()) == [(0, 1), (2, 3), (3, 4)]

    def test_null_identity(self):
        g = cycle(5)
        assert disjoint_union(empty(0), g) == g
        assert disjoint_union(g, empty(0)) == g

    def test_order_cap(self):
        with pytest.raises(errors.OrderTooLarge):
            disjoint_union(empty(40), empty(40))


class TestJoin:
    def test_k2_plus_k2(self):
        assert join(complete(2), complete(2)) == complete(4)

    def test_wheel_hub(self):
        w = join(empty(1), cycle(4))
        assert w.order == 5 and w.degree(0) == 4

    def test_join_of_empties_is_complete_bipartite(self):
        for m in range(1, 5):
            for n in range(1, 5):
                assert join(empty(m), empty(n)) == complete_bipartite(m, n)

    def test_order_cap(self):
        with pytest.raises(errors.OrderTooLarge):
            join(empty(33), empty(32))


class TestCartesian:
    def test_p2_square_p2_is_a_4_cycle(self):
        g = cartesian(path(2), path(2))
        assert g.order == 4 and g.edge_count == 4
        assert all(g.degree(v) == 2 for v in range(4))
        assert len(components(g)) == 1

    def test_book_shape(self):
        g = cartesian(star(2), path(2))
        assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (4, 5)]

    def test_right_identity(self):
        g = cycle(6)
        assert cartesian(g, complete(1)) == g

    def test_order_cap(self):
        with pytest.raises(errors.OrderTooLarge):
            cartesian(path(9), path(8))


class TestLexicographic:
    def test_k2_of_k2(self):
        assert lexicographic(complete(2), complete(2)) == complete(4)

    def test_right_identity(self):
        g = cycle(4)
        assert lexicographic(g, complete(1)) == g

    def test_blowup_of_edge(self):
        assert lexicographic(path(2), empty(2)) == complete_bipartite(2, 2)

    def test_order_cap(self):
        with pytest.raises(errors.OrderTooLarge):
            lexicographic(path(9), path(8))


class TestCorona:
    def test_single_vertex_corona_is_join(self):
        for h in (path(3), cycle(4), empty(2)):
            assert corona(complete(1), h) == join(complete(1), h)

    def test_two_disjoint_stars(self):
        g = corona(empty(2), empty(2))
        assert g.order == 6
        comps = components(g)
        assert [len(c) for c in comps] == [3, 3]
        assert g.degree(0) == 2 and g.degree(2) == 1

    def test_triangle_with_pendants(self):
        g = corona(cycle(3), complete(1))
        assert g.order == 6
        assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5)]

    def test_empty_left_rejected(self):
        with pytest.raises(errors.EmptyLeft):
            corona(empty(0), path(2))

    def test_right_null_is_identity(self):
        g = cycle(4)
        assert corona(g, empty(0)) == g

    def test_order_cap(self):
        with pytest.raises(errors.OrderTooLarge):
            corona(complete(13), complete(4))


def test_order_and_size_arithmetic_exhaustive_pairs():
    graphs = list(all_graphs(3))
    for g1 in graphs:
        n1, e1 = g1.order, g1.edge_count
        for g2 in graphs:
            n2, e2 = g2.order, g2.edge_count
            j = join(g1, g2)
            assert j.order == n1 + n2 and j.edge_count == e1 + e2 + n1 * n2
            lx = lexicographic(g1, g2)
            assert lx.order == n1 * n2 and lx.edge_count == n1 * e2 + e1 * n2 * n2
            cx = cartesian(g1, g2)
            assert cx.order == n1 * n2 and cx.edge_count == n1 * e2 + n2 * e1
            cr = corona(g1, g2)
            assert cr.order == n1 * (1 + n2)
            assert cr.edge_count == e1 + n1 * e2 + n1 * n2
            u = disjoint_union(g1, g2)
            assert u.order == n1 + n2 and u.edge_count == e1 + e2


@pytest.mark.slow
def test_order_and_size_arithmetic_order_4_operands():
    graphs = list(all_graphs(4))
    for g1 in graphs:
        n1, e1 = g1.order, g1.edge_count
        for g2 in graphs:
            n2, e2 = g2.order, g2.edge_count
            assert join(g1, g2).edge_count == e1 + e2 + n1 * n2
            assert lexicographic(g1, g2).edge_count == n1 * e2 + e1 * n2 * n2
            assert cartesian(g1, g2).edge_count == n1 * e2 + n2 * e1
            assert corona(g1, g2).order == n1 * (1 + n2)
