import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idstab import errors
from idstab.codec import decode_graph6, emit_edgelist, encode_graph6, parse_edgelist
from idstab.core import build_graph, upper_triangle_pairs
from idstab.families import book, complete, empty, friendship, path, petersen, star

from conftest import all_graphs


class TestGraph6:
    def test_known_encodings(self):
        assert encode_graph6(empty(0)) == "?"
        assert encode_graph6(path(2)) == "A_"
        assert encode_graph6(path(3)) == "Bg"

    def test_known_decodings(self):
        assert decode_graph6("?") == empty(0)
        assert decode_graph6("A_") == path(2)
        assert decode_graph6("Bg") == path(3)

    def test_roundtrip_exhaustive_order_5(self):
        for g in all_graphs(5):
            assert decode_graph6(encode_graph6(g)) == g

    def test_roundtrip_families(self):
        for g in (petersen(), book(6), friendship(10), star(20), complete(12)):
            assert decode_graph6(encode_graph6(g)) == g

    def test_length_formula(self):
        for n in range(0, 63):
            g = empty(n)
            assert len(encode_graph6(g)) == 1 + -(-(n * (n - 1) // 2) // 6)

    def test_multibyte_orders(self):
        for g in (empty(63), empty(64), star(63), complete(63)):
            text = encode_graph6(g)
            assert text.startswith("~")
            assert decode_graph6(text) == g

    def test_header_tolerated(self):
        assert decode_graph6(">>graph6<<Bg") == path(3)

    def test_malformed(self):
        with pytest.raises(errors.MalformedGraph6):
            decode_graph6("")
        with pytest.raises(errors.MalformedGraph6):
            decode_graph6("B")  # truncated payload
        with pytest.raises(errors.MalformedGraph6):
            decode_graph6("Bgg")  # payload too long
        with pytest.raises(errors.MalformedGraph6):
            decode_graph6("B!g")  # character below the alphabet
        with pytest.raises(errors.MalformedGraph6):
            decode_graph6("Bi")  # nonzero padding bits
        with pytest.raises(errors.MalformedGraph6):
            decode_graph6("~?")  # truncated order prefix

    def test_order_too_large(self):
        # order 66 in the multi-byte form
        with pytest.raises(errors.OrderTooLarge):
            decode_graph6("~?@B")
        with pytest.raises(errors.OrderTooLarge):
            decode_graph6("~~?")

    @given(st.integers(0, 16), st.data())
    @settings(max_examples=80, deadline=None)
    def test_roundtrip_random(self, n, data):
        pairs = list(upper_triangle_pairs(n))
        edges = [p for p in pairs if data.draw(st.booleans())]
        g = build_graph(n, edges)
        assert decode_graph6(encode_graph6(g)) == g


class TestEdgeList:
    def test_parse_p3(self):
        assert parse_edgelist("3 2\n0 1\n1 2\n") == path(3)

    def test_parse_k1(self):
        assert parse_edgelist("1 0\n") == empty(1)

    def test_loop_rejected_with_line(self):
        with pytest.raises(errors.LoopEdge) as err:
            parse_edgelist("2 1\n0 0\n")
        assert "line 2" in str(err.value)

    def test_vertex_out_of_range(self):
        with pytest.raises(errors.VertexOutOfRange):
            parse_edgelist("2 1\n0 5\n")

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(errors.ParseError):
            parse_edgelist("")
        with pytest.raises(errors.ParseError):
            parse_edgelist("3\n")
        with pytest.raises(errors.ParseError) as err:
            parse_edgelist("3 2\n0 1\n")
        assert "expected 2 edges" in str(err.value)
        with pytest.raises(errors.ParseError) as err:
            parse_edgelist("3 1\n0 1 2\n")
        assert "line 2" in str(err.value)
        with pytest.raises(errors.ParseError):
            parse_edgelist("3 1\n0 x\n")
        with pytest.raises(errors.ParseError):
            parse_edgelist("3 1\n0 1\n1 2\n")

    def test_roundtrip(self):
        for g in (path(5), petersen(), empty(3), book(3)):
            assert parse_edgelist(emit_edgelist(g)) == g

    def test_emit_sorts_edges(self):
        g = build_graph(3, [(2, 1), (1, 0)])
        assert emit_edgelist(g) == "3 2\n0 1\n1 2\n"
