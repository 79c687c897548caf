import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from seqcolor import (
    GraphError,
    build_graph,
    complete_graph,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)

from .conftest import graphs


class TestGraph6:
    def test_parse_k4(self):
        g = parse_graph6("C~")
        assert g.vertex_count == 4
        assert g.edge_set == complete_graph(4).edge_set

    def test_parse_single_edge(self):
        g = parse_graph6("A_")
        assert g.vertex_count == 2
        assert g.edges == ((0, 1),)

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<C~").edge_count == 6

    def test_emit_k4(self):
        assert emit_graph6(complete_graph(4)) == "C~"

    def test_roundtrip_canonical_string(self):
        for s in ("A_", "C~", "D?{", "E?~o"):
            assert emit_graph6(parse_graph6(s)) == s

    @given(graphs(max_n=20))
    def test_roundtrip_graph(self, g):
        back = parse_graph6(emit_graph6(g))
        assert back.vertex_count == g.vertex_count
        assert back.edge_set == g.edge_set

    @given(st.integers(0, 2**32 - 1))
    def test_agrees_with_networkx(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 20)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = build_graph(n, pairs)
        reference = nx.from_graph6_bytes(emit_graph6(g).encode())
        assert set(reference.nodes()) == set(g.vertices)
        assert {tuple(sorted(e)) for e in reference.edges()} == set(g.edge_set)
        encoded = nx.to_graph6_bytes(reference, header=False).decode().strip()
        assert parse_graph6(encoded).edge_set == g.edge_set

    def test_malformed_length_byte(self):
        with pytest.raises(GraphError, match="length byte"):
            parse_graph6(":Fa@x^")

    def test_multibyte_size_rejected(self):
        with pytest.raises(GraphError, match="multi-byte"):
            parse_graph6("~??~?????")

    def test_truncated_payload(self):
        with pytest.raises(GraphError, match="truncated"):
            parse_graph6("C")

    def test_trailing_data(self):
        with pytest.raises(GraphError, match="trailing"):
            parse_graph6("C~~")

    def test_noncanonical_padding(self):
        # Two vertices, one edge: only the first of six payload bits may be set.
        assert parse_graph6("A_").edge_count == 1
        with pytest.raises(GraphError, match="padding"):
            parse_graph6("A" + chr(63 + 0b110000))

    def test_emit_rejects_large(self):
        g = build_graph(63, [])
        with pytest.raises(GraphError, match="62"):
            emit_graph6(g)


class TestEdgeList:
    def test_parse_k4(self):
        text = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3"
        assert parse_edge_list(text).edge_set == complete_graph(4).edge_set

    def test_parse_single_edge(self):
        g = parse_edge_list("2 1\n0 1")
        assert g.edges == ((0, 1),)

    def test_loop_propagates(self):
        with pytest.raises(GraphError, match="loop"):
            parse_edge_list("3 1\n0 0")

    def test_count_mismatch(self):
        with pytest.raises(GraphError, match="promises"):
            parse_edge_list("3 2\n0 1")

    def test_non_integer(self):
        with pytest.raises(GraphError, match="non-integer"):
            parse_edge_list("2 1\n0 x")

    def test_missing_header(self):
        with pytest.raises(GraphError, match="header"):
            parse_edge_list("")

    @given(graphs())
    def test_roundtrip(self, g):
        back = parse_edge_list(emit_edge_list(g))
        assert back.vertex_count == g.vertex_count
        assert back.edges == g.edges
