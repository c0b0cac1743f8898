# -*- coding: utf-8 -*-
"""Tests for the graph_core module."""

##### IMPORTS #####
# Standard imports
import logging
from fractions import Fraction

# Third party imports
import networkx as nx
import numpy as np
import pytest

# Local imports
from CVT import graph_core
from CVT.errors import GraphParseError, IncorrectParameterError, ResourceLimitError
from CVT.graph_core import Graph, VertexSet
from CVT.set_system import neighborhood_system, trace


##### TESTS #####
class TestParseEdgeList:
    def test_path(self):
        g = graph_core.parse_edge_list("3 2\n0 1\n1 2\n")
        assert g.n == 3
        assert g.m == 2
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_cycle_with_comments(self):
        text = "# five cycle\n5 5\n\n0 1\n1 2\n# middle\n2 3\n3 4\n4 0\n"
        g = graph_core.parse_edge_list(text)
        assert (g.n, g.m) == (5, 5)
        assert all(g.degree(v) == 2 for v in range(5))

    def test_empty_graph(self):
        g = graph_core.parse_edge_list("4 0\n")
        assert (g.n, g.m) == (4, 0)

    def test_duplicates_warned(self, caplog):
        with caplog.at_level(logging.WARNING):
            g = graph_core.parse_edge_list("3 3\n0 1\n1 0\n1 2\n")
        assert g.m == 2
        assert "duplicate" in caplog.text

    @pytest.mark.parametrize("text, m", [("3 2\n0 1\n", 1), ("3 1\n0 1\n1 2\n", 2)])
    def test_header_count_recomputed(self, caplog, text, m):
        with caplog.at_level(logging.WARNING):
            g = graph_core.parse_edge_list(text)
        assert g.m == m
        assert "edge lines were read" in caplog.text

    @pytest.mark.parametrize(
        "text, line_no, reason",
        [
            ("3 1\n1 1\n", 2, "self-loop"),
            ("3 1\n0 3\n", 2, "vertex out of range"),
            ("3\n", 1, "malformed header"),
            ("3 1\n0 x\n", 2, "malformed edge"),
            ("# nothing\n", 1, "missing header"),
        ],
    )
    def test_errors(self, text, line_no, reason):
        with pytest.raises(GraphParseError, match=reason) as info:
            graph_core.parse_edge_list(text)
        assert info.value.line_no == line_no
        assert str(info.value) == f"{reason} at line {line_no}"

    def test_vertex_limit(self):
        with pytest.raises(GraphParseError, match="exceeds the configured limit"):
            graph_core.parse_edge_list("10 0\n", max_vertices=5)

    def test_serialize_parse(self, c5):
        text = graph_core.serialize_edge_list(c5)
        assert text == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"
        assert graph_core.parse_edge_list(text) == c5


class TestGraph:
    def test_asymmetric_rows(self):
        with pytest.raises(IncorrectParameterError, match="symmetric"):
            Graph(2, (0b10, 0))

    def test_self_loop_row(self):
        with pytest.raises(IncorrectParameterError, match="self-loops"):
            Graph(1, (1,))

    def test_from_edges_errors(self):
        with pytest.raises(IncorrectParameterError):
            Graph.from_edges(3, [(0, 3)])

    def test_adjacency_matrix(self, p4):
        matrix = p4.to_adjacency_matrix()
        assert matrix.dtype == bool
        assert np.array_equal(matrix, matrix.T)
        assert Graph.from_adjacency_matrix(matrix) == p4

    def test_networkx(self, c5):
        nx_graph = c5.to_networkx()
        assert nx.is_isomorphic(nx_graph, nx.cycle_graph(5))

    def test_is_clique(self, c5):
        assert c5.is_clique(0b00011)
        assert not c5.is_clique(0b00101)
        assert c5.is_clique(0)

    def test_vertex_set(self):
        s = VertexSet.of(6, [4, 1])
        assert s.to_list() == [1, 4]
        assert len(s) == 2
        assert 4 in s and 0 not in s
        with pytest.raises(IncorrectParameterError):
            VertexSet(3, 0b1000)


class TestGenerators:
    @pytest.mark.parametrize(
        "kind, n, m",
        [("complete", 5, 10), ("cycle", 5, 5), ("path", 4, 3), ("independent", 4, 0)],
    )
    def test_basic(self, kind, n, m):
        g = graph_core.gen_basic(kind, n)
        assert (g.n, g.m) == (n, m)

    def test_short_cycle(self):
        with pytest.raises(IncorrectParameterError):
            graph_core.gen_basic("cycle", 2)

    def test_unknown_kind(self):
        with pytest.raises(IncorrectParameterError):
            graph_core.gen_basic("wheel", 5)

    def test_random_seeded(self):
        assert graph_core.gen_random(20, 0.3, 7) == graph_core.gen_random(20, 0.3, 7)
        assert graph_core.gen_random(10, 1.0, 1).m == 45
        assert graph_core.gen_random(10, 0.0, 1).m == 0

    def test_blow_up_edge(self):
        k2 = graph_core.gen_basic("complete", 2)
        g = graph_core.blow_up(k2, 2)
        assert nx.is_isomorphic(g.to_networkx(), nx.cycle_graph(4))

    def test_blow_up_identity(self, c5):
        assert graph_core.blow_up(c5, 1) == c5

    def test_blow_up_triangle(self):
        g = graph_core.blow_up(graph_core.gen_basic("complete", 3), 2)
        assert (g.n, g.m) == (6, 12)
        # copies of one vertex are independent
        assert not g.has_edge(0, 1)

    def test_blow_up_edge_count(self):
        g = graph_core.gen_random(9, 0.4, 3)
        assert graph_core.blow_up(g, 3).m == 9 * g.m

    def test_blow_up_limit(self, c5):
        with pytest.raises(ResourceLimitError):
            graph_core.blow_up(c5, 3, max_vertices=10)

    def test_join(self):
        i1 = graph_core.gen_basic("independent", 1)
        k1 = graph_core.gen_basic("complete", 1)
        assert graph_core.join(i1, k1) == graph_core.gen_basic("complete", 2)
        split = graph_core.join(
            graph_core.gen_basic("independent", 2), graph_core.gen_basic("complete", 3)
        )
        assert split.m == 9

    @pytest.mark.parametrize(
        "n, c, t", [(100, 0.75, 50), (4, 0.99, 1), (10, 0.999, 1), (100, Fraction(1, 2), 71)]
    )
    def test_independent_part_size(self, n, c, t):
        assert graph_core.independent_part_size(n, c) == t

    def test_chordal_extremal(self):
        g, t = graph_core.gen_chordal_extremal(100, 0.75)
        assert t == 50
        assert g.m == 3725
        assert g.m >= 0.75 * 4950
        assert nx.is_chordal(g.to_networkx())

    def test_chordal_extremal_errors(self):
        with pytest.raises(IncorrectParameterError):
            graph_core.gen_chordal_extremal(2, 0.01)
        with pytest.raises(IncorrectParameterError):
            graph_core.gen_chordal_extremal(10, 1)

    def test_shatter_gadget_small(self):
        g, a_set = graph_core.build_shatter_gadget(1)
        assert g.n == 3
        assert a_set.to_list() == [0]
        assert g.degree(1) == 0
        assert g.has_edge(0, 2)

    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    def test_shatter_gadget_traces(self, t):
        g, a_set = graph_core.build_shatter_gadget(t)
        traced = trace(neighborhood_system(g), a_set)
        assert len(traced) == 2**t

    def test_shatter_gadget_policies(self):
        g, _ = graph_core.build_shatter_gadget(3, "complete_A")
        assert g.is_clique(0b111)
        assert graph_core.build_shatter_gadget(4, "random", seed=2) == (
            graph_core.build_shatter_gadget(4, "random", seed=2)
        )
        with pytest.raises(IncorrectParameterError):
            graph_core.build_shatter_gadget(3, "random")
        with pytest.raises(ResourceLimitError):
            graph_core.build_shatter_gadget(5, max_vertices=20)

    def test_polarity_degrees(self):
        g = graph_core.gen_polarity(2)
        assert (g.n, g.m) == (7, 9)
        assert sorted(g.degree(v) for v in range(7)) == [2, 2, 2, 3, 3, 3, 3]

    def test_polarity_q3(self):
        g = graph_core.gen_polarity(3)
        assert (g.n, g.m) == (13, 24)

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_polarity_no_four_cycle(self, q):
        g = graph_core.gen_polarity(q)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert (g.adj[u] & g.adj[v]).bit_count() <= 1

    @pytest.mark.parametrize("q", [1, 4, 103])
    def test_polarity_errors(self, q):
        with pytest.raises(IncorrectParameterError):
            graph_core.gen_polarity(q)

    def test_induced_subgraph(self, c5):
        sub = graph_core.induced_subgraph(c5, VertexSet.of(5, [0, 1, 3]))
        assert sub.n == 3
        assert list(sub.edges()) == [(0, 1)]
        assert graph_core.induced_subgraph(c5, c5.vertices) == c5
