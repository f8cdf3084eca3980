import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclesmith.generators import all_graphs, named
from cyclesmith.graph import (
    UNREACHABLE,
    Graph,
    Graph6Error,
    GraphError,
    common_neighbors,
    degree,
    distance,
    from_edge_list,
    is_connected,
    is_two_connected,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestConstruction:
    def test_c4(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.num_edges == 4
        assert g.degrees() == [2, 2, 2, 2]

    def test_k1(self):
        g = from_edge_list(1, [])
        assert g.n == 1 and g.num_edges == 0

    def test_duplicates_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (1, 2), (0, 2)])
        assert g.num_edges == 3
        assert g == named("complete", n=3)

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            from_edge_list(3, [(1, 1)])

    def test_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            from_edge_list(3, [(0, 3)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0))

    def test_vertex_cap(self):
        with pytest.raises(GraphError):
            from_edge_list(65, [])


class TestGraph6:
    def test_k1(self):
        assert parse_graph6("@") == from_edge_list(1, [])
        assert write_graph6(from_edge_list(1, [])) == "@"

    def test_k2_hand_encoded(self):
        # n=2 -> chr(65)='A'; the single bit x(0,1)=1 padded to 100000 -> 32+63 = '_'
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges() == [(0, 1)]

    def test_star_record(self):
        # decoded independently with networkx.from_graph6_bytes
        g = parse_graph6("D?{")
        assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
        assert write_graph6(g) == "D?{"

    def test_c4(self):
        g = named("cycle", n=4)
        s = write_graph6(g)
        assert s == "Cl"
        assert parse_graph6(s).degrees() == [2, 2, 2, 2]

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<A_") == parse_graph6("A_")

    def test_padding_bits_canonicalised(self):
        # 'A' + bits 111111: only the first bit is meaningful
        assert write_graph6(parse_graph6("A~")) == "A_"

    @pytest.mark.parametrize("bad", ["", "A", "A__", "A!", "~?", "D?{x"])
    def test_malformed(self, bad):
        with pytest.raises(Graph6Error):
            parse_graph6(bad)

    def test_extended_length(self):
        g = named("cycle", n=63)
        s = write_graph6(g)
        assert s.startswith("~??~")
        assert parse_graph6(s) == g
        assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()

    @settings(max_examples=1000, deadline=None)
    @given(graphs(max_n=20))
    def test_matches_networkx_encoder(self, g):
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert write_graph6(g) == ref
        assert parse_graph6(ref) == g

    def test_file_reader_reports_line(self):
        lines = [">>graph6<<A_\n", "\n", "Bw\n", "B!\n"]
        it = read_graph6_lines(lines)
        assert next(it)[0] == 1
        assert next(it)[0] == 3
        with pytest.raises(Graph6Error, match="line 4"):
            next(it)


class TestQueries:
    def test_degree(self, petersen):
        assert all(degree(petersen, v) == 3 for v in range(10))
        assert degree(from_edge_list(1, []), 0) == 0
        star = named("star", k=3)
        assert degree(star, 0) == 3 and degree(star, 1) == 1
        with pytest.raises(GraphError):
            degree(star, 4)

    def test_common_neighbors(self, k23):
        assert common_neighbors(k23, 0, 1) == {2, 3, 4}
        assert common_neighbors(named("cycle", n=5), 0, 1) == set()
        assert common_neighbors(named("cycle", n=4), 0, 2) == {1, 3}
        with pytest.raises(GraphError):
            common_neighbors(k23, 2, 2)

    def test_distance(self):
        assert distance(named("cycle", n=6), 0, 3) == 3
        assert distance(named("cycle", n=6), 2, 2) == 0
        two_k2 = from_edge_list(4, [(0, 1), (2, 3)])
        assert distance(two_k2, 0, 2) is UNREACHABLE

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=10))
    def test_distance_matches_bfs_and_triangle_inequality(self, g):
        lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u, v in itertools.product(range(g.n), repeat=2):
            d = distance(g, u, v)
            assert d == lengths[u].get(v, UNREACHABLE)
            assert (d == 1) == g.has_edge(u, v)
            for w in range(g.n):
                duw, dwv = distance(g, u, w), distance(g, w, v)
                if UNREACHABLE not in (d, duw, dwv):
                    assert d <= duw + dwv

    @settings(max_examples=200, deadline=None)
    @given(graphs())
    def test_handshake(self, g):
        assert sum(degree(g, v) for v in range(g.n)) == 2 * g.num_edges


class TestTwoConnected:
    def test_examples(self):
        assert is_two_connected(named("cycle", n=4))
        assert not is_two_connected(named("path", n=4))
        bowtie = from_edge_list(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        assert not is_two_connected(bowtie)
        assert not is_two_connected(named("complete", n=2))

    @staticmethod
    def brute(g):
        if g.n < 3 or not is_connected(g):
            return False
        return all(is_connected(g.induced([u for u in range(g.n) if u != v])) for v in range(g.n))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_vertex_deletion_oracle(self, n):
        for g in all_graphs(n):
            assert is_two_connected(g) == self.brute(g), write_graph6(g)
