from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twotrail import Graph, OutOfRangeLabel, SelfLoop, components, edge, induced, is_connected

from conftest import complete_graph, cycle_graph


def small_graphs(max_n=8):
    """Hypothesis strategy: a random labeled graph on up to max_n vertices."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        return Graph.from_edges(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])

    return build()


class TestFromEdges:
    def test_two_k2(self, two_k2):
        assert two_k2.n == 4
        assert [two_k2.degree(v) for v in range(4)] == [1, 1, 1, 1]
        assert two_k2.edges() == [(0, 1), (2, 3)]

    def test_c5_degrees(self, c5):
        assert all(c5.degree(v) == 2 for v in range(5))

    def test_dedup_and_reverse_dedup(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0)])
        assert g.edges() == [(0, 1)]
        assert sorted(g.degree(v) for v in range(3)) == [0, 1, 1]

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeLabel):
            Graph.from_edges(3, [(0, 3)])

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            Graph.from_edges(3, [(1, 1)])

    def test_round_trip(self):
        pairs = [(0, 2), (1, 3), (0, 4)]
        assert Graph.from_edges(5, pairs).edges() == sorted(pairs)


class TestComponents:
    def test_c5_whole(self, c5):
        assert components(c5) == [[0, 1, 2, 3, 4]]

    def test_c5_minus_two(self, c5):
        assert components(c5, [0, 2]) == [[1], [3, 4]]

    def test_two_k2(self, two_k2):
        assert components(two_k2) == [[0, 1], [2, 3]]

    def test_empty_remainder(self, c5):
        assert components(c5, range(5)) == []

    @given(small_graphs())
    def test_partition_sizes(self, g):
        for removed in ([], list(range(0, g.n, 2))):
            blocks = components(g, removed)
            total = sum(len(b) for b in blocks)
            assert total == g.n - len(removed)
            assert sorted(v for b in blocks for v in b) == sorted(
                set(range(g.n)) - set(removed)
            )

    @given(small_graphs())
    @settings(max_examples=60)
    def test_connected_matches_bfs(self, g):
        # independent breadth-first reachability
        if g.n == 0:
            reachable = 0
        else:
            seen = {0}
            queue = [0]
            while queue:
                u = queue.pop(0)
                for w in g.neighbors(u):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            reachable = len(seen)
        assert is_connected(g) == (g.n == 0 or reachable == g.n)
        assert (len(components(g)) == 1) == (g.n > 0 and reachable == g.n)


class TestInduced:
    def test_c5_path(self, c5):
        sub, label_map = induced(c5, [0, 1, 2])
        assert label_map == (0, 1, 2)
        assert sub.edges() == [(0, 1), (1, 2)]

    def test_identity(self, c5):
        sub, label_map = induced(c5, range(5))
        assert sub == c5
        assert label_map == (0, 1, 2, 3, 4)

    def test_k4_pair(self, k4):
        sub, _ = induced(k4, [0, 1])
        assert sub.edges() == [(0, 1)]

    def test_relabeling(self):
        g = cycle_graph(6)
        sub, label_map = induced(g, [1, 3, 4])
        assert label_map == (1, 3, 4)
        assert sub.edges() == [(1, 2)]  # old (3,4) is the only surviving edge


class TestModifiedCopies:
    def test_add_edge_new_value(self, c5):
        bigger = c5.add_edge(0, 2)
        assert bigger.has_edge(0, 2)
        assert not c5.has_edge(0, 2)
        assert bigger.edge_count == c5.edge_count + 1

    def test_remove_edge_new_value(self, c5):
        smaller = c5.remove_edge(0, 1)
        assert not smaller.has_edge(0, 1)
        assert c5.has_edge(0, 1)

    def test_complete(self):
        assert complete_graph(4).is_complete()
        assert not cycle_graph(4).is_complete()


def test_edge_canonical_form():
    assert edge(3, 1) == (1, 3)
    assert edge(1, 3) == (1, 3)
