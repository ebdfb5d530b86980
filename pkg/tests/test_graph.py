import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualdense import Graph, connected_components, density, graphs_equal, shortest_path_hops, vol
from helpers import random_graph, subset_density


def triangle(w=1.0):
    return Graph(["a", "b", "c"], [(0, 1, w), (1, 2, w), (0, 2, w)])


class TestConstruction:
    def test_labels_bijective(self):
        g = triangle()
        assert g.labels == ("a", "b", "c")
        assert [g.index_of(lab) for lab in g.labels] == [0, 1, 2]

    def test_duplicate_label_rejected(self):
        with pytest.raises(ValueError, match="duplicate node label"):
            Graph(["a", "a"], [])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(["a", "b"], [(0, 0, 1.0)])

    @pytest.mark.parametrize("w", [0.0, -1.0, math.nan, math.inf])
    def test_bad_weight_rejected(self, w):
        with pytest.raises(ValueError):
            Graph(["a", "b"], [(0, 1, w)])

    def test_duplicate_edges_keep_max(self):
        g = Graph(["a", "b"], [(0, 1, 0.2), (1, 0, 0.7), (0, 1, 0.5)])
        assert g.edge_count == 1
        assert g.weight(0, 1) == 0.7
        assert g.duplicates_collapsed == 2

    def test_adjacency_symmetric_and_sorted(self):
        rng = random.Random(7)
        g = random_graph(rng, 12, 0.4)
        for u in range(g.n):
            nbrs = list(g.neighbors(u))
            assert nbrs == sorted(nbrs)
            for v in nbrs:
                assert g.weight(u, v) == g.weight(v, u)


class TestVol:
    def test_partial_sum(self):
        g = Graph(["v", "x", "y", "z"], [(0, 1, 0.5), (0, 2, 0.2), (0, 3, 0.9)])
        assert vol(g, {0, 1, 2}, 0) == pytest.approx(0.7)

    def test_isolated_node(self):
        g = Graph(["v", "x"], [])
        assert vol(g, {0}, 0) == 0.0

    def test_triangle_vol(self):
        g = triangle()
        for v in range(3):
            assert vol(g, {0, 1, 2}, v) == 2.0

    def test_v_outside_set(self):
        g = triangle()
        with pytest.raises(ValueError):
            vol(g, {0, 1}, 2)

    def test_set_outside_graph(self):
        g = triangle()
        with pytest.raises(ValueError):
            vol(g, {0, 5}, 0)


class TestDensity:
    def test_single_heavy_edge(self):
        g = Graph(["a", "b"], [(0, 1, 3.0)])
        assert density(g, {0, 1}) == 3.0

    def test_unit_triangle(self):
        assert density(triangle(), {0, 1, 2}) == 2.0

    def test_unit_four_clique(self):
        g = Graph(list("abcd"), [(u, v, 1.0) for u in range(4) for v in range(u + 1, 4)])
        assert density(g, {0, 1, 2, 3}) == 3.0

    def test_singleton(self):
        assert density(triangle(), {1}) == 0.0

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            density(triangle(), set())


class TestShortestPathHops:
    def test_adjacent(self):
        g = triangle()
        assert shortest_path_hops(g, 0, 1) == (1, [0, 1])

    def test_identity(self):
        g = triangle()
        assert shortest_path_hops(g, 2, 2) == (0, [2])

    def test_unreachable(self):
        g = Graph(["a", "b", "c"], [(0, 1, 1.0)])
        assert shortest_path_hops(g, 0, 2, cap=math.inf) is None

    def test_cap_excludes(self):
        g = Graph(list("abcd"), [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)])
        assert shortest_path_hops(g, 0, 3, cap=2) is None
        assert shortest_path_hops(g, 0, 3, cap=3) == (3, [0, 1, 2, 3])

    def test_tie_breaks_to_lowest_index(self):
        # Two shortest a->d paths: via b or via c; lowest index wins.
        g = Graph(list("abcd"), [(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)])
        assert shortest_path_hops(g, 0, 3) == (2, [0, 1, 3])


class TestConnectedComponents:
    def test_full_triangle(self):
        assert connected_components(triangle(), {0, 1, 2}) == [[0, 1, 2]]

    def test_induced_split(self):
        g = Graph(list("abcd"), [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)])
        assert connected_components(g, {0, 1, 3}) == [[0, 1], [3]]

    def test_empty(self):
        assert connected_components(triangle(), set()) == []


graphs_strategy = st.builds(
    lambda n, seed, p: random_graph(random.Random(seed), n, p),
    st.integers(2, 16), st.integers(0, 10_000), st.floats(0.1, 0.7))


@settings(max_examples=60, deadline=None)
@given(g=graphs_strategy, seed=st.integers(0, 10_000))
def test_density_matches_edge_enumeration(g, seed):
    rng = random.Random(seed)
    size = rng.randint(1, g.n)
    S = rng.sample(range(g.n), size)
    assert density(g, S) == pytest.approx(subset_density(g, S), rel=1e-9, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(g=graphs_strategy, seed=st.integers(0, 10_000))
def test_bfs_path_valid(g, seed):
    rng = random.Random(seed)
    u, v = rng.randrange(g.n), rng.randrange(g.n)
    hit = shortest_path_hops(g, u, v)
    if hit is None:
        return
    dist, path = hit
    assert len(path) == dist + 1
    assert path[0] == u and path[-1] == v
    for a, b in zip(path, path[1:]):
        assert g.has_edge(a, b)


@settings(max_examples=40, deadline=None)
@given(g=graphs_strategy, seed=st.integers(0, 10_000))
def test_components_partition(g, seed):
    rng = random.Random(seed)
    S = set(rng.sample(range(g.n), rng.randint(0, g.n)))
    comps = connected_components(g, S)
    flat = [v for comp in comps for v in comp]
    assert sorted(flat) == sorted(S)
    assert len(set(flat)) == len(flat)
    block_of = {v: i for i, comp in enumerate(comps) for v in comp}
    for u, v, _ in g.edges():
        if u in S and v in S:
            assert block_of[u] == block_of[v]
    for comp in comps:
        sub = g.subgraph(comp)
        assert len(connected_components(sub)) <= 1


def test_graphs_equal_by_labels():
    a = Graph(["x", "y"], [(0, 1, 0.5)])
    b = Graph(["y", "x"], [(0, 1, 0.5)])
    assert graphs_equal(a, b)
    c = Graph(["x", "y"], [(0, 1, 0.6)])
    assert not graphs_equal(a, c)
