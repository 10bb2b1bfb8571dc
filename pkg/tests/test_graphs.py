import random

import pytest
from hypothesis import given, settings, strategies as st

from epgc.epg import build_bundle
from epgc.graphs import (
    GraphError,
    INFINITY,
    SimpleGraph,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    cyclomatic_number,
    from_adjacency_text,
    girth,
    induced_subgraph,
    is_bipartite,
    is_eulerian,
    to_adjacency_text,
    to_dot,
)
from epgc.groups import generator_set, group_from_name
from oracles import graphs_isomorphic_brute


def random_graphs(max_n=12):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.builds(
            lambda edges: SimpleGraph(n, edges=edges),
            st.lists(
                st.tuples(
                    st.integers(0, max(0, n - 1)), st.integers(0, max(0, n - 1))
                ).filter(lambda e: e[0] != e[1]),
                max_size=n * max(0, n - 1) // 2,
            ),
        )
        if n > 0
        else st.just(SimpleGraph(0))
    )


class TestConstruction:
    def test_rejects_loop(self):
        with pytest.raises(GraphError):
            SimpleGraph(3, edges=[(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            SimpleGraph(3, edges=[(0, 3)])

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(GraphError):
            SimpleGraph(2, rows=[0b10, 0b00])

    def test_basic_accessors(self):
        g = SimpleGraph(4, edges=[(0, 1), (1, 2)])
        assert g.degree(1) == 2
        assert g.neighbors(1) == [0, 2]
        assert g.edge_count == 2
        assert g.edges() == [(0, 1), (1, 2)]


class TestComplement:
    def test_complement_of_complete_is_empty(self):
        assert complement(complete_graph(4)).edge_count == 0

    @settings(max_examples=60, deadline=None)
    @given(random_graphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g

    @settings(max_examples=60, deadline=None)
    @given(random_graphs())
    def test_edge_count_identity(self, g):
        assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2

    def test_complement_c5_isomorphic_to_c5(self):
        c5 = cycle_graph(5)
        assert graphs_isomorphic_brute(complement(c5), c5)


class TestInducedSubgraph:
    def test_full_set_unchanged(self):
        g = complete_bipartite(2, 3)
        assert induced_subgraph(g, range(5)) == g

    def test_empty_set(self):
        assert induced_subgraph(complete_graph(3), ()).n == 0

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            induced_subgraph(complete_graph(3), [5])

    def test_s3_generators_induce_k5_minus_edge(self):
        # the two rotation generators are the only non-adjacent pair
        bundle = build_bundle(group_from_name("S3"))
        gens = sorted(generator_set(bundle.group))
        sub = induced_subgraph(bundle.complement, gens)
        assert sub.n == 5
        assert sub.edge_count == 9
        assert sorted(sub.degree(v) for v in range(5)) == [3, 3, 4, 4, 4]


class TestComponents:
    def test_edgeless(self):
        comps = connected_components(SimpleGraph(5))
        assert comps == [(0,), (1,), (2,), (3,), (4,)]

    def test_triangle_plus_isolated(self):
        g = SimpleGraph(4, edges=[(0, 1), (1, 2), (0, 2)])
        assert connected_components(g) == [(0, 1, 2), (3,)]

    def test_z2xz4_complement_components(self):
        # one component on the 7 non-isolated vertices plus the identity
        bundle = build_bundle(group_from_name("Z2xZ4"))
        comps = connected_components(bundle.complement)
        sizes = sorted(len(c) for c in comps)
        assert sizes == [1, 7]
        assert bundle.isolated == {0}


class TestGirth:
    def test_tree(self):
        g = SimpleGraph(5, edges=[(0, 1), (1, 2), (1, 3), (3, 4)])
        assert girth(g) == INFINITY

    def test_triangle(self):
        assert girth(complete_graph(3)) == 3

    def test_c5(self):
        assert girth(cycle_graph(5)) == 5

    def test_complete_bipartite(self):
        assert girth(complete_bipartite(3, 3)) == 4


class TestBipartite:
    def test_edgeless(self):
        ok, coloring = is_bipartite(SimpleGraph(4))
        assert ok and len(coloring) == 4

    def test_triangle_witness(self):
        ok, cycle = is_bipartite(complete_graph(3))
        assert not ok
        assert len(cycle) == 3

    def test_k23(self):
        ok, coloring = is_bipartite(complete_bipartite(2, 3))
        assert ok
        assert coloring[:2] == [0, 0] and coloring[2:] == [1, 1, 1]

    @settings(max_examples=60, deadline=None)
    @given(random_graphs())
    def test_witness_validates(self, g):
        ok, witness = is_bipartite(g)
        if ok:
            for u, v in g.edges():
                assert witness[u] != witness[v]
        else:
            cycle = witness
            assert len(cycle) % 2 == 1
            for i, u in enumerate(cycle):
                assert g.has_edge(u, cycle[(i + 1) % len(cycle)])


class TestEulerian:
    def test_c4(self):
        assert is_eulerian(cycle_graph(4))

    def test_path_odd_degrees(self):
        assert not is_eulerian(SimpleGraph(3, edges=[(0, 1), (1, 2)]))

    def test_k5(self):
        assert is_eulerian(complete_graph(5))

    def test_edgeless_vacuous(self):
        assert is_eulerian(SimpleGraph(3))

    def test_isolated_vertex_handling(self):
        g = SimpleGraph(4, edges=[(0, 1), (1, 2), (0, 2)])
        assert is_eulerian(g, ignore_isolated=True)
        assert not is_eulerian(g, ignore_isolated=False)

    def test_two_triangles_not_eulerian(self):
        g = SimpleGraph(6, edges=[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_eulerian(g)


class TestCyclomatic:
    def test_tree_zero(self):
        g = SimpleGraph(4, edges=[(0, 1), (1, 2), (2, 3)])
        assert cyclomatic_number(g) == 0

    def test_triangle_one(self):
        assert cyclomatic_number(complete_graph(3)) == 1

    def test_k5_six(self):
        assert cyclomatic_number(complete_graph(5)) == 6

    def test_disconnected_raises(self):
        with pytest.raises(GraphError):
            cyclomatic_number(SimpleGraph(4, edges=[(0, 1), (2, 3)]))

    def test_connected_subgraph_monotone(self):
        # c(connected subgraph) <= c(graph) over random samples
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randint(3, 10)
            edges = set()
            for v in range(1, n):
                edges.add((rng.randrange(v), v))
            target = min(n * (n - 1) // 2, len(edges) + rng.randint(0, n))
            while len(edges) < target:
                u, v = rng.randrange(n), rng.randrange(n)
                if u != v:
                    edges.add((min(u, v), max(u, v)))
            g = SimpleGraph(n, edges=sorted(edges))
            c_full = cyclomatic_number(g)
            for _ in range(10):
                k = rng.randint(1, n)
                vs = rng.sample(range(n), k)
                sub = induced_subgraph(g, vs)
                if sub.n and len(connected_components(sub)) == 1:
                    assert cyclomatic_number(sub) <= c_full


class TestSerialization:
    def test_dot_deterministic(self):
        bundle = build_bundle(group_from_name("Z2xZ2"))
        dot = to_dot(bundle.reduced)
        assert dot == to_dot(bundle.reduced)
        assert dot.count("--") == 3
        assert 'label="(0,1)"' in dot

    def test_adjacency_text_round_trip(self):
        g = complete_bipartite(2, 3)
        assert from_adjacency_text(to_adjacency_text(g)) == g

    def test_adjacency_text_rejects_garbage(self):
        with pytest.raises(GraphError):
            from_adjacency_text("x\n")
