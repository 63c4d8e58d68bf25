import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, named, random_graph
from oracles import brute_betweenness, floyd_warshall
from graphsiege.centrality import BetweennessTable, edge_betweenness, extremal, vertex_betweenness
from graphsiege.errors import EmptyTable
from graphsiege.graph import Graph


class TestVertexBetweenness:
    def test_path(self):
        t = vertex_betweenness(named("P3"))
        assert t.raw == {0: 0.0, 1: 1.0, 2: 0.0}
        assert t.normalized[1] == 1.0

    def test_star(self):
        assert vertex_betweenness(named("S5")).raw[0] == pytest.approx(6.0)

    def test_complete(self):
        assert set(vertex_betweenness(named("K4")).raw.values()) == {0.0}

    def test_cycle_split(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert vertex_betweenness(c4).raw == pytest.approx({v: 0.5 for v in range(4)})

    def test_global_ids_after_removal(self):
        g = named("P4")
        g.remove_vertex(0)
        t = vertex_betweenness(g)
        assert sorted(t.raw) == [1, 2, 3]
        assert t.raw[2] == 1.0

    def test_small_graphs_normalize_to_zero(self):
        assert vertex_betweenness(named("K2")).normalized == {0: 0.0, 1: 0.0}
        assert len(vertex_betweenness(Graph(0))) == 0


class TestEdgeBetweenness:
    def test_k2(self):
        t = edge_betweenness(named("K2"))
        assert t.raw == {(0, 1): 1.0}
        assert t.normalized == {(0, 1): 1.0}

    def test_path(self):
        assert edge_betweenness(named("P3")).raw == {(0, 1): 2.0, (1, 2): 2.0}

    def test_cycle(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert edge_betweenness(c4).raw == pytest.approx({e: 2.0 for e in c4.edges()})

    def test_csv_rows(self):
        rows = list(edge_betweenness(named("P3")).csv_rows())
        assert rows[0] == ("edge", "0-1", 2.0, pytest.approx(2 / 3))


class TestOracle:
    @settings(max_examples=150)
    @given(graphs(max_n=9))
    def test_brute_force_agreement(self, g):
        vb, eb = brute_betweenness(g.vertex_count, g.edges())
        v = vertex_betweenness(g).raw
        e = edge_betweenness(g).raw
        assert v == pytest.approx(vb, abs=1e-9)
        assert e == pytest.approx(eb, abs=1e-9)

    def test_sparse_branch(self):
        rng = random.Random(11)
        g = random_graph(rng, 270, 0.012)
        # too big for path enumeration; check the sum rule instead
        t = edge_betweenness(g)
        d = floyd_warshall(g.vertex_count, g.edges())
        n = g.vertex_count
        want = sum(d[s][t] for s in range(n) for t in range(s + 1, n) if d[s][t] != float("inf"))
        assert sum(t.raw.values()) == pytest.approx(want, rel=1e-9)


class TestProperties:
    @given(graphs())
    def test_sum_rule(self, g):
        d = floyd_warshall(g.vertex_count, g.edges())
        n = g.vertex_count
        want = sum(d[s][t] for s in range(n) for t in range(s + 1, n) if d[s][t] != float("inf"))
        assert sum(edge_betweenness(g).raw.values()) == pytest.approx(want, abs=1e-9)

    @given(graphs())
    def test_normalized_range(self, g):
        for t in (vertex_betweenness(g), edge_betweenness(g)):
            assert all(x >= 0 for x in t.raw.values())
            assert all(-1e-12 <= x <= 1 + 1e-12 for x in t.normalized.values())

    @settings(max_examples=50)
    @given(graphs(min_n=1), st.randoms(use_true_random=False))
    def test_label_equivariance(self, g, rnd):
        n = g.vertex_count
        perm = list(range(n))
        rnd.shuffle(perm)
        h = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in g.edges()])
        vg, vh = vertex_betweenness(g).raw, vertex_betweenness(h).raw
        for v in range(n):
            assert vh[perm[v]] == pytest.approx(vg[v], abs=1e-9)
        eg, eh = edge_betweenness(g).raw, edge_betweenness(h).raw
        for (u, v), x in eg.items():
            key = (min(perm[u], perm[v]), max(perm[u], perm[v]))
            assert eh[key] == pytest.approx(x, abs=1e-9)


class TestExtremal:
    def test_high_on_path(self):
        assert extremal(vertex_betweenness(named("P3")), "high", random.Random(0)) == 1

    def test_low_unique(self):
        assert extremal({"a": 3.0, "b": 1.0, "c": 2.0}, "low", random.Random(0)) == "b"

    def test_lower_median(self):
        vals = {"a": 1.0, "b": 2.0, "c": 3.0, "d": 4.0}
        assert extremal(vals, "median", random.Random(0)) == "b"

    def test_ties_are_seeded(self):
        vals = {k: 1.0 for k in range(10)}
        picks = {extremal(vals, "high", random.Random(s)) for s in range(30)}
        assert len(picks) > 1
        assert extremal(vals, "high", random.Random(5)) == extremal(vals, "high", random.Random(5))

    def test_near_ties_count_as_ties(self):
        vals = {0: 1.0, 1: 1.0 + 1e-13, 2: 0.5}
        picks = {extremal(vals, "high", random.Random(s)) for s in range(30)}
        assert picks == {0, 1}

    def test_random_ignores_values(self):
        vals = {0: 100.0, 1: 0.0, 2: 0.0}
        picks = {extremal(vals, "random", random.Random(s)) for s in range(40)}
        assert picks == {0, 1, 2}

    def test_empty(self):
        with pytest.raises(EmptyTable):
            extremal({}, "high", random.Random(0))
        with pytest.raises(EmptyTable):
            extremal(BetweennessTable("vertex", {}, {}), "low", random.Random(0))

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            extremal({0: 1.0}, "middle", random.Random(0))
