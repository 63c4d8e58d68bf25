import math
import random
import statistics

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphsiege.errors import BadSpec
from graphsiege.generators import (
    FAMILIES,
    GenSpec,
    barabasi_albert,
    connected_fragment,
    disjoint_union,
    generate,
    gnm,
    gnp,
    ring_lattice,
)
from graphsiege.graph import Graph, components
from graphsiege.paths import clustering_coefficient


def simple(g: Graph) -> bool:
    seen = set()
    for u, v in g.edges():
        if u == v or (u, v) in seen:
            return False
        seen.add((u, v))
    return len(seen) == g.number_of_edges()


class TestExamples:
    def test_gnp_full(self):
        g = generate(GenSpec("ER_gnp", n=5, p=1.0))
        assert g.number_of_edges() == 10

    def test_gnp_empty(self):
        assert generate(GenSpec("ER_gnp", n=5, p=0.0)).number_of_edges() == 0

    def test_ws_lattice(self):
        g = generate(GenSpec("WS", n=8, k=4, rewire_p=0.0))
        assert all(g.degree(v) == 4 for v in g.vertices())

    def test_gnm_no_edges(self):
        g = generate(GenSpec("ER_gnm", n=10, m_edges=0))
        assert g.number_of_vertices() == 10
        assert g.number_of_edges() == 0

    def test_fragments(self):
        assert connected_fragment(1, 4, 0).number_of_vertices() == 1
        assert connected_fragment(2, 4, 0).edges() == [(0, 1)]
        g = connected_fragment(30, 4, 9)
        assert g.number_of_vertices() == 30
        assert len(components(g)) == 1

    def test_fragment_size_checked(self):
        with pytest.raises(BadSpec):
            connected_fragment(0, 4, 0)

    def test_defaults_near_demo_scale(self):
        counts = {f: generate(GenSpec(f)).number_of_edges() for f in FAMILIES}
        assert counts["ER_gnm"] == 120
        assert counts["BA"] == 99
        assert counts["WS"] == 100
        assert 80 < counts["ER_gnp"] < 160


class TestValidation:
    @pytest.mark.parametrize(
        "spec",
        [
            GenSpec("nope"),
            GenSpec("ER_gnp", p=1.5),
            GenSpec("ER_gnm", n=4, m_edges=7),
            GenSpec("WS", n=10, k=3),
            GenSpec("WS", n=4, k=4),
            GenSpec("WS", n=10, k=2, rewire_p=-0.1),
            GenSpec("BA", n=5, m_attach=5),
            GenSpec("BA", n=5, m_attach=0),
            GenSpec("ER_gnp", n=-1),
        ],
    )
    def test_rejects(self, spec):
        with pytest.raises(BadSpec):
            generate(spec)


class TestFamilies:
    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(FAMILIES), st.integers(5, 60), st.integers(0, 10_000))
    def test_outputs_are_simple(self, family, n, seed):
        spec = GenSpec(family, n=n, p=0.1, m_edges=min(2 * n, n * (n - 1) // 2), k=4, rewire_p=0.3,
                       m_attach=2, seed=seed)
        g = generate(spec)
        assert g.number_of_vertices() == n
        assert simple(g)

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(FAMILIES), st.integers(0, 1000))
    def test_seeded(self, family, seed):
        spec = GenSpec(family, n=40, p=0.1, m_edges=60, k=4, m_attach=2, seed=seed)
        assert generate(spec) == generate(spec)

    def test_gnm_exact_count(self):
        for seed in range(10):
            assert gnm(50, 200, random.Random(seed)).number_of_edges() == 200

    def test_ws_keeps_edge_count(self):
        for seed in range(10):
            g = generate(GenSpec("WS", n=40, k=6, rewire_p=0.5, seed=seed))
            assert g.number_of_edges() == 40 * 3

    def test_ba_edge_count(self):
        for m in (1, 2, 3):
            g = barabasi_albert(50, m, random.Random(m))
            assert g.number_of_edges() == m + m * (50 - m - 1)
            assert len(components(g)) == 1

    def test_gnp_mean_degree(self):
        n, p, seeds = 500, 0.01, 50
        pairs = n * (n - 1) // 2
        means = [2 * gnp(n, p, random.Random(s)).number_of_edges() / n for s in range(seeds)]
        se = math.sqrt(4 * pairs * p * (1 - p) / n**2 / seeds)
        assert abs(statistics.fmean(means) - p * (n - 1)) <= 3 * se

    def test_ba_heavier_tail_than_gnp(self):
        n = 500
        ba_max, er_max = [], []
        for s in range(20):
            ba = generate(GenSpec("BA", n=n, seed=s))
            p = ba.number_of_edges() / (n * (n - 1) / 2)
            er = generate(GenSpec("ER_gnp", n=n, p=p, seed=s))
            ba_max.append(max(ba.degree(v) for v in ba.vertices()))
            er_max.append(max(er.degree(v) for v in er.vertices()))
        assert statistics.fmean(ba_max) > statistics.fmean(er_max)

    @pytest.mark.parametrize("n,k", [(10, 2), (12, 4), (20, 6), (30, 8)])
    def test_ws_lattice_clustering(self, n, k):
        g = generate(GenSpec("WS", n=n, k=k, rewire_p=0.0))
        # explicit lattice: neighbours at cyclic distance <= k/2, count closed triples
        near = {v: {(v + d) % n for d in range(-k // 2, k // 2 + 1) if d} for v in range(n)}
        for v in range(n):
            nb = sorted(near[v])
            tri = sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if b in near[a])
            want = 2 * tri / (k * (k - 1)) if k >= 2 else 0.0
            assert clustering_coefficient(g, v) == pytest.approx(want)

    def test_ring_lattice_degree(self):
        g = ring_lattice(9, 4)
        assert {g.degree(v) for v in g.vertices()} == {4}


class TestUnion:
    def test_offsets(self):
        g = disjoint_union([Graph.from_edges(2, [(0, 1)]), Graph(1), Graph.from_edges(3, [(0, 2)])])
        assert g.number_of_vertices() == 6
        assert g.edges() == [(0, 1), (3, 5)]
