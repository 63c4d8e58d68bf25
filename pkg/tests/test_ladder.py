from graphsiege.fixtures import LADDER, load_sample21
from graphsiege.graph import components
from graphsiege.ladder import LadderRow, by_scale, run_ladder, rung_graph, scaled_sizes


class TestFixtures:
    def test_sample21_shape(self):
        g = load_sample21()
        assert g.number_of_vertices() == 21
        assert g.number_of_edges() == 27
        assert len(components(g)) == 1

    def test_sample21_two_bridges(self):
        g = load_sample21()
        left = set(range(10))
        crossing = [e for e in g.edges() if (e[0] in left) != (e[1] in left)]
        assert len(crossing) == 2

    def test_ladder_runs_intact_to_shattered(self):
        assert LADDER[0] == (20,)
        assert LADDER[-1] == (1,) * 20
        assert all(sum(r) == 20 for r in LADDER)


class TestScaling:
    def test_sizes(self):
        assert scaled_sizes((19, 1), 3) == [57, 1, 1, 1]
        assert scaled_sizes((5, 5), 1) == [5, 5]

    def test_rung_graph_matches_sizes(self):
        for k in (1, 2, 4):
            for sizes in LADDER:
                g = rung_graph(sizes, k)
                got = sorted((len(c) for c in components(g)), reverse=True)
                assert got == sorted(scaled_sizes(sizes, k), reverse=True)

    def test_same_seed_same_graph(self):
        assert rung_graph((10, 5, 5), 2, seed=3) == rung_graph((10, 5, 5), 2, seed=3)


class TestRun:
    def test_small_run(self):
        rows = run_ladder(scales=(1, 2))
        assert len(rows) == 2 * len(LADDER)
        table = by_scale(rows)
        assert sorted(table) == [1, 2]
        for dmg in table.values():
            assert dmg[0] == 0.0
            assert dmg[-1] == 1.0
            assert all(a <= b for a, b in zip(dmg, dmg[1:]))

    def test_row(self):
        row = run_ladder(scales=(1,), rungs=[(3, 2)])[0].csv_row()
        assert row[:5] == (1, 1, "3+2", 5, 2)
        assert len(row) == len(LadderRow.CSV_HEADER)
