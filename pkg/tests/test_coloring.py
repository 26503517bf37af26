import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from truncolor.canonical import complete_graph
from truncolor.catalog import k4, k33, petersen, prism3
from truncolor.coloring import (
    CLASS_I,
    CLASS_II,
    EdgeColoring,
    chromatic_index,
    classify,
    is_proper,
    list_edge_coloring,
    solve_edge_coloring,
)
from truncolor.errors import GraphError, UndecidedError
from truncolor.multigraph import Multigraph

from conftest import random_multigraph


class TestEdgeColoring:
    def test_rejects_out_of_palette_colors(self):
        with pytest.raises(GraphError):
            EdgeColoring({0: 3}, 3)

    def test_is_proper_requires_total_coverage(self):
        g = Multigraph([0, 1, 2], [(0, 1), (1, 2)])
        with pytest.raises(GraphError):
            is_proper(g, EdgeColoring({0: 0}, 2))

    def test_detects_clash(self):
        g = Multigraph([0, 1, 2], [(0, 1), (1, 2)])
        assert not is_proper(g, EdgeColoring({0: 0, 1: 0}, 1))
        assert is_proper(g, EdgeColoring({0: 0, 1: 1}, 2))


class TestOracle:
    @pytest.mark.parametrize(
        "build,chi,verdict",
        [
            (k4, 3, CLASS_I),
            (k33, 3, CLASS_I),
            (petersen, 4, CLASS_II),
            (prism3, 3, CLASS_I),
            (lambda: complete_graph(5), 5, CLASS_II),
            (lambda: complete_graph(6), 5, CLASS_I),
        ],
    )
    def test_known_chromatic_indices(self, build, chi, verdict):
        g = build()
        res = chromatic_index(g)
        assert res.decided and res.chi == chi
        assert res.classify(g.max_valency()) == verdict
        assert classify(g) == verdict

    def test_certificate_is_proper_and_tight(self, rng):
        for _ in range(40):
            g = random_multigraph(rng, max_vertices=5, max_edges=9)
            res = chromatic_index(g)
            assert res.decided
            assert res.chi >= g.max_valency()
            assert is_proper(g, res.certificate)
            assert res.certificate.palette_size == res.chi
            assert len(res.certificate.used_colors()) <= res.chi
            # One fewer color must be impossible, else chi is not minimal.
            down, _ = solve_edge_coloring(g, res.chi - 1, symmetric=True)
            assert down is None

    def test_simple_graphs_within_one_of_max_valency(self, rng):
        for _ in range(40):
            g = random_multigraph(rng, max_vertices=6, max_edges=10, allow_parallel=False)
            res = chromatic_index(g)
            assert g.max_valency() <= res.chi <= g.max_valency() + 1

    def test_multigraph_exceeding_vizing_range(self):
        # Triple edge between two vertices of a triangle: chi' = 2*3 - ... the
        # fat triangle on valency 4 needs 6 colors, far above max valency + 1.
        g = Multigraph(
            [0, 1, 2],
            [(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)],
        )
        res = chromatic_index(g)
        assert res.chi == 6

    def test_budget_exhaustion_reports_undecided(self):
        res = chromatic_index(petersen(), budget=3)
        assert not res.decided
        assert res.lower_bound >= 3
        with pytest.raises(UndecidedError):
            res.classify(3)

    def test_edge_cap_refuses_large_instances(self):
        b = [(i, i + 1) for i in range(50)]
        g = Multigraph(range(51), b)
        with pytest.raises(GraphError, match="cap"):
            chromatic_index(g)
        assert chromatic_index(g, edge_cap=60).chi == 2


class TestSolver:
    def test_symmetry_breaking_with_lists_is_rejected(self):
        g = Multigraph([0, 1], [(0, 1)])
        with pytest.raises(GraphError):
            solve_edge_coloring(g, 2, lists={0: 0b11}, symmetric=True)

    def test_unsat_on_empty_list(self):
        g = Multigraph([0, 1], [(0, 1)])
        sol, nodes = solve_edge_coloring(g, 2, lists={0: 0})
        assert sol is None and nodes == 0

    def test_constrained_vertices_relax_the_rest(self):
        # A path of 2 edges can be monochrome if the middle vertex is free.
        g = Multigraph([0, 1, 2], [(0, 1), (1, 2)])
        sol, _ = solve_edge_coloring(g, 1, constrained_vertices=[0, 2])
        assert sol == {0: 0, 1: 0}
        sol2, _ = solve_edge_coloring(g, 1)
        assert sol2 is None

    @given(st.integers(3, 6))
    @settings(max_examples=4, deadline=None)
    def test_list_coloring_full_lists_matches_plain(self, n):
        g = complete_graph(n)
        lists = {eid: (1 << n) - 1 for eid in g.edge_ids}
        col = list_edge_coloring(g, {e: list(range(n)) for e in g.edge_ids})
        assert col is not None and is_proper(g, col)

    @pytest.mark.parametrize("n", [7, 8])
    def test_full_list_coloring_of_larger_complete_graphs(self, n):
        g = complete_graph(n)
        col = list_edge_coloring(g, {e: list(range(n)) for e in g.edge_ids})
        assert col is not None and is_proper(g, col)

    def test_list_coloring_respects_bans(self, rng):
        for _ in range(25):
            g = random_multigraph(rng, max_vertices=5, max_edges=7)
            k = g.max_valency() + g.multiplicity()
            lists = {}
            for eid in g.edge_ids:
                banned = eid % k
                lists[eid] = [c for c in range(k) if c != banned]
            col = list_edge_coloring(g, lists)
            if col is not None:
                assert is_proper(g, col)
                for eid in g.edge_ids:
                    assert col.color_of(eid) != eid % k
