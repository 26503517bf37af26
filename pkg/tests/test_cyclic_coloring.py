import random

import pytest

from truncolor.catalog import cycle_graph, k4, k5, petersen, q3, two_k5_bridge
from truncolor.coloring import EdgeColoring, is_proper, solve_edge_coloring
from truncolor.cyclic_coloring import (
    ADMISSIBLE,
    TOTALLY_INADMISSIBLE,
    color_via_enabling,
    cut_edge_class_two,
    cyclic_even_valency,
    cyclic_from_class_one,
    find_enabling_submultigraph,
    is_enabling,
    vector3_admissible,
    _single_cycle_sun,
)
from truncolor.errors import GraphError, UndecidedError
from truncolor.multigraph import Multigraph
from truncolor.truncation import cyclic_truncation


def doubled_triangle():
    return Multigraph(range(3), [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])


class TestVectorVerdicts:
    @pytest.mark.parametrize(
        "vec,verdict,universal",
        [
            ((1, 1, 1), ADMISSIBLE, False),
            ((4, 0, 0), ADMISSIBLE, True),
            ((6, 0, 0), ADMISSIBLE, True),
            ((0, 0, 6), ADMISSIBLE, True),
            ((2, 2, 0), ADMISSIBLE, False),
            ((2, 2, 2), ADMISSIBLE, False),
            ((5, 1, 1), ADMISSIBLE, False),
            ((3, 0, 0), TOTALLY_INADMISSIBLE, False),
            ((2, 1, 1), TOTALLY_INADMISSIBLE, False),
            ((5, 0, 0), TOTALLY_INADMISSIBLE, False),
            ((3, 2, 1), TOTALLY_INADMISSIBLE, False),
        ],
    )
    def test_verdicts(self, vec, verdict, universal):
        assert vector3_admissible(*vec) == (verdict, universal)

    def test_small_totals_rejected(self):
        with pytest.raises(GraphError):
            vector3_admissible(1, 1, 0)


class TestSingleCycleSuns:
    @pytest.mark.parametrize(
        "vec", [(1, 1, 1), (3, 3, 3), (3, 3, 1), (2, 2, 2), (5, 1, 1), (2, 0, 4), (1, 1, 5)]
    )
    def test_merged_to_one_cycle(self, vec):
        sun = _single_cycle_sun(vec)
        sun.validate(regular=2)
        # walk the constituent: one component means r steps return home
        r = sum(vec)
        adj = {}
        for a, b in sun.constituent_edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        prev, cur, steps = 0, adj[0][0], 1
        while cur != 0:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            steps += 1
        assert steps == r


class TestEvenValencyRoute:
    def test_k5_default_orders(self):
        tr, coloring = cyclic_even_valency(k5())
        assert coloring.palette_size == 3
        assert is_proper(tr.graph, coloring)
        assert tr.graph.regular_valency() == 3

    def test_multigraph_source(self):
        tr, coloring = cyclic_even_valency(doubled_triangle())
        assert is_proper(tr.graph, coloring)

    def test_any_cycle_orders_work(self):
        # The even route is universal: twenty scrambled cluster orders.
        g = k5()
        for seed in range(20):
            rng = random.Random(seed)
            orders = {}
            for v in g.vertices:
                order = list(range(g.valency(v)))
                rng.shuffle(order)
                orders[v] = order
            tr, coloring = cyclic_even_valency(g, orders)
            assert is_proper(tr.graph, coloring)

    def test_rejects_odd_or_low_valencies(self):
        with pytest.raises(GraphError):
            cyclic_even_valency(k4())
        with pytest.raises(GraphError):
            cyclic_even_valency(cycle_graph(5))


class TestClassOneRoute:
    @pytest.mark.parametrize("factory", [k4, q3])
    def test_cubic_class_one_sources(self, factory):
        g = factory()
        sol, _ = solve_edge_coloring(g, 3)
        tr, coloring = cyclic_from_class_one(g, EdgeColoring(sol, 3))
        assert coloring.palette_size == 3
        assert is_proper(tr.graph, coloring)
        assert tr.graph.regular_valency() == 3

    def test_five_regular_source(self):
        g = Multigraph(range(6), [(a, b) for a in range(6) for b in range(a + 1, 6)])
        sol, _ = solve_edge_coloring(g, 5)
        tr, coloring = cyclic_from_class_one(g, EdgeColoring(sol, 5))
        assert coloring.palette_size == 3
        assert is_proper(tr.graph, coloring)

    def test_rejects_even_valency_source(self):
        g = k5()
        sol, _ = solve_edge_coloring(g, 5)
        with pytest.raises(GraphError):
            cyclic_from_class_one(g, EdgeColoring(sol, 5))

    def test_rejects_improper_coloring(self):
        g = k4()
        with pytest.raises(GraphError):
            cyclic_from_class_one(g, EdgeColoring({e: 0 for e in g.edge_ids}, 3))


class TestEnablingRoute:
    def test_perfect_matching_enables_cubic(self):
        g = k4()
        matching = [0, 5]  # (0,1) and (2,3)
        assert g.endpoints(0) != g.endpoints(5)
        assert is_enabling(g, matching)

    def test_wrong_count_is_not_enabling(self):
        g = k4()
        assert not is_enabling(g, [0])

    def test_unknown_edge_rejected(self):
        with pytest.raises(GraphError):
            is_enabling(k4(), [99])

    def test_color_via_enabling_k4(self):
        g = k4()
        tr, coloring = color_via_enabling(g, [0, 5])
        assert coloring.palette_size == 3
        assert is_proper(tr.graph, coloring)
        assert tr.graph.regular_valency() == 3

    def test_enabling_colors_balance_at_source(self):
        # Colors 0 and 1 alternate along Euler tours, so they balance
        # at every vertex of the remainder.
        g = q3()
        y = find_enabling_submultigraph(g)
        assert y is not None
        tr, coloring = color_via_enabling(g, y)
        assert is_proper(tr.graph, coloring)

    def test_odd_component_rejected(self):
        # Petersen minus any perfect matching leaves two 5-cycles, so
        # enabling sets exist but never with even component sizes.
        g = petersen()
        # greedy perfect matching of the standard layout
        pm = []
        used = set()
        for eid in sorted(g.edge_ids):
            u, v = g.endpoints(eid)
            if u not in used and v not in used:
                pm.append(eid)
                used.add(u)
                used.add(v)
        assert len(pm) == 5
        assert is_enabling(g, pm)
        with pytest.raises(GraphError):
            color_via_enabling(g, pm)

    def test_petersen_has_no_enabling_submultigraph(self):
        assert find_enabling_submultigraph(petersen(), max_size=5) is None

    def test_search_budget_raises(self):
        with pytest.raises(UndecidedError):
            find_enabling_submultigraph(petersen(), subset_budget=10)


class TestCutEdgeObstruction:
    def test_bridge_forces_class_two(self):
        tr = cyclic_truncation(two_k5_bridge())
        assert tr.graph.regular_valency() == 3
        assert cut_edge_class_two(tr.graph)

    def test_bridgeless_cubic_graph_is_not_caught(self):
        assert not cut_edge_class_two(petersen())
        tr = cyclic_truncation(k4())
        assert not cut_edge_class_two(tr.graph)

    def test_rejects_non_cubic(self):
        with pytest.raises(GraphError):
            cut_edge_class_two(k5())
