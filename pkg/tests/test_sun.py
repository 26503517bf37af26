import random

import pytest

from truncolor.catalog import k4, prism3
from truncolor.coloring import EdgeColoring, is_proper
from truncolor.errors import GraphError
from truncolor.multigraph import Multigraph
from truncolor.sun import (
    Infeasible,
    admissible,
    build_sun_even,
    build_sun_odd,
    build_sun_valency,
    is_parity_balanced,
    regular_constituents,
    regular_truncation,
    semiregular_truncation,
    verify_totally_inadmissible,
)
from truncolor.truncation import contract


def all_vectors(r, d):
    """Every length-d tuple of nonnegative integers summing to r."""
    if d == 1:
        yield (r,)
        return
    for head in range(r + 1):
        for tail in all_vectors(r - head, d - 1):
            yield (head,) + tail


def pendant_counts(sun):
    counts = [0] * sun.palette_size
    for c in sun.pendant_colors:
        counts[c] += 1
    return tuple(counts)


def constituent_color_counts(sun):
    counts = [0] * sun.palette_size
    for c in sun.constituent_colors:
        counts[c] += 1
    return tuple(counts)


def build(vector):
    r = sum(vector)
    return build_sun_odd(vector) if r % 2 == 1 else build_sun_even(vector)


class TestAdmissibility:
    def test_parity_rule(self):
        assert admissible((1, 1, 1))
        assert admissible((2, 2, 0))
        assert admissible((4, 0, 0, 0))
        assert admissible((1, 1, 1, 1, 1))
        assert not admissible((2, 1, 1))
        assert not admissible((1, 1))  # odd entries with an even color count
        assert not admissible((3, 1))
        assert admissible((2, 2))

    def test_domain_errors(self):
        with pytest.raises(GraphError):
            admissible((1, 0))  # fewer ends than colors
        with pytest.raises(GraphError):
            admissible((0, 0))
        with pytest.raises(GraphError):
            admissible((2, -1, 1))


class TestBuiltSuns:
    def test_every_admissible_vector_up_to_ten_builds(self):
        checked = 0
        for r in range(1, 11):
            for d in range(1, r + 1):
                for vector in all_vectors(r, d):
                    if not admissible(vector):
                        continue
                    sun = build(vector)
                    sun.validate(regular=d - 1)
                    assert pendant_counts(sun) == vector
                    checked += 1
        assert checked > 200

    def test_counting_identity_per_color(self):
        # Pendants of color i fill what the constituent leaves uncovered:
        # r minus two ends per constituent edge of that color.
        for vector in [(1, 1, 1), (2, 2, 0), (3, 3, 1, 1, 1), (2, 2, 2, 2), (5, 1, 1, 1, 1)]:
            sun = build(vector)
            r = sum(vector)
            cc = constituent_color_counts(sun)
            for i, x in enumerate(vector):
                assert x == r - 2 * cc[i]

    def test_zero_color_classes_still_cover_constituent(self):
        sun = build_sun_even((2, 2, 2, 0, 0, 0))
        sun.validate(regular=5)
        assert pendant_counts(sun) == (2, 2, 2, 0, 0, 0)


class TestTotallyInadmissible:
    @pytest.mark.parametrize(
        "vector",
        [(2, 1, 1), (1, 1), (3, 1), (2, 1, 1, 1, 1), (4, 1, 1), (1, 1, 1, 1)],
    )
    def test_enumeration_confirms_parity_failures(self, vector):
        assert not admissible(vector)
        assert verify_totally_inadmissible(vector)

    def test_refuses_large_totals(self):
        with pytest.raises(GraphError):
            verify_totally_inadmissible((9, 1))

    def test_constituent_enumeration_counts(self):
        assert len(regular_constituents(4, 2)) == 3
        assert len(regular_constituents(6, 3)) == 70
        assert len(regular_constituents(8, 1)) == 105


class TestValencyPumping:
    def test_valency_range_sweep(self):
        # Vector (2, 2, 0) has least valency 2; any valency up to r - 1 works.
        for k in range(2, 4):
            sun = build_sun_valency((2, 2, 0), k)
            sun.validate(regular=k)
            assert pendant_counts(sun)[:3] == (2, 2, 0)

    def test_out_of_range_valency_rejected(self):
        with pytest.raises(GraphError):
            build_sun_valency((2, 2, 0), 4)  # r - 1 = 3 is the ceiling


class TestParityBalance:
    def test_alternating_four_cycle_is_not_balanced(self):
        g = Multigraph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
        alternating = EdgeColoring({0: 0, 1: 1, 2: 0, 3: 1}, 2)
        # Each vertex sees each color once: odd counts at even vertices.
        assert not is_parity_balanced(g, alternating)

    def test_monochrome_even_graph_is_balanced(self):
        g = Multigraph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert is_parity_balanced(g, EdgeColoring({e: 0 for e in range(4)}, 1))

    def test_proper_coloring_of_cubic_graph_is_balanced(self):
        g = k4()
        from truncolor.coloring import solve_edge_coloring

        sol, _ = solve_edge_coloring(g, 3)
        assert is_parity_balanced(g, EdgeColoring(sol, 3))


class TestSemiregular:
    def _balanced_instance(self):
        # Doubled triangle, all valencies 4; a 2-coloring with both colors
        # twice at each vertex is parity balanced.
        g = Multigraph(range(3), [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
        coloring = EdgeColoring({0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1}, 2)
        assert is_parity_balanced(g, coloring)
        return g, coloring

    def test_builds_proper_truncation(self):
        g, coloring = self._balanced_instance()
        tr, out = semiregular_truncation(g, coloring)
        assert is_proper(tr.graph, out)
        assert out.palette_size == coloring.palette_size

    def test_round_trip_reproduces_input(self):
        g, coloring = self._balanced_instance()
        tr, out = semiregular_truncation(g, coloring)
        back, back_coloring = contract(tr, out)
        assert back.edges == g.edges
        for eid in g.edge_ids:
            assert back_coloring.color_of(eid) == coloring.color_of(eid)

    def test_rejects_unbalanced_colorings(self):
        g = Multigraph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
        alternating = EdgeColoring({0: 0, 1: 1, 2: 0, 3: 1}, 2)
        with pytest.raises(GraphError):
            semiregular_truncation(g, alternating)


class TestRegularTruncation:
    def test_even_valency_route(self):
        # Doubled triangle: all valencies 4, d = 4 even.
        g = Multigraph(range(3), [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
        out = regular_truncation(g, 4)
        assert not isinstance(out, Infeasible)
        tr, coloring = out
        assert is_proper(tr.graph, coloring)
        assert tr.graph.regular_valency() == 4
        assert coloring.palette_size == 4

    def test_odd_valency_route(self):
        out = regular_truncation(prism3(), 3)
        assert not isinstance(out, Infeasible)
        tr, coloring = out
        assert is_proper(tr.graph, coloring)
        assert tr.graph.regular_valency() == 3

    def test_even_target_below_source_valency(self):
        # Valency 4 with target 2 satisfies the even clause (even, >= d),
        # so a 2-regular truncation must come out.
        g = Multigraph(range(3), [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
        out = regular_truncation(g, 2)
        assert not isinstance(out, Infeasible)
        tr, coloring = out
        assert tr.graph.regular_valency() == 2
        assert is_proper(tr.graph, coloring)

    def test_odd_target_on_even_valencies_by_one(self):
        # Even valency 4 meets the odd clause's d + 1 floor exactly at d = 3.
        g = Multigraph(range(3), [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
        out = regular_truncation(g, 3)
        assert not isinstance(out, Infeasible)
        tr, coloring = out
        assert tr.graph.regular_valency() == 3
        assert is_proper(tr.graph, coloring)

    def test_even_target_rejects_odd_valency(self):
        out = regular_truncation(k4(), 2)
        assert isinstance(out, Infeasible)
        assert out.clause == "ii"

    def test_even_target_rejects_low_valency(self):
        g = Multigraph(range(3), [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
        out = regular_truncation(g, 6)
        assert isinstance(out, Infeasible)
        assert out.clause == "ii"

    def test_odd_target_rejects_even_valency_at_target(self):
        # Even valencies must exceed an odd target: 4 < d + 1 when d = 5.
        g = Multigraph(range(3), [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
        out = regular_truncation(g, 5)
        assert isinstance(out, Infeasible)
        assert out.clause == "i"

    def test_mixed_valencies_with_one_low_vertex(self):
        # Valencies 2, 4, 2: the even clause floor d + 1 = 4 fails at the ends.
        g = Multigraph(range(3), [(0, 1), (0, 1), (1, 2), (1, 2)])
        out = regular_truncation(g, 3)
        assert isinstance(out, Infeasible)
        assert out.clause == "i"
