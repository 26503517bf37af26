import pytest

from truncolor.canonical import (
    canonical_coloring,
    class_by_anchor,
    class_of_pair,
    complete_graph,
    missing_color,
    scheme_anchor,
    scheme_class,
    scheme_class_count,
    scheme_vertex_names,
)
from truncolor.coloring import is_proper
from truncolor.errors import GraphError


class TestScheme:
    @pytest.mark.parametrize("n", range(2, 15))
    def test_canonical_coloring_is_proper(self, n):
        g = complete_graph(n)
        col = canonical_coloring(n)
        assert is_proper(g, col)
        assert col.palette_size == (n - 1 if n % 2 == 0 else n)

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12, 14])
    def test_even_classes_are_perfect_matchings(self, n):
        g = complete_graph(n)
        col = canonical_coloring(n)
        for t in range(n - 1):
            eids = [e for e in g.edge_ids if col.color_of(e) == t]
            covered = sorted(v for e in eids for v in g.endpoints(e))
            assert covered == list(range(n))

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
    def test_odd_classes_are_near_perfect(self, n):
        g = complete_graph(n)
        col = canonical_coloring(n)
        for t in range(n):
            eids = [e for e in g.edge_ids if col.color_of(e) == t]
            assert len(eids) == (n - 1) // 2
            covered = [v for e in eids for v in g.endpoints(e)]
            assert len(set(covered)) == len(covered) == n - 1

    @pytest.mark.parametrize("n", [4, 5, 6, 8, 9, 10, 12])
    def test_anchor_classes_partition_edges(self, n):
        seen = set()
        for t in range(scheme_class_count(n)):
            assert class_by_anchor(n, scheme_anchor(n, t)) == t
            for pair in scheme_class(n, t):
                assert pair not in seen
                seen.add(pair)
        names = scheme_vertex_names(n)
        assert len(seen) == len(names) * (len(names) - 1) // 2

    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 14])
    def test_class_of_pair_inverts_scheme_class(self, n):
        for t in range(scheme_class_count(n)):
            for pair in scheme_class(n, t):
                assert class_of_pair(n, pair) == t

    def test_anchor_rejects_non_cycle_edges(self):
        with pytest.raises(GraphError):
            class_by_anchor(8, (1, 4))


class TestMissingColor:
    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
    def test_missing_color_map_is_a_bijection(self, n):
        g = complete_graph(n)
        col = canonical_coloring(n)
        missing = [missing_color(g, col, v) for v in g.vertices]
        assert sorted(missing) == list(range(n))

    def test_even_complete_graph_misses_nothing(self):
        g = complete_graph(6)
        col = canonical_coloring(6)
        for v in g.vertices:
            assert sorted(col.colors_at(g, v)) == list(range(5))
