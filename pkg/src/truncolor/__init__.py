"""Generalized truncations of multigraphs and their proper edge colorings.

The library builds truncations (replace each vertex by a cluster of
ends, one per incident edge, carrying a perfect matching between former
edge ends, plus a simple constituent graph inside each cluster) and
produces optimal or near-optimal proper edge colorings for the main
constituent families: complete, cyclic, and forest constituents.  An
exact backtracking oracle supplies ground-truth chromatic indices for
everything small enough to check.
"""

from .canonical import (
    canonical_coloring,
    class_of_pair,
    complete_graph,
    missing_color,
    scheme_anchor,
    scheme_class,
    scheme_class_count,
)
from .catalog import catalog
from .coloring import (
    CLASS_I,
    CLASS_II,
    EdgeColoring,
    OracleResult,
    chromatic_index,
    classify,
    is_proper,
    list_edge_coloring,
    solve_edge_coloring,
)
from .complete_coloring import (
    ClassIIWitness,
    color_complete_truncation,
    find_edge_feasible,
    is_edge_feasible,
    regular_odd_equivalence,
    subtruncation_coloring,
)
from .cyclic_coloring import (
    ADMISSIBLE,
    TOTALLY_INADMISSIBLE,
    color_via_enabling,
    cut_edge_class_two,
    cyclic_even_valency,
    cyclic_from_class_one,
    find_enabling_submultigraph,
    is_enabling,
    vector3_admissible,
)
from .errors import GraphError, UndecidedError
from .multigraph import Multigraph, MultigraphBuilder
from .strong_arboreal import NotApplicable, arboreal_is_class_one, color_by_strong
from .sun import (
    Infeasible,
    SunColoring,
    admissible,
    build_sun_even,
    build_sun_odd,
    build_sun_valency,
    is_parity_balanced,
    regular_truncation,
    semiregular_truncation,
    verify_totally_inadmissible,
)
from .truncation import (
    Truncation,
    arboreal_truncation,
    assemble,
    complete_truncation,
    contract,
    cyclic_truncation,
    excise,
)

__version__ = "0.1.0"

__all__ = [
    "ADMISSIBLE",
    "CLASS_I",
    "CLASS_II",
    "ClassIIWitness",
    "EdgeColoring",
    "GraphError",
    "Infeasible",
    "Multigraph",
    "MultigraphBuilder",
    "NotApplicable",
    "OracleResult",
    "SunColoring",
    "TOTALLY_INADMISSIBLE",
    "Truncation",
    "UndecidedError",
    "admissible",
    "arboreal_is_class_one",
    "arboreal_truncation",
    "assemble",
    "build_sun_even",
    "build_sun_odd",
    "build_sun_valency",
    "canonical_coloring",
    "catalog",
    "chromatic_index",
    "class_of_pair",
    "classify",
    "color_by_strong",
    "color_complete_truncation",
    "color_via_enabling",
    "complete_graph",
    "complete_truncation",
    "contract",
    "cut_edge_class_two",
    "cyclic_even_valency",
    "cyclic_from_class_one",
    "cyclic_truncation",
    "excise",
    "find_edge_feasible",
    "find_enabling_submultigraph",
    "is_edge_feasible",
    "is_enabling",
    "is_parity_balanced",
    "is_proper",
    "list_edge_coloring",
    "missing_color",
    "regular_odd_equivalence",
    "regular_truncation",
    "scheme_anchor",
    "scheme_class",
    "scheme_class_count",
    "semiregular_truncation",
    "solve_edge_coloring",
    "subtruncation_coloring",
    "vector3_admissible",
    "verify_totally_inadmissible",
]
