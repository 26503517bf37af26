"""Edge colorings, properness checking, and exact search.

One backtracking engine serves three jobs: the exact chromatic index
oracle, list edge coloring, and the palette-feasibility searches used by
the truncation colorings.  It keeps a bitmask of allowed colors per
edge, always branches on a most-constrained edge (fewest allowed colors,
ties broken by a static rank: decreasing endpoint valency sum, then edge
id), forward-checks neighbors after every assignment, and optionally
breaks color symmetry by allowing at most one fresh color per branch
point.  Exhausting the search space is a proof of UNSAT; exhausting the
node budget is reported as undecided, never as an answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import GraphError, UndecidedError
from .multigraph import Multigraph

__all__ = [
    "EdgeColoring",
    "OracleResult",
    "is_proper",
    "solve_edge_coloring",
    "chromatic_index",
    "classify",
    "CLASS_I",
    "CLASS_II",
    "list_edge_coloring",
    "DEFAULT_EDGE_CAP",
]

CLASS_I = "CLASS_I"
CLASS_II = "CLASS_II"

# Exact search is exponential in the worst case; refuse silently huge
# instances unless the caller raises the cap on purpose.
DEFAULT_EDGE_CAP = 40


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of palette colors {0..palette_size-1} to edge ids."""

    assignment: Mapping[int, int]
    palette_size: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", dict(self.assignment))
        if self.palette_size < 0:
            raise GraphError("palette size must be nonnegative")
        for eid, c in self.assignment.items():
            if not 0 <= c < self.palette_size:
                raise GraphError(
                    f"edge {eid} has color {c} outside palette of size {self.palette_size}"
                )

    def color_of(self, eid: int) -> int:
        try:
            return self.assignment[eid]
        except KeyError:
            raise GraphError(f"no color assigned to edge {eid}") from None

    def covers(self, eids: Iterable[int]) -> bool:
        return all(eid in self.assignment for eid in eids)

    def used_colors(self) -> frozenset:
        return frozenset(self.assignment.values())

    def colors_at(self, g: Multigraph, v: int) -> List[int]:
        return [self.color_of(eid) for eid in g.incident(v)]


def is_proper(g: Multigraph, coloring: EdgeColoring) -> bool:
    """True iff no two edges sharing a vertex share a color.

    The coloring must cover every edge of g; partial colorings are a
    domain error rather than a False.
    """
    for eid in g.edge_ids:
        if eid not in coloring.assignment:
            raise GraphError(f"coloring does not cover edge {eid}")
    for v in g.vertices:
        seen = set()
        for eid in g.incident(v):
            c = coloring.assignment[eid]
            if c in seen:
                return False
            seen.add(c)
    return True


@dataclass(frozen=True)
class OracleResult:
    """Outcome of an exact chromatic index computation."""

    decided: bool
    chi: Optional[int]
    certificate: Optional[EdgeColoring]
    nodes: int
    lower_bound: int

    def classify(self, delta: int) -> str:
        if not self.decided:
            raise UndecidedError("chromatic index undecided", self.nodes)
        return CLASS_I if self.chi == delta else CLASS_II


def _popcount(x: int) -> int:
    return bin(x).count("1")


def solve_edge_coloring(
    g: Multigraph,
    k: int,
    *,
    lists: Optional[Mapping[int, int]] = None,
    constrained_vertices: Optional[Iterable[int]] = None,
    symmetric: bool = False,
    budget: Optional[int] = None,
) -> Tuple[Optional[Dict[int, int]], int]:
    """Search for a proper assignment of colors < k to every edge.

    lists: optional per-edge allowed-color bitmasks (list coloring).
    constrained_vertices: if given, distinctness is enforced only at
        these vertices; other vertices impose nothing.
    symmetric: enable color symmetry breaking.  Only sound when every
        edge may take every color, i.e. lists is None.
    budget: maximum number of assignments tried before giving up.

    Returns (assignment or None, nodes spent).  Raises UndecidedError
    when the budget runs out first.
    """
    if symmetric and lists is not None:
        raise GraphError("symmetry breaking is unsound for list coloring")
    eids = sorted(g.edge_ids)
    m = len(eids)
    if m == 0:
        return {}, 0
    if k <= 0:
        return None, 0
    index = {eid: i for i, eid in enumerate(eids)}
    full = (1 << k) - 1
    allowed: List[int] = [full] * m
    if lists is not None:
        for eid in eids:
            if eid not in lists:
                raise GraphError(f"no color list for edge {eid}")
            mask = lists[eid] & full
            allowed[index[eid]] = mask

    if constrained_vertices is None:
        cset = set(g.vertices)
    else:
        cset = set(constrained_vertices)
    neighbors: List[List[int]] = [[] for _ in range(m)]
    for v in cset:
        inc = [index[eid] for eid in g.incident(v)]
        for a in inc:
            for b in inc:
                if a != b and b not in neighbors[a]:
                    neighbors[a].append(b)

    # Static tie-break rank: busiest endpoints first, then lower id.
    def rank_key(i: int) -> Tuple[int, int]:
        u, w = g.endpoints(eids[i])
        return (-(g.valency(u) + g.valency(w)), eids[i])

    static_rank = {i: r for r, i in enumerate(sorted(range(m), key=rank_key))}

    color: List[int] = [-1] * m
    use_count: List[int] = [0] * k
    nodes = 0

    def pick() -> int:
        best = -1
        best_key = None
        for i in range(m):
            if color[i] >= 0:
                continue
            key = (_popcount(allowed[i]), static_rank[i])
            if best_key is None or key < best_key:
                best = i
                best_key = key
        return best

    def search() -> bool:
        nonlocal nodes
        i = pick()
        if i < 0:
            return True
        mask = allowed[i]
        if mask == 0:
            return False
        if symmetric:
            bound = 0
            for c in range(k):
                if use_count[c] > 0:
                    bound = c + 1
            cap = min(k, bound + 1)
            mask &= (1 << cap) - 1
        c = 0
        while mask:
            if mask & 1:
                nodes += 1
                if budget is not None and nodes > budget:
                    raise UndecidedError(
                        f"edge coloring search exceeded budget of {budget} nodes", nodes
                    )
                color[i] = c
                use_count[c] += 1
                bit = 1 << c
                touched: List[int] = []
                dead = False
                for j in neighbors[i]:
                    if color[j] >= 0:
                        continue
                    if allowed[j] & bit:
                        allowed[j] ^= bit
                        touched.append(j)
                        if allowed[j] == 0:
                            dead = True
                if not dead and search():
                    return True
                for j in touched:
                    allowed[j] |= bit
                use_count[c] -= 1
                color[i] = -1
            mask >>= 1
            c += 1
        return False

    # Quick contradiction: an edge with an empty list.
    if any(a == 0 for a in allowed):
        return None, 0
    if search():
        return {eids[i]: color[i] for i in range(m)}, nodes
    return None, nodes


def chromatic_index(
    g: Multigraph,
    *,
    budget: Optional[int] = None,
    edge_cap: int = DEFAULT_EDGE_CAP,
) -> OracleResult:
    """Exact chromatic index with a certificate coloring.

    Tries palettes of size max_valency, max_valency+1, ... up to the
    multiplicity bound, which always suffices.  The budget caps search
    nodes per palette size; running out yields an undecided result whose
    lower_bound is still trustworthy.
    """
    if g.size == 0:
        return OracleResult(True, 0, EdgeColoring({}, 0), 0, 0)
    if g.size > edge_cap:
        raise GraphError(
            f"graph has {g.size} edges, above the exact-search cap of {edge_cap}; "
            "pass a larger edge_cap to force the computation"
        )
    delta = g.max_valency()
    hi = delta + g.multiplicity()
    total_nodes = 0
    for k in range(delta, hi + 1):
        try:
            assignment, nodes = solve_edge_coloring(
                g, k, symmetric=True, budget=budget
            )
        except UndecidedError as exc:
            return OracleResult(False, None, None, total_nodes + exc.nodes, k)
        total_nodes += nodes
        if assignment is not None:
            cert = EdgeColoring(assignment, k)
            if not is_proper(g, cert):
                raise AssertionError("oracle produced an improper certificate")
            return OracleResult(True, k, cert, total_nodes, k)
    raise AssertionError(
        "no coloring found within the multiplicity bound; this cannot happen"
    )  # pragma: no cover


def classify(
    g: Multigraph,
    *,
    budget: Optional[int] = None,
    edge_cap: int = DEFAULT_EDGE_CAP,
) -> str:
    """CLASS_I when the chromatic index equals the maximum valency."""
    if g.size == 0:
        raise GraphError("classification needs at least one edge")
    res = chromatic_index(g, budget=budget, edge_cap=edge_cap)
    if not res.decided:
        raise UndecidedError("classification undecided: oracle budget exhausted", res.nodes)
    delta = g.max_valency()
    if res.chi < delta:  # pragma: no cover
        raise AssertionError("chromatic index below maximum valency")
    return CLASS_I if res.chi == delta else CLASS_II


def list_edge_coloring(
    g: Multigraph,
    lists: Mapping[int, Iterable[int]],
    *,
    budget: Optional[int] = None,
) -> Optional[EdgeColoring]:
    """Proper coloring with each edge's color drawn from its own list.

    Returns None only after exhausting the whole search space (UNSAT).
    Lists must cover every edge of g.
    """
    masks: Dict[int, int] = {}
    top = 0
    for eid in g.edge_ids:
        if eid not in lists:
            raise GraphError(f"no color list for edge {eid}")
        mask = 0
        for c in lists[eid]:
            if c < 0:
                raise GraphError(f"negative color {c} in list for edge {eid}")
            mask |= 1 << c
            top = max(top, c + 1)
        masks[eid] = mask
    if g.size == 0:
        return EdgeColoring({}, 0)
    assignment, _ = solve_edge_coloring(
        g, top, lists=masks, symmetric=False, budget=budget
    )
    if assignment is None:
        return None
    return EdgeColoring(assignment, top)
