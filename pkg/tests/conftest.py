import random
from typing import List, Tuple

import pytest

from truncolor.multigraph import Multigraph


def random_multigraph(
    rng: random.Random,
    max_vertices: int = 6,
    max_edges: int = 10,
    min_edges: int = 1,
    allow_parallel: bool = True,
) -> Multigraph:
    """Small connected-or-not multigraph with no isolated vertices."""
    n = rng.randint(2, max_vertices)
    m = rng.randint(min_edges, max_edges)
    pairs: List[Tuple[int, int]] = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        if not allow_parallel and (min(u, v), max(u, v)) in {
            (min(a, b), max(a, b)) for a, b in pairs
        }:
            continue
        pairs.append((u, v))
    vertices = sorted({v for pair in pairs for v in pair})
    return Multigraph(vertices, pairs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
