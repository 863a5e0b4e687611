"""Graph powers: ``G^k`` joins every pair at distance 1..k."""
from __future__ import annotations

from .graph import Graph, GraphError, distances_from


def graph_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise GraphError(f"power exponent must be >= 1, got {k}")
    if k == 1:
        return g
    rows = []
    for s in range(g.n):
        r = 0
        for v, d in enumerate(distances_from(g, s, limit=k)):
            if 1 <= d <= k:
                r |= 1 << v
        rows.append(r)
    return Graph.from_rows(rows)
