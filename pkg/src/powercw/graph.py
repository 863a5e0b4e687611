"""Immutable simple undirected graphs on vertices 0..n-1.

Adjacency is stored twice: as sorted neighbour tuples and as one integer
bitset per vertex, so that membership tests and neighbourhood intersections
are cheap in the search-heavy modules.
"""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

INFINITE = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, self-loops, ...)."""


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph with dense vertex indices.

    Equality and hashing are label-sensitive: two graphs are equal iff they
    have the same vertex count and the same edge set.
    """

    __slots__ = ("_n", "_edges", "_adj", "_rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        rows = [0] * n
        for u, v in canon:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._n = n
        self._edges = tuple(sorted(canon))
        self._rows = tuple(rows)
        self._adj = tuple(tuple(iter_bits(r)) for r in rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        """Build from symmetric adjacency bitsets (row ``u`` has bit ``v`` set iff uv is an edge)."""
        n = len(rows)
        edges = []
        for u, r in enumerate(rows):
            for v in iter_bits(r >> (u + 1)):
                edges.append((u, u + 1 + v))
        g = cls(n, edges)
        if g._rows != tuple(rows):
            raise GraphError("adjacency rows are not symmetric or contain loops")
        return g

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def row(self, v: int) -> int:
        return self._rows[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self._rows[u] >> v) & 1 == 1

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"


def from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Canonical graph on ``n`` vertices; duplicate and reversed pairs collapse."""
    return Graph(n, pairs)


def empty_graph(n: int) -> Graph:
    return Graph(n)


# -- metric primitives --------------------------------------------------


def distances_from(g: Graph, s: int, limit: float = INFINITE) -> list:
    """Breadth-first distances from ``s``; unreachable (or beyond ``limit``) is INFINITE."""
    if not 0 <= s < g.n:
        raise GraphError(f"source {s} outside 0..{g.n - 1}")
    dist = [INFINITE] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du >= limit:
            continue
        for w in g.neighbors(u):
            if dist[w] is INFINITE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list]:
    return [distances_from(g, s) for s in range(g.n)]


def eccentricity_within_component(g: Graph, s: int):
    return max(d for d in distances_from(g, s) if d is not INFINITE)


def diameter(g: Graph):
    """Maximum diameter over connected components (0 for a single vertex)."""
    if g.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    return max(eccentricity_within_component(g, s) for s in range(g.n))


def girth(g: Graph):
    """Length of a shortest cycle, INFINITE for forests."""
    best = INFINITE
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- boolean / structural primitives ------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph.from_rows([full & ~(r | (1 << v)) for v, r in enumerate(g.rows)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph(g.n + h.n, list(g.edges) + [(u + off, v + off) for u, v in h.edges])


def disjoint_union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for h in graphs:
        out = disjoint_union(out, h)
    return out


def induced_subgraph(g: Graph, xs: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G[X]`` reindexed to 0..|X|-1 in sorted order of X.

    Returns the subgraph and the index map (position i holds the original vertex).
    """
    keep = sorted(set(xs))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(keep), edges), keep


def induced_by_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, iter_bits(mask))[0]


def delete_vertices(g: Graph, xs: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(xs)
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


def delete_edges(g: Graph, es: Iterable[tuple[int, int]]) -> Graph:
    drop = {(min(u, v), max(u, v)) for u, v in es}
    return Graph(g.n, [e for e in g.edges if e not in drop])


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by least vertex."""
    rest = g.full_mask if within is None else within
    rows = g.rows
    comps = []
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return [list(iter_bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def is_co_connected(g: Graph) -> bool:
    return is_connected(complement(g))


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.row(v) | (1 << v)) & mask == mask for v in iter_bits(mask))


def is_independent(g: Graph, mask: int) -> bool:
    return all(g.row(v) & mask == 0 for v in iter_bits(mask))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """The graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
