"""Modules, twins, quotients, primality, 2-paths and the class G(k, d).

Module closures use splitter refinement: starting from a vertex set, any
outside vertex that sees part (but not all) of the set is pulled in until
no splitter remains.  That gives the smallest module containing the seed,
which is all that twin classes, maximal modules of connected co-connected
graphs and primality need.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import (
    INFINITE,
    Graph,
    GraphError,
    diameter,
    delete_vertices,
    distances_from,
    component_masks,
    is_co_connected,
    is_connected,
    iter_bits,
    mask_of,
)


class NotConnectedCoConnected(GraphError):
    pass


class NotAModule(GraphError):
    pass


ModulePartition = list[list[int]]


def is_module(g: Graph, block_mask: int) -> bool:
    outside = g.full_mask & ~block_mask
    for z in iter_bits(outside):
        seen = g.row(z) & block_mask
        if seen and seen != block_mask:
            return False
    return True


def module_closure(g: Graph, seed_mask: int) -> int:
    """Smallest module containing ``seed_mask``."""
    m = seed_mask
    changed = True
    while changed:
        changed = False
        for z in iter_bits(g.full_mask & ~m):
            seen = g.row(z) & m
            if seen and seen != m:
                m |= 1 << z
                changed = True
    return m


def are_twins(g: Graph, u: int, v: int) -> bool:
    return g.row(u) & ~(1 << v) == g.row(v) & ~(1 << u)


def twin_classes(g: Graph) -> ModulePartition:
    """Classes of the twin relation N(u) - {v} = N(v) - {u}, ordered by least vertex."""
    classes: ModulePartition = []
    for v in range(g.n):
        for cls in classes:
            if are_twins(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def maximal_modules_partition(g: Graph) -> ModulePartition:
    """The partition into maximal proper modules of a connected co-connected graph."""
    if g.n == 0 or not is_connected(g) or not is_co_connected(g):
        raise NotConnectedCoConnected("maximal module partition needs a connected, co-connected graph")
    full = g.full_mask
    blocks: ModulePartition = []
    assigned = 0
    for u in range(g.n):
        if assigned >> u & 1:
            continue
        block = [u]
        for v in range(u + 1, g.n):
            if not assigned >> v & 1 and module_closure(g, (1 << u) | (1 << v)) != full:
                block.append(v)
        assigned |= mask_of(block)
        blocks.append(block)
    return blocks


def quotient(g: Graph, partition: Sequence[Sequence[int]]) -> Graph:
    masks = [mask_of(b) for b in partition]
    if sum(len(b) for b in partition) != g.n or (g.n and _or_all(masks) != g.full_mask) or any(not b for b in partition):
        raise GraphError("blocks must partition the vertex set")
    for b, m in zip(partition, masks):
        if not is_module(g, m):
            raise NotAModule(f"block {list(b)} is not a module")
    edges = []
    for a, b in combinations(range(len(partition)), 2):
        if g.row(partition[a][0]) & masks[b]:
            edges.append((a, b))
    return Graph(len(partition), edges)


def _or_all(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def substitute_cliques(q: Graph, sizes: Sequence[int]) -> Graph:
    """Blow vertex v of Q up into a clique of ``sizes[v]`` consecutive vertices."""
    if len(sizes) != q.n:
        raise GraphError(f"need {q.n} sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("clique sizes must be positive")
    start = [0]
    for s in sizes:
        start.append(start[-1] + s)
    edges = []
    for v in range(q.n):
        edges += combinations(range(start[v], start[v + 1]), 2)
    for u, v in q.edges:
        edges += [(a, b) for a in range(start[u], start[u + 1]) for b in range(start[v], start[v + 1])]
    return Graph(start[-1], edges)


def is_prime(g: Graph) -> bool:
    """No module other than V and sets of size <= 1."""
    if g.n <= 2:
        return True
    full = g.full_mask
    return all(module_closure(g, (1 << u) | (1 << v)) == full for u, v in combinations(range(g.n), 2))


# -- 2-paths and G(k, d) --------------------------------------------------


@dataclass(frozen=True)
class TwoPath:
    """An induced path of degree-2 vertices; ``cyclic`` marks a whole cycle component."""
    vertices: tuple[int, ...]
    cyclic: bool = False

    @property
    def endpoints(self) -> tuple[int, ...]:
        if len(self.vertices) == 1:
            return self.vertices
        return (self.vertices[0], self.vertices[-1])

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


def two_paths(g: Graph) -> list[TwoPath]:
    """Maximal runs of degree-2 vertices, ordered by least vertex.

    A cycle component is reported once as a run with ``cyclic=True``,
    starting at its least vertex and heading to its smaller neighbour.
    """
    deg2 = mask_of(v for v in range(g.n) if g.degree(v) == 2)
    runs = []
    for comp in component_masks(g, deg2):
        inner = {v: [w for w in g.neighbors(v) if comp >> w & 1] for v in iter_bits(comp)}
        ends = sorted(v for v, ws in inner.items() if len(ws) < 2)
        if not ends:
            start = min(inner)
            order = [start, min(inner[start])]
            cyclic = True
        else:
            order = [ends[0]]
            cyclic = False
        while len(order) < len(inner):
            nxt = [w for w in inner[order[-1]] if w != (order[-2] if len(order) > 1 else -1)]
            order.append(nxt[0])
        runs.append(TwoPath(tuple(order), cyclic))
    return runs


def _maximal_choice(run: TwoPath) -> TwoPath:
    if run.cyclic:
        return TwoPath(run.vertices[1:])
    return run


def is_in_class_g(g: Graph, k: int, d: int) -> list[TwoPath] | None:
    """A set of at most k 2-paths whose removal leaves a non-empty graph of diameter <= d.

    Only whole maximal runs (for a cycle: everything but its least vertex)
    need to be tried: once a run is cut, the leftover pieces of it hang as
    pendant paths and only lengthen distances, so removing the full run is
    never worse than removing a sub-run of it.  Candidates are tried by
    increasing size, then in lexicographic order of run positions.
    """
    if k < 0 or d < 1:
        raise GraphError(f"need k >= 0 and d >= 1, got k={k}, d={d}")
    if g.n == 0:
        return None
    choices = [_maximal_choice(r) for r in two_paths(g)]
    for size in range(0, min(k, len(choices)) + 1):
        for combo in combinations(range(len(choices)), size):
            removed = [v for c in combo for v in choices[c].vertices]
            if len(removed) == g.n:
                continue
            rest, _ = delete_vertices(g, removed)
            if diameter(rest) <= d:
                return [choices[c] for c in combo]
    return None


@dataclass(frozen=True)
class DistanceArray:
    """Distances from ``vertex`` to the declared endpoints, truncated at d+1."""
    vertex: int
    values: tuple[int, ...]


def distance_array(g: Graph, x: int, endpoints: Sequence[int], d: int) -> DistanceArray:
    dist = distances_from(g, x)
    values = []
    for w in endpoints:
        if not 0 <= w < g.n:
            raise GraphError(f"endpoint {w} outside 0..{g.n - 1}")
        dxw = dist[w]
        values.append(dxw if dxw is not INFINITE and dxw <= d else d + 1)
    return DistanceArray(x, tuple(values))


def path_endpoints(paths: Sequence[TwoPath]) -> list[int]:
    return [w for p in paths for w in p.endpoints]
