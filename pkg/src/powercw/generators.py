"""Graph families with documented vertex numbering, split graphs and the split gadget.

Numbering conventions:

* path/cycle/complete: 0..n-1 in order; star: centre 0, leaves 1..m.
* grid(n): vertex (i, j), 0 <= i, j < n, is ``i*n + j`` (row-major).
* subdivided_grid(n, k): grid vertices first, then the k-1 interior vertices
  of each grid edge, edges taken in lexicographic order, interior vertices
  listed from the smaller endpoint outwards.
* bn(n) / gn(n): vertex (i, j) is ``i*n + j``.
* hypercube(d): a vertex is the integer whose binary digits are its coordinates.
* spider(i, j, k): centre 0, then the legs in ascending length order, each
  listed from the centre outwards.
* t_spider(i, j, k): vertex e is the e-th edge of spider(i, j, k) in the
  order the legs were laid out (centre outwards).
* h_obstruction(i): degree-3 ends 0 and i, inner path 1..i-1, leaves
  i+1, i+2 on vertex 0 and i+3, i+4 on vertex i.
* complete_split(r, s): clique 0..r-1, independent set r..r+s-1.
* kn_star(n): clique 0..n-1, then one apex per clique edge (lexicographic).
* complete_with_handles(n, k): clique 0..n-1, then 2k-1 interior vertices per
  clique pair (lexicographic pairs, listed from the smaller endpoint).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .graph import Graph, GraphError, disjoint_union_all, is_independent, iter_bits, mask_of


class NotSplit(GraphError):
    """The graph has no split partition."""


@dataclass(frozen=True, order=True)
class SpiderParams:
    i: int
    j: int
    k: int

    def __post_init__(self):
        legs = sorted((self.i, self.j, self.k))
        if legs[0] < 0:
            raise GraphError(f"spider legs must be non-negative, got {legs}")
        object.__setattr__(self, "i", legs[0])
        object.__setattr__(self, "j", legs[1])
        object.__setattr__(self, "k", legs[2])

    def astuple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


# -- basic families ------------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path(n: int) -> Graph:
    _need(n >= 0, f"path needs n >= 0, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 0, f"complete graph needs n >= 0, got {n}")
    return Graph(n, combinations(range(n), 2))


def star(m: int) -> Graph:
    _need(m >= 0, f"star needs m >= 0, got {m}")
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def copies(m: int, h: Graph) -> Graph:
    """``mH``: m disjoint copies of H."""
    _need(m >= 0, f"copy count must be >= 0, got {m}")
    return disjoint_union_all([h] * m)


def grid(n: int) -> Graph:
    _need(n >= 1, f"grid needs n >= 1, got {n}")
    edges = []
    for i in range(n):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < n:
                edges.append((v, v + n))
    return Graph(n * n, edges)


def subdivide_edges(g: Graph, k: int, which=None) -> Graph:
    """Replace each chosen edge (default: all) by a path with k edges.

    New vertices are appended edge by edge in lexicographic edge order.
    """
    _need(k >= 1, f"subdivision length must be >= 1, got {k}")
    chosen = set(g.edges) if which is None else {(min(e), max(e)) for e in which}
    nxt = g.n
    edges = []
    for u, v in g.edges:
        if (u, v) not in chosen or k == 1:
            edges.append((u, v))
            continue
        prev = u
        for _ in range(k - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph(nxt, edges)


def subdivided_grid(n: int, k: int) -> Graph:
    return subdivide_edges(grid(n), k)


def bn(n: int) -> Graph:
    """The bipartite permutation graph B_n: (i1, j) ~ (i2, j+1) whenever i2 < i1."""
    _need(n >= 1, f"B_n needs n >= 1, got {n}")
    edges = []
    for j in range(n - 1):
        for i1 in range(1, n):
            for i2 in range(i1):
                edges.append((i1 * n + j, i2 * n + j + 1))
    return Graph(n * n, edges)


def gn(n: int) -> Graph:
    """B_n plus a clique on each set of vertices sharing the second coordinate."""
    b = bn(n)
    edges = list(b.edges)
    for j in range(n):
        for i1, i2 in combinations(range(n), 2):
            edges.append((i1 * n + j, i2 * n + j))
    return Graph(n * n, edges)


def path_power(n: int, s: int) -> Graph:
    _need(n >= 1 and s >= 1, f"path_power needs n >= 1 and s >= 1, got n={n}, s={s}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, min(n, i + s + 1))])


def hypercube(d: int) -> Graph:
    _need(d >= 1, f"hypercube needs d >= 1, got {d}")
    return Graph(1 << d, [(x, x ^ (1 << b)) for x in range(1 << d) for b in range(d) if not x >> b & 1])


def _spider_edges(params: SpiderParams) -> tuple[int, list[tuple[int, int]]]:
    edges = []
    nxt = 1
    for leg in params.astuple():
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt, edges


def spider(i: int, j: int, k: int) -> Graph:
    n, edges = _spider_edges(SpiderParams(i, j, k))
    return Graph(n, edges)


def line_graph(g: Graph, edge_order=None) -> Graph:
    """L(G): one vertex per edge (in ``edge_order`` or lexicographic order)."""
    es = list(g.edges if edge_order is None else edge_order)
    incident: dict[int, list[int]] = {}
    for idx, (u, v) in enumerate(es):
        incident.setdefault(u, []).append(idx)
        incident.setdefault(v, []).append(idx)
    out = set()
    for idxs in incident.values():
        out.update(combinations(idxs, 2))
    return Graph(len(es), out)


def t_spider(i: int, j: int, k: int) -> Graph:
    _, edges = _spider_edges(SpiderParams(i, j, k))
    return line_graph(spider(i, j, k), [(min(e), max(e)) for e in edges])


def h_obstruction(i: int) -> Graph:
    """H_i: two degree-3 vertices joined by a path of i edges, each with two pendant leaves."""
    _need(i >= 1, f"H_i needs i >= 1, got {i}")
    edges = [(t, t + 1) for t in range(i)]
    edges += [(0, i + 1), (0, i + 2), (i, i + 3), (i, i + 4)]
    return Graph(i + 5, edges)


def complete_split(r: int, s: int) -> Graph:
    _need(r >= 0 and s >= 0, f"complete_split needs r, s >= 0, got {r}, {s}")
    edges = list(combinations(range(r), 2)) + [(a, r + b) for a in range(r) for b in range(s)]
    return Graph(r + s, edges)


def kn_star(n: int) -> Graph:
    """K_n with a triangle glued on every edge."""
    _need(n >= 1, f"kn_star needs n >= 1, got {n}")
    edges = list(combinations(range(n), 2))
    nxt = n
    for a, b in combinations(range(n), 2):
        edges += [(a, nxt), (b, nxt)]
        nxt += 1
    return Graph(nxt, edges)


def complete_with_handles(n: int, k: int) -> Graph:
    """K_n plus, for every pair of its vertices, a chordless connecting path of length 2k."""
    _need(n >= 1 and k >= 1, f"complete_with_handles needs n, k >= 1, got {n}, {k}")
    edges = list(combinations(range(n), 2))
    nxt = n
    for a, b in combinations(range(n), 2):
        prev = a
        for _ in range(2 * k - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return Graph(nxt, edges)


FAMILIES: dict[str, tuple[Callable[..., Graph], tuple[str, ...]]] = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
    "star": (star, ("m",)),
    "mH": (copies, ("m", "h")),
    "grid": (grid, ("n",)),
    "subdivided_grid": (subdivided_grid, ("n", "k")),
    "bn": (bn, ("n",)),
    "gn": (gn, ("n",)),
    "path_power": (path_power, ("n", "s")),
    "hypercube": (hypercube, ("d",)),
    "spider": (spider, ("i", "j", "k")),
    "t_spider": (t_spider, ("i", "j", "k")),
    "h_obstruction": (h_obstruction, ("i",)),
    "complete_split": (complete_split, ("r", "s")),
    "kn_star": (kn_star, ("n",)),
    "complete_with_handles": (complete_with_handles, ("n", "k")),
}


def generate(family: str, *args, **kwargs) -> Graph:
    """Dispatch ``family`` with positional or keyword parameters."""
    try:
        fn, _ = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}") from None
    return fn(*args, **kwargs)


# -- split graphs --------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    independent: tuple[int, ...]


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    rows = g.rows
    out = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: bin(rows[u] & p).count("1"))
        for v in iter_bits(p & ~rows[pivot]):
            bit = 1 << v
            expand(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, g.full_mask, 0)
    return out


def split_partition(g: Graph) -> SplitPartition:
    """Split partition with K a maximal clique.

    Maximal cliques are tried by non-increasing size, ties by the sorted
    vertex tuple; the first whose complement is independent wins.
    """
    if g.n == 0:
        return SplitPartition((), ())
    cliques = sorted(maximal_cliques(g), key=lambda c: (-bin(c).count("1"), tuple(iter_bits(c))))
    for k in cliques:
        rest = g.full_mask & ~k
        if is_independent(g, rest):
            for v in iter_bits(rest):
                if g.row(v) & k == k:
                    k |= 1 << v
                    rest &= ~(1 << v)
            return SplitPartition(tuple(iter_bits(k)), tuple(iter_bits(rest)))
    raise NotSplit("graph has no split partition")


def is_split(g: Graph) -> bool:
    """Degree-sequence test (Hammer-Simeone)."""
    d = sorted(g.degrees(), reverse=True)
    m = max((i + 1 for i in range(len(d)) if d[i] >= i), default=0)
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def is_complete_split(g: Graph) -> bool:
    """Some split partition (K, I) has every K-I pair adjacent.

    Equivalently, the non-universal vertices are pairwise non-adjacent.
    """
    full = g.full_mask
    nonuniv = mask_of(v for v in range(g.n) if g.row(v) | (1 << v) != full)
    return is_independent(g, nonuniv)


@dataclass(frozen=True)
class GadgetVertex:
    """Role of a vertex of S_k: ``("I", v, level)``, ``("K", w, level)`` or ``("apex", -1, 0)``.

    Level 0 is the vertex of S itself, level l the l-th vertex of its path.
    """
    role: str
    base: int
    level: int


def gadget_path_lengths(k: int) -> tuple[int, int]:
    """Lengths of the paths hung on I-vertices and on K-vertices of S_k."""
    if k % 2 == 0:
        return k // 2, k // 2 - 2
    return (k - 1) // 2, (k - 3) // 2


def split_gadget(s: Graph, k: int) -> tuple[Graph, list[GadgetVertex], SplitPartition]:
    """The graph S_k built over the split partition of S with K maximal.

    Even k: I becomes a clique, paths of length k/2 on I-vertices and k/2-2 on
    K-vertices.  Odd k: a new apex adjacent to all of I, paths of length
    (k-1)/2 and (k-3)/2.  New vertices: apex (odd k) first, then the I-paths,
    then the K-paths, each in ascending base vertex and level order.
    """
    if k < 3:
        raise GraphError(f"split gadget needs k >= 3, got {k}")
    part = split_partition(s)
    edges = list(s.edges)
    in_clique = set(part.clique)
    roles = [GadgetVertex("K" if v in in_clique else "I", v, 0) for v in range(s.n)]
    nxt = s.n
    ilen, klen = gadget_path_lengths(k)
    if k % 2 == 0:
        edges += list(combinations(part.independent, 2))
    else:
        apex = nxt
        nxt += 1
        roles.append(GadgetVertex("apex", -1, 0))
        edges += [(apex, v) for v in part.independent]
    for kind, bases, length in (("I", part.independent, ilen), ("K", part.clique, klen)):
        for b in bases:
            prev = b
            for level in range(1, length + 1):
                edges.append((prev, nxt))
                roles.append(GadgetVertex(kind, b, level))
                prev = nxt
                nxt += 1
    return Graph(nxt, edges), roles, part


def gadget_level_set(roles: list[GadgetVertex], kind: str, level: int) -> list[int]:
    """Vertices v_i^level (kind "I") or w_j^level (kind "K"), level 0 being the vertex of S."""
    out = []
    for idx, r in enumerate(roles):
        if r.role == kind and r.level == level:
            out.append((r.base, idx))
    return [idx for _, idx in sorted(out)]


# -- seeded random split graphs ---------------------------------------------


class Pcg64Stream:
    """Deterministic uniform floats from numpy's PCG64 raw 64-bit stream."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed)

    def random(self) -> float:
        return (int(self._bits.random_raw()) >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + int(self.random() * (hi - lo + 1))


def random_split_graph(n: int, density: float, seed: int) -> Graph:
    """Clique on 0..r-1 (r uniform in 1..n), independent rest, K-I edges with probability ``density``."""
    _need(n >= 1, f"random_split_graph needs n >= 1, got {n}")
    _need(0.0 <= density <= 1.0, f"density must lie in [0, 1], got {density}")
    rng = Pcg64Stream(seed)
    r = rng.randint(1, n)
    edges = list(combinations(range(r), 2))
    for v in range(r, n):
        for w in range(r):
            if rng.random() < density:
                edges.append((w, v))
    return Graph(n, edges)
