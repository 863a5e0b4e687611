"""Induced-subgraph embeddings and isomorphism by backtracking.

Search order: the pattern vertex with the fewest candidates goes first; each
later position takes the unplaced vertex with the most already-placed
neighbours, ties broken by fewer candidates, then by lower index.  Target
vertices are tried in increasing index, so the first embedding found is
deterministic.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, iter_bits


def _candidate_masks(g: Graph, h: Graph) -> list[int]:
    gdeg = g.degrees()
    hdeg = h.degrees()
    cands = []
    for x in range(h.n):
        dx, cx = hdeg[x], h.n - 1 - hdeg[x]
        m = 0
        for v in range(g.n):
            if gdeg[v] >= dx and g.n - 1 - gdeg[v] >= cx:
                m |= 1 << v
        cands.append(m)
    return cands


def _search_order(h: Graph, cands: list[int]) -> list[int]:
    remaining = set(range(h.n))
    placed_mask = 0
    order = []
    while remaining:
        best = min(
            remaining,
            key=lambda x: (-bin(h.row(x) & placed_mask).count("1"), bin(cands[x]).count("1"), x),
        )
        order.append(best)
        remaining.discard(best)
        placed_mask |= 1 << best
    return order


def _embed(g: Graph, h: Graph, cands: list[int]) -> list[int] | None:
    if h.n == 0:
        return []
    if any(c == 0 for c in cands):
        return None
    order = _search_order(h, cands)
    # constraints[t]: (earlier position, must be adjacent?)
    constraints = []
    for t, x in enumerate(order):
        cs = []
        for s in range(t):
            cs.append((s, h.has_edge(x, order[s])))
        constraints.append(cs)
    grows = g.rows
    full = g.full_mask
    image = [0] * h.n
    stack = []

    def allowed(t: int, used: int) -> int:
        a = cands[order[t]] & ~used
        for s, adj in constraints[t]:
            r = grows[image[s]]
            a &= r if adj else (full & ~r)
            if not a:
                break
        return a

    t = 0
    used = 0
    stack.append(allowed(0, 0))
    while stack:
        a = stack[-1]
        if not a:
            stack.pop()
            t -= 1
            if t >= 0:
                used &= ~(1 << image[t])
            continue
        low = a & -a
        stack[-1] = a ^ low
        v = low.bit_length() - 1
        image[t] = v
        if t == h.n - 1:
            result = [0] * h.n
            for s, x in enumerate(order):
                result[x] = image[s]
            return result
        used |= low
        t += 1
        stack.append(allowed(t, used))
    return None


def contains_induced(g: Graph, h: Graph) -> list[int] | None:
    """An induced embedding of H into G as a list ``emb[h_vertex] = g_vertex``, or None."""
    if h.n > g.n:
        return None
    return _embed(g, h, _candidate_masks(g, h))


def is_embedding(g: Graph, h: Graph, emb: Sequence[int]) -> bool:
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    if any(not 0 <= v < g.n for v in emb):
        return False
    for a in range(h.n):
        for b in range(a + 1, h.n):
            if h.has_edge(a, b) != g.has_edge(emb[a], emb[b]):
                return False
    return True


def _triangles_per_vertex(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        r = g.row(v)
        t = 0
        for w in iter_bits(r):
            t += bin(g.row(w) & r).count("1")
        out.append(t // 2)
    return out


def invariant_key(g: Graph) -> tuple:
    """Cheap isomorphism invariant: size, sorted degrees, sorted (degree, triangles) pairs."""
    degs = g.degrees()
    tris = _triangles_per_vertex(g)
    return (g.n, g.m, tuple(sorted(zip(degs, tris))))


def isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``phi[h_vertex] = g_vertex`` preserving adjacency, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    if invariant_key(g) != invariant_key(h):
        return None
    gdeg, hdeg = g.degrees(), h.degrees()
    gt, ht = _triangles_per_vertex(g), _triangles_per_vertex(h)
    cands = []
    for x in range(h.n):
        m = 0
        for v in range(g.n):
            if gdeg[v] == hdeg[x] and gt[v] == ht[x]:
                m |= 1 << v
        cands.append(m)
    return _embed(g, h, cands)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None


def is_f_free(g: Graph, forbidden: Iterable[Graph]) -> tuple[bool, tuple[int, list[int]] | None]:
    """Whether G avoids every member of F as an induced subgraph.

    Returns ``(True, None)`` or ``(False, (index_in_F, embedding))`` for the
    first violated member.
    """
    for i, h in enumerate(forbidden):
        emb = contains_induced(g, h)
        if emb is not None:
            return False, (i, emb)
    return True, None
