"""Slow reference implementations used to cross-check the fast algorithms.

Everything here works straight from definitions with exhaustive search, so
it is only usable on very small graphs (roughly six or seven vertices).
"""
from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph, iter_bits


def brute_is_module(g: Graph, xs) -> bool:
    block = set(xs)
    for z in range(g.n):
        if z in block:
            continue
        seen = {g.has_edge(z, v) for v in block}
        if len(seen) > 1:
            return False
    return True


def brute_is_prime(g: Graph) -> bool:
    """No module of size 2..n-1, found by trying every vertex subset."""
    for size in range(2, g.n):
        for xs in combinations(range(g.n), size):
            if brute_is_module(g, xs):
                return False
    return True


def brute_contains_induced(g: Graph, h: Graph) -> bool:
    for image in permutations(range(g.n), h.n):
        if all(h.has_edge(a, b) == g.has_edge(image[a], image[b]) for a, b in combinations(range(h.n), 2)):
            return True
    return False


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and brute_contains_induced(g, h)


def _canon(labels: tuple[int, ...]) -> tuple[int, ...]:
    """Rename labels by order of first appearance."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def _injections(src: int, k: int):
    """Every injective map from labels 0..src-1 into 0..k-1."""
    return permutations(range(k), src)


def brute_cw_at_most(g: Graph, k: int) -> bool:
    """Whether some k-expression builds exactly G.

    States are (vertex set, realised edge set, labels) with labels kept up to
    renaming.  The closure applies every join that only adds edges of G, every
    relabel, and every union of two states under every way of placing the
    second state's labels among the k available.  States in which some
    missing edge can no longer be added are discarded: once two label groups
    would have to be joined, every pair between them must be an edge of G.
    """
    n = g.n
    if n == 0:
        return True
    if k < 1:
        return False
    edge_index = {e: i for i, e in enumerate(g.edges)}
    goal_edges = (1 << len(g.edges)) - 1
    full = (1 << n) - 1

    def viable(verts, realised, labels):
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                u, v = verts[a], verts[b]
                e = edge_index.get((u, v))
                if e is not None and not realised >> e & 1:
                    if labels[a] == labels[b]:
                        return False
                    for c in range(len(verts)):
                        for d in range(len(verts)):
                            if labels[c] == labels[a] and labels[d] == labels[b]:
                                x, y = sorted((verts[c], verts[d]))
                                if (x, y) not in edge_index:
                                    return False
        return True

    seen: set = set()
    frontier = []
    for v in range(n):
        s = (1 << v, 0, (0,))
        seen.add(s)
        frontier.append(s)
    done = []
    while frontier:
        s = frontier.pop()
        mask, realised, labels = s
        if mask == full and realised == goal_edges:
            return True
        verts = list(iter_bits(mask))
        new_states = []
        nlab = max(labels) + 1
        for a in range(nlab):
            for b in range(nlab):
                if a == b:
                    continue
                relabelled = _canon(tuple(b if x == a else x for x in labels))
                new_states.append((mask, realised, relabelled))
                if a < b:
                    add = realised
                    ok = True
                    for p in range(len(verts)):
                        for q in range(len(verts)):
                            if labels[p] == a and labels[q] == b:
                                e = edge_index.get(tuple(sorted((verts[p], verts[q]))))
                                if e is None:
                                    ok = False
                                    break
                                add |= 1 << e
                        if not ok:
                            break
                    if ok and add != realised:
                        new_states.append((mask, add, labels))
        for t in done + [s]:
            tmask, treal, tlabels = t
            if tmask & mask:
                continue
            tl = max(tlabels) + 1
            if tl > k:
                continue
            merged_mask = mask | tmask
            order = list(iter_bits(merged_mask))
            for inj in _injections(tl, k):
                lab_of = dict(zip(verts, labels))
                lab_of.update({v: inj[x] for v, x in zip(iter_bits(tmask), tlabels)})
                combined = _canon(tuple(lab_of[v] for v in order))
                new_states.append((merged_mask, realised | treal, combined))
        for ns in new_states:
            if ns in seen or max(ns[2]) >= k:
                continue
            if not viable(list(iter_bits(ns[0])), ns[1], ns[2]):
                continue
            seen.add(ns)
            frontier.append(ns)
        done.append(s)
    # Each state is paired with every state finished before it, so every
    # unordered pair of states meets exactly once.
    return False


def brute_clique_width(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while not brute_cw_at_most(g, k):
        k += 1
    return k


def brute_nlc_at_most(g: Graph, k: int) -> bool:
    """Whether G has an NLC expression with labels 1..k, by closure over labelled induced subgraphs."""
    n = g.n
    if n == 0:
        return True
    full = (1 << n) - 1
    seen: set = set()
    done: list = []
    frontier = []
    for v in range(n):
        s = (1 << v, (0,))
        seen.add(s)
        frontier.append(s)
    while frontier:
        s = frontier.pop()
        mask, labels = s
        if mask == full:
            return True
        verts = list(iter_bits(mask))
        new_states = []
        nlab = max(labels) + 1
        for a in range(nlab):
            for b in range(nlab):
                if a != b:
                    new_states.append((mask, _canon(tuple(b if x == a else x for x in labels))))
        for t in done + [s]:
            tmask, tlabels = t
            if tmask & mask:
                continue
            tverts = list(iter_bits(tmask))
            # Edges across the union depend only on the label pair.
            ok = True
            pair_adj: dict[tuple[int, int], bool] = {}
            for u, la in zip(verts, labels):
                for v, lb in zip(tverts, tlabels):
                    adj = g.has_edge(u, v)
                    if pair_adj.setdefault((la, lb), adj) != adj:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            order = list(iter_bits(mask | tmask))
            for inj in _injections(max(tlabels) + 1, k):
                lab_of = dict(zip(verts, labels))
                lab_of.update({v: inj[x] for v, x in zip(tverts, tlabels)})
                combined = _canon(tuple(lab_of[v] for v in order))
                if max(combined) < k:
                    new_states.append((mask | tmask, combined))
        for ns in new_states:
            if ns not in seen and max(ns[1]) < k:
                seen.add(ns)
                frontier.append(ns)
        done.append(s)
    return False


def brute_nlc_width(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while not brute_nlc_at_most(g, k):
        k += 1
    return k
