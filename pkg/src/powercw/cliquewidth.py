"""Exact clique-width and NLC-width for small graphs.

Both widths are decided by a closure over partial states ``(X, P)``: X is a
set of vertices whose induced graph has been built exactly, and P is the
partition of X into label groups.  A group can only be treated uniformly
from now on, so P must refine the classes of X under "same neighbourhood
outside X"; states violating that, or with more than k groups, are never
created.  Leaves are single vertices.  Two states on disjoint vertex sets
combine by a union in which some groups of the two sides may share a label,
followed (for clique-width) by every join the shared labels allow and then
any merge of groups permitted by the refinement rule.

For clique-width the cross edges of a union must be produced by joins
issued right after it: any pair of groups with cross edges must end up on
different labels whose groups are completely adjacent.  Sharing more labels
than the minimum never helps (it only coarsens the groups and constrains
the joins), so exactly max(0, |P1| + |P2| - k) shared pairs are tried.  For
NLC-width the union itself may add any label-to-label edges, so only the
label budget constrains sharing.

The graph is solvable within k labels iff some state reaches X = V; the
clique-width search keeps a back-pointer per state and rebuilds a concrete
expression from it.
"""
from __future__ import annotations

from itertools import combinations, product

from .expression import (
    Create,
    CwExpression,
    Join,
    Relabel,
    Union,
    relabel_all,
    substitute_leaves,
    union_all,
)
from .graph import (
    Graph,
    GraphError,
    complement,
    component_masks,
    induced_by_mask,
    induced_subgraph,
    iter_bits,
)
from .structure import maximal_modules_partition, quotient

DEFAULT_CAP = 11


class CapExceeded(GraphError):
    """The exact search was asked to handle more vertices than its cap allows."""


def _set_partitions(items: list[int]):
    """All partitions of ``items`` (group masks), each yielded as a list of merged masks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [first] + part
        for i in range(len(part)):
            yield part[:i] + [part[i] | first] + part[i + 1:]


def _low_vertex(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class _WidthSearch:
    def __init__(self, g: Graph, k: int, nlc: bool):
        self.g = g
        self.k = k
        self.nlc = nlc
        self.rows = g.rows
        self.full = g.full_mask
        self._classes: dict[int, tuple[tuple[int, ...], dict[int, int]] | None] = {}
        self.origin: dict[tuple[int, tuple[int, ...]], tuple] = {}

    def classes(self, x: int):
        """(class masks, vertex -> class id) for X, or None when X has more than k classes."""
        try:
            return self._classes[x]
        except KeyError:
            pass
        outside = self.full & ~x
        by_key: dict[int, int] = {}
        for v in iter_bits(x):
            key = self.rows[v] & outside
            by_key[key] = by_key.get(key, 0) | (1 << v)
        if len(by_key) > self.k:
            out = None
        else:
            masks = tuple(by_key.values())
            cid = {}
            for i, m in enumerate(masks):
                for v in iter_bits(m):
                    cid[v] = i
            out = (masks, cid)
        self._classes[x] = out
        return out

    def complete(self, a: int, b: int) -> bool:
        rows = self.rows
        return all(rows[u] & b == b for u in iter_bits(a))

    def _matchings(self, p1, p2, size, compatible):
        """Sets of ``size`` disjoint pairs (i, j) with compatible[i][j], in lexicographic order."""
        def rec(i, used, chosen):
            if len(chosen) == size:
                yield list(chosen)
                return
            if len(p1) - i < size - len(chosen):
                return
            for j in range(len(p2)):
                if not used >> j & 1 and compatible[i][j]:
                    chosen.append((i, j))
                    yield from rec(i + 1, used | (1 << j), chosen)
                    chosen.pop()
            yield from rec(i + 1, used, chosen)
        yield from rec(0, 0, [])

    def combine(self, s1, s2):
        """Every state reachable by a union of s1 and s2; yields (state, matching)."""
        (x1, p1), (x2, p2) = s1, s2
        x = x1 | x2
        info = self.classes(x)
        if info is None:
            return
        cmasks, cid = info
        rows = self.rows
        need = len(p1) + len(p2) - self.k
        c1 = [cid[_low_vertex(a)] for a in p1]
        c2 = [cid[_low_vertex(b)] for b in p2]
        adjacent = [[bool(rows[_low_vertex(a)] & b) for b in p2] for a in p1]
        if need <= 0:
            matchings = [[]]
        else:
            compatible = [
                [c1[i] == c2[j] and (self.nlc or not adjacent[i][j]) for j in range(len(p2))]
                for i in range(len(p1))
            ]
            matchings = self._matchings(p1, p2, need, compatible)
        for matching in matchings:
            partner1 = {i: j for i, j in matching}
            partner2 = {j: i for i, j in matching}
            if not self.nlc:
                g1 = [a | (p2[partner1[i]] if i in partner1 else 0) for i, a in enumerate(p1)]
                g2 = [b | (p1[partner2[j]] if j in partner2 else 0) for j, b in enumerate(p2)]
                ok = True
                for i in range(len(p1)):
                    for j in range(len(p2)):
                        if adjacent[i][j] and not self.complete(g1[i], g2[j]):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
            groups: dict[int, list[int]] = {}
            for i, a in enumerate(p1):
                merged = a | (p2[partner1[i]] if i in partner1 else 0)
                groups.setdefault(c1[i], []).append(merged)
            for j, b in enumerate(p2):
                if j not in partner2:
                    groups.setdefault(c2[j], []).append(b)
            per_class = [list(_set_partitions(gs)) for gs in groups.values()]
            for choice in product(*per_class):
                p = tuple(sorted(m for part in choice for m in part))
                yield (x, p), tuple(matching)

    def run(self) -> tuple[int, tuple[int, ...]] | None:
        n = self.g.n
        by_mask: dict[int, list[tuple[int, ...]]] = {}
        queue = []
        for v in range(n):
            s = (1 << v, (1 << v,))
            self.origin[s] = ("leaf", v)
            queue.append(s)
        if n == 1:
            return queue[0]
        head = 0
        while head < len(queue):
            s = queue[head]
            head += 1
            x = s[0]
            partners = [(x2, p2) for x2, plist in by_mask.items() if not x2 & x for p2 in plist]
            for t in partners:
                for new, matching in self.combine(s, t):
                    if new in self.origin:
                        continue
                    self.origin[new] = ("union", s, t, matching)
                    if new[0] == self.full:
                        return new
                    queue.append(new)
            by_mask.setdefault(x, []).append(s[1])
        return None

    def build(self, state, target: dict[int, int]) -> CwExpression:
        """Expression for ``state`` in which group mask m carries label target[m]."""
        info = self.origin[state]
        if info[0] == "leaf":
            return Create(target[state[1][0]], vertex=info[1])
        _, s1, s2, matching = info
        (x1, p1), (x2, p2) = s1, s2
        partner1 = dict(matching)
        matched2 = {j for _, j in matching}
        q_groups = [a | (p2[partner1[i]] if i in partner1 else 0) for i, a in enumerate(p1)]
        q_groups += [b for j, b in enumerate(p2) if j not in matched2]
        # The first Q-group inside each final group keeps that group's label;
        # the others borrow unused labels and are renamed at the end.
        q_label: dict[int, int] = {}
        free = iter(sorted(set(range(1, self.k + 1)) - set(target.values())))
        renames = []
        for g_mask in sorted(target):
            members = sorted(q for q in q_groups if q & g_mask)
            q_label[members[0]] = target[g_mask]
            for q in members[1:]:
                lab = next(free)
                q_label[q] = lab
                renames.append((lab, target[g_mask]))
        t1 = {a: q_label[next(q for q in q_groups if q & a)] for a in p1}
        t2 = {b: q_label[next(q for q in q_groups if q & b)] for b in p2}
        expr: CwExpression = Union(self.build(s1, t1), self.build(s2, t2))
        rows = self.rows
        joins = []
        for qa, qb in combinations(q_groups, 2):
            crosses = any(rows[u] & qb & x2 for u in iter_bits(qa & x1)) or any(
                rows[u] & qb & x1 for u in iter_bits(qa & x2)
            )
            if crosses:
                la, lb = sorted((q_label[qa], q_label[qb]))
                joins.append((la, lb))
        for la, lb in sorted(joins):
            expr = Join(la, lb, expr)
        for src, dst in renames:
            expr = Relabel(src, dst, expr)
        return expr

    def expression(self, final) -> CwExpression:
        return self.build(final, {m: i + 1 for i, m in enumerate(final[1])})


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(f"exact search limited to {cap} vertices, got {g.n}")


def search_cw(g: Graph, k: int, cap: int = DEFAULT_CAP) -> CwExpression | None:
    """Direct search without any decomposition: an expression of width <= k, or None."""
    _check_cap(g, cap)
    if g.n == 0 or k < 1:
        return None
    s = _WidthSearch(g, k, nlc=False)
    final = s.run()
    return None if final is None else s.expression(final)


def search_nlc(g: Graph, k: int, cap: int = DEFAULT_CAP) -> bool:
    _check_cap(g, cap)
    if g.n == 0:
        return True
    if k < 1:
        return False
    return _WidthSearch(g, k, nlc=True).run() is not None


# -- decomposition -----------------------------------------------------------


def _tag_shift(e: CwExpression, keep: list[int]) -> CwExpression:
    """Rename leaf tags from positions in ``keep`` to the vertices themselves."""
    return substitute_leaves(e, lambda v, lab: Create(lab, vertex=keep[v]))


def _labels_of(e: CwExpression) -> set[int]:
    """Labels carried by vertices at the root of ``e``."""
    if isinstance(e, Create):
        return {e.label}
    if isinstance(e, Union):
        return _labels_of(e.left) | _labels_of(e.right)
    if isinstance(e, Join):
        return _labels_of(e.child)
    inner = _labels_of(e.child)
    if e.src in inner:
        inner = (inner - {e.src}) | {e.dst}
    return inner


def _solve(g: Graph, cap: int, limit: int | None) -> tuple[int, CwExpression] | None:
    """(width, expression) by modular decomposition; None if the width exceeds ``limit``.

    Leaf tags of the expression are vertices of ``g``.
    """
    n = g.n
    if n == 1:
        return 1, Create(1, vertex=0)
    if g.m == 0:
        return 1, union_all([Create(1, vertex=v) for v in range(n)])
    comps = component_masks(g)
    if len(comps) > 1:
        return _combine_parts(g, comps, cap, limit, join=False)
    co = component_masks(complement(g))
    if len(co) > 1:
        if limit is not None and limit < 2:
            return None
        return _combine_parts(g, co, cap, limit, join=True)
    # connected and co-connected with at least one edge: n >= 4
    blocks = maximal_modules_partition(g)
    q = quotient(g, blocks)
    _check_cap(q, cap)
    best = None
    lo = 3
    hi = q.n if limit is None else min(limit, q.n)
    for k in range(lo, hi + 1):
        best = search_cw(q, k, cap)
        if best is not None:
            width = k
            break
    if best is None:
        return None
    parts = {}
    for qv, block in enumerate(blocks):
        if len(block) == 1:
            continue
        sub, keep = induced_subgraph(g, block)
        got = _solve(sub, cap, limit)
        if got is None:
            return None
        width = max(width, got[0])
        parts[qv] = _tag_shift(got[1], keep)

    def expand(qv, lab):
        if qv not in parts:
            return Create(lab, vertex=blocks[qv][0])
        e = parts[qv]
        return relabel_all(e, _labels_of(e), lab)

    return width, substitute_leaves(best, expand)


def _combine_parts(g: Graph, masks: list[int], cap: int, limit: int | None, join: bool):
    width = 2 if join else 1
    pieces = []
    for m in masks:
        sub, keep = induced_subgraph(g, iter_bits(m))
        got = _solve(sub, cap, limit)
        if got is None:
            return None
        width = max(width, got[0])
        e = _tag_shift(got[1], keep)
        pieces.append(relabel_all(e, _labels_of(e), 2 if join else 1) if join else e)
    if not join:
        return width, union_all(pieces)
    expr = relabel_all(pieces[0], {2}, 1)
    for p in pieces[1:]:
        expr = Relabel(2, 1, Join(1, 2, Union(expr, p)))
    return width, expr


def clique_width(g: Graph, cap: int = DEFAULT_CAP, reduce: bool = True) -> tuple[int, CwExpression | None]:
    """Exact clique-width with a witnessing expression (leaf tags are the vertices of G).

    With ``reduce`` the graph is split along components, co-components and
    maximal modules first, and ``cap`` bounds only the prime pieces that
    reach the search.  Without it the whole graph is searched directly.
    """
    if g.n == 0:
        return 0, None
    if not reduce:
        _check_cap(g, cap)
        for k in range(1, g.n + 1):
            e = search_cw(g, k, cap)
            if e is not None:
                return k, e
        raise AssertionError("every graph has clique-width at most n")
    width, expr = _solve(g, cap, None)
    return width, expr


def cw_at_most(g: Graph, k: int, cap: int = DEFAULT_CAP) -> CwExpression | None:
    """An expression of width at most k for G, or None when cw(G) > k."""
    if g.n == 0:
        raise GraphError("the empty graph has no expression")
    if k < 1:
        return None
    got = _solve(g, cap, k)
    if got is None or got[0] > k:
        return None
    return got[1]


def nlc_width(g: Graph, cap: int = DEFAULT_CAP) -> int:
    if g.n == 0:
        return 0
    _check_cap(g, cap)
    for k in range(1, g.n + 1):
        if search_nlc(g, k, cap):
            return k
    raise AssertionError("every graph has NLC-width at most n")


def is_cograph(g: Graph) -> bool:
    """Built from single vertices by disjoint union and complementation."""
    if g.n <= 1:
        return True
    comps = component_masks(g)
    if len(comps) == 1:
        comps = component_masks(complement(g))
        if len(comps) == 1:
            return False
    return all(is_cograph(induced_by_mask(g, m)) for m in comps)

