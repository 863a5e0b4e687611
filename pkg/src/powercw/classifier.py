"""Decision procedures for power-bounded clique-width of classes Free(F).

Recognizers for paths, spiders S_{i,j,k} and their line graphs T_{i,j,k},
the parameters kappa and lambda, and verdicts for one forbidden graph, two
connected forbidden graphs, and general finite families.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .graph import (
    INFINITE,
    Graph,
    GraphError,
    component_masks,
    girth,
    induced_by_mask,
    is_connected,
)
from .generators import SpiderParams, h_obstruction, spider, star, t_spider
from .iso import contains_induced, is_isomorphic

ROOT_CAP = 12


class DisconnectedInput(GraphError):
    pass


class EmptyFamily(GraphError):
    pass


class RootCapExceeded(GraphError):
    pass


class Verdict(str, Enum):
    BOUNDED = "PowerBounded"
    UNBOUNDED = "PowerUnbounded"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    reason: str
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"verdict": self.verdict.value, "reason": self.reason, "witness": self.witness}


# -- recognizers ----------------------------------------------------------


def _is_forest(g: Graph) -> bool:
    return g.m == g.n - len(component_masks(g))


def recognize_path(h: Graph) -> int | None:
    """Number of edges if H is a path (K_1 counts as length 0), else None."""
    if h.n == 0 or not is_connected(h) or h.max_degree() > 2 or not _is_forest(h):
        return None
    return h.n - 1


def recognize_union_of_paths(h: Graph) -> bool:
    return h.max_degree() <= 2 and _is_forest(h)


def recognize_spider(h: Graph) -> SpiderParams | None:
    """Leg lengths (ascending) of a spider; a path reports as (0, 0, n-1)."""
    if h.n == 0 or not is_connected(h):
        raise DisconnectedInput("spider recognition needs a connected graph")
    if not _is_forest(h):
        return None
    degs = h.degrees()
    if max(degs) > 3:
        return None
    centres = [v for v in range(h.n) if degs[v] == 3]
    if len(centres) > 1:
        return None
    if not centres:
        return SpiderParams(0, 0, h.n - 1)
    c = centres[0]
    legs = []
    for start in h.neighbors(c):
        prev, cur, length = c, start, 1
        while degs[cur] == 2:
            prev, cur = cur, next(w for w in h.neighbors(cur) if w != prev)
            length += 1
        legs.append(length)
    return SpiderParams(*legs)


def _krausz_partitions(g: Graph):
    """Edge partitions of G into cliques with every vertex in at most two cliques."""
    rows = g.rows
    edges = list(g.edges)
    covered: set[tuple[int, int]] = set()
    load = [0] * g.n
    cliques: list[int] = []

    def cliques_through(u: int, v: int):
        base = (1 << u) | (1 << v)
        cand = [w for w in range(g.n) if rows[u] >> w & 1 and rows[v] >> w & 1
                and (min(u, w), max(u, w)) not in covered and (min(v, w), max(v, w)) not in covered
                and load[w] < 2]

        def grow(idx: int, members: list[int], mask: int):
            yield mask
            for t in range(idx, len(cand)):
                w = cand[t]
                if all(rows[w] >> x & 1 and (min(w, x), max(w, x)) not in covered for x in members):
                    yield from grow(t + 1, members + [w], mask | (1 << w))
        yield from grow(0, [], base)

    def rec():
        first = next((e for e in edges if e not in covered), None)
        if first is None:
            yield list(cliques)
            return
        u, v = first
        if load[u] >= 2 or load[v] >= 2:
            return
        for mask in list(cliques_through(u, v)):
            members = [x for x in range(g.n) if mask >> x & 1]
            new_edges = [(a, b) for i, a in enumerate(members) for b in members[i + 1:]]
            covered.update(new_edges)
            for x in members:
                load[x] += 1
            cliques.append(mask)
            yield from rec()
            cliques.pop()
            for x in members:
                load[x] -= 1
            covered.difference_update(new_edges)

    yield from rec()


def _root_from_partition(g: Graph, cliques: list[int]) -> Graph:
    ends: list[list[int]] = [[] for _ in range(g.n)]
    for idx, mask in enumerate(cliques):
        for v in range(g.n):
            if mask >> v & 1:
                ends[v].append(idx)
    nxt = len(cliques)
    root_edges = []
    for v in range(g.n):
        while len(ends[v]) < 2:
            ends[v].append(nxt)
            nxt += 1
        root_edges.append(tuple(ends[v]))
    return Graph(nxt, root_edges)


def line_roots(g: Graph, cap: int = ROOT_CAP) -> list[Graph]:
    """Every graph (up to isomorphism) whose line graph is isomorphic to connected G."""
    if g.n == 0 or not is_connected(g):
        raise DisconnectedInput("line roots are computed for connected graphs")
    if g.n > cap:
        raise RootCapExceeded(f"line-root search limited to {cap} vertices, got {g.n}")
    roots: list[Graph] = []
    for part in _krausz_partitions(g):
        r = _root_from_partition(g, part)
        if not any(is_isomorphic(r, seen) for seen in roots):
            roots.append(r)
    roots.sort(key=lambda r: (r.n, r.m, r.edges))
    return roots


def recognize_t_spider(h: Graph, cap: int = ROOT_CAP) -> SpiderParams | None:
    for root in line_roots(h, cap):
        p = recognize_spider(root)
        if p is not None:
            return p
    return None


def _components(g: Graph) -> list[Graph]:
    return [induced_by_mask(g, m) for m in component_masks(g)]


def in_s(g: Graph) -> bool:
    return all(recognize_spider(c) is not None for c in _components(g))


def in_t(g: Graph, cap: int = ROOT_CAP) -> bool:
    return all(recognize_t_spider(c, cap) is not None for c in _components(g))


# -- kappa and lambda ------------------------------------------------------


def least_h_obstruction(g: Graph) -> float:
    """Least i with H_i induced in G, or INFINITE."""
    for i in range(1, g.n - 4):
        if contains_induced(g, h_obstruction(i)) is not None:
            return i
    return INFINITE


def kappa(g: Graph) -> float:
    if contains_induced(g, star(4)) is not None:
        return 0
    if in_s(g):
        return INFINITE
    bound = min(girth(g), least_h_obstruction(g)) - 1
    return 0 if bound < 3 else bound


def lambda_(g: Graph, cap: int = ROOT_CAP) -> float:
    best = INFINITE
    for c in _components(g):
        roots = line_roots(c, cap)
        if not roots:
            return 0
        best = min(best, max(kappa(r) for r in roots))
    return best


# -- classification --------------------------------------------------------


def _params(p: SpiderParams) -> list[int]:
    return list(p.astuple())


def classify_monogenic(h: Graph) -> Classification:
    if recognize_union_of_paths(h):
        return Classification(Verdict.BOUNDED, "path-union", {})
    if not _is_forest(h):
        return Classification(Verdict.UNBOUNDED, "cycle-large-girth", {"girth": girth(h)})
    v = max(range(h.n), key=lambda x: (h.degree(x), -x))
    return Classification(Verdict.UNBOUNDED, "claw-unit-interval", {"vertex": v, "degree": h.degree(v)})


S222 = spider(2, 2, 2)
T222 = t_spider(2, 2, 2)


def classify_bigenic(a: Graph, b: Graph, cap: int = ROOT_CAP) -> Classification:
    """Verdict for Free({A, B}) with A and B connected.

    Reason codes for unbounded verdicts: ``no-common-S-or-T`` when neither
    graph lies in S or neither lies in T, ``contains-S222`` when the S-member
    contains S_{2,2,2}, ``contains-T222`` when the T-member contains T_{2,2,2}.
    """
    for g in (a, b):
        if g.n == 0 or not is_connected(g):
            raise DisconnectedInput("both forbidden graphs must be connected")
    for idx, g in enumerate((a, b)):
        length = recognize_path(g)
        if length is not None:
            return Classification(Verdict.BOUNDED, "path", {"member": idx, "length": length})
    sp = [recognize_spider(a), recognize_spider(b)]
    tp = [recognize_t_spider(a, cap), recognize_t_spider(b, cap)]
    if sp == [None, None] or tp == [None, None]:
        return Classification(
            Verdict.UNBOUNDED,
            "no-common-S-or-T",
            {"in_S": [p is not None for p in sp], "in_T": [p is not None for p in tp]},
        )
    # Neither is a path, so a member of S is not in T and vice versa.
    s_idx = 0 if sp[0] is not None else 1
    t_idx = 1 - s_idx
    s_graph, t_graph = (a, b) if s_idx == 0 else (b, a)
    emb = contains_induced(s_graph, S222)
    if emb is not None:
        return Classification(Verdict.UNBOUNDED, "contains-S222", {"member": s_idx, "embedding": emb})
    emb = contains_induced(t_graph, T222)
    if emb is not None:
        return Classification(Verdict.UNBOUNDED, "contains-T222", {"member": t_idx, "embedding": emb})
    return Classification(
        Verdict.BOUNDED,
        "spider-pair",
        {"S_member": s_idx, "S_params": _params(sp[s_idx]), "T_member": t_idx, "T_params": _params(tp[t_idx])},
    )


def _fmt_inf(x: float):
    return "inf" if x == INFINITE else int(x)


def classify_set(family: Sequence[Graph], cap: int = ROOT_CAP) -> Classification:
    family = list(family)
    if not family:
        raise EmptyFamily("need at least one forbidden graph")
    for idx, h in enumerate(family):
        if recognize_union_of_paths(h):
            return Classification(Verdict.BOUNDED, "member-path-union", {"member": idx})
    connected = [i for i, h in enumerate(family) if h.n and is_connected(h)]
    for x in connected:
        for y in connected:
            if x < y:
                c = classify_bigenic(family[x], family[y], cap)
                if c.verdict is Verdict.BOUNDED:
                    return Classification(Verdict.BOUNDED, "bounded-pair", {"members": [x, y], "pair": c.as_dict()})
    kappas = [kappa(h) for h in family]
    if max(kappas) != INFINITE:
        return Classification(Verdict.UNBOUNDED, "kappa-finite", {"kappa": [_fmt_inf(k) for k in kappas]})
    lambdas = [lambda_(h, cap) for h in family]
    if max(lambdas) != INFINITE:
        return Classification(Verdict.UNBOUNDED, "lambda-finite", {"lambda": [_fmt_inf(x) for x in lambdas]})
    if len(family) == 1:
        return classify_monogenic(family[0])
    return Classification(Verdict.UNKNOWN, "outside-decided-cases", {})


__all__ = [
    "Classification",
    "DisconnectedInput",
    "EmptyFamily",
    "RootCapExceeded",
    "Verdict",
    "classify_bigenic",
    "classify_monogenic",
    "classify_set",
    "in_s",
    "in_t",
    "kappa",
    "lambda_",
    "least_h_obstruction",
    "line_roots",
    "recognize_path",
    "recognize_spider",
    "recognize_t_spider",
    "recognize_union_of_paths",
]
