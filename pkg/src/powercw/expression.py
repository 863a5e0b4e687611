"""Clique-width expressions: construction trees over create/union/join/relabel.

Text form (one S-expression, whitespace-insensitive)::

    expr := "(" "create" LABEL [ "v" VERTEX ] ")"
          | "(" "union" expr expr ")"
          | "(" "join" LABEL LABEL expr ")"
          | "(" "relabel" FROM TO expr ")"

Labels are positive integers.  The optional ``vN`` tag on a leaf records which
vertex of the target graph the leaf stands for; evaluation ignores it and
numbers vertices by leaf order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union as TUnion

from .graph import Graph, GraphError


class ExpressionError(GraphError):
    pass


@dataclass(frozen=True)
class Create:
    label: int
    vertex: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Union:
    left: "CwExpression"
    right: "CwExpression"


@dataclass(frozen=True)
class Join:
    i: int
    j: int
    child: "CwExpression"


@dataclass(frozen=True)
class Relabel:
    src: int
    dst: int
    child: "CwExpression"


CwExpression = TUnion[Create, Union, Join, Relabel]


def _check_label(label: int, width: int | None) -> None:
    if label < 1:
        raise ExpressionError(f"labels must be positive, got {label}")
    if width is not None and label > width:
        raise ExpressionError(f"label {label} exceeds declared width {width}")


def evaluate_labeled(e: CwExpression, width: int | None = None) -> tuple[Graph, list[int], list[int | None]]:
    """Evaluate to (graph, final label per vertex, leaf vertex tags), vertices in leaf order."""
    labels: list[int] = []
    tags: list[int | None] = []
    edges: list[tuple[int, int]] = []

    # Each frame returns the contiguous vertex range it produced.
    def walk(node) -> tuple[int, int]:
        if isinstance(node, Create):
            _check_label(node.label, width)
            labels.append(node.label)
            tags.append(node.vertex)
            return len(labels) - 1, len(labels)
        if isinstance(node, Union):
            a, _ = walk(node.left)
            _, b = walk(node.right)
            return a, b
        if isinstance(node, Join):
            _check_label(node.i, width)
            _check_label(node.j, width)
            if node.i == node.j:
                raise ExpressionError(f"join needs two different labels, got {node.i} twice")
            a, b = walk(node.child)
            left = [v for v in range(a, b) if labels[v] == node.i]
            right = [v for v in range(a, b) if labels[v] == node.j]
            edges.extend((u, v) for u in left for v in right)
            return a, b
        if isinstance(node, Relabel):
            _check_label(node.src, width)
            _check_label(node.dst, width)
            a, b = walk(node.child)
            for v in range(a, b):
                if labels[v] == node.src:
                    labels[v] = node.dst
            return a, b
        raise ExpressionError(f"not an expression node: {node!r}")

    walk(e)
    return Graph(len(labels), edges), labels, tags


def eval_expression(e: CwExpression, width: int | None = None) -> Graph:
    return evaluate_labeled(e, width)[0]


def eval_on_tagged_vertices(e: CwExpression, n: int) -> Graph:
    """Evaluate and rename each leaf to its ``vertex`` tag (all leaves must be tagged)."""
    g, _, tags = evaluate_labeled(e)
    if any(t is None for t in tags) or sorted(tags) != list(range(n)):
        raise ExpressionError("leaf tags must be a permutation of 0..n-1")
    return Graph(n, [(tags[u], tags[v]) for u, v in g.edges])


def expression_width(e: CwExpression) -> int:
    """Largest label mentioned anywhere in the expression."""
    best = 0
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Create):
            best = max(best, node.label)
        elif isinstance(node, Union):
            stack += [node.left, node.right]
        elif isinstance(node, Join):
            best = max(best, node.i, node.j)
            stack.append(node.child)
        else:
            best = max(best, node.src, node.dst)
            stack.append(node.child)
    return best


def format_expression(e: CwExpression) -> str:
    if isinstance(e, Create):
        return f"(create {e.label})" if e.vertex is None else f"(create {e.label} v{e.vertex})"
    if isinstance(e, Union):
        return f"(union {format_expression(e.left)} {format_expression(e.right)})"
    if isinstance(e, Join):
        return f"(join {e.i} {e.j} {format_expression(e.child)})"
    return f"(relabel {e.src} {e.dst} {format_expression(e.child)})"


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_expression(text: str) -> CwExpression:
    tokens = _TOKEN.findall(text)
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ExpressionError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        return tok

    def label() -> int:
        tok = take()
        if not tok.isdigit():
            raise ExpressionError(f"expected a label, got {tok!r}")
        return int(tok)

    def expr():
        if take() != "(":
            raise ExpressionError("expected '('")
        op = take()
        if op == "create":
            lab = label()
            vertex = None
            if tokens[pos:pos + 1] and tokens[pos].startswith("v"):
                vertex = int(take()[1:])
            node = Create(lab, vertex)
        elif op == "union":
            node = Union(expr(), expr())
        elif op == "join":
            node = Join(label(), label(), expr())
        elif op == "relabel":
            node = Relabel(label(), label(), expr())
        else:
            raise ExpressionError(f"unknown operation {op!r}")
        if take() != ")":
            raise ExpressionError(f"expected ')' after {op}")
        return node

    node = expr()
    if pos != len(tokens):
        raise ExpressionError("trailing tokens after expression")
    return node


def relabel_all(e: CwExpression, labels, dst: int) -> CwExpression:
    """Wrap ``e`` in relabels sending every label in ``labels`` to ``dst``."""
    for lab in sorted(set(labels)):
        if lab != dst:
            e = Relabel(lab, dst, e)
    return e


def union_all(parts: list[CwExpression]) -> CwExpression:
    out = parts[0]
    for p in parts[1:]:
        out = Union(out, p)
    return out


def substitute_leaves(e: CwExpression, by_vertex) -> CwExpression:
    """Replace each tagged leaf ``create(l) vN`` by ``by_vertex(N, l)``."""
    if isinstance(e, Create):
        return by_vertex(e.vertex, e.label)
    if isinstance(e, Union):
        return Union(substitute_leaves(e.left, by_vertex), substitute_leaves(e.right, by_vertex))
    if isinstance(e, Join):
        return Join(e.i, e.j, substitute_leaves(e.child, by_vertex))
    return Relabel(e.src, e.dst, substitute_leaves(e.child, by_vertex))
