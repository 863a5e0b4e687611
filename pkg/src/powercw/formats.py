"""Edge-list, graph6 and DOT serialization.

Edge-list documents look like::

    # optional comments
    p 3
    e 0 1
    e 1 2

graph6 follows the nauty format description: a size prefix N(n) followed by
the upper triangle of the adjacency matrix, column by column, packed six
bits per printable byte (value + 63).
"""
from __future__ import annotations

import sys
from pathlib import Path
from typing import Iterable, Sequence

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 258047


class FormatError(GraphError):
    pass


# -- edge list -----------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise FormatError(f"line {lineno}: malformed header {line!r}")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before header")
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise FormatError(f"line {lineno}: malformed edge {line!r}")
            pairs.append((int(parts[1]), int(parts[2])))
        else:
            raise FormatError(f"line {lineno}: unknown record {line!r}")
    if n is None:
        raise FormatError("missing 'p <n>' header")
    try:
        return Graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def serialize_edgelist(g: Graph) -> str:
    lines = [f"p {g.n}"] + [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines)


# -- graph6 --------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n < 0 or n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 supports 0 <= n <= {GRAPH6_MAX_N}, got {n}")
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    rows = g.rows
    for j in range(1, g.n):
        for i in range(j):
            bits.append((rows[i] >> j) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_size(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"invalid graph6 byte {ch!r}")
    data = [ord(ch) - 63 for ch in s]
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            raise FormatError("graph6 sizes above 258047 are not supported")
        if len(data) < 4:
            raise FormatError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 bit-vector has {len(body)} bytes, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("non-zero padding bits in graph6 string")
    return Graph(n, edges)


# -- DOT -----------------------------------------------------------------


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, labels: Sequence[str] | None = None) -> str:
    if labels is not None and len(labels) != g.n:
        raise FormatError(f"expected {g.n} labels, got {len(labels)}")
    lines = ["graph G {"]
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f"  {v} [label={_dot_quote(str(labels[v]))}];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- files ---------------------------------------------------------------


def _format_for(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    if path.endswith(".g6"):
        return "g6"
    if path.endswith(".dot"):
        return "dot"
    return "el"


def parse_many(text: str, fmt: str) -> list[Graph]:
    if fmt == "g6":
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if fmt == "el":
        return [parse_edgelist(text)]
    raise FormatError(f"cannot parse format {fmt!r}")


def read_graphs(path: str, fmt: str | None = None) -> list[Graph]:
    """Read every graph in a file ('-' for stdin); .g6 files may hold many."""
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_many(text, _format_for(path, fmt))


def read_graph(path: str, fmt: str | None = None) -> Graph:
    graphs = read_graphs(path, fmt)
    if len(graphs) != 1:
        raise FormatError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def dumps(graphs: Iterable[Graph], fmt: str) -> str:
    graphs = list(graphs)
    if fmt == "g6":
        return "".join(to_graph6(g) + "\n" for g in graphs)
    if fmt == "dot":
        return "".join(to_dot(g) for g in graphs)
    if fmt == "el":
        if len(graphs) != 1:
            raise FormatError("edge-list documents hold exactly one graph")
        return serialize_edgelist(graphs[0]) + "\n"
    raise FormatError(f"unknown format {fmt!r}")


def write_graphs(path: str, graphs: Iterable[Graph], fmt: str | None = None) -> None:
    text = dumps(graphs, _format_for(path, fmt))
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
