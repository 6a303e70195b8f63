"""Graph ingestion: plain edge lists and JSON."""

from __future__ import annotations

import json

from .graph import Graph


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _ints(line: str, lineno: int, count: int) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise GraphFormatError(f"expected {count} integers, found {len(fields)}", lineno)
    out = []
    col = 0
    for f in fields:
        col = line.index(f, col)
        if not f.isdigit():
            raise GraphFormatError(f"not a nonnegative integer: {f!r}", lineno, col + 1)
        out.append(int(f))
        col += len(f)
    return out


def parse_edge_list(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``i j`` (1-based).

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("missing 'n m' header", 1)
    lineno, header = rows[0]
    n, m = _ints(header, lineno, 2)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}", where)
    edges = []
    seen = set()
    for lineno, line in body:
        i, j = _ints(line, lineno, 2)
        for v in (i, j):
            if not 1 <= v <= n:
                col = line.index(str(v)) + 1
                raise GraphFormatError(f"vertex {v} out of range 1..{n}", lineno, col)
        if i == j:
            raise GraphFormatError(f"loop at vertex {i}", lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {i}-{j}", lineno)
        seen.add(key)
        edges.append((i, j))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def graph_from_json(data) -> Graph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or set(data) != {"n", "edges"}:
        raise GraphFormatError("expected an object with keys 'n' and 'edges'", 1)
    n, edges = data["n"], data["edges"]
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError("'n' must be a nonnegative integer", 1)
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e) for e in edges
    ):
        raise GraphFormatError("'edges' must be a list of [i, j] integer pairs", 1)
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc), 1) from None


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def parse_inline_edges(text: str) -> Graph:
    """``"1-2,2-3"``; the vertex count is the largest label."""
    edges = []
    for pos, part in enumerate(text.split(",")):
        part = part.strip()
        if not part:
            continue
        bits = part.split("-")
        if len(bits) != 2 or not all(b.strip().isdigit() for b in bits):
            raise GraphFormatError(f"bad edge {part!r} (expected i-j)", 1, pos + 1)
        edges.append((int(bits[0]), int(bits[1])))
    try:
        return Graph.from_edges(edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc), 1) from None


def load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return graph_from_json(text)
    return parse_edge_list(text)
