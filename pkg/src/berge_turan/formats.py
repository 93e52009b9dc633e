"""Plain-text formats for graphs, hypergraphs and red-blue graphs.

Hypergraph::

    n r m
    v1 v2 ... vr        (m lines, strictly increasing ids)

Graph: ``n m`` then ``u v`` lines with ``u < v``.  Red-blue graph: ``n m``
then ``u v c`` with ``c`` in ``{R, B}``.  Lines starting with ``#`` are
comments.  Writers emit sorted lines, single spaces, a final newline and
nothing else, so ``parse(serialize(x)) == x`` and the bytes are stable.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .core import BLUE, RED, Graph, Hypergraph, RedBlueGraph

AnyStructure = Union[Graph, Hypergraph, RedBlueGraph]


class FormatError(ValueError):
    """Malformed input; ``line`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, line: int = 0, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line else f"{source}: "
        super().__init__(where + message)


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.split("\n"), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        out.append((no, s.split()))
    return out


def _ints(tokens: list[str], line: int, source: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", line, source) from None


def _header(rows, size: int, what: str, source: str) -> list[int]:
    if not rows:
        raise FormatError(f"empty {what} file", 0, source)
    no, toks = rows[0]
    if len(toks) != size:
        raise FormatError(f"{what} header needs {size} fields", no, source)
    vals = _ints(toks, no, source)
    if any(x < 0 for x in vals):
        raise FormatError("negative value in header", no, source)
    return vals


def _check_count(rows, m: int, source: str) -> None:
    if len(rows) - 1 != m:
        line = rows[-1][0] if len(rows) > m + 1 else 0
        raise FormatError(f"header promises {m} lines, found {len(rows) - 1}", line, source)


def parse_hypergraph(text: str, source: str = "<input>") -> Hypergraph:
    rows = _lines(text)
    n, r, m = _header(rows, 3, "hypergraph", source)
    if r < 1:
        raise FormatError("uniformity must be positive", rows[0][0], source)
    _check_count(rows, m, source)
    edges = []
    seen = set()
    for no, toks in rows[1:]:
        if len(toks) != r:
            raise FormatError(f"hyperedge needs {r} vertices", no, source)
        e = tuple(_ints(toks, no, source))
        if any(a >= b for a, b in zip(e, e[1:])):
            raise FormatError("hyperedge vertices must be strictly increasing", no, source)
        if e[0] < 0 or e[-1] >= n:
            raise FormatError(f"vertex out of range 0..{n - 1}", no, source)
        if e in seen:
            raise FormatError("duplicate hyperedge", no, source)
        seen.add(e)
        edges.append(e)
    return Hypergraph(n, r, tuple(sorted(edges)))


def _parse_pairs(text: str, source: str, colored: bool):
    rows = _lines(text)
    n, m = _header(rows, 2, "graph", source)
    _check_count(rows, m, source)
    width = 3 if colored else 2
    edges = {}
    for no, toks in rows[1:]:
        if len(toks) != width:
            raise FormatError(f"edge line needs {width} fields", no, source)
        u, v = _ints(toks[:2], no, source)
        if not u < v:
            raise FormatError("edge must satisfy u < v", no, source)
        if v >= n:
            raise FormatError(f"vertex out of range 0..{n - 1}", no, source)
        if (u, v) in edges:
            raise FormatError("duplicate edge", no, source)
        c = toks[2] if colored else None
        if colored and c not in (RED, BLUE):
            raise FormatError(f"colour must be R or B, got {c!r}", no, source)
        edges[(u, v)] = c
    return n, edges


def parse_graph(text: str, source: str = "<input>") -> Graph:
    rows = _lines(text)
    if len(rows) > 1 and len(rows[1][1]) == 3:
        raise FormatError("colour column found; this is a red-blue graph", rows[1][0], source)
    n, edges = _parse_pairs(text, source, colored=False)
    return Graph(n, tuple(sorted(edges)))


def parse_redblue(text: str, source: str = "<input>") -> RedBlueGraph:
    n, edges = _parse_pairs(text, source, colored=True)
    g = Graph(n, tuple(sorted(edges)))
    return RedBlueGraph.from_map(g, edges)


def parse_any(text: str, source: str = "<input>") -> AnyStructure:
    """Dispatch on the header width and the first body line."""
    rows = _lines(text)
    if not rows:
        raise FormatError("empty file", 0, source)
    if len(rows[0][1]) == 3:
        return parse_hypergraph(text, source)
    if len(rows) > 1 and len(rows[1][1]) == 3:
        return parse_redblue(text, source)
    return parse_graph(text, source)


def serialize(obj: AnyStructure) -> str:
    if isinstance(obj, Hypergraph):
        lines = [f"{obj.n} {obj.r} {obj.m}"]
        lines += [" ".join(map(str, e)) for e in obj.edges]
    elif isinstance(obj, RedBlueGraph):
        lines = [f"{obj.n} {obj.graph.m}"]
        lines += [f"{u} {v} {c}" for (u, v), c in zip(obj.graph.edges, obj.colors)]
    elif isinstance(obj, Graph):
        lines = [f"{obj.n} {obj.m}"]
        lines += [f"{u} {v}" for u, v in obj.edges]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def read(path: Union[str, Path]) -> AnyStructure:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"not UTF-8 ({exc.reason})", 0, str(p)) from None
    return parse_any(text, str(p))


def write(obj: AnyStructure, path: Union[str, Path]) -> None:
    Path(path).write_bytes(serialize(obj).encode("utf-8"))
