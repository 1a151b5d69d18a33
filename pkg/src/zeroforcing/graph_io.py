"""Graph text formats: edge list, DIMACS-like, and DOT export."""

from __future__ import annotations

from typing import Mapping

from .graphs import Graph, build_graph

__all__ = [
    "read_edge_list",
    "write_edge_list",
    "read_dimacs",
    "parse_graph",
    "to_dot",
]


def _tokenize(text: str, comment: str) -> list[tuple[int, list[str]]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(comment, 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    return rows


def read_edge_list(text: str, duplicates: str = "error") -> Graph:
    """Parse the canonical edge-list format.

    First non-comment line is ``n m``, followed by m lines ``u v`` with
    0-indexed endpoints. ``#`` starts a comment.
    """
    rows = _tokenize(text, "#")
    if not rows:
        raise ValueError("empty graph file")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ValueError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"line {lineno}: header 'n m' must be integers") from None
    edges = []
    for lineno, tok in rows[1:]:
        if len(tok) != 2:
            raise ValueError(f"line {lineno}: expected edge 'u v'")
        try:
            edges.append((int(tok[0]), int(tok[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: edge endpoints must be integers") from None
    if len(edges) != m:
        raise ValueError(f"header declares {m} edges but {len(edges)} were given")
    return build_graph(n, edges, duplicates=duplicates)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_dimacs(text: str, duplicates: str = "error") -> Graph:
    """Parse a DIMACS-like format: ``p edge n m`` then ``e u v`` (1-indexed)."""
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(tok) != 4:
                raise ValueError(f"line {lineno}: expected 'p edge n m'")
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise ValueError(f"line {lineno}: 'p' line needs integer n m") from None
        elif tok[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            if len(tok) != 3:
                raise ValueError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise ValueError(f"line {lineno}: edge endpoints must be integers") from None
            edges.append((u - 1, v - 1))
        else:
            raise ValueError(f"line {lineno}: unknown line type {tok[0]!r}")
    if n is None:
        raise ValueError("missing problem line 'p edge n m'")
    if len(edges) != m:
        raise ValueError(f"problem line declares {m} edges but {len(edges)} were given")
    return build_graph(n, edges, duplicates=duplicates)


def parse_graph(text: str, fmt: str = "auto", duplicates: str = "error") -> Graph:
    """Parse ``text`` as an edge list or DIMACS, auto-detecting by default."""
    if fmt == "auto":
        fmt = "edgelist"
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith(("c ", "c\t", "p ")) or line == "c":
                fmt = "dimacs"
            break
    if fmt == "edgelist":
        return read_edge_list(text, duplicates=duplicates)
    if fmt == "dimacs":
        return read_dimacs(text, duplicates=duplicates)
    raise ValueError(f"unknown graph format {fmt!r}")


def to_dot(g: Graph, colors: Mapping[int, str] | None = None, name: str = "G") -> str:
    """Render the graph in DOT. ``colors`` maps vertices to fill colors."""
    out = [f"graph {name} {{"]
    for v in range(g.n):
        if colors and v in colors:
            out.append(f'  {v} [style=filled, fillcolor="{colors[v]}"];')
        else:
            out.append(f"  {v};")
    for u, v in g.sorted_edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
