"""DIMACS ``edge`` format: ``c`` comments, one ``p edge N M`` header, M ``e`` lines.

Vertex ids are 1-based on disk and 0-based in memory.
"""

from __future__ import annotations

import io
import os
from typing import IO, Iterable

from .graph import Graph, build_graph


class DimacsError(ValueError):
    pass


def parse_dimacs(lines: Iterable[str]) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise DimacsError(f"line {lineno}: negative counts in header")
        elif parts[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed edge {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: endpoint out of range in {line!r}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {line!r}")
    if n is None:
        raise DimacsError("missing problem line")
    if len(edges) != m:
        raise DimacsError(f"header declares {m} edges, found {len(edges)}")
    g = build_graph(n, edges)
    if g.m != m:
        raise DimacsError(f"duplicate edges: {m} lines but {g.m} distinct edges")
    return g


def format_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    out = io.StringIO()
    for c in comments:
        out.write(f"c {c}\n")
    out.write(f"p edge {g.n} {g.m}\n")
    for u, v in g.sorted_edges():
        out.write(f"e {u + 1} {v + 1}\n")
    return out.getvalue()


def read_dimacs(source: str | os.PathLike | IO[str]) -> Graph:
    if hasattr(source, "read"):
        return parse_dimacs(source)
    with open(source) as fh:
        return parse_dimacs(fh)


def write_dimacs(g: Graph, dest: str | os.PathLike | IO[str], comments: Iterable[str] = ()) -> None:
    text = format_dimacs(g, comments)
    if hasattr(dest, "write"):
        dest.write(text)
        return
    with open(dest, "w", newline="\n") as fh:
        fh.write(text)
