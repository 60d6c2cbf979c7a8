"""Criticality-preserving graph extensions with a maintained minimum cover.

Each extension appends fresh vertices with ids ``n, n+1, ...`` and updates
the tracked cover by a constant-time rule; nothing is re-solved.  The shrink
operations undo parallel and chain extensions on plain graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .criticality import is_critical
from .graph import Graph, _norm, build_graph, complete_graph, neighbor_equivalent, remove_vertices
from .solver import SolveBudget, mvc

PARALLEL, CHAIN, SPLIT, PASTE = "parallel", "chain", "split", "paste"


@dataclass(frozen=True)
class ExtensionStep:
    kind: str
    params: tuple
    new_vertices: tuple[int, ...]

    def to_line(self) -> str:
        new = ",".join(map(str, self.new_vertices))
        if self.kind == PARALLEL:
            (v,) = self.params
            return f"parallel v={v} new={new}"
        if self.kind == CHAIN:
            u, v = self.params
            return f"chain u={u} v={v} new={new}"
        if self.kind == SPLIT:
            u, F = self.params
            return f"split u={u} F={','.join(map(str, F))} new={new}"
        raise ValueError(f"cannot serialise step kind {self.kind!r}")

    @classmethod
    def from_line(cls, line: str) -> "ExtensionStep":
        kind, *fields = line.split()
        kv = dict(f.split("=", 1) for f in fields)
        new = tuple(int(x) for x in kv["new"].split(","))
        if kind == PARALLEL:
            return cls(kind, (int(kv["v"]),), new)
        if kind == CHAIN:
            return cls(kind, (int(kv["u"]), int(kv["v"])), new)
        if kind == SPLIT:
            return cls(kind, (int(kv["u"]), tuple(int(x) for x in kv["F"].split(","))), new)
        raise ValueError(f"unknown step kind {kind!r}")


@dataclass(frozen=True)
class TrackedGraph:
    """A graph together with one known minimum vertex cover.

    ``critical`` is a provenance claim: true when the construction started
    from a verified critical seed and used only criticality-preserving
    steps.
    """

    graph: Graph
    cover: frozenset[int]
    critical: bool
    trace: tuple[ExtensionStep, ...] = ()
    root: str = ""

    @property
    def cover_size(self) -> int:
        return len(self.cover)

    @classmethod
    def clique(cls, k: int) -> "TrackedGraph":
        """``K_k`` with cover ``{0, .., k-2}``."""
        if k < 1:
            raise ValueError("clique size must be >= 1")
        return cls(complete_graph(k), frozenset(range(k - 1)), True, (), f"clique {k}")

    @classmethod
    def from_verified(cls, g: Graph, budget: SolveBudget | None = None) -> "TrackedGraph":
        """Seed from an arbitrary graph after checking it is critical."""
        verdict = is_critical(g, budget)
        if not verdict.critical:
            raise ValueError(f"seed graph is not verified critical ({verdict.status.value})")
        res = mvc(g, budget)
        edges = ",".join(f"{u}-{v}" for u, v in g.sorted_edges())
        cover = ",".join(map(str, sorted(res.cover)))
        return cls(g, res.cover, True, (), f"graph n={g.n} edges={edges} cover={cover}")

    def format_trace(self) -> str:
        return "\n".join([f"root {self.root}"] + [s.to_line() for s in self.trace]) + "\n"


def _root_from_line(line: str) -> TrackedGraph:
    parts = line.split()
    if parts[:2] == ["root", "clique"]:
        return TrackedGraph.clique(int(parts[2]))
    if parts[:2] == ["root", "graph"]:
        kv = dict(f.split("=", 1) for f in parts[2:])
        n = int(kv["n"])
        edges = [tuple(int(x) for x in e.split("-")) for e in kv["edges"].split(",") if e]
        cover = frozenset(int(x) for x in kv["cover"].split(",") if x)
        return TrackedGraph(build_graph(n, edges), cover, True, (), " ".join(parts[1:]))
    raise ValueError(f"bad root line {line!r}")


def replay_trace(text: str) -> TrackedGraph:
    """Rebuild a tracked graph from :meth:`TrackedGraph.format_trace` output."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    tg = _root_from_line(lines[0])
    for line in lines[1:]:
        step = ExtensionStep.from_line(line)
        if step.kind == PARALLEL:
            tg = parallel_extend(tg, *step.params)
        elif step.kind == CHAIN:
            tg = chain_extend(tg, step.params)
        else:
            tg = split_vertex(tg, *step.params)
        if tg.trace[-1] != step:
            raise ValueError(f"replay diverged at {line!r}")
    return tg


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")


def _append(tg: TrackedGraph, graph: Graph, cover: frozenset[int], step: ExtensionStep) -> TrackedGraph:
    return replace(tg, graph=graph, cover=cover, trace=tg.trace + (step,))


def parallel_extend(tg: TrackedGraph, v: int) -> TrackedGraph:
    """Add ``u`` adjacent to ``v`` and all of ``N(v)``; cover gains ``u``."""
    g = tg.graph
    _check_vertex(g, v)
    u = g.n
    add = [(u, v)] + [(u, w) for w in g.neighbors(v)]
    h = g._modified(g.n + 1, add)
    return _append(tg, h, tg.cover | {u}, ExtensionStep(PARALLEL, (v,), (u,)))


def chain_extend(tg: TrackedGraph, e: Sequence[int]) -> TrackedGraph:
    """Replace edge ``(u, v)`` by the path ``u - x - y - v``.

    The cover gains ``y`` when ``u`` is covered and ``x`` otherwise.
    """
    g = tg.graph
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge {tuple(e)} not in graph")
    if g.n < 3:
        raise ValueError("chain extension needs a seed with at least 3 vertices")
    x, y = g.n, g.n + 1
    h = g._modified(g.n + 2, add=[(u, x), (x, y), (y, v)], remove=[(u, v)])
    cover = tg.cover | {y if u in tg.cover else x}
    return _append(tg, h, cover, ExtensionStep(CHAIN, (u, v), (x, y)))


def split_vertex(tg: TrackedGraph, u: int, F: Iterable[int]) -> TrackedGraph:
    """Split ``u``: new ``v ~ u``, ``w ~ v``, and the edges ``u - F`` move to ``w``.

    The cover gains ``w`` when ``u`` is covered and ``v`` otherwise.  The
    cover stays minimum for any non-empty ``F``, but criticality survives
    only when ``F`` is a proper subset of ``N(u)``: with ``F = N(u)`` the
    vertex ``u`` is left pendant, so the result is flagged non-critical.
    """
    g = tg.graph
    _check_vertex(g, u)
    F = tuple(sorted(set(F)))
    if g.degree(u) < 2:
        raise ValueError(f"vertex {u} has degree {g.degree(u)} < 2")
    if not F or not set(F) <= g.neighbors(u):
        raise ValueError("F must be a non-empty subset of N(u)")
    v, w = g.n, g.n + 1
    add = [(u, v), (v, w)] + [(w, f) for f in F]
    h = g._modified(g.n + 2, add=add, remove=[(u, f) for f in F])
    cover = tg.cover | {w if u in tg.cover else v}
    out = _append(tg, h, cover, ExtensionStep(SPLIT, (u, F), (v, w)))
    if len(F) == g.degree(u):
        out = replace(out, critical=False)
    return out


def paste(
    tg1: TrackedGraph,
    e: Sequence[int],
    g2: Graph | TrackedGraph,
    w: int,
    assignment: Mapping[int, int],
    budget: SolveBudget | None = None,
) -> tuple[Graph, int]:
    """Paste ``g2`` into ``tg1`` through edge ``e`` and vertex ``w``.

    Returns the pasted graph and its minimum cover *size*; pasting keeps
    the size but not a concrete cover.  ``g1`` keeps its ids, the vertices
    of ``g2`` other than ``w`` follow in ascending order.
    """
    g1 = tg1.graph
    u, v = e
    if not g1.has_edge(u, v):
        raise ValueError(f"edge {tuple(e)} not in first graph")
    if isinstance(g2, TrackedGraph):
        c2 = g2.cover_size
        g2 = g2.graph
    else:
        res = mvc(g2, budget)
        if not res.exact:
            raise RuntimeError("could not solve second graph exactly")
        c2 = res.size
    _check_vertex(g2, w)
    nw = g2.neighbors(w)
    if len(nw) < 2:
        raise ValueError(f"vertex {w} has degree {len(nw)} < 2")
    if set(assignment) != set(nw):
        raise ValueError("assignment must map exactly the neighbours of w")
    if not set(assignment.values()) <= {u, v}:
        raise ValueError("assignment targets must be endpoints of e")
    if set(assignment.values()) != {u, v}:
        raise ValueError("both endpoints of e must be chosen at least once")
    n1 = g1.n
    new_id = {x: n1 + i for i, x in enumerate(y for y in g2.vertices() if y != w)}
    edges = [ed for ed in g1.edges if ed != _norm(u, v)]
    edges += [(new_id[a], new_id[b]) for a, b in g2.edges if w not in (a, b)]
    edges += [(new_id[x], assignment[x]) for x in sorted(nw)]
    return build_graph(n1 + g2.n - 1, edges), tg1.cover_size + c2 - 1


def _shrunk_cover(cover, old_ids):
    new_id = {old: i for i, old in enumerate(old_ids)}
    return frozenset(new_id[c] for c in cover if c in new_id)


def shrink_parallel(g: Graph, u: int, v: int, known_cover: Iterable[int] | None = None):
    """Delete ``u`` where ``u, v`` are adjacent and neighbour-equivalent.

    Remaining vertices are renumbered densely.  With ``known_cover`` (a
    minimum cover of ``g``) returns ``(graph, cover)``; the cover shrinks
    by exactly one.
    """
    if not neighbor_equivalent(g, u, v):
        raise ValueError(f"({u}, {v}) is not a neighbour-equivalent edge")
    h, old_ids = remove_vertices(g, [u])
    if known_cover is None:
        return h
    cover = set(known_cover)
    if u not in cover:
        # swap roles: N(v) - {u} = N(u) - {v} is already covered
        cover.discard(v)
        cover.add(u)
    return h, _shrunk_cover(cover, old_ids)


def shrink_chain(g: Graph, x: int, y: int, known_cover: Iterable[int] | None = None):
    """Contract the adjacent degree-2 pair ``x, y`` into an edge ``{a, b}``."""
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    if g.degree(x) != 2 or g.degree(y) != 2:
        raise ValueError("both vertices must have degree 2")
    (a,) = g.neighbors(x) - {y}
    (b,) = g.neighbors(y) - {x}
    if a == b:
        raise ValueError("outer neighbours coincide; contraction would make a self-loop")
    h, old_ids = remove_vertices(g, [x, y])
    new_id = {old: i for i, old in enumerate(old_ids)}
    h = h._modified(h.n, add=[(new_id[a], new_id[b])])
    if known_cover is None:
        return h
    cover = set(known_cover) - {x, y}
    if a not in cover and b not in cover:
        cover.add(a)
    return h, _shrunk_cover(cover, old_ids)
