"""Immutable simple undirected graphs on dense integer vertices.

Vertices are ``0 .. n-1``.  Every mutation returns a new :class:`Graph`; the
original is never touched, so graphs can be shared freely between threads
and worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with O(1) edge queries.

    Build instances with :func:`build_graph`; the constructor trusts its
    input and is meant for internal use.
    """

    __slots__ = ("_n", "_edges", "_adj", "_masks", "_hash")

    def __init__(self, n: int, edges: frozenset[Edge]):
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._edges = edges
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks: tuple[int, ...] | None = None
        self._hash: int | None = None

    def _modified(self, new_n: int, add: Iterable[Edge] = (), remove: Iterable[Edge] = ()) -> "Graph":
        """Copy with vertices appended and edges changed; inputs pre-validated.

        Reuses untouched neighbour sets, so a small edit costs O(n + delta)
        plus the frozenset copy.
        """
        add = [_norm(u, v) for u, v in add]
        remove = [_norm(u, v) for u, v in remove]
        adj = list(self._adj) + [frozenset()] * (new_n - self._n)
        touched: dict[int, set[int]] = {}
        for u, v in remove:
            touched.setdefault(u, set(adj[u])).discard(v)
            touched.setdefault(v, set(adj[v])).discard(u)
        for u, v in add:
            touched.setdefault(u, set(adj[u])).add(v)
            touched.setdefault(v, set(adj[v])).add(u)
        for v, s in touched.items():
            adj[v] = frozenset(s)
        g = Graph.__new__(Graph)
        g._n = new_n
        g._edges = (self._edges - frozenset(remove)) | frozenset(add)
        g._adj = tuple(adj)
        g._masks = None
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset[Edge]:
        """Edges as ``(u, v)`` tuples with ``u < v``."""
        return self._edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _norm(u, v) in self._edges

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as Python-int bitsets, cached on first use."""
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in a) for a in self._adj)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Normalise an edge list into a :class:`Graph`.

    Duplicate pairs (in either orientation) collapse to one edge.

    Raises:
        ValueError: on a negative vertex count, an endpoint outside
            ``[0, n)``, or a self-loop.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    normed = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        normed.add(_norm(u, v))
    return Graph(n, frozenset(normed))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(k: int) -> Graph:
    return Graph(k, frozenset((u, v) for u in range(k) for v in range(u + 1, k)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Return ``g`` without edge ``e``; raises ``ValueError`` if absent."""
    key = _norm(*e)
    if key not in g.edges:
        raise ValueError(f"edge {tuple(e)} not in graph")
    return Graph(g.n, g.edges - {key})


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"invalid edge {tuple(e)}")
    return Graph(g.n, g.edges | {_norm(u, v)})


def add_vertices(g: Graph, count: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Append ``count`` fresh vertices (ids ``n .. n+count-1``) plus edges."""
    return build_graph(g.n + count, list(g.edges) + [tuple(e) for e in edges])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``keep`` relabelled densely in ascending order.

    Returns the subgraph and the list mapping new ids to old ids.
    """
    old = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(old)}
    edges = frozenset(
        (new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id
    )
    return Graph(len(old), edges), old


def remove_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(drop)
    return induced_subgraph(g, (v for v in g.vertices() if v not in drop))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Map vertex ``v`` to ``perm[v]``; ``perm`` must be a permutation."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    return Graph(g.n, frozenset(_norm(perm[u], perm[v]) for u, v in g.edges))


def permute(g: Graph, seed: int) -> tuple[Graph, list[int]]:
    """Relabel ``g`` by a uniformly random permutation drawn from ``seed``.

    ``perm[v]`` is the new id of old vertex ``v``; use it to carry hidden
    covers across.  The same ``(g, seed)`` always yields the same output.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    perm = [int(x) for x in rng.permutation(g.n)]
    return relabel(g, perm), perm


# ---------------------------------------------------------------- structure


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    articulation_vertices: frozenset[int]
    equivalence_classes: tuple[frozenset[int], ...]

    @property
    def n_classes(self) -> int:
        return len(self.equivalence_classes)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def articulation_vertices(g: Graph) -> frozenset[int]:
    """Cut vertices via an iterative Hopcroft-Tarjan low-link traversal."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    timer = 0
    nbrs = [sorted(g.neighbors(v)) for v in g.vertices()]
    for root in g.vertices():
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent, next neighbour index)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(nbrs[v]):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[v][i]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return frozenset(cut)


def neighbor_equivalent(g: Graph, u: int, v: int) -> bool:
    """Adjacent ``u, v`` with ``N(u) - {v} == N(v) - {u}``."""
    if not g.has_edge(u, v):
        return False
    return g.neighbors(u) - {v} == g.neighbors(v) - {u}


def equivalence_classes(g: Graph) -> tuple[frozenset[int], ...]:
    """Partition into neighbour-equivalence classes.

    The relation is transitive, so checking adjacent pairs and merging
    with union-find gives the classes in O(m * max degree).
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if g.degree(u) == g.degree(v) and neighbor_equivalent(g, u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, set[int]] = {}
    for v in g.vertices():
        groups.setdefault(find(v), set()).add(v)
    return tuple(frozenset(groups[r]) for r in sorted(groups))


def analyze(g: Graph) -> StructureReport:
    return StructureReport(
        connected=is_connected(g),
        articulation_vertices=articulation_vertices(g),
        equivalence_classes=equivalence_classes(g),
    )
