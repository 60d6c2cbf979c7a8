"""Edge-criticality checks for minimum vertex cover.

A connected graph is *critical* when deleting any edge lowers its minimum
cover size, and *reducible* otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Edge, Graph, add_vertices, articulation_vertices, is_connected
from .solver import SolveBudget, cover_at_most, mvc, mvc_constrained


class Verdict(str, enum.Enum):
    CRITICAL = "critical"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CriticalityVerdict:
    status: Verdict
    witness_edge: Edge | None
    base_cover_size: int | None

    @property
    def critical(self) -> bool:
        return self.status is Verdict.CRITICAL


def edge_is_critical(g: Graph, e: Sequence[int], c: int, budget: SolveBudget | None = None) -> bool | None:
    """Does deleting ``e`` drop the cover size below ``c = c(g)``?

    A cover of ``g - e`` of size ``c - 1`` cannot contain either endpoint
    (it would then cover ``e`` as well), so both endpoints are forced out.
    """
    u, v = e
    h = Graph(g.n, g.edges - {(min(u, v), max(u, v))})
    return cover_at_most(h, c - 1, forced_out=(u, v), budget=budget)


def is_critical(
    g: Graph,
    budget: SolveBudget | None = None,
    edges: Iterable[Sequence[int]] | None = None,
) -> CriticalityVerdict:
    """Classify a connected graph as critical or reducible.

    Edges are scanned in ascending order and the first non-critical one is
    reported as witness.  ``edges`` restricts the scan to a set of
    representatives, which is sound only when every edge of ``g`` is mapped
    onto one of them by an automorphism (e.g. one edge per offset of a
    circulant graph).

    Raises:
        ValueError: if ``g`` is disconnected.
    """
    if not is_connected(g):
        raise ValueError("criticality is defined for connected graphs only")
    base = mvc(g, budget)
    if not base.exact:
        return CriticalityVerdict(Verdict.UNKNOWN, None, None)
    c = base.size
    if g.m == 0:
        return CriticalityVerdict(Verdict.CRITICAL, None, c)

    cut = articulation_vertices(g)
    if cut:
        at_cut = sorted({e for e in g.edges if e[0] in cut or e[1] in cut})
        for e in at_cut:
            if edge_is_critical(g, e, c, budget) is False:
                return CriticalityVerdict(Verdict.REDUCIBLE, e, c)
        # fall through to a full scan; some edge must fail

    scan = g.sorted_edges() if edges is None else sorted({(min(u, v), max(u, v)) for u, v in edges})
    unknown = False
    for e in scan:
        verdict = edge_is_critical(g, e, c, budget)
        if verdict is False:
            return CriticalityVerdict(Verdict.REDUCIBLE, e, c)
        if verdict is None:
            unknown = True
    if unknown:
        return CriticalityVerdict(Verdict.UNKNOWN, None, c)
    return CriticalityVerdict(Verdict.CRITICAL, None, c)


def double_cover_holds(g: Graph, e: Sequence[int], budget: SolveBudget | None = None) -> bool:
    """Is there a minimum cover containing both endpoints of ``e``?"""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge {tuple(e)} not in graph")
    c = mvc(g, budget)
    both = mvc_constrained(g, forced_in=(u, v), budget=budget)
    _require_exact(c, both)
    return both.size == c.size


def graph_double_cover_holds(g: Graph, budget: SolveBudget | None = None) -> bool:
    return all(double_cover_holds(g, e, budget) for e in g.sorted_edges())


def _require_exact(*results) -> None:
    for r in results:
        if not r.exact:
            raise RuntimeError(f"solver returned {r.status.value}; raise the budget")


def _check_subset(g: Graph, U: Iterable[int]) -> frozenset[int]:
    U = frozenset(U)
    if not U:
        raise ValueError("vertex set must be non-empty")
    if any(not 0 <= u < g.n for u in U):
        raise ValueError("vertex set contains an invalid vertex")
    return U


def is_vco(g: Graph, U: Iterable[int], budget: SolveBudget | None = None) -> bool:
    """No minimum cover contains all of ``U``."""
    U = _check_subset(g, U)
    c = mvc(g, budget)
    with_u = mvc_constrained(g, forced_in=U, budget=budget)
    _require_exact(c, with_u)
    return with_u.size > c.size


def is_vcoo(g: Graph, U: Iterable[int], budget: SolveBudget | None = None) -> bool:
    """``U`` is a VCO and each ``u`` in ``U`` is the only member of ``U``
    missing from some minimum cover."""
    U = _check_subset(g, U)
    if not is_vco(g, U, budget):
        return False
    c = mvc(g, budget)
    for u in sorted(U):
        r = mvc_constrained(g, forced_in=U - {u}, forced_out={u}, budget=budget)
        if r.status.value == "infeasible":
            return False
        _require_exact(r)
        if r.size != c.size:
            return False
    return True


def gamma_extend(g: Graph, U: Iterable[int]) -> Graph:
    """Add one fresh vertex (id ``g.n``) adjacent to exactly ``U``."""
    U = _check_subset(g, U)
    return add_vertices(g, 1, [(g.n, u) for u in sorted(U)])
