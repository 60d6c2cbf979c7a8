"""Exact minimum vertex cover by branch and bound.

The search runs on the complementary problem (maximum independent set) over
Python-int bitsets.  Each node applies the degree-0/1 reductions, prunes with
a greedy clique-cover bound, then branches on a maximum-degree vertex ``v``:
either ``v`` is in the cover, or all of ``N(v)`` is.

Every other module treats this solver as ground truth, so it stays
deliberately plain.
"""

from __future__ import annotations

import enum
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, components, induced_subgraph

DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_TIME = 60.0


class Status(str, enum.Enum):
    EXACT = "exact"
    BUDGET_EXCEEDED = "budget_exceeded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_time: float = DEFAULT_MAX_TIME

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_time <= 0:
            raise ValueError("budget limits must be strictly positive")


@dataclass(frozen=True)
class SolveStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    size: int | None
    cover: frozenset[int] | None
    status: Status
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT


class _BudgetExceeded(Exception):
    pass


class _TargetReached(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _MaxIndependentSet:
    """Bitset MIS search restricted to a candidate mask."""

    def __init__(self, adj: tuple[int, ...], max_nodes: int, deadline: float):
        self.adj = adj
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        self.best = -1
        self.best_set = 0
        self.target: int | None = None

    def _clique_cover(self, cand: int) -> int:
        adj = self.adj
        count = 0
        while cand:
            low = cand & -cand
            cand ^= low
            common = adj[low.bit_length() - 1] & cand
            while common:
                w = common & -common
                cand ^= w
                common &= adj[w.bit_length() - 1]
            count += 1
        return count

    def _greedy(self, cand: int) -> tuple[int, int]:
        adj = self.adj
        size = chosen = 0
        while cand:
            best_v, best_d = -1, None
            for v in _bits(cand):
                d = (adj[v] & cand).bit_count()
                if best_d is None or d < best_d:
                    best_v, best_d = v, d
                    if d == 0:
                        break
            bit = 1 << best_v
            chosen |= bit
            size += 1
            cand &= ~(adj[best_v] | bit)
        return size, chosen

    def _record(self, size: int, chosen: int) -> None:
        if size > self.best:
            self.best, self.best_set = size, chosen
            if self.target is not None and size >= self.target:
                raise _TargetReached

    def search(self, cand: int, size: int, chosen: int) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _BudgetExceeded
        if (self.nodes & 255) == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded
        adj = self.adj
        changed = True
        while changed and cand:
            changed = False
            for v in _bits(cand):
                bit = 1 << v
                if not cand & bit:
                    continue
                nb = adj[v] & cand
                if nb & (nb - 1) == 0:
                    size += 1
                    chosen |= bit
                    cand &= ~(nb | bit)
                    changed = True
        if not cand:
            self._record(size, chosen)
            return
        if size + self._clique_cover(cand) <= self.best:
            return
        pick, pick_deg = -1, -1
        for v in _bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        bit = 1 << pick
        # v outside the cover: its neighbourhood joins the cover
        self.search(cand & ~(adj[pick] | bit), size + 1, chosen | bit)
        # v inside the cover
        self.search(cand & ~bit, size, chosen)


def _prepare(g: Graph, forced_in: Iterable[int], forced_out: Iterable[int]):
    fin, fout = frozenset(forced_in), frozenset(forced_out)
    if fin & fout:
        raise ValueError(f"vertices both forced in and out: {sorted(fin & fout)}")
    for v in fin | fout:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    adj = g.adjacency_masks
    out_mask = sum(1 << v for v in fout)
    feasible = all(not (adj[v] & out_mask) for v in fout)
    cand = (1 << g.n) - 1
    cand &= ~sum(1 << v for v in fin)
    for v in fout:
        cand &= ~(adj[v] | (1 << v))
    return fin, fout, out_mask, cand, feasible


def _ensure_recursion(n: int) -> None:
    need = 4 * n + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def mvc_constrained(
    g: Graph,
    forced_in: Iterable[int] = (),
    forced_out: Iterable[int] = (),
    budget: SolveBudget | None = None,
) -> SolveResult:
    """Minimum cover containing ``forced_in`` and avoiding ``forced_out``.

    Status is ``infeasible`` exactly when ``forced_out`` holds both ends of
    some edge.  On budget exhaustion the best cover found so far is
    returned with status ``budget_exceeded``.
    """
    budget = budget or SolveBudget()
    start = time.monotonic()
    fin, fout, out_mask, cand, feasible = _prepare(g, forced_in, forced_out)
    if not feasible:
        return SolveResult(None, None, Status.INFEASIBLE, SolveStats(0, 0.0))
    _ensure_recursion(g.n)
    # independent set = complement of the cover
    ind = out_mask
    search = _MaxIndependentSet(g.adjacency_masks, budget.max_nodes, start + budget.max_time)
    status = Status.EXACT
    sub_graph = induced_subgraph(g, _bits(cand))
    for comp in components(sub_graph[0]):
        old_ids = [sub_graph[1][i] for i in comp]
        comp_mask = sum(1 << v for v in old_ids)
        size, chosen = search._greedy(comp_mask)
        search.best, search.best_set = size, chosen
        if status is Status.EXACT:
            try:
                search.search(comp_mask, 0, 0)
            except _BudgetExceeded:
                status = Status.BUDGET_EXCEEDED
        ind |= search.best_set
    cover = frozenset(v for v in g.vertices() if not (ind >> v) & 1)
    stats = SolveStats(search.nodes, time.monotonic() - start)
    return SolveResult(len(cover), cover, status, stats)


def mvc(g: Graph, budget: SolveBudget | None = None) -> SolveResult:
    """Minimum vertex cover of ``g``."""
    return mvc_constrained(g, (), (), budget)


def cover_at_most(
    g: Graph,
    k: int,
    forced_in: Iterable[int] = (),
    forced_out: Iterable[int] = (),
    budget: SolveBudget | None = None,
) -> bool | None:
    """Decide whether a constrained cover of size ``<= k`` exists.

    Stops as soon as one is found and prunes every branch that cannot beat
    the cutoff.  Returns ``None`` when the budget runs out first.
    """
    budget = budget or SolveBudget()
    start = time.monotonic()
    fin, fout, out_mask, cand, feasible = _prepare(g, forced_in, forced_out)
    if not feasible:
        return False
    _ensure_recursion(g.n)
    # need an independent set of size >= n - k, of which fout already counts
    need = g.n - k - len(fout)
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    search = _MaxIndependentSet(g.adjacency_masks, budget.max_nodes, start + budget.max_time)
    search.target = need
    search.best = need - 1
    try:
        search.search(cand, 0, 0)
    except _TargetReached:
        return True
    except _BudgetExceeded:
        return None
    return False


def is_cover(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(u in s or v in s for u, v in g.edges)


def uncovered_edges(g: Graph, s: Iterable[int]) -> list[tuple[int, int]]:
    s = set(s)
    return [e for e in g.sorted_edges() if e[0] not in s and e[1] not in s]
