"""Greedy baseline, bundle verification and benchmark reports."""

from __future__ import annotations

import csv
import heapq
import io
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .generator import InstanceBundle
from .graph import Graph
from .solver import SolveBudget, mvc, uncovered_edges

EXACT_LIMIT_N = 60
ALGOS = ("greedy", "exact")


def greedy_solve(g: Graph) -> tuple[frozenset[int], int]:
    """Repeatedly take a max-degree vertex of the residual graph.

    Ties go to the lowest index.  Returns the cover and the number of
    picks.  Uses a lazy max-heap keyed by ``(-degree, vertex)``.
    """
    deg = g.degrees()
    heap = [(-d, v) for v, d in enumerate(deg) if d]
    heapq.heapify(heap)
    taken = [False] * g.n
    cover = []
    while heap:
        d, v = heapq.heappop(heap)
        if taken[v] or -d != deg[v]:
            continue
        if deg[v] == 0:
            continue
        taken[v] = True
        cover.append(v)
        deg[v] = 0
        for w in g.neighbors(v):
            if not taken[w]:
                deg[w] -= 1
                if deg[w]:
                    heapq.heappush(heap, (-deg[w], w))
    return frozenset(cover), len(cover)


# ----------------------------------------------------------- verification


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    reasons: tuple[str, ...]
    uncovered: tuple[tuple[int, int], ...] = ()
    minimal: bool | None = None

    def format(self) -> str:
        head = "PASS" if self.ok else "FAIL"
        return "\n".join([head] + [f"  {r}" for r in self.reasons]) + "\n"


def verify_bundle(b: InstanceBundle, budget: SolveBudget | None = None,
                  exact_limit: int = EXACT_LIMIT_N) -> VerifyReport:
    """Check the hidden cover of ``b`` against its graph.

    Upper/lower-bound bundles carry no concrete optimum, so only the
    optimal kind is fully checked; for the others the cover (if any) is
    checked for validity.
    """
    g = b.graph
    reasons = []
    cover = b.hidden_cover
    if any(not 0 <= v < g.n for v in cover):
        return VerifyReport(False, ("cover names vertices outside the graph",))
    if b.cover_kind == "lower_bound":
        if cover:
            reasons.append("lower-bound bundle should not carry a cover")
        if g.n <= exact_limit:
            res = mvc(g, budget)
            if res.exact and res.size < b.cover_size:
                reasons.append(f"exact cover {res.size} below recorded bound {b.cover_size}")
        return VerifyReport(not reasons, tuple(reasons))
    if len(cover) != b.cover_size:
        reasons.append(f"cover has {len(cover)} vertices, sidecar says {b.cover_size}")
    missing = tuple(sorted(uncovered_edges(g, cover)))
    if missing:
        shown = " ".join(f"{u + 1}-{v + 1}" for u, v in missing[:10])
        reasons.append(f"independence violated outside the cover, {len(missing)} uncovered edge(s): {shown}")
    minimal = None
    if b.cover_is_optimal and g.n <= exact_limit:
        res = mvc(g, budget)
        if res.exact:
            minimal = res.size == len(cover)
            if not minimal:
                reasons.append(f"exact cover size {res.size} differs from hidden {len(cover)}")
        else:
            reasons.append("minimality not checked: solver budget exhausted")
    return VerifyReport(not [r for r in reasons if not r.startswith("minimality not")],
                        tuple(reasons), missing, minimal)


# ----------------------------------------------------------------- reports

CSV_COLUMNS = ("instance", "n", "m", "ell", "algo", "cover_size", "distance",
               "optimal", "steps", "time_ms", "reference")


@dataclass(frozen=True)
class RunRow:
    instance: str
    n: int
    m: int
    ell: int
    algo: str
    cover_size: int
    steps: int
    time_ms: float
    reference: str = "optimal"  # "optimal" or "bound"

    @property
    def distance(self) -> int:
        return self.cover_size - self.ell

    @property
    def optimal(self) -> bool:
        return self.reference == "optimal" and self.distance == 0


@dataclass(frozen=True)
class RunReport:
    rows: tuple[RunRow, ...] = field(default_factory=tuple)

    @property
    def count_optimal(self) -> int:
        return sum(r.optimal for r in self.rows)

    @property
    def avg_distance(self) -> float:
        return sum(r.distance for r in self.rows) / len(self.rows) if self.rows else 0.0

    @property
    def max_distance(self) -> int:
        return max((r.distance for r in self.rows), default=0)

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([r.instance, r.n, r.m, r.ell, r.algo, r.cover_size, r.distance,
                        int(r.optimal), r.steps, repr(r.time_ms), r.reference])
        return out.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "RunReport":
        rows = []
        for rec in csv.DictReader(io.StringIO(text)):
            rows.append(RunRow(rec["instance"], int(rec["n"]), int(rec["m"]), int(rec["ell"]),
                               rec["algo"], int(rec["cover_size"]), int(rec["steps"]),
                               float(rec["time_ms"]), rec.get("reference") or "optimal"))
        return cls(tuple(rows))

    def summary(self) -> str:
        return (f"instances={len(self.rows)} optimal={self.count_optimal} "
                f"avg_distance={self.avg_distance:.2f} max_distance={self.max_distance}\n")


def parse_import(text: str) -> dict[str, frozenset[int]]:
    """External results, one ``id size v1 .. vk`` line (1-based) per instance."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: expected 'id size v1 .. vk'")
        ident, size, verts = parts[0], int(parts[1]), [int(x) - 1 for x in parts[2:]]
        if size != len(verts):
            raise ValueError(f"line {lineno}: size {size} but {len(verts)} vertices listed")
        out[ident] = frozenset(verts)
    return out


def run_benchmark(
    instances: Sequence[tuple[str, InstanceBundle]],
    algo: str,
    budget: SolveBudget | None = None,
    imported: dict[str, frozenset[int]] | None = None,
) -> RunReport:
    """Run ``algo`` ("greedy", "exact" or "import") on each instance in order.

    Distances are relative to the bundle's recorded cover size; rows whose
    reference is only a bound are marked ``reference=bound``.
    """
    if algo not in ALGOS + ("import",):
        raise ValueError(f"unknown algorithm {algo!r}")
    if algo == "import" and imported is None:
        raise ValueError("import needs parsed external results")
    rows = []
    for ident, b in instances:
        g = b.graph
        t0 = time.perf_counter()
        if algo == "greedy":
            cover, steps = greedy_solve(g)
        elif algo == "exact":
            res = mvc(g, budget)
            if not res.exact:
                raise RuntimeError(f"{ident}: exact solve ran out of budget")
            cover, steps = res.cover, res.stats.nodes
        else:
            if ident not in imported:
                raise ValueError(f"no imported result for {ident}")
            cover, steps = imported[ident], 0
        elapsed = (time.perf_counter() - t0) * 1000
        if uncovered_edges(g, cover):
            raise ValueError(f"{ident}: {algo} returned an invalid cover")
        rows.append(RunRow(ident, g.n, g.m, b.cover_size, algo, len(cover), steps,
                           round(elapsed, 3), "optimal" if b.cover_is_optimal else "bound"))
    return RunReport(tuple(rows))


def load_instances(prefixes: Iterable[str | Path]) -> list[tuple[str, InstanceBundle]]:
    from .generator import load_bundle

    return [(Path(p).name.removesuffix(".dimacs").removesuffix(".json"), load_bundle(p))
            for p in prefixes]
