"""Circulant graphs, the closed forms for ``C(n, d)`` with offsets ``1..d``,
and the parametric search for critical circulants of degree 4 and 6.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .criticality import Verdict, is_critical
from .graph import Graph, build_graph
from .solver import SolveBudget

DEFAULT_TUPLE_TIME = 30.0

# (n range, offset range) grids of the published searches
DEGREE4_GRID = ((2, 80), (2, 20))
DEGREE6_GRID = ((4, 60), (2, 20))


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    offsets: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("a circulant graph needs n >= 2")
        bad = [j for j in self.offsets if j % self.n == 0]
        if bad:
            raise ValueError(f"offsets {bad} are multiples of n={self.n} (self-loops)")

    def edge_representatives(self) -> list[tuple[int, int]]:
        """One edge per offset; rotations map every edge onto one of these."""
        return sorted({tuple(sorted((0, j % self.n))) for j in self.offsets})


def build_circulant(spec: CirculantSpec) -> Graph:
    n = spec.n
    return build_graph(n, ((i, (i + j) % n) for i in range(n) for j in spec.offsets))


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    return build_circulant(CirculantSpec(n, tuple(offsets)))


def cnd_graph(n: int, d: int) -> Graph:
    """Circulant with consecutive offsets ``1..d`` (complete once n <= 2d+1)."""
    return circulant(n, range(1, d + 1))


def cnd_mvc_size(n: int, d: int) -> int:
    """Minimum cover size of ``cnd_graph(n, d)``: ``n - ceil((n-d)/(d+1))``."""
    if n <= d:
        raise ValueError(f"need n > d, got n={n}, d={d}")
    return n - -(-(n - d) // (d + 1))


def cnd_is_critical(n: int, d: int) -> bool:
    return n <= 2 * d + 1 or (n - d) % (d + 1) == 0


# ------------------------------------------------------------------ search


@dataclass(frozen=True)
class SearchRow:
    n: int
    offsets: tuple[int, ...]
    verdict: Verdict
    cover_size: int | None
    m: int
    degree: int

    @property
    def extra_offsets(self) -> tuple[int, ...]:
        """Offsets beyond 1, as the published tables list them."""
        return self.offsets[1:]


def search_grid(degree: int, n_range: tuple[int, int], offset_range: tuple[int, int]):
    """Yield offset tuples ``(1, ...)`` of the search in ``(n, i, j)`` order.

    Extra offsets run over ``[lo, min(hi, n-1)]`` in increasing order, so no
    offset ever reaches a multiple of ``n``.  Tuples whose offsets coincide
    modulo ``n`` or realise fewer distinct neighbours are kept.
    """
    if degree not in (4, 6):
        raise ValueError(f"degree must be 4 or 6, got {degree}")
    k = degree // 2 - 1
    lo_n, hi_n = n_range
    lo_j, hi_j = offset_range
    if lo_n > hi_n or lo_j > hi_j:
        raise ValueError("empty search range")
    for n in range(lo_n, hi_n + 1):
        top = min(hi_j, n - 1)
        for extra in itertools.combinations(range(lo_j, top + 1), k):
            yield n, (1,) + extra


def classify(n: int, offsets: Sequence[int], budget: SolveBudget | None = None, degree: int = 0) -> SearchRow:
    spec = CirculantSpec(n, tuple(offsets))
    g = build_circulant(spec)
    verdict = is_critical(g, budget, edges=spec.edge_representatives())
    return SearchRow(n, spec.offsets, verdict.status, verdict.base_cover_size, g.m, degree)


def _classify_job(args):
    n, offsets, budget, degree = args
    return classify(n, offsets, budget, degree)


def search_critical(
    degree: int,
    n_range: tuple[int, int] | None = None,
    offset_range: tuple[int, int] | None = None,
    budget: SolveBudget | None = None,
    workers: int = 1,
    critical_only: bool = True,
) -> list[SearchRow]:
    """Classify every circulant of the grid; rows come back in grid order.

    Defaults reproduce the published grids.  Unknown verdicts (budget
    exhausted) are always kept in the output.  The result does not depend
    on ``workers``.
    """
    default = DEGREE4_GRID if degree == 4 else DEGREE6_GRID
    n_range = n_range or default[0]
    offset_range = offset_range or default[1]
    budget = budget or SolveBudget(max_time=DEFAULT_TUPLE_TIME)
    jobs = [(n, off, budget, degree) for n, off in search_grid(degree, n_range, offset_range)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_classify_job, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        rows = [_classify_job(j) for j in jobs]
    if critical_only:
        rows = [r for r in rows if r.verdict is not Verdict.REDUCIBLE]
    return rows


CATALOG_COLUMNS = ("n", "offsets", "verdict", "cover_size", "m")


def format_catalog(rows: Iterable[SearchRow]) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CATALOG_COLUMNS)
    for r in rows:
        w.writerow([r.n, " ".join(map(str, r.offsets)), r.verdict.value,
                    "" if r.cover_size is None else r.cover_size, r.m])
    return out.getvalue()


def parse_catalog(text: str) -> list[SearchRow]:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        offsets = tuple(int(x) for x in rec["offsets"].split())
        rows.append(SearchRow(
            int(rec["n"]), offsets, Verdict(rec["verdict"]),
            int(rec["cover_size"]) if rec["cover_size"] else None,
            int(rec["m"]), 2 * len(offsets),
        ))
    return rows


def default_workers() -> int:
    env = os.environ.get("CRITGRAPH_WORKERS")
    if env:
        return max(1, int(env))
    return 1
