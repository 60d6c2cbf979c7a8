"""Benchmark instances with hidden optimal vertex covers.

The hard-instance pipeline samples critical base graphs by random walks of
parallel/chain extensions from ``K3``, fills the rest of the cover budget
with the cheapest clique collection, pads isolated vertices, adds random
edges that each touch the cover, and finally permutes the vertex ids.  Every
phase draws from its own counter-based RNG stream, so output bytes depend
only on the configuration and seed.
"""

from __future__ import annotations

import json
import math
import zlib
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np

from .alpha import (
    AlphaVector,
    InfeasibleBudget,
    alpha_after_chain,
    alpha_after_parallel,
    alpha_edge_lower_bound,
    lexmin_alpha,
    max_edges,
)
from .dimacs import format_dimacs, read_dimacs
from .extensions import CHAIN, PARALLEL, TrackedGraph, chain_extend, parallel_extend
from .graph import Graph, build_graph, permute

FORMAT_VERSION = 1
P_STOP = 0.1
STOP_WINDOW = 3


class InfeasibleParameters(ValueError):
    """(n, m, ell) admits no instance; the message carries the bounds."""


def phase_rng(seed: int, phase: str) -> np.random.Generator:
    """Independent Philox stream for one named phase of one bundle."""
    ss = np.random.SeedSequence([seed, zlib.crc32(phase.encode())])
    return np.random.Generator(np.random.Philox(ss))


def _derived_seed(seed: int, phase: str) -> int:
    return int(np.random.SeedSequence([seed, zlib.crc32(phase.encode())]).generate_state(1)[0])


def _fits(n: int, c: int) -> bool:
    return (n == 0 and c == 0) or (c >= 0 and n > c)


# ------------------------------------------------------------- base graphs


def sample_base_graph(
    rng: np.random.Generator,
    target_cover: int,
    alpha_budget: AlphaVector,
    edge_budget: int | None = None,
    kinds: Sequence[str] = (PARALLEL, CHAIN),
    p_stop: float = P_STOP,
) -> TrackedGraph:
    """Random critical graph from the chain/parallel closure of ``K3``.

    ``alpha_budget`` prices what is left of the vertex/cover budget.  A step
    is only taken if the remainder can still be completed by cliques within
    ``edge_budget`` edges.  The walk stops at ``target_cover``, or earlier
    with probability ``p_stop`` per step once within ``STOP_WINDOW`` of it.
    """
    if target_cover < 2:
        raise ValueError("target cover must be at least 2 (K3)")
    n_rem, c_rem = alpha_budget.n_rem - 3, alpha_budget.c_rem - 2
    if not _fits(n_rem, c_rem):
        raise InfeasibleBudget("budget cannot hold K3")
    alpha = lexmin_alpha(n_rem, c_rem)
    edges_left = math.inf if edge_budget is None else edge_budget
    if 3 + alpha_edge_lower_bound(alpha) > edges_left:
        raise InfeasibleBudget("edge budget cannot hold K3")
    tg = TrackedGraph.clique(3)
    used = 3
    while tg.cover_size < target_cover:
        g = tg.graph
        options = []
        if PARALLEL in kinds and alpha.c_rem >= 1:
            nxt = alpha_after_parallel(alpha)
            slack = edges_left - used - alpha_edge_lower_bound(nxt)
            sites = [v for v in g.vertices() if g.degree(v) + 1 <= slack]
            if sites:
                options.append((PARALLEL, nxt, sites))
        if CHAIN in kinds and alpha.c_rem >= 1 and alpha.n_rem - alpha.c_rem >= 2:
            nxt = alpha_after_chain(alpha)
            if used + 2 + alpha_edge_lower_bound(nxt) <= edges_left:
                options.append((CHAIN, nxt, g.sorted_edges()))
        if not options:
            break
        kind, alpha, sites = options[int(rng.integers(len(options)))]
        site = sites[int(rng.integers(len(sites)))]
        if kind == PARALLEL:
            used += g.degree(site) + 1
            tg = parallel_extend(tg, site)
        else:
            used += 2
            tg = chain_extend(tg, site)
        if tg.cover_size >= max(2, target_cover - STOP_WINDOW) and rng.random() < p_stop:
            break
    return tg


# --------------------------------------------------------- assembly phases


class Triple(NamedTuple):
    """Vertices ``0 .. |U|+|V|-1`` split into cover ``U`` and the rest ``V``."""

    U: frozenset[int]
    V: frozenset[int]
    E: frozenset[tuple[int, int]]

    @property
    def n(self) -> int:
        return len(self.U) + len(self.V)

    def graph(self) -> Graph:
        return Graph(self.n, self.E)


def assemble_g1(bases: Sequence[TrackedGraph], ell: int, m: int, n: int) -> Triple:
    """Disjoint union of the bases, relabelled in order."""
    if sum(b.cover_size for b in bases) != ell:
        raise InfeasibleBudget("base covers must add up to ell exactly")
    if sum(b.graph.n for b in bases) > n:
        raise InfeasibleBudget("bases use more than n vertices")
    if sum(b.graph.m for b in bases) > m:
        raise InfeasibleBudget("bases use more than m edges")
    U, V, E = set(), set(), set()
    off = 0
    for b in bases:
        g = b.graph
        for v in g.vertices():
            (U if v in b.cover else V).add(v + off)
        E.update((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Triple(frozenset(U), frozenset(V), frozenset(E))


def pad_vertices_g2(t: Triple, n: int) -> Triple:
    if t.n > n:
        raise InfeasibleBudget(f"triple already has {t.n} > {n} vertices")
    return Triple(t.U, t.V | frozenset(range(t.n, n)), t.E)


def fill_edges_g3(t: Triple, m: int, rng: np.random.Generator) -> Triple:
    """Add ``m - |E|`` distinct edges drawn uniformly from ``U x (U u V)``."""
    need = m - len(t.E)
    if need < 0:
        raise InfeasibleBudget(f"triple already has {len(t.E)} > {m} edges")
    if need == 0:
        return t
    n = t.n
    U = np.array(sorted(t.U), dtype=np.int64)
    V = np.array(sorted(t.V), dtype=np.int64)
    iu, ju = np.triu_indices(len(U), 1)
    a = np.concatenate([U[iu], np.repeat(U, len(V))])
    b = np.concatenate([U[ju], np.tile(V, len(U))])
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    keys = lo * n + hi
    existing = np.array(sorted(u * n + v for u, v in t.E), dtype=np.int64)
    pool = np.setdiff1d(keys, existing, assume_unique=True)
    if need > len(pool):
        raise InfeasibleBudget(f"only {len(pool)} admissible pairs left, need {need}")
    picked = rng.choice(pool, size=need, replace=False)
    new = frozenset((int(k // n), int(k % n)) for k in picked)
    return Triple(t.U, t.V, t.E | new)


# ----------------------------------------------------------------- bundles


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    m: int | None = None
    k: float | None = None
    ell: int | None = None
    seed: int = 0
    n_bases: int = 2
    p_stop: float = P_STOP

    @property
    def edges(self) -> int:
        if self.m is not None:
            return self.m
        if self.k is None:
            raise ValueError("give either m or the exponent k")
        return round(self.n ** self.k)

    @property
    def cover_size(self) -> int:
        return self.ell if self.ell is not None else default_ell(self.n)


def default_ell(n: int) -> int:
    """Slightly above n/2."""
    return -(-n // 2) + -(-n // 100)


@dataclass(frozen=True)
class InstanceBundle:
    graph: Graph
    hidden_cover: frozenset[int]
    cover_size: int
    cover_kind: str  # "optimal", "upper_bound" or "lower_bound"
    generator: str
    params: dict
    seed: int
    permutation: tuple[int, ...] = ()
    permutation_seed: int | None = None
    traces: tuple[str, ...] = ()

    @property
    def ell(self) -> int:
        return self.cover_size

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def cover_is_optimal(self) -> bool:
        return self.cover_kind == "optimal"

    def sidecar(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "generator": self.generator,
            "params": self.params,
            "cover": sorted(v + 1 for v in self.hidden_cover),
            "cover_size": self.cover_size,
            "cover_kind": self.cover_kind,
            "cover_is_optimal": self.cover_is_optimal,
            "permutation_seed": self.permutation_seed,
        }

    def sidecar_text(self) -> str:
        return json.dumps(self.sidecar(), indent=2, sort_keys=True) + "\n"

    def dimacs_text(self) -> str:
        return format_dimacs(self.graph, [f"generator {self.generator}"])

    def write(self, prefix: str | Path) -> tuple[Path, Path]:
        """Write ``<prefix>.dimacs`` and the solver-blind ``<prefix>.json``."""
        prefix = Path(prefix)
        gpath = prefix.with_name(prefix.name + ".dimacs")
        jpath = prefix.with_name(prefix.name + ".json")
        gpath.write_text(self.dimacs_text())
        jpath.write_text(self.sidecar_text())
        return gpath, jpath


def load_bundle(prefix: str | Path) -> InstanceBundle:
    prefix = Path(prefix)
    if prefix.suffix in (".dimacs", ".json"):
        prefix = prefix.with_suffix("")
    g = read_dimacs(prefix.with_name(prefix.name + ".dimacs"))
    meta = json.loads(prefix.with_name(prefix.name + ".json").read_text())
    if meta.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported sidecar version {meta.get('format_version')}")
    params = meta["params"]
    return InstanceBundle(
        graph=g,
        hidden_cover=frozenset(v - 1 for v in meta["cover"]),
        cover_size=meta.get("cover_size", len(meta["cover"])),
        cover_kind=meta.get("cover_kind", "optimal" if meta["cover_is_optimal"] else "upper_bound"),
        generator=meta["generator"],
        params=params,
        seed=params.get("seed", 0),
        permutation_seed=meta.get("permutation_seed"),
    )


def edge_window(n: int, ell: int) -> tuple[int, int]:
    """Admissible edge counts for ``n`` vertices with hidden cover ``ell``."""
    return alpha_edge_lower_bound(lexmin_alpha(n, ell)), max_edges(n, ell)


def _clique_bases(a: AlphaVector) -> list[TrackedGraph]:
    return [TrackedGraph.clique(size) for size, k in a.entries if size >= 2 for _ in range(k)]


def generate_hard(cfg: GeneratorConfig) -> InstanceBundle:
    """Instance with ``n`` vertices, ``m`` edges and a hidden minimum cover of size ``ell``."""
    n, m, ell = cfg.n, cfg.edges, cfg.cover_size
    if not 0 <= ell < n:
        raise InfeasibleParameters(f"need 0 <= ell < n, got ell={ell}, n={n}")
    lo, hi = edge_window(n, ell)
    if not lo <= m <= hi:
        raise InfeasibleParameters(f"m={m} outside [{lo}, {hi}] for n={n}, ell={ell}")

    bases: list[TrackedGraph] = []
    n_left, c_left, m_left = n, ell, m
    target = max(2, ell // max(1, cfg.n_bases))
    for i in range(cfg.n_bases):
        # keep a K3 in reserve for each base still to come
        later = cfg.n_bases - i - 1
        budget_n, budget_c = n_left - 3 * later, c_left - 2 * later
        if not _fits(budget_n, budget_c) or budget_c < 2:
            break
        try:
            b = sample_base_graph(
                phase_rng(cfg.seed, f"base-{i + 1}"),
                target,
                lexmin_alpha(budget_n, budget_c),
                edge_budget=m_left - 3 * later,
                p_stop=cfg.p_stop,
            )
        except InfeasibleBudget:
            break
        bases.append(b)
        n_left -= b.graph.n
        c_left -= b.cover_size
        m_left -= b.graph.m

    fill = lexmin_alpha(n_left, c_left)
    triple = assemble_g1(bases + _clique_bases(fill), ell, m, n)
    triple = pad_vertices_g2(triple, n)
    triple = fill_edges_g3(triple, m, phase_rng(cfg.seed, "fill"))

    perm_seed = _derived_seed(cfg.seed, "permute")
    g, perm = permute(triple.graph(), perm_seed)
    params = {
        "n": n, "m": m, "k": cfg.k, "ell": ell, "seed": cfg.seed,
        "bases": cfg.n_bases, "p_stop": cfg.p_stop,
        "base_covers": [b.cover_size for b in bases],
        "fill_alpha": [list(e) for e in fill.entries],
    }
    return InstanceBundle(
        graph=g,
        hidden_cover=frozenset(perm[u] for u in triple.U),
        cover_size=ell,
        cover_kind="optimal",
        generator="hard",
        params=params,
        seed=cfg.seed,
        permutation=tuple(perm),
        permutation_seed=perm_seed,
        traces=tuple(b.format_trace() for b in bases),
    )


def generate_structureless(n: int, m: int, n_c: int, seed: int) -> InstanceBundle:
    """Random edges, each touching a fixed random set of ``n_c`` vertices.

    ``n_c`` only bounds the cover from above.
    """
    if not 0 < n_c < n:
        raise InfeasibleParameters(f"need 0 < n_c < n, got n_c={n_c}, n={n}")
    pool = max_edges(n, n_c)
    if not 0 <= m <= pool:
        raise InfeasibleParameters(f"m={m} outside [0, {pool}] for n={n}, n_c={n_c}")
    rng = phase_rng(seed, "cover")
    chosen = frozenset(int(v) for v in rng.choice(n, size=n_c, replace=False))
    rest = frozenset(range(n)) - chosen
    t = fill_edges_g3(Triple(chosen, rest, frozenset()), m, phase_rng(seed, "fill"))
    return InstanceBundle(
        graph=t.graph(),
        hidden_cover=chosen,
        cover_size=n_c,
        cover_kind="upper_bound",
        generator="structureless",
        params={"n": n, "m": m, "n_c": n_c, "seed": seed},
        seed=seed,
    )


def generate_witzel(num_cliques: int, clique_size: int, m_target: int, seed: int) -> InstanceBundle:
    """Disjoint cliques joined by random inter-clique edges up to ``m_target``.

    The cliques force a cover of at least ``num_cliques * (clique_size - 1)``;
    that lower bound is what the bundle records.
    """
    if num_cliques < 1 or clique_size < 1:
        raise InfeasibleParameters("need at least one non-empty clique")
    n = num_cliques * clique_size
    base = num_cliques * clique_size * (clique_size - 1) // 2
    cross = n * (n - 1) // 2 - base
    if not base <= m_target <= base + cross:
        raise InfeasibleParameters(f"m_target={m_target} outside [{base}, {base + cross}]")
    edges = {
        (c * clique_size + a, c * clique_size + b)
        for c in range(num_cliques)
        for a in range(clique_size)
        for b in range(a + 1, clique_size)
    }
    rng = phase_rng(seed, "witzel")
    need = m_target - base
    if need > cross // 2:
        # dense regime: sample directly from the cross-pair pool
        lo, hi = np.triu_indices(n, 1)
        mask = (lo // clique_size) != (hi // clique_size)
        keys = lo[mask] * n + hi[mask]
        for k in rng.choice(keys, size=need, replace=False):
            edges.add((int(k // n), int(k % n)))
    else:
        while len(edges) < m_target:
            c1, c2 = rng.choice(num_cliques, size=2, replace=False)
            u = int(c1) * clique_size + int(rng.integers(clique_size))
            v = int(c2) * clique_size + int(rng.integers(clique_size))
            edges.add((min(u, v), max(u, v)))
    lower = num_cliques * (clique_size - 1)
    return InstanceBundle(
        graph=build_graph(n, edges),
        hidden_cover=frozenset(),
        cover_size=lower,
        cover_kind="lower_bound",
        generator="witzel",
        params={"num_cliques": num_cliques, "clique_size": clique_size,
                "m": m_target, "seed": seed},
        seed=seed,
    )
