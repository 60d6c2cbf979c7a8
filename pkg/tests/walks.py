"""Random extension sequences shared by several test modules."""

from __future__ import annotations

import numpy as np

from critgraph.extensions import TrackedGraph, chain_extend, parallel_extend, split_vertex


def random_step(tg: TrackedGraph, rng: np.random.Generator, kinds=("parallel", "chain", "split")):
    g = tg.graph
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == "split":
        sites = [v for v in g.vertices() if g.degree(v) >= 2]
        if not sites:
            kind = "parallel"
    if kind == "parallel":
        return parallel_extend(tg, int(rng.integers(g.n)))
    if kind == "chain":
        edges = g.sorted_edges()
        u, v = edges[int(rng.integers(len(edges)))]
        return chain_extend(tg, (u, v) if rng.random() < 0.5 else (v, u))
    u = sites[int(rng.integers(len(sites)))]
    nbrs = sorted(g.neighbors(u))
    # proper subsets only; F = N(u) leaves u pendant
    k = int(rng.integers(1, len(nbrs)))
    F = [int(x) for x in rng.choice(nbrs, size=k, replace=False)]
    return split_vertex(tg, u, F)


def random_walk(seed: int, length: int, kinds=("parallel", "chain", "split"), start: int = 3):
    """All intermediate tracked graphs of a walk from ``K_start``."""
    rng = np.random.Generator(np.random.Philox(seed))
    tg = TrackedGraph.clique(start)
    out = [tg]
    for _ in range(length):
        tg = random_step(tg, rng, kinds)
        out.append(tg)
    return out
