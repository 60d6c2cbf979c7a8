"""Brute-force reference answers, independent of the package's solver.

Everything here enumerates subsets or partitions directly and only works
on small inputs.
"""

from __future__ import annotations

import itertools


def _is_cover(edges, s):
    return all(u in s or v in s for u, v in edges)


def brute_mvc(n: int, edges) -> int:
    edges = list(edges)
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            if _is_cover(edges, set(s)):
                return k
    raise AssertionError("unreachable")


def brute_mis(n: int, edges) -> int:
    return n - brute_mvc(n, edges)


def brute_all_min_covers(n: int, edges) -> list[frozenset[int]]:
    edges = list(edges)
    c = brute_mvc(n, edges)
    return [frozenset(s) for s in itertools.combinations(range(n), c) if _is_cover(edges, set(s))]


def brute_critical(n: int, edges) -> bool:
    """Every edge deletion lowers the minimum cover (connectivity not checked)."""
    edges = sorted(edges)
    c = brute_mvc(n, edges)
    return all(brute_mvc(n, [f for f in edges if f != e]) < c for e in edges)


def brute_double_cover(n: int, edges) -> bool:
    covers = brute_all_min_covers(n, edges)
    return all(any(u in s and v in s for s in covers) for u, v in edges)


def partitions(n: int, largest: int | None = None):
    """All partitions of ``n`` as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def alpha_dense(parts, n: int) -> tuple[int, ...]:
    """``(a_n, ..., a_1)`` for a clique-size multiset."""
    return tuple(parts.count(i) for i in range(n, 0, -1))


def brute_lexmin_enumerate(n: int, c: int) -> tuple[int, ...]:
    """Minimum over every clique collection with ``n`` vertices and cover ``c``."""
    k = n - c
    cands = [alpha_dense(list(p), n) for p in partitions(n) if len(p) == k]
    return min(cands)


def brute_lexmin_search(n: int, c: int) -> tuple[int, ...]:
    """Same minimum by depth-first search over ``a_n, a_{n-1}, ...`` in
    increasing order, returning the first complete vector."""
    k = n - c

    def rec(size, verts, parts):
        if size == 0:
            return () if verts == 0 and parts == 0 else None
        for a in range(0, parts + 1):
            if a * size > verts:
                break
            v2, p2 = verts - a * size, parts - a
            # remaining sizes are 1..size-1
            if p2 > v2 or v2 > (size - 1) * p2:
                continue
            tail = rec(size - 1, v2, p2)
            if tail is not None:
                return (a,) + tail
        return None

    out = rec(n, n, k)
    assert out is not None
    return out
