"""Clique-size vectors that price the remaining vertex/cover budget.

An alpha vector says how many cliques of each size to use so that the
cliques hold ``n`` vertices with a minimum cover of ``c``:
``sum(i * a_i) = n`` and ``sum((i - 1) * a_i) = c``.  The lexicographically
smallest such vector (comparing from the largest clique size down) needs the
fewest edges and has at most two non-zero entries at consecutive sizes.
"""

from __future__ import annotations

from dataclasses import dataclass


class InfeasibleBudget(ValueError):
    """The requested step does not fit in the remaining budget."""


@dataclass(frozen=True)
class AlphaVector:
    """Sparse alpha vector: ``entries`` are ``(clique size, count)`` pairs,
    largest size first, counts positive."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if len(self.entries) > 2:
            raise ValueError("an alpha vector holds at most two non-zero entries")
        if any(k <= 0 or size < 1 for size, k in self.entries):
            raise ValueError("entries need positive sizes and counts")
        if len(self.entries) == 2 and self.entries[0][0] != self.entries[1][0] + 1:
            raise ValueError("two entries must sit at consecutive sizes")

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "AlphaVector":
        return cls(tuple(sorted(((i, k) for i, k in counts.items() if k), reverse=True)))

    def __getitem__(self, size: int) -> int:
        for i, k in self.entries:
            if i == size:
                return k
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def n_rem(self) -> int:
        return sum(i * k for i, k in self.entries)

    @property
    def c_rem(self) -> int:
        return sum((i - 1) * k for i, k in self.entries)

    @property
    def cliques(self) -> int:
        return sum(k for _, k in self.entries)

    def as_tuple(self, length: int | None = None) -> tuple[int, ...]:
        """Dense ``(a_length, ..., a_1)``, the order used for comparisons."""
        length = self.n_rem if length is None else length
        return tuple(self[i] for i in range(length, 0, -1))


def lexmin_alpha(n: int, c: int) -> AlphaVector:
    """Closed-form lexicographic minimum for ``n`` vertices and cover ``c``.

    ``n == c == 0`` (an exhausted budget) gives the empty vector.
    """
    if n == 0 and c == 0:
        return AlphaVector()
    if c < 0 or n <= c:
        raise InfeasibleBudget(f"need n > c >= 0, got n={n}, c={c}")
    k = n - c
    hi = -(-c // k) + 1
    lo = c // k + 1
    if hi == lo:
        return AlphaVector(((hi, k),))
    a_hi = c % k
    return AlphaVector(((hi, a_hi), (lo, k - a_hi)))


def alpha_edge_lower_bound(a: AlphaVector) -> int:
    return sum(i * (i - 1) // 2 * k for i, k in a.entries)


def max_edges(n: int, c: int) -> int:
    """Most edges a graph with ``n`` vertices and minimum cover ``c`` can have."""
    if n <= c:
        raise ValueError(f"need n > c, got n={n}, c={c}")
    return c * (c - 1) // 2 + c * (n - c)


def alpha_after_parallel(a: AlphaVector) -> AlphaVector:
    """One vertex and one cover unit spent: move one clique from ``h`` to ``h-1``."""
    if a.c_rem < 1:
        raise InfeasibleBudget("no cover budget left for a parallel extension")
    t = a.as_dict()
    h = max(t)
    t[h] -= 1
    t[h - 1] = t.get(h - 1, 0) + 1
    return AlphaVector.from_counts(t)


def alpha_after_chain(a: AlphaVector) -> AlphaVector:
    """Two vertices and one cover unit spent.

    Drops one smallest clique (size ``g``) and re-spends its ``g - 2``
    surplus vertices by growing the smallest remaining cliques, keeping at
    most two live sizes throughout.
    """
    if a.c_rem < 1 or a.n_rem - a.c_rem < 2:
        raise InfeasibleBudget("budget too small for a chain extension")
    t = a.as_dict()
    h, g = max(t), min(t)
    t[g] -= 1
    s = g - 2
    if t[g] > s:
        t[g] -= s
        t[g + 1] = t.get(g + 1, 0) + s
        s = 0
    else:
        moved = t[g]
        t[g + 1] = t.get(g + 1, 0) + moved
        t[g] = 0
        s -= moved
        g += 1
        # a single-size vector grows a new top size here
        h = max(h, g)
    if g == h and s >= t.get(g, 0) > 0:
        d = s // t[g]
        t[g + d] = t[g]
        s -= d * t[g]
        t[g] = 0
        g += d
        h += d
    if g == h and 0 < s < t.get(g, 0):
        t[g + 1] = s
        t[g] -= s
        h += 1
        s = 0
    assert s == 0, "chain update left surplus unassigned"
    return AlphaVector.from_counts(t)
