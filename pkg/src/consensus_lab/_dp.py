"""Subset dynamic program for linear-ordering problems.

Minimises ``sum over a placed before b of cost[b, a]`` over all orderings of
``range(m)``. ``table[S]`` is the least cost of ordering ``S`` as a prefix,
counting every pair (a in S, b outside S) as a-before-b. Appending ``c`` to a
prefix ``P`` therefore adds ``sum over d not in P | {c} of cost[d, c]``.

Kemeny uses ``cost = n`` (the pairwise tally); Slater and minimum feedback
arc set use a weighted adjacency matrix.
"""

from __future__ import annotations

import numpy as np
from numba import njit

INF = np.iinfo(np.int64).max


@njit(cache=True)
def _prefix_sums(cost, offset, bits):
    # rows[mask, c] = sum over d in mask of cost[d + offset, c]
    m = cost.shape[0]
    rows = np.zeros((1 << bits, m), np.int64)
    for mask in range(1, 1 << bits):
        low = mask & -mask
        d = 0
        while (1 << d) != low:
            d += 1
        for c in range(m):
            rows[mask, c] = rows[mask ^ low, c] + cost[d + offset, c]
    return rows


@njit(cache=True)
def _table(cost):
    m = cost.shape[0]
    h = m // 2
    s_lo = _prefix_sums(cost, 0, h)
    s_hi = _prefix_sums(cost, h, m - h)
    col = np.zeros(m, np.int64)
    for c in range(m):
        for d in range(m):
            col[c] += cost[d, c]
    f = np.empty(1 << m, np.int64)
    f[0] = 0
    lomask = (1 << h) - 1
    for mask in range(1, 1 << m):
        lo = mask & lomask
        hi = mask >> h
        best = INF
        for c in range(m):
            if (mask >> c) & 1:
                v = f[mask ^ (1 << c)] + col[c] - s_lo[lo, c] - s_hi[hi, c]
                if v < best:
                    best = v
        f[mask] = best
    return f


def subset_table(cost: np.ndarray) -> np.ndarray:
    """Full DP table of length ``2**m``; ``table[-1]`` is the optimum."""
    cost = np.ascontiguousarray(cost, dtype=np.int64)
    if cost.shape[0] == 0:
        return np.zeros(1, dtype=np.int64)
    return _table(cost)


def placement_cost(cost: np.ndarray, prefix: int, c: int) -> int:
    """Cost added by appending ``c`` right after the prefix set ``prefix``."""
    m = cost.shape[0]
    return int(sum(cost[d, c] for d in range(m)
                   if d != c and not (prefix >> d) & 1))


def optimal_orders(cost: np.ndarray, table: np.ndarray) -> list[tuple[int, ...]]:
    """Every optimal ordering, recovered from ``table`` by backtracking over
    all optimal last elements of each prefix."""
    m = cost.shape[0]
    out: list[tuple[int, ...]] = []
    suffix: list[int] = []

    def walk(mask: int):
        if mask == 0:
            out.append(tuple(reversed(suffix)))
            return
        for c in range(m):
            if (mask >> c) & 1:
                prev = mask ^ (1 << c)
                if table[prev] + placement_cost(cost, prev, c) == table[mask]:
                    suffix.append(c)
                    walk(prev)
                    suffix.pop()

    walk((1 << m) - 1)
    return sorted(out)


def optimal_first_elements(cost: np.ndarray, table: np.ndarray) -> list[int]:
    """Elements that head at least one optimal ordering.

    Placing ``c`` first costs ``sum_d cost[d, c]``; the rest is then an
    independent ordering problem on the other elements, whose optimum is the
    prefix value ``table[rest]`` minus its fixed cross term with ``c``.
    """
    m = cost.shape[0]
    full = (1 << m) - 1
    best = table[full]
    heads = []
    for c in range(m):
        rest = full ^ (1 << c)
        inner = table[rest] - int(cost[c, :].sum() - cost[c, c])
        if int(cost[:, c].sum() - cost[c, c]) + inner == best:
            heads.append(c)
    return heads


def first_optimal_order(cost: np.ndarray, table: np.ndarray) -> tuple[int, ...]:
    """The lexicographically smallest optimal ordering, built front to back.

    ``inner(R)`` is the optimum for ordering ``R`` alone: ``table[R]`` minus
    the cross cost of everything outside ``R`` against ``R``.
    """
    m = cost.shape[0]
    cost = np.asarray(cost, dtype=np.int64)

    def inner(mask: int) -> int:
        inside = [i for i in range(m) if (mask >> i) & 1]
        outside = [i for i in range(m) if not (mask >> i) & 1]
        cross = int(cost[np.ix_(outside, inside)].sum()) if inside and outside else 0
        return int(table[mask]) - cross

    order: list[int] = []
    rest = (1 << m) - 1
    while rest:
        need = inner(rest)
        for c in range(m):
            if (rest >> c) & 1:
                tail = rest ^ (1 << c)
                head = sum(int(cost[d, c]) for d in range(m) if (tail >> d) & 1)
                if head + inner(tail) == need:
                    order.append(c)
                    rest = tail
                    break
    return tuple(order)
