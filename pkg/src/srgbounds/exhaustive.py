"""Brute-force ground truth for small graphs.

Exact minimum and maximum orders of non-empty d-regular induced
subgraphs by backtracking over vertex subsets in fixed index order, and
exact clique number by branch and bound.  Pruning uses only degree
feasibility, never the adjacency-polynomial machinery, so these results
are an independent check of the bounds and not a restatement of them.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_ORDER_LIMIT = 22


@dataclass(frozen=True)
class ExtremalResult:
    min_order: int | None
    max_order: int | None
    witness_min: tuple | None
    witness_max: tuple | None

    @property
    def exists(self):
        return self.min_order is not None


def extremal_regular_induced(g, d, order_limit=DEFAULT_ORDER_LIMIT):
    """Exact extremal orders of non-empty d-regular induced subgraphs.

    Vertices are decided in index order 0..n-1; a partial choice dies as
    soon as some chosen vertex has more than d chosen neighbours or can
    no longer reach d from the undecided vertices.  Deterministic, so
    witnesses are reproducible fixtures.
    """
    n = g.order
    if not 0 <= d < n:
        raise ValueError(f"d={d} out of range for order {n}")
    if n > order_limit:
        raise ValueError(
            f"order {n} exceeds the search limit {order_limit}; "
            f"raise order_limit explicitly to override")
    adj = g.adj
    future_masks = [((1 << n) - 1) ^ ((1 << i) - 1) for i in range(n)] + [0]
    deg = [0] * n
    chosen = []
    best = {"min": None, "max": None, "wmin": None, "wmax": None}

    def record():
        if not chosen:
            return
        order = len(chosen)
        if best["min"] is None or order < best["min"]:
            best["min"], best["wmin"] = order, tuple(chosen)
        if best["max"] is None or order > best["max"]:
            best["max"], best["wmax"] = order, tuple(chosen)

    def rec(i):
        if i == n:
            if all(deg[u] == d for u in chosen):
                record()
            return
        future = future_masks[i]
        for u in chosen:
            if deg[u] + (adj[u] & future).bit_count() < d:
                return
        # include i
        row = adj[i]
        di = sum(1 for u in chosen if row >> u & 1)
        if di <= d and all(deg[u] < d for u in chosen if row >> u & 1):
            deg[i] = di
            for u in chosen:
                if row >> u & 1:
                    deg[u] += 1
            chosen.append(i)
            rec(i + 1)
            chosen.pop()
            for u in chosen:
                if row >> u & 1:
                    deg[u] -= 1
        # exclude i
        rec(i + 1)

    rec(0)
    return ExtremalResult(best["min"], best["max"], best["wmin"], best["wmax"])


def max_clique(g, order_limit=DEFAULT_ORDER_LIMIT):
    """Exact clique number by branch and bound with pivoting."""
    n = g.order
    if n > order_limit:
        raise ValueError(
            f"order {n} exceeds the search limit {order_limit}; "
            f"raise order_limit explicitly to override")
    adj = g.adj
    best = 0

    def bk(size, p_mask, x_mask):
        nonlocal best
        if not p_mask and not x_mask:
            best = max(best, size)
            return
        if size + p_mask.bit_count() <= best:
            return
        pool = p_mask | x_mask
        pivot, score = -1, -1
        m = pool
        while m:
            b = m & -m
            u = b.bit_length() - 1
            s = (adj[u] & p_mask).bit_count()
            if s > score:
                pivot, score = u, s
            m ^= b
        cand = p_mask & ~adj[pivot]
        while cand:
            b = cand & -cand
            u = b.bit_length() - 1
            bk(size + 1, p_mask & adj[u], x_mask & adj[u])
            p_mask ^= b
            x_mask |= b
            cand ^= b

    bk(0, (1 << n) - 1, 0)
    return best


def induced_degrees(g, vertices):
    """Degree sequence of the induced subgraph, in vertex order."""
    mask = 0
    for u in vertices:
        mask |= 1 << u
    return [(g.adj[u] & mask).bit_count() for u in vertices]
