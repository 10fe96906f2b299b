"""Lattice-point counts of dilations n*P, by a memoised depth-first counter and
by an exhaustive oracle."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from .hypergraph import Hypergraph
from .polytope import HRep


class CountingError(ValueError):
    pass


DEFAULT_NAIVE_CAP = 10**8


def worker_count() -> int:
    """Worker processes allowed by EHRGRAPH_THREADS (unset or 0: sequential)."""
    raw = os.environ.get("EHRGRAPH_THREADS", "0").strip() or "0"
    try:
        return max(0, int(raw))
    except ValueError:
        raise CountingError(f"EHRGRAPH_THREADS must be an integer, got {raw!r}") from None


class _Counter:
    """Prepared counter for one HRep; reusable across dilation factors."""

    def __init__(self, p: HRep):
        k = p.k
        upper = []
        has_lower = [False] * k
        for row in p.rows:
            nonzero = [j for j, c in enumerate(row.coeffs) if c]
            if len(nonzero) == 1 and row.coeffs[nonzero[0]] < 0 and row.rhs == 0:
                has_lower[nonzero[0]] = True
            elif min(row.coeffs) >= 0 and nonzero:
                upper.append(row)
            elif nonzero:
                raise CountingError(f"unsupported row {row}: only x_j >= 0 and nonnegative rows are handled")
        if not all(has_lower):
            raise CountingError("every coordinate needs a nonnegativity row")
        self.upper = upper

        degree = [sum(1 for row in upper if row.coeffs[j]) for j in range(k)]
        if not all(degree):
            raise CountingError("polytope is unbounded: some coordinate has no upper bound")
        # Highest-degree variables first; ties by vertex id.
        self.order = sorted(range(k), key=lambda j: (-degree[j], j))
        self.rows_at = [
            [(ri, row.coeffs[j]) for ri, row in enumerate(upper) if row.coeffs[j]] for j in self.order
        ]
        # rows still touching some variable at depth >= i
        self.live = []
        for i in range(k):
            rest = set(self.order[i:])
            self.live.append([ri for ri, row in enumerate(upper) if any(row.coeffs[j] for j in rest)])

    def count(self, n: int) -> int:
        if n < 0:
            raise CountingError("dilation factor must be nonnegative")
        k = len(self.order)
        memo: dict = {}

        def rec(i: int, residual: list[int]) -> int:
            bound = min(residual[ri] // c for ri, c in self.rows_at[i])
            if bound < 0:
                return 0
            if i == k - 1:
                return bound + 1
            key = (i, tuple(residual[ri] for ri in self.live[i]))
            hit = memo.get(key)
            if hit is not None:
                return hit
            total = 0
            for v in range(bound + 1):
                nxt = residual[:]
                for ri, c in self.rows_at[i]:
                    nxt[ri] -= c * v
                total += rec(i + 1, nxt)
            memo[key] = total
            return total

        return rec(0, [row.rhs * n for row in self.upper])


def count_dilation(p: HRep, n: int) -> int:
    """Exact |nP ∩ Z^k|."""
    return _Counter(p).count(n)


def count_naive(h: Hypergraph, n: int, work_cap: int = DEFAULT_NAIVE_CAP) -> int:
    """Scan all of {0..n}^k and keep tuples whose every edge sum is at most n."""
    if (n + 1) ** h.k > work_cap:
        raise CountingError(f"naive count needs {(n + 1) ** h.k} tuples, cap is {work_cap}")
    edges = [[v - 1 for v in e] for e in h.edges]
    return sum(1 for x in product(range(n + 1), repeat=h.k) if all(sum(x[v] for v in e) <= n for e in edges))


def count_w_set(h: Hypergraph, n: int) -> int:
    """#W(G,n) for a graph: weights in 0..n with n_i + n_j <= n on every edge."""
    if any(len(e) != 2 for e in h.edges):
        raise CountingError("W(G,n) is defined for graphs")
    pairs = [tuple(sorted(e)) for e in h.edges]
    count = 0
    for w in product(range(n + 1), repeat=h.k):
        if all(w[i - 1] + w[j - 1] <= n for i, j in pairs):
            count += 1
    return count


def _count_job(args: tuple[HRep, int]) -> int:
    p, n = args
    return count_dilation(p, n)


def count_sequence(p: HRep, n_max: int, workers: int | None = None) -> list[int]:
    """[ehr(P, 0), ..., ehr(P, n_max)]."""
    if workers is None:
        workers = worker_count()
    if workers > 1 and n_max > 0:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_count_job, [(p, n) for n in range(n_max + 1)]))
    counter = _Counter(p)
    return [counter.count(n) for n in range(n_max + 1)]
