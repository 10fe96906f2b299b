"""Inequality description of the hypergraph polytope and exact vertex enumeration."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import NamedTuple, Optional, Sequence

from .hypergraph import Hypergraph, incidence_matrix, validate


class PolytopeError(ValueError):
    pass


class Row(NamedTuple):
    coeffs: tuple[int, ...]
    rhs: int


@dataclass(frozen=True)
class HRep:
    """``coeffs . x <= rhs`` for every row; rows are incidence rows first,
    then nonnegativity rows, then (optionally) unit upper bounds."""

    k: int
    rows: tuple[Row, ...]

    def contains(self, x: Sequence[Fraction], scale: int = 1) -> bool:
        return all(sum(c * xi for c, xi in zip(row.coeffs, x)) <= row.rhs * scale for row in self.rows)


def build_polytope(h: Hypergraph, graph_box: bool = False) -> HRep:
    props = validate(h)
    if not props.is_covering and not graph_box:
        uncovered = sorted(set(range(1, h.k + 1)).difference(*h.edges))
        raise PolytopeError(
            f"vertex {uncovered[0]} lies in no edge; the polytope would be unbounded "
            "(use graph_box for graphs with isolated vertices)"
        )
    rows = [Row(tuple(a), 1) for a in incidence_matrix(h)]
    unit = [tuple(int(i == j) for j in range(h.k)) for i in range(h.k)]
    rows += [Row(tuple(-c for c in e), 0) for e in unit]
    if graph_box:
        rows += [Row(e, 1) for e in unit]
    return HRep(h.k, tuple(rows))


@dataclass(frozen=True, order=True)
class RationalPoint:
    coords: tuple[Fraction, ...]

    @property
    def den(self) -> int:
        return lcm(*(c.denominator for c in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def solve_exact(a: list[list[int]], b: list[int]) -> Optional[tuple[Fraction, ...]]:
    """Solve a square integer system exactly; None when the matrix is singular.

    Forward elimination is fraction-free (Bareiss) on the augmented matrix, so
    every intermediate entry stays an integer; only back-substitution divides.
    """
    n = len(a)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    prev = 1
    for i in range(n):
        if m[i][i] == 0:
            piv = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if piv is None:
                return None
            m[i], m[piv] = m[piv], m[i]
        p = m[i]
        for r in range(i + 1, n):
            row = m[r]
            f = row[i]
            for c in range(i + 1, n + 1):
                row[c] = (row[c] * p[i] - f * p[c]) // prev
            row[i] = 0
        prev = p[i]
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(m[i][n]) - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = acc / m[i][i]
    return tuple(x)


DEFAULT_VERTEX_CAP = 5 * 10**6


def _check_bounded(p: HRep) -> None:
    # Sufficient certificate: x >= 0 plus, per coordinate, a row with
    # nonnegative coefficients that bounds it from above.
    for j in range(p.k):
        lower = any(r.coeffs[j] < 0 and r.rhs == 0 and sum(map(abs, r.coeffs)) == 1 for r in p.rows)
        upper = any(r.coeffs[j] > 0 and min(r.coeffs) >= 0 for r in p.rows)
        if not (lower and upper):
            raise PolytopeError(f"cannot certify boundedness in coordinate {j + 1}")


def enumerate_vertices(p: HRep, subset_cap: int = DEFAULT_VERTEX_CAP) -> list[RationalPoint]:
    """All vertices, by solving every k-subset of rows as equalities.

    Returns the sorted, duplicate-free list. Raises PolytopeError past
    ``subset_cap`` subsets.
    """
    _check_bounded(p)
    n_subsets = comb(len(p.rows), p.k)
    if n_subsets > subset_cap:
        raise PolytopeError(f"vertex enumeration needs {n_subsets} subsets, cap is {subset_cap}")
    found = set()
    for subset in combinations(p.rows, p.k):
        x = solve_exact([list(r.coeffs) for r in subset], [r.rhs for r in subset])
        if x is not None and p.contains(x):
            found.add(RationalPoint(x))
    if not found:
        raise PolytopeError("no vertices found; the polytope is empty or unbounded")
    return sorted(found)


def vertex_denominators(vs: Sequence[RationalPoint]) -> Counter:
    return Counter(v.den for v in vs)


def is_integral(vs: Sequence[RationalPoint]) -> bool:
    return all(v.den == 1 for v in vs)


def is_full_dimensional(p: HRep) -> bool:
    """Check that the origin and eps*e_i (i = 1..k) are all feasible, i.e. the
    polytope holds k+1 affinely independent points."""
    origin = (Fraction(0),) * p.k
    if not p.contains(origin):
        return False
    eps = Fraction(1, 1 + max(sum(abs(c) for c in r.coeffs) for r in p.rows))
    return all(
        p.contains(tuple(eps if j == i else Fraction(0) for j in range(p.k))) for i in range(p.k)
    )
