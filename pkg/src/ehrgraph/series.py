"""Ehrhart series as exact rational functions: fitting from counts, lowest
terms, denominator shape and the symmetry checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Optional, Sequence

from .poly import Poly, format_poly, poly_gcd

ONE_MINUS_X = Poly([1, -1])
ONE_PLUS_X = Poly([1, 1])

PASS, FAIL, NA = "pass", "fail", "n/a"


class SeriesError(ArithmeticError):
    pass


class FitError(SeriesError):
    pass


class PoleOrderError(SeriesError):
    pass


@dataclass(frozen=True)
class RationalFunction:
    """num/den, normalised so that den(0) == 1."""

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")
        c = self.den[0]
        if c == 0:
            raise SeriesError("denominator vanishes at x = 0")
        if c != 1:
            object.__setattr__(self, "num", self.num * (1 / c))
            object.__setattr__(self, "den", self.den * (1 / c))

    def expand(self, n_terms: int) -> list[Fraction]:
        """First ``n_terms`` power-series coefficients."""
        out: list[Fraction] = []
        for m in range(n_terms):
            acc = self.num[m]
            for i in range(1, min(m, self.den.degree) + 1):
                acc -= self.den[i] * out[m - i]
            out.append(acc)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFunction) and self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable")


@dataclass(frozen=True)
class Candidate:
    poly: Poly
    rule: str  # "vertex-product" or "lcm-power"


def candidate_denominator(dens: Iterable[int], k: int) -> Candidate:
    """Smaller of prod (1 - x^den) over vertices and (1 - x^L)^(k+1), L = lcm."""
    dens = list(Counter(dens).elements()) if isinstance(dens, Counter) else list(dens)
    if not dens:
        raise SeriesError("no vertex denominators")
    product = Poly([1])
    for q in sorted(dens):
        product = product * Poly.one_minus_xq(q)
    power = Poly.one_minus_xq(lcm(*dens)) ** (k + 1)
    if product.degree <= power.degree:
        return Candidate(product, "vertex-product")
    return Candidate(power, "lcm-power")


def fit_series(counts: Sequence[int], t: Poly, margin: int = 10) -> RationalFunction:
    """Numerator N = t * sum(counts[n] x^n) truncated below deg t, after
    checking that the next ``margin`` product coefficients vanish."""
    d = t.degree
    if len(counts) < d + 1 + margin:
        raise FitError(f"need {d + 1 + margin} counts for the fit, have {len(counts)}")
    prod = [sum(t[i] * counts[m - i] for i in range(min(m, d) + 1)) for m in range(d + margin + 1)]
    residual = [m for m in range(d, d + margin + 1) if prod[m] != 0]
    if residual:
        raise FitError(f"denominator hypothesis rejected: coefficient of x^{residual[0]} is {prod[residual[0]]}")
    return RationalFunction(Poly(prod[:d]), t)


def reduce_lowest_terms(r: RationalFunction) -> RationalFunction:
    g = poly_gcd(r.num, r.den)
    if g.is_zero() or g.degree == 0:
        return RationalFunction(r.num, r.den)
    return RationalFunction(r.num.exact_div(g), r.den.exact_div(g))


@dataclass(frozen=True)
class DenominatorShape:
    mult_1mx: int
    mult_1px: int
    remainder: Poly

    def rebuild(self) -> Poly:
        return ONE_MINUS_X**self.mult_1mx * ONE_PLUS_X**self.mult_1px * self.remainder


def _peel(q: Poly, factor: Poly) -> tuple[int, Poly]:
    mult = 0
    while True:
        quot, rem = divmod(q, factor)
        if not rem.is_zero():
            return mult, q
        q, mult = quot, mult + 1


def denominator_shape(q: Poly, k: Optional[int] = None) -> DenominatorShape:
    """Split q as (1-x)^a (1+x)^b * remainder. With ``k`` given, a must be k+1."""
    if q[0] != 1:
        raise SeriesError("denominator must satisfy q(0) = 1")
    a, rest = _peel(q, ONE_MINUS_X)
    b, rest = _peel(rest, ONE_PLUS_X)
    if k is not None and a != k + 1:
        raise PoleOrderError(f"pole-order violation: (1-x) multiplicity {a}, expected {k + 1}")
    return DenominatorShape(a, b, rest)


def is_palindromic(m: Poly) -> bool:
    return m.coeffs == m.reversed().coeffs


def check_reciprocity(r: RationalFunction, k: int, s: int) -> bool:
    """x^(s+1) F(x) == (-1)^(k+1) F(1/x) for F = M/Q, as a polynomial identity:
    x^(s+1) M Q* x^deg M == (-1)^(k+1) M* Q x^deg Q, with P* the reversal."""
    m, q = r.num, r.den
    if m.is_zero():
        return False
    lhs = (m * q.reversed()).shift(s + 1 + m.degree)
    rhs = (m.reversed() * q).shift(q.degree) * (-1) ** (k + 1)
    return lhs == rhs


@dataclass(frozen=True)
class GraphReport:
    s: int
    h: Optional[Poly]
    verdicts: dict = field(default_factory=dict)


def graph_report(r: RationalFunction, k: int, bipartite: bool) -> GraphReport:
    """Write the series as H / ((1-x^2)^s (1-x)^(k+1-s)) with minimal s and
    check that H is symmetric of degree k+s-2 (s = 0, degree k-2 when bipartite)."""
    shape = denominator_shape(r.den)
    s = shape.mult_1px
    verdicts = {}
    if shape.remainder != Poly([1]) or shape.mult_1mx != k + 1:
        verdicts["graph_denominator_form"] = FAIL
        verdicts["graph_numerator_symmetric"] = NA
        verdicts["graph_numerator_degree"] = NA
        if bipartite:
            verdicts["bipartite_s_zero"] = PASS if s == 0 else FAIL
        return GraphReport(s, None, verdicts)
    verdicts["graph_denominator_form"] = PASS
    target = ONE_MINUS_X ** (k + 1) * ONE_PLUS_X**s
    h = (r.num * target).exact_div(r.den)
    verdicts["graph_numerator_symmetric"] = PASS if is_palindromic(h) else FAIL
    verdicts["graph_numerator_degree"] = PASS if h.degree == k + s - 2 else FAIL
    if bipartite:
        verdicts["bipartite_s_zero"] = PASS if s == 0 and h.degree == k - 2 else FAIL
    return GraphReport(s, h, verdicts)


def uniform_report(r: RationalFunction, k: int, s: int, unimodular: bool = False) -> dict:
    """Palindromic numerator of degree deg Q - (s+1); for unimodular inputs
    also Q = (1-x)^(k+1) and numerator degree k - s."""
    m, q = r.num, r.den
    verdicts = {
        "uniform_numerator_palindromic": PASS if is_palindromic(m) else FAIL,
        "uniform_numerator_degree": PASS if m.degree == q.degree - (s + 1) else FAIL,
    }
    if unimodular:
        ok = q == ONE_MINUS_X ** (k + 1) and m.degree == k - s
        verdicts["uniform_unimodular_form"] = PASS if ok else FAIL
    return verdicts


def normalized_volume(r: RationalFunction, k: int) -> Fraction:
    """Euclidean volume: ((1-x)^(k+1) * F)(1) / k!."""
    shape = denominator_shape(r.den, k)
    rest = r.den.exact_div(ONE_MINUS_X**shape.mult_1mx)
    return r.num(1) / rest(1) / factorial(k)


def format_denominator(shape: DenominatorShape) -> str:
    """Factored form, pairing (1-x)(1+x) into (1-x^2) where possible,
    e.g. ``(1-x)^6(1-x^2)``."""
    a, b = shape.mult_1mx, shape.mult_1px
    pair = min(a, b)
    parts = []

    def factor(body: str, e: int):
        if e == 1:
            parts.append(f"({body})")
        elif e > 1:
            parts.append(f"({body})^{e}")

    factor("1-x", a - pair)
    factor("1-x^2", pair)
    factor("1+x", b - pair)
    if shape.remainder != Poly([1]):
        parts.append(f"({format_poly(shape.remainder)})")
    return "".join(parts) or "1"


def format_series(r: RationalFunction) -> str:
    return f"({format_poly(r.num)})/({format_denominator(denominator_shape(r.den))})"
