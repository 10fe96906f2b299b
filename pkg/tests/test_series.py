from collections import Counter
from fractions import Fraction
from itertools import product

import pytest
import sympy

from ehrgraph.counting import count_naive, count_sequence
from ehrgraph.hypergraph import Hypergraph, generate_family
from ehrgraph.poly import Poly, poly_gcd
from ehrgraph.polytope import build_polytope, enumerate_vertices, vertex_denominators
from ehrgraph.series import (
    ONE_MINUS_X,
    ONE_PLUS_X,
    FitError,
    PoleOrderError,
    RationalFunction,
    candidate_denominator,
    check_reciprocity,
    denominator_shape,
    fit_series,
    format_series,
    graph_report,
    is_palindromic,
    normalized_volume,
    reduce_lowest_terms,
    uniform_report,
)

from conftest import C3, FIG1, FIG2, K2, LOOP

FIG2_NUM = Poly([1, 8, 15, 8, 1])
FIG2_DEN = ONE_MINUS_X**6 * Poly.one_minus_xq(2)
x = sympy.Symbol("x")


def test_candidates():
    assert candidate_denominator([1, 1, 1], 2).poly == ONE_MINUS_X**3
    six = candidate_denominator(Counter({1: 6}), 5)
    assert six.poly == ONE_MINUS_X**6
    assert candidate_denominator([1, 1, 2], 2).poly == ONE_MINUS_X**2 * Poly.one_minus_xq(2)
    many = candidate_denominator([1] * 14 + [2], 6)
    assert many.rule == "lcm-power" and many.poly == Poly.one_minus_xq(2) ** 7


def test_fit_simplex():
    counts = [(n + 1) * (n + 2) // 2 for n in range(20)]
    r = fit_series(counts, ONE_MINUS_X**3)
    assert r.num == Poly([1]) and r.den == ONE_MINUS_X**3


def test_fit_rejects_wrong_denominator():
    counts = [(n + 1) * (n + 2) // 2 for n in range(20)]
    with pytest.raises(FitError, match="rejected"):
        fit_series(counts, ONE_MINUS_X**2)
    with pytest.raises(FitError, match="need"):
        fit_series(counts[:5], ONE_MINUS_X**3)


def test_fit_fig1_numerator():
    p = build_polytope(FIG1)
    t = candidate_denominator(vertex_denominators(enumerate_vertices(p)), 5).poly
    assert t == ONE_MINUS_X**6
    r = reduce_lowest_terms(fit_series(count_sequence(p, 16), t))
    # leading lattice-point counts (n = 0..5) of the naive scan pin the numerator
    naive = [count_naive(FIG1, n) for n in range(6)]
    expected = (Poly(naive) * ONE_MINUS_X**6).truncate(5)
    assert r.num == expected == Poly([1, 5, 3])
    assert r.den == ONE_MINUS_X**6


def test_fit_fig2_reduces():
    p = build_polytope(FIG2)
    t = candidate_denominator(vertex_denominators(enumerate_vertices(p)), 6).poly
    counts = count_sequence(p, t.degree + 10)
    r = reduce_lowest_terms(fit_series(counts, t))
    assert r.num == FIG2_NUM and r.den == FIG2_DEN
    assert format_series(r) == "(1+8x+15x^2+8x^3+x^4)/((1-x)^6(1-x^2))"


def test_reduce_examples():
    r = reduce_lowest_terms(RationalFunction(Poly.one_minus_xq(2), ONE_MINUS_X * Poly.one_minus_xq(2)))
    assert r.num == Poly([1]) and r.den == ONE_MINUS_X
    r = reduce_lowest_terms(RationalFunction(ONE_PLUS_X * Poly([1, 2]), ONE_PLUS_X * ONE_MINUS_X**2))
    assert r.num == Poly([1, 2]) and r.den == ONE_MINUS_X**2
    r = reduce_lowest_terms(RationalFunction(Poly([1, 6, 4]), ONE_MINUS_X**6))
    assert r.num == Poly([1, 6, 4])


def test_reduce_times_gcd_is_input():
    num = Poly([1, 8, 15, 8, 1]) * ONE_PLUS_X * Poly([1, 0, 1])
    den = FIG2_DEN * ONE_PLUS_X * Poly([1, 0, 1])
    r = reduce_lowest_terms(RationalFunction(num, den))
    g = num.exact_div(r.num)
    assert r.num * g == num and r.den * g == den
    assert poly_gcd(r.num, r.den) == Poly([1])


def test_normalisation():
    r = RationalFunction(Poly([2]), Poly([2, -2]))
    assert r.den[0] == 1 and r.num == Poly([1])


def test_shape_examples():
    s = denominator_shape(ONE_MINUS_X**6, 5)
    assert (s.mult_1mx, s.mult_1px, s.remainder) == (6, 0, Poly([1]))
    s = denominator_shape(FIG2_DEN, 6)
    assert (s.mult_1mx, s.mult_1px, s.remainder) == (7, 1, Poly([1]))
    cyclo = Poly([1, 1, 1])
    s = denominator_shape(ONE_MINUS_X**2 * cyclo, 1)
    assert (s.mult_1mx, s.mult_1px, s.remainder) == (2, 0, cyclo)
    assert s.rebuild() == ONE_MINUS_X**2 * cyclo
    with pytest.raises(PoleOrderError):
        denominator_shape(ONE_MINUS_X**6, 6)


def test_palindromic():
    assert is_palindromic(FIG2_NUM)
    assert not is_palindromic(Poly([1, 6, 4]))
    assert is_palindromic(Poly([1]))


def test_reciprocity_fig2_symbolic():
    m = sum(int(c) * x**i for i, c in enumerate(FIG2_NUM.coeffs))
    q = (1 - x) ** 6 * (1 - x**2)
    f = m / q
    assert sympy.simplify(x**4 * f - (-1) ** 7 * f.subs(x, 1 / x)) == 0
    assert check_reciprocity(RationalFunction(FIG2_NUM, FIG2_DEN), 6, 3)


def test_reciprocity_simplex_and_perturbed():
    assert check_reciprocity(RationalFunction(Poly([1]), ONE_MINUS_X**3), 2, 2)
    assert not check_reciprocity(RationalFunction(Poly([1, 7, 15, 8, 1]), FIG2_DEN), 6, 3)
    assert not check_reciprocity(RationalFunction(FIG2_NUM, FIG2_DEN), 6, 2)


def _series_of(h):
    p = build_polytope(h)
    t = candidate_denominator(vertex_denominators(enumerate_vertices(p)), h.k).poly
    return reduce_lowest_terms(fit_series(count_sequence(p, t.degree + 10), t))


def test_graph_report_cycles():
    rep = graph_report(_series_of(generate_family("cycle", [4])), 4, bipartite=True)
    assert rep.s == 0 and rep.h.degree == 2 and is_palindromic(rep.h)
    assert set(rep.verdicts.values()) == {"pass"}
    rep = graph_report(_series_of(generate_family("cycle", [5])), 5, bipartite=False)
    assert rep.s == 1 and rep.h.degree == 4 and is_palindromic(rep.h)
    assert set(rep.verdicts.values()) == {"pass"}


def test_graph_report_p3_brute_force():
    p3 = generate_family("path", [3])
    counts = [sum(1 for w in product(range(n + 1), repeat=3) if w[0] + w[1] <= n and w[1] + w[2] <= n) for n in range(9)]
    # numerator = (1-x)^4 * sum counts[n] x^n, truncated
    h = [sum(c * counts[m - i] for i, c in enumerate([1, -4, 6, -4, 1]) if m - i >= 0) for m in range(9)]
    assert h == [1, 1, 0, 0, 0, 0, 0, 0, 0]
    rep = graph_report(_series_of(p3), 3, bipartite=True)
    assert rep.h == Poly([1, 1]) and rep.s == 0
    assert set(rep.verdicts.values()) == {"pass"}


def test_graph_report_flags_bad_denominator():
    r = RationalFunction(Poly([1]), ONE_MINUS_X**3 * Poly([1, 1, 1]))
    rep = graph_report(r, 2, bipartite=True)
    assert rep.verdicts["graph_denominator_form"] == "fail" and rep.h is None


def test_uniform_report_examples():
    v = uniform_report(RationalFunction(FIG2_NUM, FIG2_DEN), 6, 3)
    assert v == {"uniform_numerator_palindromic": "pass", "uniform_numerator_degree": "pass"}
    v = uniform_report(RationalFunction(Poly([1]), ONE_MINUS_X**2), 1, 1, unimodular=True)
    assert set(v.values()) == {"pass"}


def test_uniform_report_c3_brute_force():
    counts = [count_naive(C3, n) for n in range(11)]
    t = ONE_MINUS_X**4 * ONE_PLUS_X
    r = reduce_lowest_terms(fit_series(counts, t, margin=5))
    assert r.den == t and r.num.degree == 2 and is_palindromic(r.num)
    assert set(uniform_report(r, 3, 2).values()) == {"pass"}


def _interpolated_leading(h, k):
    pts = [(n, count_naive(h, n)) for n in range(k + 1)]
    poly = sympy.interpolate(pts, x)
    return Fraction(str(sympy.Poly(poly, x).LC()))


def test_volumes():
    assert normalized_volume(RationalFunction(Poly([1]), ONE_MINUS_X**3), 2) == Fraction(1, 2)
    assert normalized_volume(RationalFunction(Poly([1]), ONE_MINUS_X**2), 1) == 1
    fig1 = _series_of(FIG1)
    assert normalized_volume(fig1, 5) == _interpolated_leading(FIG1, 5) == Fraction(3, 40)
    with pytest.raises(PoleOrderError):
        normalized_volume(RationalFunction(Poly([1]), ONE_MINUS_X**3), 1)


def test_roundtrip_expansion():
    r = _series_of(FIG2)
    assert r.expand(8) == [count_naive(FIG2, n) for n in range(8)]
