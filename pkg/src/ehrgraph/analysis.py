"""End-to-end pipeline: hypergraph -> polytope -> vertices -> counts -> series
-> structural checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import series as S
from .counting import count_sequence
from .hypergraph import (
    DEFAULT_TU_CAP,
    Hypergraph,
    HypergraphProperties,
    TUVerdict,
    incidence_matrix,
    is_bipartite,
    is_totally_unimodular,
    validate,
)
from .poly import Poly
from .polytope import (
    DEFAULT_VERTEX_CAP,
    HRep,
    RationalPoint,
    build_polytope,
    enumerate_vertices,
    is_full_dimensional,
    is_integral,
    vertex_denominators,
)

DEFAULT_MARGIN = 10


@dataclass(frozen=True)
class EhrhartAnalysis:
    hypergraph: Hypergraph
    properties: HypergraphProperties
    graph_box: bool
    tu: TUVerdict
    vertices: list[RationalPoint]
    denominators: Counter
    integral: bool
    candidate: S.Candidate
    counts: list[int]
    margin: int
    series: S.RationalFunction
    shape: S.DenominatorShape
    palindromic: bool
    numerator_degree: int
    reciprocity_ok: Optional[bool]
    graph_s: Optional[int]
    graph_h: Optional[Poly]
    theorem_verdicts: dict
    normalized_volume: Optional[Fraction]

    @property
    def all_pass(self) -> bool:
        return all(v != S.FAIL for v in self.theorem_verdicts.values())


def analyze(
    h: Hypergraph,
    *,
    graph_box: bool = False,
    margin: int = DEFAULT_MARGIN,
    n_max: Optional[int] = None,
    tu_cap: int = DEFAULT_TU_CAP,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    workers: Optional[int] = None,
) -> EhrhartAnalysis:
    props = validate(h)
    p: HRep = build_polytope(h, graph_box=graph_box)
    tu = is_totally_unimodular(incidence_matrix(h), tu_cap)
    vertices = enumerate_vertices(p, vertex_cap)
    dens = vertex_denominators(vertices)
    integral = is_integral(vertices)
    cand = S.candidate_denominator(dens, h.k)

    needed = cand.poly.degree + margin
    counts = count_sequence(p, max(needed, n_max or 0), workers=workers)

    fitted = S.fit_series(counts, cand.poly, margin)
    series = S.reduce_lowest_terms(fitted)
    shape = S.denominator_shape(series.den)
    num = series.num

    verdicts: dict[str, str] = {}
    verdicts["full_dimension"] = S.PASS if is_full_dimensional(p) else S.FAIL
    verdicts["fit_residual"] = S.PASS  # fit_series raises otherwise
    verdicts["ehr0_is_one"] = S.PASS if counts[0] == 1 else S.FAIL
    verdicts["counts_monotone"] = S.PASS if all(a <= b for a, b in zip(counts, counts[1:])) else S.FAIL
    expanded = series.expand(len(counts))
    verdicts["series_roundtrip"] = S.PASS if expanded == [Fraction(c) for c in counts] else S.FAIL
    pole_ok = shape.mult_1mx == h.k + 1
    verdicts["pole_order"] = S.PASS if pole_ok else S.FAIL
    if integral:
        ok = num.is_integral() and all(c >= 0 for c in num.coeffs)
        verdicts["hstar_nonnegative_integral"] = S.PASS if ok else S.FAIL
    else:
        verdicts["hstar_nonnegative_integral"] = S.NA

    if tu.unimodular:
        verdicts["unimodular_integral"] = S.PASS if integral else S.FAIL
        verdicts["unimodular_denominator"] = S.PASS if series.den == S.ONE_MINUS_X ** (h.k + 1) else S.FAIL
    else:
        verdicts["unimodular_integral"] = S.NA
        verdicts["unimodular_denominator"] = S.NA

    # Symmetry results assume a simple connected hypergraph covering all vertices.
    eligible = props.is_simple and props.is_connected and props.is_covering
    graph_s = graph_h = None
    graph_keys = ("graph_denominator_form", "graph_numerator_symmetric", "graph_numerator_degree", "bipartite_s_zero")
    if eligible and props.is_graph:
        rep = S.graph_report(series, h.k, is_bipartite(h))
        graph_s, graph_h = rep.s, rep.h
        verdicts.update(rep.verdicts)
    for key in graph_keys:
        verdicts.setdefault(key, S.NA)

    reciprocity = None
    s = props.uniform_s
    if eligible and s is not None:
        reciprocity = S.check_reciprocity(series, h.k, s)
        verdicts["reciprocity"] = S.PASS if reciprocity else S.FAIL
        verdicts.update(S.uniform_report(series, h.k, s, unimodular=bool(tu.unimodular)))
    for key in ("reciprocity", "uniform_numerator_palindromic", "uniform_numerator_degree", "uniform_unimodular_form"):
        verdicts.setdefault(key, S.NA)

    volume = S.normalized_volume(series, h.k) if pole_ok else None

    return EhrhartAnalysis(
        hypergraph=h,
        properties=props,
        graph_box=graph_box,
        tu=tu,
        vertices=vertices,
        denominators=dens,
        integral=integral,
        candidate=cand,
        counts=counts,
        margin=margin,
        series=series,
        shape=shape,
        palindromic=S.is_palindromic(num),
        numerator_degree=num.degree,
        reciprocity_ok=reciprocity,
        graph_s=graph_s,
        graph_h=graph_h,
        theorem_verdicts=verdicts,
        normalized_volume=volume,
    )
