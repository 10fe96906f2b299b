"""Exact Ehrhart series of graph and hypergraph polytopes."""

from .analysis import EhrhartAnalysis, analyze
from .counting import count_dilation, count_naive, count_sequence
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    generate_family,
    incidence_matrix,
    is_totally_unimodular,
    parse_hypergraph,
    validate,
)
from .poly import Poly
from .polytope import build_polytope, enumerate_vertices, is_integral, vertex_denominators
from .series import (
    RationalFunction,
    candidate_denominator,
    check_reciprocity,
    denominator_shape,
    fit_series,
    is_palindromic,
    normalized_volume,
    reduce_lowest_terms,
)

__all__ = [
    "EhrhartAnalysis",
    "Hypergraph",
    "HypergraphError",
    "Poly",
    "RationalFunction",
    "analyze",
    "build_polytope",
    "candidate_denominator",
    "check_reciprocity",
    "count_dilation",
    "count_naive",
    "count_sequence",
    "denominator_shape",
    "enumerate_vertices",
    "fit_series",
    "generate_family",
    "incidence_matrix",
    "is_integral",
    "is_palindromic",
    "is_totally_unimodular",
    "normalized_volume",
    "parse_hypergraph",
    "reduce_lowest_terms",
    "validate",
    "vertex_denominators",
]
