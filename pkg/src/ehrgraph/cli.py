"""Command-line entry point: ``ehrgraph <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .analysis import DEFAULT_MARGIN, EhrhartAnalysis, analyze
from .counting import CountingError, count_naive, count_sequence
from .hypergraph import (
    DEFAULT_TU_CAP,
    FAMILIES,
    Hypergraph,
    HypergraphError,
    generate_family,
    incidence_matrix,
    is_totally_unimodular,
    parse_hypergraph,
    validate,
)
from .poly import Poly, format_poly
from .polytope import DEFAULT_VERTEX_CAP, PolytopeError, build_polytope, enumerate_vertices, vertex_denominators
from .series import SeriesError, format_denominator, format_series


def _read_input(path: str) -> Hypergraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_hypergraph(text)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _poly_json(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def _dens_text(dens) -> str:
    return "{" + ", ".join(f"{q}: {m}" for q, m in sorted(dens.items())) + "}"


def _props_dict(h: Hypergraph, props) -> dict:
    return {
        "vertices": h.k,
        "edges": h.r,
        "is_simple": props.is_simple,
        "is_connected": props.is_connected,
        "is_covering": props.is_covering,
        "has_loops": props.has_loops,
        "has_repeated_edges": props.has_repeated_edges,
        "uniform_s": props.uniform_s,
        "is_graph": props.is_graph,
    }


def cmd_validate(args) -> int:
    h = _read_input(args.input)
    props = validate(h)
    tu = is_totally_unimodular(incidence_matrix(h), args.tu_cap)
    doc = _props_dict(h, props)
    doc["totally_unimodular"] = tu.label
    if tu.witness:
        doc["tu_witness"] = {
            "rows": [i + 1 for i in tu.witness.rows],
            "cols": [j + 1 for j in tu.witness.cols],
            "det": tu.witness.det,
        }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for key, value in doc.items():
            if isinstance(value, bool):
                value = _yn(value)
            elif value is None:
                value = "-"
            print(f"{key}: {value}")
    if not props.is_covering and not args.graph_box:
        print("error: some vertex lies in no edge (pass --graph-box for graphs)", file=sys.stderr)
        return 2
    return 0


def cmd_vertices(args) -> int:
    h = _read_input(args.input)
    vs = enumerate_vertices(build_polytope(h, args.graph_box), args.vertex_cap)
    dens = vertex_denominators(vs)
    if args.format == "json":
        print(json.dumps([[str(c) for c in v.coords] for v in vs]))
    else:
        for v in vs:
            print(" ".join(str(c) for c in v.coords))
        print(f"denominators: {_dens_text(dens)}")
    return 0


def cmd_count(args) -> int:
    h = _read_input(args.input)
    if args.n_max is None:
        raise CountingError("count needs --n-max")
    if args.naive:
        counts = [count_naive(h, n) for n in range(args.n_max + 1)]
    else:
        counts = count_sequence(build_polytope(h, args.graph_box), args.n_max)
    if args.format == "json":
        print(json.dumps([str(c) for c in counts]))
    else:
        for n, c in enumerate(counts):
            print(f"ehr({n}) = {c}")
    return 0


def analysis_to_json(a: EhrhartAnalysis) -> dict:
    shape = a.shape
    return {
        "hypergraph": a.hypergraph.to_json(),
        "properties": _props_dict(a.hypergraph, a.properties),
        "graph_box": a.graph_box,
        "totally_unimodular": a.tu.label,
        "vertices": [[str(c) for c in v.coords] for v in a.vertices],
        "denominators": {str(q): m for q, m in sorted(a.denominators.items())},
        "integral": a.integral,
        "candidate_denominator": {"rule": a.candidate.rule, "coefficients": _poly_json(a.candidate.poly)},
        "counts": [str(c) for c in a.counts],
        "margin": a.margin,
        "series": {
            "numerator": _poly_json(a.series.num),
            "denominator": _poly_json(a.series.den),
            "text": format_series(a.series),
        },
        "shape": {
            "mult_1mx": shape.mult_1mx,
            "mult_1px": shape.mult_1px,
            "remainder": _poly_json(shape.remainder),
        },
        "palindromic": a.palindromic,
        "numerator_degree": a.numerator_degree,
        "reciprocity_ok": a.reciprocity_ok,
        "graph_s": a.graph_s,
        "graph_h": _poly_json(a.graph_h) if a.graph_h is not None else None,
        "theorem_verdicts": a.theorem_verdicts,
        "normalized_volume": str(a.normalized_volume) if a.normalized_volume is not None else None,
    }


def analysis_to_text(a: EhrhartAnalysis) -> str:
    h, props = a.hypergraph, a.properties
    lines = [
        f"hypergraph: k={h.k} r={h.r} simple={_yn(props.is_simple)} connected={_yn(props.is_connected)} "
        f"covering={_yn(props.is_covering)} uniform={props.uniform_s or '-'} graph={_yn(props.is_graph)}",
        f"totally unimodular: {a.tu.label}",
        f"vertices: {len(a.vertices)}",
        f"denominators: {_dens_text(a.denominators)}",
        f"integral: {str(a.integral).lower()}",
        f"candidate denominator: {format_poly(a.candidate.poly)} [{a.candidate.rule}, degree {a.candidate.poly.degree}]",
        "counts:",
    ]
    lines += [f"  ehr({n}) = {c}" for n, c in enumerate(a.counts)]
    lines += [
        f"series: {format_series(a.series)}",
        f"shape: (1-x)^{a.shape.mult_1mx} (1+x)^{a.shape.mult_1px} remainder {format_poly(a.shape.remainder)}",
        f"denominator: {format_denominator(a.shape)}",
        f"numerator degree: {a.numerator_degree}",
        f"palindromic: {str(a.palindromic).lower()}",
    ]
    if a.graph_s is not None:
        lines.append(f"graph s: {a.graph_s}")
    if a.graph_h is not None:
        lines.append(f"graph H: {format_poly(a.graph_h)}")
    recip = "-" if a.reciprocity_ok is None else str(a.reciprocity_ok).lower()
    vol = "-" if a.normalized_volume is None else str(a.normalized_volume)
    lines += [f"reciprocity: {recip}", f"volume: {vol}", "checks:"]
    width = max(map(len, a.theorem_verdicts))
    lines += [f"  {name:<{width}}  {verdict}" for name, verdict in a.theorem_verdicts.items()]
    return "\n".join(lines)


def _run_analysis(args) -> EhrhartAnalysis:
    h = _read_input(args.input)
    return analyze(
        h,
        graph_box=args.graph_box,
        margin=args.margin,
        n_max=args.n_max,
        tu_cap=args.tu_cap,
        vertex_cap=args.vertex_cap,
    )


def _emit(a: EhrhartAnalysis, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(analysis_to_json(a), indent=2))
    else:
        print(analysis_to_text(a))


def cmd_series(args) -> int:
    _emit(_run_analysis(args), args.format)
    return 0


def cmd_verify(args) -> int:
    a = _run_analysis(args)
    _emit(a, args.format)
    return 0 if a.all_pass else 1


def cmd_gen(args) -> int:
    h = generate_family(args.family, args.params)
    if args.format == "json":
        print(json.dumps(h.to_json()))
    else:
        sys.stdout.write(h.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--graph-box", action="store_true", help="add 0 <= x_i <= 1 (graphs with isolated vertices)")
    common.add_argument("--n-max", type=int, default=None)
    common.add_argument("--margin", type=int, default=DEFAULT_MARGIN)
    common.add_argument("--tu-cap", type=int, default=DEFAULT_TU_CAP)
    common.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    common.add_argument("--naive", action="store_true", help="count by exhaustive scan (count only)")

    parser = argparse.ArgumentParser(prog="ehrgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "validate": cmd_validate,
        "vertices": cmd_vertices,
        "count": cmd_count,
        "series": cmd_series,
        "verify": cmd_verify,
    }
    for name, fn in handlers.items():
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input", help="hypergraph file, or - for stdin")
        p.set_defaults(func=fn)
    g = sub.add_parser("gen", parents=[common], help="emit a standard graph family")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("params", type=int, nargs="+")
    g.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HypergraphError, PolytopeError, CountingError, SeriesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
