"""Command-line front end.

Subcommands build, color, chi, spectrum, triangles, verify and report tie
the library together. Exit codes: 0 success or proper, 1 mathematical
negative (an improper coloring or a violated check), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from contextlib import contextmanager

from .chi import DEFAULT_NODE_LIMIT, DEFAULT_TIME_LIMIT, exact_chromatic
from .construction import (
    build_coloring_md,
    count_Aq,
    expected_color_count,
    make_plan,
    read_coloring,
    verify_coloring,
    write_coloring,
)
from .errors import UQGraphError
from .field import make_field, prime_power
from .graph import (
    build_graph,
    degree_formula,
    export_dimacs,
    triangle_count,
    triangle_free_predicted,
)
from .spectral import (
    cayley_spectrum,
    dense_spectrum,
    eigen_bound_report,
    hoffman_bound,
    spectrum_record,
    write_spectrum,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _field_for(q: int):
    decomposition = prime_power(q)
    if decomposition is None:
        raise UQGraphError(f"q={q} is not a prime power")
    p, n = decomposition
    return make_field(p, n)


@contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as stream:
            yield stream


def _dump(record, as_json: bool) -> None:
    if as_json:
        print(json.dumps(record, sort_keys=True))
    else:
        for key in sorted(record):
            print(f"{key}: {record[key]}")


def cmd_build(args) -> int:
    ctx = _field_for(args.q)
    graph = build_graph(ctx, args.m)
    with _open_out(args.out) as sink:
        export_dimacs(graph, sink)
    return EXIT_OK


def cmd_color(args) -> int:
    ctx = _field_for(args.q)
    plan = make_plan(ctx, a=args.a, t=args.t)
    coloring = build_coloring_md(ctx, args.m, plan)
    graph = build_graph(ctx, args.m)
    violation = verify_coloring(graph, coloring)
    if args.out:
        write_coloring(coloring, args.out)
    record = {
        "q": ctx.q,
        "m": args.m,
        "a": plan.a,
        "t": plan.t,
        "k": coloring.k,
        "expectedK": expected_color_count(ctx, args.m),
        "proper": violation is None,
        "violation": list(violation) if violation else None,
    }
    _dump(record, args.json)
    return EXIT_OK if violation is None else EXIT_NEGATIVE


def cmd_chi(args) -> int:
    ctx = _field_for(args.q)
    graph = build_graph(ctx, args.m)
    result = exact_chromatic(graph, time_limit=args.timeout, node_limit=args.nodes)
    if args.out:
        write_coloring(result.witness, args.out)
    print(json.dumps(result.record(), sort_keys=True))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    ctx = _field_for(args.q)
    methods = ["dense", "cayley"] if args.method == "both" else [args.method]
    spectra = {}
    for method in methods:
        if method == "dense":
            spectra[method] = dense_spectrum(build_graph(ctx, args.m))
        else:
            spectra[method] = cayley_spectrum(ctx, args.m)
    preferred = spectra.get("cayley", next(iter(spectra.values())))
    if args.out:
        with _open_out(args.out) as sink:
            write_spectrum(preferred, sink)
    records = [spectrum_record(spectra[m_], ctx.q, args.m) for m_ in methods]
    diagnostics = None
    if args.m == 2:
        report = eigen_bound_report(preferred, ctx.q)
        diagnostics = {
            "maxNonprincipalAbs": round(report.max_nonprincipal_abs, 9),
            "withinSqrtQ": report.within_sqrt_q,
            "withinTwoSqrtQ": report.within_two_sqrt_q,
        }
    if args.json:
        print(json.dumps({"spectra": records, "diagnostics": diagnostics}, sort_keys=True))
    else:
        for record in records:
            print(
                f"method={record['method']} lambda1={record['lambda1']}"
                f" lambdaMin={record['lambdaMin']} hoffman={record['hoffman']}"
            )
        if diagnostics:
            print(
                f"maxNonprincipalAbs={diagnostics['maxNonprincipalAbs']}"
                f" withinSqrtQ={diagnostics['withinSqrtQ']}"
                f" withinTwoSqrtQ={diagnostics['withinTwoSqrtQ']}"
            )
    return EXIT_OK


def cmd_triangles(args) -> int:
    ctx = _field_for(args.q)
    graph = build_graph(ctx, args.m)
    record = {
        "q": ctx.q,
        "m": args.m,
        "triangles": triangle_count(graph),
        "predictedTriangleFree": triangle_free_predicted(ctx.q) if args.m == 2 else None,
    }
    _dump(record, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    coloring = read_coloring(args.file)
    ctx = _field_for(coloring.q)
    graph = build_graph(ctx, coloring.m)
    violation = verify_coloring(graph, coloring)
    if violation is None:
        print(f"proper: {coloring.k} colors on {graph.n_vertices} vertices")
        return EXIT_OK
    print(f"violation: edge {violation[0]} {violation[1]} shares a color")
    return EXIT_NEGATIVE


def _parse_q_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty q range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _report_record(q: int, m: int, time_limit: float, node_limit: int) -> dict:
    ctx = _field_for(q)
    graph = build_graph(ctx, m)
    record = {
        "q": q,
        "p": ctx.p,
        "n": ctx.n,
        "m": m,
        "degree": graph.degree,
        "circleSize": len(graph.connection_set),
    }
    try:
        plan = make_plan(ctx)
        coloring = build_coloring_md(ctx, m, plan)
        violation = verify_coloring(graph, coloring)
        record["constructionColors"] = coloring.k
        record["constructionProper"] = violation is None
    except UQGraphError as exc:
        record["constructionColors"] = None
        record["constructionProper"] = None
        record["constructionError"] = str(exc)
    result = exact_chromatic(graph, time_limit=time_limit, node_limit=node_limit)
    record["chiStatus"] = result.status
    record["chiLower"] = result.lower
    record["chiUpper"] = result.upper
    spectrum = cayley_spectrum(ctx, m)
    hoffman = hoffman_bound(spectrum)
    bounds = eigen_bound_report(spectrum, q)
    record["lambda1"] = round(spectrum.lambda1, 9)
    record["lambdaMin"] = round(spectrum.lambda_min, 9)
    record["hoffman"] = round(hoffman, 9)
    record["maxNonprincipalAbs"] = round(bounds.max_nonprincipal_abs, 9)
    record["withinSqrtQ"] = bounds.within_sqrt_q if m == 2 else None
    record["withinTwoSqrtQ"] = bounds.within_two_sqrt_q if m == 2 else None
    record["triangles"] = triangle_count(graph)
    predicted = triangle_free_predicted(q) if m == 2 else None
    record["predictedTriangleFree"] = predicted
    aq_ok = True
    aq_value = None
    for t in range(1, ctx.q):
        if ctx.quadratic_character(t) == -1:
            report = count_Aq(ctx, t)
            aq_value = report.formula_value
            if report.brute_count != report.formula_value:
                aq_ok = False
    record["aqValue"] = aq_value
    record["checks"] = {
        "degreeFormula": (graph.degree == degree_formula(q)) if m == 2 else None,
        "aqIdentity": aq_ok,
        "colorCount": (
            record["constructionColors"] == expected_color_count(ctx, m)
            if record["constructionColors"] is not None
            else None
        ),
        "trianglePrediction": (record["triangles"] == 0) if predicted else None,
        "hoffmanLeChi": (
            math.ceil(hoffman - 1e-9) <= result.upper
            if result.status == "exact"
            else None
        ),
    }
    return record


def cmd_report(args) -> int:
    records = []
    for q in _parse_q_range(args.q):
        decomposition = prime_power(q)
        if decomposition is None or decomposition[0] == 2:
            print(f"warning: skipping q={q}, not an odd prime power", file=sys.stderr)
            continue
        try:
            records.append(_report_record(q, args.m, args.timeout, args.nodes))
        except UQGraphError as exc:
            records.append({"q": q, "m": args.m, "error": str(exc)})
    with _open_out(args.out) as sink:
        if args.json:
            sink.write(json.dumps(records, sort_keys=True) + "\n")
        else:
            for record in records:
                sink.write(f"-- q={record['q']} m={record.get('m')} --\n")
                for key in sorted(record):
                    if key != "q":
                        sink.write(f"  {key}: {record[key]}\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqgraph",
        description="Unit-quadrance graphs over finite fields: build, color, solve, analyze.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, q_type=int):
        p.add_argument("--q", type=q_type, required=True, help="field order (odd prime power)")
        p.add_argument("--m", type=int, default=2, help="dimension, default 2")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="output path ('-' for stdout)")

    p_build = sub.add_parser("build", help="export the graph in DIMACS format")
    common(p_build)
    p_build.set_defaults(func=cmd_build)

    p_color = sub.add_parser("color", help="run the line-pairing coloring construction")
    common(p_color)
    p_color.add_argument("--a", type=int, default=None, help="slope override (canonical code)")
    p_color.add_argument("--t", type=int, default=None, help="shift override (canonical code)")
    p_color.set_defaults(func=cmd_color)

    p_chi = sub.add_parser("chi", help="exact chromatic number within a budget")
    common(p_chi)
    p_chi.add_argument("--timeout", type=float, default=DEFAULT_TIME_LIMIT, help="seconds")
    p_chi.add_argument("--nodes", type=int, default=DEFAULT_NODE_LIMIT, help="search node limit")
    p_chi.set_defaults(func=cmd_chi)

    p_spec = sub.add_parser("spectrum", help="eigenvalues, spectral bound, magnitude flags")
    common(p_spec)
    p_spec.add_argument(
        "--method", choices=["dense", "cayley", "both"], default="both"
    )
    p_spec.set_defaults(func=cmd_spectrum)

    p_tri = sub.add_parser("triangles", help="triangle count and the prime-form prediction")
    common(p_tri)
    p_tri.set_defaults(func=cmd_triangles)

    p_verify = sub.add_parser("verify", help="check a coloring file against its graph")
    p_verify.add_argument("file", help="coloring file path")
    p_verify.set_defaults(func=cmd_verify)

    p_report = sub.add_parser("report", help="consolidated per-q record over a range")
    common(p_report, q_type=str)
    p_report.add_argument("--timeout", type=float, default=DEFAULT_TIME_LIMIT, help="seconds per q")
    p_report.add_argument("--nodes", type=int, default=DEFAULT_NODE_LIMIT, help="search node limit per q")
    p_report.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UQGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    raise SystemExit(main())
