"""Command-line front end.

Subcommands: bound, exact, check-domination, certify, demo, sweep.
Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 validation or precondition failure, 2 usage error, 3 I/O error,
4 sweep violation.

Instance files are JSON (schema "tensorbound/1") with 0-based indices;
all human-readable and JSON report output uses 1-based pair indices.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .bounds import (
    BoundReport,
    DominationError,
    DominationReport,
    build_report,
    check_domination,
    exact_reference,
)
from .certificates import CertificateReport, build_certificate_report
from .demos import DEMO_NAMES, PARAMETRIC, build_demo, default_filename
from .graphs import InteractionGraph
from .instance_io import load_graph, load_instance, save_instance
from .linalg import DEFAULT_DIM_CAP, SpectralSummary
from .sweep import GRAPH_MODES, SweepConfig, SweepResult, run_sweep

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_SWEEP_VIOLATION = 4


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _kv_lines(items) -> str:
    width = max(len(k) for k, _ in items)
    return "\n".join(f"{k + ':':<{width + 2}}{_fmt(v)}" for k, v in items)


# ---------------------------------------------------------------------------
# report -> dict (JSON) and text renderers


def domination_to_dict(rep: DominationReport) -> dict:
    def check(c):
        return {"pair": list(c.pair), "lhs": c.lhs, "rhs": c.rhs, "slack": c.slack}

    return {
        "weighted": rep.weighted,
        "satisfied": rep.satisfied,
        "checks": [check(c) for c in rep.checks],
        "violations": [check(c) for c in rep.violations],
    }


def domination_text(rep: DominationReport) -> str:
    mode = "weighted" if rep.weighted else "unweighted"
    if rep.satisfied:
        head = f"edge domination ({mode}): satisfied ({len(rep.checks)} non-edge(s) checked)"
    else:
        head = (
            f"edge domination ({mode}): VIOLATED at "
            f"{len(rep.violations)} of {len(rep.checks)} non-edge(s)"
        )
    lines = [head]
    for c in rep.checks:
        status = "violated" if c in rep.violations else "ok"
        lines.append(
            f"  non-edge ({c.pair[0]},{c.pair[1]}): lhs {_fmt(c.lhs)}  "
            f"rhs {_fmt(c.rhs)}  slack {_fmt(c.slack)}  [{status}]"
        )
    return "\n".join(lines)


def bound_report_to_dict(rep: BoundReport) -> dict:
    return {
        "indexing": "1-based",
        "m": rep.m,
        "dim_h": rep.dim_h,
        "dim_k": rep.dim_k,
        "sum_c_squared": rep.sum_c_squared,
        "total_phi_sum": rep.total_phi_sum,
        "baseline_bound": rep.baseline_bound,
        "complete_bound": rep.complete_bound,
        "graph_constant": rep.graph_constant,
        "edge_phi_sum": rep.edge_phi_sum,
        "sparse_bound": rep.sparse_bound,
        "domination": domination_to_dict(rep.domination) if rep.domination else None,
        "exact_norm_squared": rep.exact_norm_squared,
        "exact_lambda_max": rep.exact_lambda_max,
        "provenance": dict(rep.provenance),
    }


def bound_report_text(rep: BoundReport) -> str:
    items = [
        ("m", rep.m),
        ("dim_h", rep.dim_h),
        ("dim_k", rep.dim_k),
        ("sum_c_squared", rep.sum_c_squared),
        ("total_phi_sum", rep.total_phi_sum),
        ("baseline_bound", rep.baseline_bound),
        ("complete_bound", rep.complete_bound),
    ]
    if rep.graph_constant is not None:
        items.append(("graph_constant", rep.graph_constant))
    if rep.edge_phi_sum is not None:
        items.append(("edge_phi_sum", rep.edge_phi_sum))
    if rep.sparse_bound is not None:
        items.append(("sparse_bound", rep.sparse_bound))
    if rep.exact_norm_squared is not None:
        items.append(("exact_norm_squared", rep.exact_norm_squared))
        items.append(("exact_norm", rep.exact_norm_squared ** 0.5))
        items.append(("exact_lambda_max", rep.exact_lambda_max))
    out = [_kv_lines(items)]
    if rep.domination is not None:
        out.append(domination_text(rep.domination))
    return "\n".join(out)


BOUND_CSV_FIELDS = (
    "m",
    "dim_h",
    "dim_k",
    "sum_c_squared",
    "total_phi_sum",
    "baseline_bound",
    "complete_bound",
    "graph_constant",
    "edge_phi_sum",
    "sparse_bound",
    "exact_norm_squared",
    "exact_lambda_max",
)


def bound_report_csv(rep: BoundReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BOUND_CSV_FIELDS)
    d = bound_report_to_dict(rep)
    writer.writerow(["" if d[k] is None else repr(d[k]) if isinstance(d[k], float) else d[k] for k in BOUND_CSV_FIELDS])
    return buf.getvalue().rstrip("\n")


def spectral_to_dict(s: SpectralSummary) -> dict:
    return {
        "eigenvalues": [float(v) for v in s.eigenvalues],
        "spectral_norm": s.spectral_norm,
        "lambda_max": s.lambda_max,
        "lambda_min": s.lambda_min,
    }


def spectral_text(s: SpectralSummary) -> str:
    return _kv_lines(
        [
            ("eigenvalues", ", ".join(_fmt(float(v)) for v in s.eigenvalues)),
            ("lambda_min", s.lambda_min),
            ("lambda_max", s.lambda_max),
            ("spectral_norm", s.spectral_norm),
            ("norm_squared", s.spectral_norm ** 2),
        ]
    )


def certificate_to_dict(rep: CertificateReport) -> dict:
    def counting(c):
        return {
            "threshold": c.threshold,
            "pairs_raw": c.pairs_raw,
            "pairs": c.pairs,
            "edges_raw": c.edges_raw,
            "edges": c.edges,
        }

    variant = None
    if rep.phi_threshold_variant is not None:
        v = rep.phi_threshold_variant
        variant = {
            "phi_threshold": v.phi_threshold,
            "c_max": v.c_max,
            "effective_threshold": v.effective_threshold,
            "pairs_raw": v.pairs_raw,
            "pairs": v.pairs,
            "edges_raw": v.edges_raw,
            "edges": v.edges,
        }
    return {
        "beta": rep.beta,
        "beta_source": rep.beta_source,
        "sum_c_squared": rep.sum_c_squared,
        "excess": rep.excess,
        "aggregate_all_pairs": rep.aggregate_all_pairs,
        "aggregate_edges": rep.aggregate_edges,
        "graph_constant": rep.graph_constant,
        "counting": [counting(c) for c in rep.counting],
        "phi_threshold_variant": variant,
        "domination": rep.domination,
    }


def certificate_text(rep: CertificateReport) -> str:
    items = [
        ("beta", rep.beta),
        ("beta_source", rep.beta_source),
        ("sum_c_squared", rep.sum_c_squared),
        ("excess", rep.excess),
        ("aggregate_all_pairs_lower_bound", rep.aggregate_all_pairs),
    ]
    if rep.graph_constant is not None:
        items.append(("graph_constant", rep.graph_constant))
        items.append(("aggregate_edges_lower_bound", rep.aggregate_edges))
        items.append(("domination", rep.domination))
    lines = [_kv_lines(items)]
    for c in rep.counting:
        entry = (
            f"threshold {_fmt(c.threshold)}: pairs >= {c.pairs} "
            f"(raw {_fmt(c.pairs_raw)})"
        )
        if c.edges is not None:
            entry += f", edges >= {c.edges} (raw {_fmt(c.edges_raw)})"
        lines.append(entry)
    if rep.phi_threshold_variant is not None:
        v = rep.phi_threshold_variant
        entry = (
            f"phi >= {_fmt(v.phi_threshold)} with |c| <= {_fmt(v.c_max)} "
            f"(effective threshold {_fmt(v.effective_threshold)}): pairs >= {v.pairs}"
        )
        if v.edges is not None:
            entry += f", edges >= {v.edges}"
        lines.append(entry)
    return "\n".join(lines)


def sweep_text(result: SweepResult) -> str:
    s = result.summary()
    items = [
        ("trials", s["trials"]),
        ("seed", s["seed"]),
        ("rng", s["rng"]),
        ("graph_mode", s["graph_mode"]),
        ("kinds", ",".join(s["kinds"])),
        ("violations", len(s["violations"])),
        ("domination_satisfied_trials", s["domination_satisfied_trials"]),
        ("max_complete_ratio", s["max_complete_ratio"]),
        ("max_sparse_ratio", s["max_sparse_ratio"]),
        ("min_gap", s["min_gap"]),
        ("mean_gap", s["mean_gap"]),
        ("max_gap", s["max_gap"]),
    ]
    lines = [_kv_lines(items)]
    lines.extend(s["violations"])
    return "\n".join(lines)


def sweep_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            "index",
            "m",
            "dim_h",
            "dim_k",
            "exact_norm_squared",
            "complete_bound",
            "complete_ratio",
            "domination_satisfied",
            "sparse_bound",
            "sparse_ratio",
            "violations",
        ]
    )
    for t in result.trials:
        writer.writerow(
            [
                t.index,
                t.m,
                t.dim_h,
                t.dim_k,
                repr(t.exact_norm_squared),
                repr(t.complete_bound),
                repr(t.complete_ratio),
                t.domination_satisfied,
                "" if t.sparse_bound is None else repr(t.sparse_bound),
                "" if t.sparse_ratio is None else repr(t.sparse_ratio),
                len(t.violations),
            ]
        )
    return buf.getvalue().rstrip("\n")


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


# ---------------------------------------------------------------------------
# argument plumbing


def _parse_weights(text: str) -> list[float]:
    try:
        return [float(p) for p in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse weights from {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensorbound",
        description=(
            "Norm bounds and noncommutativity certificates for weighted "
            "bipartite tensor sums of self-adjoint contractions."
        ),
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=1e-8,
        help="slack tolerance when comparing exact norms against bounds (default 1e-8)",
    )
    parser.add_argument(
        "--dim-cap",
        type=int,
        default=DEFAULT_DIM_CAP,
        help="largest product dimension assembled exactly (default 4096)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, formats=("text", "json")):
        p.add_argument("--output", choices=formats, default="text")

    def add_graph_opts(p):
        p.add_argument(
            "--graph", metavar="FILE", help="JSON graph file overriding the embedded graph"
        )
        p.add_argument(
            "--no-graph", action="store_true", help="ignore any embedded graph"
        )

    p_bound = sub.add_parser("bound", help="compute every applicable bound for an instance")
    p_bound.add_argument("instance")
    add_graph_opts(p_bound)
    add_output(p_bound, ("text", "json", "csv"))

    p_exact = sub.add_parser("exact", help="assemble the tensor sum and diagonalize it")
    p_exact.add_argument("instance")
    add_output(p_exact)

    p_dom = sub.add_parser("check-domination", help="evaluate edge domination for every non-edge")
    p_dom.add_argument("instance")
    add_graph_opts(p_dom)
    p_dom.add_argument(
        "--unweighted",
        action="store_true",
        help="compare plain phi values instead of |c_i c_j| weighted ones",
    )
    add_output(p_dom)

    p_cert = sub.add_parser(
        "certify", help="turn an observed correlation value into noncommutativity certificates"
    )
    p_cert.add_argument("instance", nargs="?")
    p_cert.add_argument(
        "--weights", type=_parse_weights, help="comma-separated weights, replaces an instance file"
    )
    p_cert.add_argument("--beta", type=float, help="observed value (computed from the instance if omitted)")
    p_cert.add_argument(
        "--threshold",
        "-t",
        type=float,
        action="append",
        default=[],
        help="weighted-mass threshold for pair counting (repeatable)",
    )
    p_cert.add_argument("--phi-threshold", type=float, help="threshold on plain phi values")
    p_cert.add_argument("--c-max", type=float, help="certified bound on |c_i|, required with --phi-threshold")
    add_graph_opts(p_cert)
    add_output(p_cert)

    p_demo = sub.add_parser("demo", help="write a canonical instance file and report on it")
    p_demo.add_argument("name", choices=DEMO_NAMES)
    p_demo.add_argument("--m", type=int, help="size for the parametric demos (clifford, star, chain)")
    p_demo.add_argument("--dir", default=".", help="directory for the instance file (default .)")
    add_output(p_demo, ("text", "json"))

    p_sweep = sub.add_parser("sweep", help="randomized verification sweep of the bounds")
    p_sweep.add_argument("--trials", type=int, default=500)
    p_sweep.add_argument("--seed", type=int, default=42)
    p_sweep.add_argument("--max-m", type=int, default=5)
    p_sweep.add_argument("--max-dim", type=int, default=4)
    p_sweep.add_argument(
        "--kinds",
        default="contraction,unitary_involution",
        help="comma-separated ensemble kinds to mix",
    )
    p_sweep.add_argument("--graph-mode", choices=GRAPH_MODES, default="random_min_degree_1")
    add_output(p_sweep, ("text", "json", "csv"))

    return parser


def _resolve_graph(args, parser, embedded: InteractionGraph | None, m: int):
    if args.graph and args.no_graph:
        parser.error("--graph and --no-graph are mutually exclusive")
    if args.no_graph:
        return None
    if args.graph:
        return load_graph(args.graph, m)
    return embedded


# ---------------------------------------------------------------------------
# subcommands


def cmd_bound(args, parser) -> int:
    inst, embedded = load_instance(args.instance)
    graph = _resolve_graph(args, parser, embedded, inst.m)
    report = build_report(inst, graph, dim_cap=args.dim_cap)

    if args.output == "json":
        _emit_json(bound_report_to_dict(report))
    elif args.output == "csv":
        print(bound_report_csv(report))
    else:
        print(bound_report_text(report))

    if (
        report.exact_norm_squared is not None
        and report.exact_norm_squared > report.complete_bound + args.tol
    ):
        print(
            f"error: exact norm^2 {report.exact_norm_squared!r} exceeds the "
            f"complete bound {report.complete_bound!r}; this indicates a bug",
            file=sys.stderr,
        )
        return EXIT_VALIDATION
    if graph is not None and report.sparse_bound is None:
        if report.domination is not None and not report.domination.satisfied:
            print(
                "error: edge domination fails, graph-restricted bound not proven",
                file=sys.stderr,
            )
        else:
            print(
                "error: graph has an isolated vertex, connectivity factor undefined",
                file=sys.stderr,
            )
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_exact(args, parser) -> int:
    inst, _ = load_instance(args.instance)
    summary = exact_reference(inst, dim_cap=args.dim_cap)
    if args.output == "json":
        _emit_json(spectral_to_dict(summary))
    else:
        print(spectral_text(summary))
    return EXIT_OK


def cmd_check_domination(args, parser) -> int:
    inst, embedded = load_instance(args.instance)
    graph = _resolve_graph(args, parser, embedded, inst.m)
    if graph is None:
        parser.error("check-domination needs a graph (embedded or --graph FILE)")
    report = check_domination(inst, graph, weighted=not args.unweighted)
    if args.output == "json":
        _emit_json(domination_to_dict(report))
    else:
        print(domination_text(report))
    return EXIT_OK if report.satisfied else EXIT_VALIDATION


def cmd_certify(args, parser) -> int:
    if (args.instance is None) == (args.weights is None):
        parser.error("provide exactly one of an instance file or --weights")
    if args.phi_threshold is not None and args.c_max is None:
        parser.error("--phi-threshold requires --c-max")

    inst = None
    graph = None
    if args.instance is not None:
        inst, embedded = load_instance(args.instance)
        graph = _resolve_graph(args, parser, embedded, inst.m)
        if args.beta is None:
            beta = exact_reference(inst, dim_cap=args.dim_cap).lambda_max
            beta_source = "computed"
        else:
            beta = args.beta
            beta_source = "supplied"
    else:
        if args.beta is None:
            parser.error("--beta is required with --weights")
        if args.no_graph:
            graph = None
        elif args.graph:
            graph = load_graph(args.graph, len(args.weights))
        beta = args.beta
        beta_source = "supplied"

    report = build_certificate_report(
        beta,
        weights=args.weights if inst is None else None,
        instance=inst,
        g=graph,
        thresholds=args.threshold,
        phi_threshold=args.phi_threshold,
        c_max=args.c_max,
        beta_source=beta_source,
    )
    if args.output == "json":
        _emit_json(certificate_to_dict(report))
    else:
        print(certificate_text(report))
    return EXIT_OK


def cmd_demo(args, parser) -> int:
    if args.name in PARAMETRIC and args.m is None:
        parser.error(f"demo {args.name!r} requires --m")
    if args.name not in PARAMETRIC and args.m is not None:
        parser.error(f"demo {args.name!r} does not take --m")
    inst, graph = build_demo(args.name, args.m)
    path = Path(args.dir) / default_filename(args.name, args.m)
    save_instance(path, inst, graph)
    print(f"wrote {path}", file=sys.stderr)
    report = build_report(inst, graph, dim_cap=args.dim_cap)
    if args.output == "json":
        _emit_json(bound_report_to_dict(report))
    else:
        print(bound_report_text(report))
    return EXIT_OK


def cmd_sweep(args, parser) -> int:
    kinds = tuple(k for k in args.kinds.replace(",", " ").split() if k)
    config = SweepConfig(
        trials=args.trials,
        seed=args.seed,
        max_m=args.max_m,
        max_dim=args.max_dim,
        kinds=kinds,
        graph_mode=args.graph_mode,
        tol=args.tol,
        dim_cap=args.dim_cap,
    )
    result = run_sweep(config)
    if args.output == "json":
        _emit_json(result.summary())
    elif args.output == "csv":
        print(sweep_csv(result))
    else:
        print(sweep_text(result))
    return EXIT_OK if result.passed else EXIT_SWEEP_VIOLATION


COMMANDS = {
    "bound": cmd_bound,
    "exact": cmd_exact,
    "check-domination": cmd_check_domination,
    "certify": cmd_certify,
    "demo": cmd_demo,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except DominationError as exc:
        print(domination_text(exc.report))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
