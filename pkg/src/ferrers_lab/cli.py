"""Command-line front door.

One subcommand per operation; every report is a single JSON document (or
a flattened key,value CSV) with a schema_version field.  Rationals
serialize as "p/q" strings and floats are fixed to 12 significant digits,
so identical inputs produce byte-identical reports, including under
--jobs > 1.  "-" means standard input/output for graph files.

Exit codes: 0 success with no counterexamples, 1 a verified counterexample
or failed bound, 2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .budget import BudgetExceeded
from .conjectures import (
    bozkurt_check,
    ferrers_bound_check,
    grone_merris_check,
    venkataramana_check,
)
from .exactla import format_rational
from .graphs import (
    BipartiteGraph,
    GraphFormatError,
    ferrers_from_partition,
    format_graph,
    parse_graph_file,
)
from .partitions import Partition
from .resistance import (
    edge_deletion_equivalence,
    edge_deletion_equivalence_scan,
    resistance,
)
from .search import degree_class_max, spectral_search, verify_ferrers_bound
from .spectral import (
    dense_cut_vertex_hypothesis,
    normalized_product_check,
    spectrum_report,
    sqrt_edge_bound_check,
)
from .trees import enumerate_spanning_trees, sigma_bruteforce, tree_report

SCHEMA_VERSION = 1


@dataclass
class RunConfig:
    """Parsed invocation: subcommand, its flags, and output options."""

    command: str
    options: dict
    jobs: int = 1
    budget: int | None = None
    fmt: str = "json"
    out: str = "-"

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.budget is not None and self.budget < 1:
            raise ValueError("budget must be positive")


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return float("%.12g" % value)
    if isinstance(value, bytes):
        return value.hex()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten("%s.%s" % (prefix, k) if prefix else str(k), v, rows)
    elif isinstance(value, list):
        for idx, v in enumerate(value):
            _flatten("%s[%d]" % (prefix, idx), v, rows)
    else:
        rows.append((prefix, value))


def _render(doc: dict, fmt: str) -> str:
    doc = _jsonable(doc)
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    rows = []
    _flatten("", doc, rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in rows:
        writer.writerow([key, "" if value is None else value])
    return buf.getvalue()


def _write(text: str, out: str):
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _load_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_graph_file(text)


def _require_bipartite(graph, command):
    if not isinstance(graph, BipartiteGraph):
        raise GraphFormatError(
            "the %s command needs a bipartite graph file" % command
        )
    return graph


def _parse_pair(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected two comma-separated vertex indices, got %r" % text)
    return int(parts[0]), int(parts[1])


def _emit_graphs(report, directory):
    os.makedirs(directory, exist_ok=True)
    for label, graphs in (
        ("extremal", report.extremal_graphs),
        ("counterexample", report.counterexample_graphs),
    ):
        for idx, g in enumerate(graphs):
            path = os.path.join(directory, "%s_%03d.graph" % (label, idx))
            with open(path, "w") as fh:
                fh.write(format_graph(g))


def _cmd_gen(config):
    lmbda = Partition.from_string(config.options["partition"])
    cols = config.options["cols"] or (lmbda[0] if len(lmbda) else 0)
    graph = ferrers_from_partition(lmbda, cols)
    _write(format_graph(graph), config.out)
    return 0


def _cmd_trees(config):
    graph = _require_bipartite(_load_graph(config.options["graph"]), "trees")
    report = tree_report(graph)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tau": str(report.tau),
        "ferrers_invariant": format_rational(report.ferrers_invariant),
        "ferrers_good": report.ferrers_good,
    }
    if config.options["enumerate"]:
        trees = enumerate_spanning_trees(graph, budget=config.budget)
        doc["enumeration"] = {
            "count": len(trees),
            "matches_tau": len(trees) == report.tau,
        }
    if config.options["sigma"]:
        poly = sigma_bruteforce(graph, budget=config.budget)
        doc["sigma"] = [
            {"coefficient": coeff, "exponents": list(exps)}
            for exps, coeff in poly.sorted_terms()
        ]
    _write(_render(doc, config.fmt), config.out)
    return 0 if report.ferrers_good else 1


def _cmd_spectral(config):
    graph = _require_bipartite(_load_graph(config.options["graph"]), "spectral")
    report = spectrum_report(graph)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "lambda_max": report.lambda_max,
        "laplacian_spectrum": report.laplacian_spectrum,
        "normalized_spectrum": report.normalized_spectrum,
        "residual": report.residual,
    }
    checks = {}
    bound = sqrt_edge_bound_check(graph)
    checks["sqrt_edge_bound"] = {
        "lhs": bound.lhs, "rhs": bound.rhs,
        "holds": bound.holds, "tight": bound.tight, "tol": bound.tol,
    }
    try:
        prod = normalized_product_check(graph)
        checks["normalized_product"] = {
            "lhs": prod.lhs, "rhs": prod.rhs,
            "holds": prod.holds, "tight": prod.tight, "tol": prod.tol,
        }
    except ValueError as exc:
        checks["normalized_product"] = {"skipped": str(exc)}
    checks["dense_cut_vertex"] = {"holds": dense_cut_vertex_hypothesis(graph)}
    doc["checks"] = checks
    _write(_render(doc, config.fmt), config.out)
    return 0


def _cmd_resistance(config):
    graph = _load_graph(config.options["graph"])
    i, j = _parse_pair(config.options["pair"])
    value = resistance(graph, i, j)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "pair": [i, j],
        "resistance": format_rational(value),
    }
    _write(_render(doc, config.fmt), config.out)
    return 0


def _cmd_thm71(config):
    graph = _load_graph(config.options["graph"])
    if isinstance(graph, BipartiteGraph):
        graph = graph.to_graph()
    e = _parse_pair(config.options["e"])
    f = _parse_pair(config.options["f"])
    report = edge_deletion_equivalence(graph, e, f)
    doc = {"schema_version": SCHEMA_VERSION, **report.as_dict()}
    _write(_render(doc, config.fmt), config.out)
    return 0 if report.all_agree else 1


def _cmd_thm71_scan(config):
    result = edge_deletion_equivalence_scan(config.options["max_n"], jobs=config.jobs)
    doc = {"schema_version": SCHEMA_VERSION, **result}
    _write(_render(doc, config.fmt), config.out)
    return 0 if result["all_agree_everywhere"] else 1


_BOUNDS = {
    "bozkurt": bozkurt_check,
    "venkataramana": venkataramana_check,
    "grone-merris": grone_merris_check,
    "eq3": ferrers_bound_check,
}


def _cmd_check(config):
    graph = _require_bipartite(_load_graph(config.options["graph"]), "check")
    names = list(_BOUNDS) if config.options["all"] else [config.options["bound"]]
    reports = [_BOUNDS[name](graph) for name in names]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "reports": [r.as_dict() for r in reports],
    }
    _write(_render(doc, config.fmt), config.out)
    return 0 if all(r.holds is not False for r in reports) else 1


def _search_doc(report):
    return {"schema_version": SCHEMA_VERSION, **report.as_dict()}


def _cmd_verify_ferrers_bound(config):
    report = verify_ferrers_bound(
        config.options["max_vertices"], jobs=config.jobs, budget=config.budget
    )
    if config.options["emit_graphs"]:
        _emit_graphs(report, config.options["emit_graphs"])
    _write(_render(_search_doc(report), config.fmt), config.out)
    return 0 if not report.counterexamples else 1


def _cmd_spectral_search(config):
    report = spectral_search(
        config.options["p"], config.options["q"], config.options["e"],
        jobs=config.jobs, budget=config.budget,
    )
    if config.options["emit_graphs"]:
        _emit_graphs(report, config.options["emit_graphs"])
    _write(_render(_search_doc(report), config.fmt), config.out)
    return 0 if not report.counterexamples else 1


def _cmd_degree_class(config):
    degrees = Partition.from_string(config.options["degrees"])
    report = degree_class_max(degrees, jobs=config.jobs, budget=config.budget)
    if config.options["emit_graphs"]:
        _emit_graphs(report, config.options["emit_graphs"])
    _write(_render(_search_doc(report), config.fmt), config.out)
    return 0 if not report.counterexamples else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "trees": _cmd_trees,
    "spectral": _cmd_spectral,
    "resistance": _cmd_resistance,
    "thm71": _cmd_thm71,
    "thm71-scan": _cmd_thm71_scan,
    "check": _cmd_check,
    "verify-ferrers-bound": _cmd_verify_ferrers_bound,
    "spectral-search": _cmd_spectral_search,
    "degree-class": _cmd_degree_class,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ferrers-lab",
        description="Exact spectral and spanning-tree analysis of bipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, jobs=False, budget=False):
        p.add_argument("--format", choices=["json", "csv"], default="json",
                       help="report format (default json)")
        p.add_argument("--out", default="-", help="output path, '-' for stdout")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="worker processes (default 1)")
        if budget:
            p.add_argument("--budget", type=int, default=None,
                           help="override the operation's budget cap")

    p = sub.add_parser("gen", help="emit a staircase graph file from a partition")
    p.add_argument("--partition", required=True, help="e.g. 3,3,2,1")
    p.add_argument("--cols", type=int, default=None,
                   help="column count (default: largest part)")
    common(p)

    p = sub.add_parser("trees", help="tree count and degree-product invariant")
    p.add_argument("--graph", required=True, help="graph file, '-' for stdin")
    p.add_argument("--enumerate", action="store_true",
                   help="cross-check by explicit enumeration")
    p.add_argument("--sigma", action="store_true",
                   help="include the weighted spanning-tree polynomial")
    common(p, budget=True)

    p = sub.add_parser("spectral", help="spectra and spectral bound checks")
    p.add_argument("--graph", required=True)
    common(p)

    p = sub.add_parser("resistance", help="exact resistance distance")
    p.add_argument("--graph", required=True)
    p.add_argument("--pair", required=True, help="i,j (1-based)")
    common(p)

    p = sub.add_parser("thm71", help="eleven-condition edge-deletion equivalence")
    p.add_argument("--graph", required=True)
    p.add_argument("--e", required=True, help="first edge as i,j")
    p.add_argument("--f", required=True, help="second edge as k,l")
    common(p)

    p = sub.add_parser("thm71-scan",
                       help="exhaustive equivalence check over small graphs")
    p.add_argument("--max-n", type=int, default=7, dest="max_n")
    common(p, jobs=True)

    p = sub.add_parser("check", help="per-graph bound reports")
    p.add_argument("--graph", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--bound", choices=sorted(_BOUNDS))
    common(p)

    p = sub.add_parser("verify-ferrers-bound",
                       help="scan all connected bipartite classes for tau > invariant")
    p.add_argument("--max-vertices", type=int, required=True, dest="max_vertices")
    p.add_argument("--emit-graphs", default=None, dest="emit_graphs",
                   help="write extremal/counterexample graphs to this directory")
    common(p, jobs=True, budget=True)

    p = sub.add_parser("spectral-search",
                       help="maximize spectral radius over a fixed-size class")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--emit-graphs", default=None, dest="emit_graphs")
    common(p, jobs=True, budget=True)

    p = sub.add_parser("degree-class",
                       help="maximize spectral radius over fixed row degrees")
    p.add_argument("--D", required=True, dest="degrees", help="e.g. 3,3,2,1")
    p.add_argument("--emit-graphs", default=None, dest="emit_graphs")
    common(p, jobs=True, budget=True)

    return parser


def run(config: RunConfig) -> int:
    """Dispatch one parsed invocation; returns the process exit code."""
    try:
        return _COMMANDS[config.command](config)
    except BudgetExceeded as exc:
        print("ferrers-lab: budget exceeded: %s" % exc, file=sys.stderr)
        return 3
    except (GraphFormatError, FileNotFoundError, ValueError) as exc:
        print("ferrers-lab: %s" % exc, file=sys.stderr)
        return 2


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    options = dict(vars(args))
    command = options.pop("command")
    fmt = options.pop("format", "json")
    out = options.pop("out", "-")
    jobs = options.pop("jobs", 1)
    budget = options.pop("budget", None)
    try:
        config = RunConfig(command=command, options=options, jobs=jobs,
                           budget=budget, fmt=fmt, out=out)
    except ValueError as exc:
        print("ferrers-lab: %s" % exc, file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
