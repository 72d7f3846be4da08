"""Command-line front end: load a network, rank nodes, compare measures, ablate.

Exit codes: 0 success, 2 input parse or usage error, 3 convergence failure,
4 parameter invalid for the graph's size. Diagnostics go to stderr; stdout
carries only the emitted table, written in one shot after the run succeeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .experiments import (
    COMPARISON_MEASURES,
    DEFAULT_SEED,
    EXPERIMENT_DAMPING,
    comparison_table,
    plot_series,
    random_removal_density,
    rank_top_k,
    removal_impact,
)
from .graph import Graph, ParseError, density, load_graph, triangles_at
from .measures import ConvergenceError, Measure, compute

_FORMATS = ("csv", "json", "tsv")
_INPUT_FORMATS = ("auto", "pajek", "edgelist")


class SizeParameterError(ValueError):
    """A numeric parameter is valid in isolation but not for this graph."""


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, parsed and validated."""

    command: str
    inputs: Tuple[str, ...]
    input_format: str
    measure: Measure
    measures: Tuple[Measure, ...]
    k: int
    output_format: str
    damping: float
    tol: float
    max_iter: int
    seed: int
    with_plot_series: bool
    with_random_baseline: bool


def _parse_measures(text: str) -> Tuple[Measure, ...]:
    tags = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            tags.append(Measure(part.upper()))
        except ValueError:
            raise argparse.ArgumentTypeError(f"unknown measure {part!r}")
    if not tags:
        raise argparse.ArgumentTypeError("empty measure list")
    return tuple(tags)


def _parse_measure(text: str) -> Measure:
    tags = _parse_measures(text)
    if len(tags) != 1:
        raise argparse.ArgumentTypeError("expected a single measure tag")
    return tags[0]


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _open_unit_float(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError("must lie strictly between 0 and 1")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricent",
        description="Triangle-neighborhood centrality: rank nodes, compare "
        "measures, and gauge density impact of removing top-ranked nodes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, many_inputs: bool = False) -> None:
        if many_inputs:
            p.add_argument("inputs", nargs="+", metavar="input", help="network file(s)")
        else:
            p.add_argument("inputs", nargs=1, metavar="input", help="network file")
        p.add_argument("--input-format", choices=_INPUT_FORMATS, default="auto")
        p.add_argument("--format", choices=_FORMATS, default="csv", dest="output_format")

    def numeric(p: argparse.ArgumentParser) -> None:
        p.add_argument("--k", type=_positive_int, default=5)
        p.add_argument("--damping", type=_open_unit_float, default=EXPERIMENT_DAMPING)
        p.add_argument("--tol", type=_positive_float, default=1e-10)
        p.add_argument("--max-iter", type=_positive_int, default=1000)

    p_rank = sub.add_parser("rank", help="top-k nodes for one measure")
    common(p_rank)
    numeric(p_rank)
    p_rank.add_argument("--measure", type=_parse_measure, default=Measure.TC)

    p_compare = sub.add_parser("compare", help="top-k nodes for every measure")
    common(p_compare)
    numeric(p_compare)
    p_compare.add_argument("--measures", type=_parse_measures, default=COMPARISON_MEASURES)

    p_ablate = sub.add_parser("ablate", help="residual density after removing top-k nodes")
    common(p_ablate, many_inputs=True)
    numeric(p_ablate)
    p_ablate.add_argument("--measures", type=_parse_measures, default=COMPARISON_MEASURES)
    p_ablate.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_ablate.add_argument(
        "--plot-series",
        action="store_true",
        help="append the density-by-network series across the input files",
    )
    p_ablate.add_argument(
        "--random-baseline",
        action="store_true",
        help="append a RAND row: mean density over 100 random removals",
    )

    p_info = sub.add_parser("info", help="node/edge counts, density, triangles")
    common(p_info)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        inputs=tuple(args.inputs),
        input_format=args.input_format,
        measure=getattr(args, "measure", Measure.TC),
        measures=tuple(getattr(args, "measures", COMPARISON_MEASURES)),
        k=getattr(args, "k", 5),
        output_format=args.output_format,
        damping=getattr(args, "damping", EXPERIMENT_DAMPING),
        tol=getattr(args, "tol", 1e-10),
        max_iter=getattr(args, "max_iter", 1000),
        seed=getattr(args, "seed", DEFAULT_SEED),
        with_plot_series=getattr(args, "plot_series", False),
        with_random_baseline=getattr(args, "random_baseline", False),
    )


def _load(path: str, input_format: str) -> Graph:
    fmt = "auto" if input_format == "auto" else input_format
    return load_graph(path, fmt=fmt)


def _score_text(value: float) -> str:
    return f"{value:.6g}"


def _density_text(value: Optional[float]) -> str:
    return "undefined" if value is None else f"{value:.4f}"


def _table_text(header: Sequence[str], rows: Sequence[Sequence[str]], sep: str) -> str:
    lines = [sep.join(header)]
    lines.extend(sep.join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(graph, command: str, params: Dict, rows: List[Dict], extra: Optional[Dict] = None) -> str:
    doc = {"graph": graph, "command": command, "params": params, "rows": rows}
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"


def _graph_name(path: str) -> str:
    return Path(path).stem


def cmd_rank(config: RunConfig) -> str:
    g = _load(config.inputs[0], config.input_format)
    scores = compute(
        g,
        config.measure,
        damping=config.damping,
        tol=config.tol,
        max_iter=config.max_iter,
    )
    top = rank_top_k(scores, config.k)
    params = {
        "measure": config.measure.value,
        "k": config.k,
        "damping": config.damping,
        "tol": config.tol,
        "max_iter": config.max_iter,
    }
    if config.output_format == "json":
        rows = [
            {"rank": r, "node": node, "score": float(_score_text(scores[node]))}
            for r, node in enumerate(top, start=1)
        ]
        return _json_text(_graph_name(config.inputs[0]), "rank", params, rows)
    sep = "," if config.output_format == "csv" else "\t"
    body = [
        [str(r), str(node), _score_text(scores[node])]
        for r, node in enumerate(top, start=1)
    ]
    return _table_text(["rank", "node", "score"], body, sep)


def cmd_compare(config: RunConfig) -> str:
    g = _load(config.inputs[0], config.input_format)
    table = comparison_table(
        g,
        _graph_name(config.inputs[0]),
        config.k,
        damping=config.damping,
        tol=config.tol,
        max_iter=config.max_iter,
    )
    columns = [(m, table.column(m)) for m in config.measures]
    depth = min(config.k, g.node_count)
    params = {
        "measures": [m.value for m in config.measures],
        "k": config.k,
        "damping": config.damping,
        "tol": config.tol,
        "max_iter": config.max_iter,
    }
    # rows are node labels only: row r holds each measure's rank-(r+1) node
    if config.output_format == "json":
        rows = [
            {m.value: nodes[r] for m, nodes in columns}
            for r in range(depth)
        ]
        return _json_text(table.graph_name, "compare", params, rows)
    sep = "," if config.output_format == "csv" else "\t"
    header = [m.value for m, _ in columns]
    body = [[str(nodes[r]) for _, nodes in columns] for r in range(depth)]
    return _table_text(header, body, sep)


def cmd_ablate(config: RunConfig) -> str:
    names = [_graph_name(p) for p in config.inputs]
    reports = []
    baselines: List[Optional[float]] = []
    for path in config.inputs:
        g = _load(path, config.input_format)
        if config.k >= g.node_count:
            raise SizeParameterError(
                f"{path}: k={config.k} must be smaller than the node count {g.node_count}"
            )
        reports.append(
            removal_impact(
                g,
                _graph_name(path),
                config.k,
                damping=config.damping,
                tol=config.tol,
                max_iter=config.max_iter,
            )
        )
        if config.with_random_baseline:
            baselines.append(
                random_removal_density(g, config.k, trials=100, seed=config.seed)
            )
        else:
            baselines.append(None)

    params = {
        "measures": [m.value for m in config.measures],
        "k": config.k,
        "damping": config.damping,
        "tol": config.tol,
        "max_iter": config.max_iter,
        "seed": config.seed,
    }
    series = plot_series(reports) if config.with_plot_series else None

    if config.output_format == "json":
        rows = []
        for report, baseline in zip(reports, baselines):
            for m in config.measures:
                rows.append(
                    {
                        "graph": report.graph_name,
                        "measure": m.value,
                        "density": round(report.rows[m], 4),
                        "removed": list(report.removed[m]),
                    }
                )
            if baseline is not None:
                rows.append(
                    {
                        "graph": report.graph_name,
                        "measure": "RAND",
                        "density": round(baseline, 4),
                        "removed": [],
                    }
                )
        extra = None
        if series is not None:
            extra = {
                "plot": {
                    "networks": list(series.names),
                    "series": {
                        m.value: [round(v, 4) for v in series.series[m]]
                        for m in config.measures
                    },
                }
            }
        graph_field = names[0] if len(names) == 1 else names
        return _json_text(graph_field, "ablate", params, rows, extra)

    sep = "," if config.output_format == "csv" else "\t"
    body = []
    for report, baseline in zip(reports, baselines):
        for m in config.measures:
            removed = " ".join(str(v) for v in report.removed[m])
            body.append([report.graph_name, m.value, f"{report.rows[m]:.4f}", removed])
        if baseline is not None:
            body.append([report.graph_name, "RAND", f"{baseline:.4f}", ""])
    text = _table_text(["graph", "measure", "density", "removed"], body, sep)
    if series is not None:
        header = ["network"] + [m.value for m in config.measures]
        rows = [
            [series.names[i]] + [f"{series.series[m][i]:.4f}" for m in config.measures]
            for i in range(len(series.names))
        ]
        text += "\n" + _table_text(header, rows, sep)
    return text


def cmd_info(config: RunConfig) -> str:
    g = _load(config.inputs[0], config.input_format)
    triangle_total = sum(triangles_at(g, v) for v in g.nodes) // 3
    dens = density(g) if g.node_count >= 2 else None
    if config.output_format == "json":
        rows = [
            {
                "nodes": g.node_count,
                "edges": g.edge_count,
                "density": None if dens is None else float(f"{dens:.6g}"),
                "triangles": triangle_total,
            }
        ]
        return _json_text(_graph_name(config.inputs[0]), "info", {}, rows)
    sep = "," if config.output_format == "csv" else "\t"
    body = [
        [
            str(g.node_count),
            str(g.edge_count),
            "undefined" if dens is None else _score_text(dens),
            str(triangle_total),
        ]
    ]
    return _table_text(["nodes", "edges", "density", "triangles"], body, sep)


_COMMANDS = {
    "rank": cmd_rank,
    "compare": cmd_compare,
    "ablate": cmd_ablate,
    "info": cmd_info,
}


def run(config: RunConfig) -> str:
    """Execute one configured command and return the full output text."""
    return _COMMANDS[config.command](config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)
    try:
        text = run(config)
    except ParseError as exc:
        print(f"tricent: parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"tricent: cannot read input: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"tricent: {exc}", file=sys.stderr)
        return 3
    except SizeParameterError as exc:
        print(f"tricent: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"tricent: {exc}", file=sys.stderr)
        return 4
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover - module execution hook
    sys.exit(main())
