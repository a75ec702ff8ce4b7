"""Command-line front end for the pipeline stages.

Subcommands mirror the stages: ``structure`` (source -> structure graph),
``cfg`` (add control-flow links), ``dfg`` (add data-flow links),
``validate`` (check a PDG against a spec), ``gen-spec`` (emit a spec from
a PDG), ``run`` (source -> PDG in one step), and ``dot`` (GraphViz
export).  Exit codes: 0 success, 1 validation findings, 2 usage or input
errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .control_flow import synthesize_control_flow
from .data_flow import synthesize_data_flow
from .dot_export import EDGE_GROUPS, to_dot
from .errors import JavaFlowError
from .interchange import load_graph, save_graph
from .java_parser import parse_source
from .structure_graph import StructureGraph, build_structure_graph
from .validation import check, emit_spec, parse_spec

ALGORITHMS = ("worklist", "bruteforce", "both")


@dataclass(frozen=True)
class StageConfig:
    input: Path
    output: Path | None = None
    algorithm: str = "worklist"
    report: str = "text"


def _read(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def _structure_from_source(path: Path) -> StructureGraph:
    return build_structure_graph(parse_source(_read(path)))


def _cmd_structure(cfg: StageConfig) -> int:
    save_graph(_structure_from_source(cfg.input), cfg.output)
    return 0


def _cmd_cfg(cfg: StageConfig) -> int:
    graph = load_graph(cfg.input)
    synthesize_control_flow(graph)
    save_graph(graph, cfg.output)
    return 0


def _cmd_dfg(cfg: StageConfig) -> int:
    graph = load_graph(cfg.input)
    synthesize_data_flow(graph, cfg.algorithm)
    save_graph(graph, cfg.output)
    return 0


def _cmd_run(cfg: StageConfig) -> int:
    graph = _structure_from_source(cfg.input)
    synthesize_control_flow(graph)
    synthesize_data_flow(graph, cfg.algorithm)
    save_graph(graph, cfg.output)
    return 0


def _cmd_gen_spec(cfg: StageConfig) -> int:
    cfg.output.write_text(emit_spec(load_graph(cfg.input)), encoding="utf-8")
    return 0


def _cmd_validate(cfg: StageConfig, spec_path: Path) -> int:
    graph = load_graph(cfg.input)
    spec = parse_spec(_read(spec_path))
    diagnostics = check(graph, spec)
    for diag in diagnostics:
        line = diag.text_line() if cfg.report == "text" else diag.machine_line()
        print(line)
    return 1 if diagnostics else 0


def _cmd_dot(cfg: StageConfig, edges: str) -> int:
    groups = tuple(part.strip() for part in edges.split(",") if part.strip())
    unknown = [g for g in groups if g not in EDGE_GROUPS]
    if unknown:
        raise JavaFlowError(f"unknown edge groups: {', '.join(unknown)} "
                            f"(choose from {', '.join(EDGE_GROUPS)})")
    cfg.output.write_text(to_dot(load_graph(cfg.input), groups), encoding="utf-8")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="javaflow",
        description="Turn a Java-subset source file into a program dependence "
                    "graph and validate its links.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("structure", help="parse source into a structure graph")
    p.add_argument("input", type=Path, metavar="in.java")
    p.add_argument("-o", "--output", type=Path, required=True)

    p = sub.add_parser("cfg", help="add control-flow links to a structure graph")
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)

    p = sub.add_parser("dfg", help="add data-flow links to a control-flow graph")
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="worklist",
                   help="'both' runs both algorithms and fails on mismatch")

    p = sub.add_parser("run", help="full pipeline: source to PDG")
    p.add_argument("input", type=Path, metavar="in.java")
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="worklist")

    p = sub.add_parser("validate", help="check a PDG against a .flow spec")
    p.add_argument("input", type=Path, metavar="pdg")
    p.add_argument("spec", type=Path, metavar="spec.flow")
    p.add_argument("--format", choices=("text", "lines"), default="text",
                   dest="report", help="'lines' prints tab-separated fields")

    p = sub.add_parser("gen-spec", help="emit the .flow spec of a PDG")
    p.add_argument("input", type=Path, metavar="pdg")
    p.add_argument("-o", "--output", type=Path, required=True)

    p = sub.add_parser("dot", help="export a graph to GraphViz")
    p.add_argument("input", type=Path, metavar="graph")
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--edges", default="tree,cf,df",
                   help="comma-separated groups: tree, cf, df")
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = StageConfig(input=args.input,
                      output=getattr(args, "output", None),
                      algorithm=getattr(args, "algorithm", "worklist"),
                      report=getattr(args, "report", "text"))
    try:
        if args.command == "structure":
            return _cmd_structure(cfg)
        if args.command == "cfg":
            return _cmd_cfg(cfg)
        if args.command == "dfg":
            return _cmd_dfg(cfg)
        if args.command == "run":
            return _cmd_run(cfg)
        if args.command == "validate":
            return _cmd_validate(cfg, args.spec)
        if args.command == "gen-spec":
            return _cmd_gen_spec(cfg)
        if args.command == "dot":
            return _cmd_dot(cfg, args.edges)
        raise AssertionError(f"unhandled command {args.command}")
    except (JavaFlowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
