# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

import argparse
import logging
import sys
from dataclasses import fields

import Corespec.tags
from .commandclass import GraphCommand
from .commands import all_commands
from .config import MODES, RunConfig
from .errors import ConfigError, ContractViolation, FormatError, ParseError, ResourceLimitExceeded
from .graph import connected_components
from .loaders import load_graph
from .report import AnalysisReport
from .util import Norm
from .version import get_version

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _int_list(text):
    try:
        return tuple(int(item) for item in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma-separated list of integers")


def _name_list(text):
    return tuple(item.strip().lower() for item in text.split(",") if item.strip())


def _input_options(parser):
    parser.add_argument(
        "-i", "--input", required=True, help="Edge list or Matrix Market file, or a bundled dataset name"
    )
    parser.add_argument("--format", default="auto", help="Input format: auto, edgelist or mtx")
    parser.add_argument("--indexing", default="auto", help="Edge list vertex numbering: auto, zero or one")
    parser.add_argument("--out", dest="output", default="table", help="Report encoding: table, csv or json")


def _spectral_options(parser):
    parser.add_argument("-k", "--k", type=int, default=2, help="Core order")
    parser.add_argument("--tol", type=float, default=1e-10, help="Relative bracket width at which iteration stops")
    parser.add_argument("--max-iters", type=int, default=10000, help="Iteration cap")
    parser.add_argument("--norm", default=Norm.L2.value, help="Vector normalization: l1, l2 or linf")
    parser.add_argument("--mode", default="per-component", help="Spectral mode: %s" % ", ".join(MODES))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corespec", description="Spectral k-core analysis of undirected graphs")
    parser.add_argument(
        "-m", "--machine-readable", action="store_true", help="Makes the diagnostics parseable (machine-readable)"
    )
    parser.add_argument("-t", "--tags", action="store", help="Use a custom tag file")
    parser.add_argument("-I", "--info", action="store_true", help="Also print informational diagnostics")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debugging output to stderr")
    parser.add_argument("--version", action="version", version=get_version())

    visible = [name for name, command in all_commands.items() if not command.hidden]
    subparsers = parser.add_subparsers(dest="subcommand", required=True, metavar="{%s}" % ",".join(visible))
    for name, command in all_commands.items():
        # a subparser registered without help is left out of --help
        sub = subparsers.add_parser(name, **({} if command.hidden else {"help": command.description}))
        match name:
            case "self-check":
                sub.add_argument("--seed", type=int, default=0, help="Seed of the random graph generator")
                sub.add_argument("--graphs", type=int, default=500, help="Random graphs per suite")
                sub.add_argument("--out", dest="output", default="table", help="Report encoding: table, csv or json")
            case "cycles":
                _input_options(sub)
                sub.add_argument("--max-len", type=int, default=5, help="Longest cycle length counted (3, 4 or 5)")
            case _:
                _input_options(sub)
                _spectral_options(sub)
        if name == "centrality":
            sub.add_argument("--orders", type=_int_list, default=(1, 2, 3), metavar="K,K,...", help="Tensor orders")
        if name == "compare":
            sub.add_argument(
                "--measures", type=_name_list, default=("dc", "cc", "ec", "kec"), metavar="M,M,...", help="Measures"
            )
            sub.add_argument("--scatter", action="store_true", help="Include per-vertex scores of every measure")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    return RunConfig(**{key: value for key, value in vars(args).items() if key in known})


def run(config: RunConfig) -> tuple[AnalysisReport, int]:
    "Run one subcommand and return its report with the process exit code"
    if config.subcommand not in all_commands:
        raise ConfigError(f"unknown subcommand '{config.subcommand}'")
    command = all_commands[config.subcommand]()
    summary = None
    if isinstance(command, GraphCommand):
        config.validate()
        assert config.input is not None
        graph = load_graph(config.input, config.format, config.indexing)  # type: ignore[arg-type]
        if graph.duplicates_dropped:
            command.warnings.append(("edges-duplicate-dropped %d", (graph.duplicates_dropped,)))
        if graph.self_loops_dropped:
            command.warnings.append(("edges-self-loop-dropped %d", (graph.self_loops_dropped,)))
        summary = {"n": graph.n, "m": graph.m, "components": len(connected_components(graph))}
        command.analyze(graph, config)
    else:
        config.validate(needs_graph=False)
        command.analyze(config)

    report = AnalysisReport(
        subcommand=command.name,
        version=get_version(),
        config=config.echo(),
        graph=summary,
        payload=command.payload,
        rows=command.rows,
        errors=command.errors,
        warnings=command.warnings,
        infos=command.infos,
    )
    return report, EXIT_INTERNAL if command.errors else EXIT_OK


def show_messages(name, key, messages):
    colored_key = {
        "E": "\033[91mE\033[00m",
        "W": "\033[93mW\033[00m",
        "I": "\033[92mI\033[00m",
    }
    for msg in messages:
        if sys.stderr.isatty():
            print("%s %s: %s" % (name, colored_key[key], Corespec.tags.format_message(msg)), file=sys.stderr)
        else:
            print("%s %s: %s" % (name, key, Corespec.tags.format_message(msg)), file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        Corespec.tags.load_tags(filename=args.tags, machine=args.machine_readable)
        config = config_from_args(args)
        report, status = run(config)
    except (ParseError, FormatError, ConfigError, ResourceLimitExceeded, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ContractViolation as e:
        logger.debug("contract violation", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INTERNAL

    sys.stdout.write(report.render(config.output))
    show_messages(config.subcommand, "E", report.errors)
    show_messages(config.subcommand, "W", report.warnings)
    if args.info:
        show_messages(config.subcommand, "I", report.infos)
    return status
