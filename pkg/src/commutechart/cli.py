# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Command-line front end.

Exit status is ``0`` on success, ``1`` on any error and ``2`` when
``analyze --expect`` disagrees with the verdict.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import NoReturn

from commutechart import __version__
from commutechart.checker import CommuteChart
from commutechart.core.app import (
    enumerate_trace_class,
    per_thread_slice,
    subgraph_by_trace,
    symmetric_closure,
)
from commutechart.core.domain import (
    ExplorerSettings,
    IndependencyRelation,
    Scenario,
    ScenarioResult,
    StateChart,
    Verdict,
    render,
)
from commutechart.core.exceptions import (
    CommuteChartError,
    InvalidValueError,
    UnsupportedFormatError,
)
from commutechart.core.util import load_scenario
from commutechart.graph_io import (
    FORMATS,
    emit_cypher,
    emit_dot,
    emit_json,
    load_document,
    trace_query,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2

EXPECTATIONS = {"commute": True, "non-commute": False}


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------- #
# Reports                                                                #
# ---------------------------------------------------------------------- #
def format_report(result: ScenarioResult) -> str:
    verdict = result.verdict
    lines = ["scenario:"]
    for key, value in result.scenario.to_document().items():
        lines.append(f"  {key}: {value}")
    lines.append(
        f"executions: {len(result.traces.raw)}  traces: {len(result.traces.representatives)}"
    )
    lines.append(f"verdict: {'commutes' if verdict.commutes else 'does not commute'}")
    if verdict.witness is not None:
        lines.append(f"witness: traces {verdict.witness[0]} and {verdict.witness[1]}")
        lines.append(f"reason: {verdict.reason}")
    if verdict.note:
        lines.append(f"note: {verdict.note}")
    for trace_id, evidence in verdict.evidence.items():
        footprint = evidence.footprint
        state = ", ".join(_show(item) for item in result.states.get(trace_id, ()))
        lines.append(
            f"trace {trace_id}: probe {len(footprint)} action(s), "
            f"{footprint.read_count} READ(s); state [{state}]"
        )
        lines.extend(f"    {entry.describe()}" for entry in footprint.entries)
    lines.append("responses:")
    labels = sorted({label for ev in verdict.evidence.values() for label in ev.responses})
    for label in labels:
        cells = "  ".join(
            f"{trace_id}={render(ev.responses.get(label))}"
            for trace_id, ev in verdict.evidence.items()
        )
        lines.append(f"  {label}: {cells}")
    if verdict.groups:
        lines.append("first responder:")
        for label, members in verdict.groups.items():
            lines.append(f"  {label}: traces {', '.join(map(str, members))}")
    return "\n".join(lines)


def _show(item: object) -> str:
    render_item = getattr(item, "render", None)
    return render_item() if callable(render_item) else str(item)


def format_chain(chart: StateChart, trace: int) -> str:
    lines = [f"trace {trace}:"]
    for node in chart.path(trace):
        where = f" {node.location}" if node.location else ""
        method = f" {node.method}" if node.method else ""
        lines.append(
            f"  n{node.id}  T{node.thread}  {node.action_type.value}{method}{where}"
            f" {node.value_label()}".rstrip()
        )
    return "\n".join(lines)


def format_slice(chart: StateChart, trace: int, thread: int) -> str:
    part = per_thread_slice(chart, trace, thread)
    lines = [f"trace {trace}, thread {thread}:", "  consecutive:"]
    for source, target in part.edges:
        lines.append(
            f"    n{source} {_brief(chart, source)} -> n{target} {_brief(chart, target)}"
        )
    lines.append("  single:")
    lines.extend(f"    n{node} {_brief(chart, node)}" for node in part.isolated)
    return "\n".join(lines)


def _brief(chart: StateChart, node_id: int) -> str:
    node = chart.node(node_id)
    return f"[{node.action_type.value} {node.value_label()}]".replace(" ]", "]")


# ---------------------------------------------------------------------- #
# Subcommands                                                            #
# ---------------------------------------------------------------------- #
def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _checker(args: argparse.Namespace) -> CommuteChart:
    return CommuteChart.default(args.settings)


def cmd_analyze(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    if args.no_quotient:
        scenario = scenario.model_copy(
            update={"options": scenario.options.model_copy(update={"quotient": False})}
        )
    result = _checker(args).analyze(scenario)
    print(format_report(result))
    if args.out is not None:
        target = Path(args.out) / f"{Path(args.scenario).stem}.json"
        _write(target, emit_json(result.chart, result.verdict, result.scenario))
        logger.info("Wrote %s", target)
    if args.expect is not None and EXPECTATIONS[args.expect] != result.verdict.commutes:
        print(
            f"expectation failed: expected {args.expect}, got "
            f"{'commute' if result.verdict.commutes else 'non-commute'}",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


def _chart_and_verdict(
    args: argparse.Namespace,
) -> tuple[StateChart, Verdict, Scenario | None]:
    source = Path(args.input)
    if source.suffix == ".json":
        try:
            document = load_document(source.read_bytes())
        except OSError as exc:
            raise InvalidValueError(
                param="input", value=str(source), message=f"Cannot read {source}: {exc}."
            ) from exc
        return document.chart, document.verdict, document.scenario
    result = _checker(args).analyze(load_scenario(source))
    return result.chart, result.verdict, result.scenario


def cmd_export(args: argparse.Namespace) -> int:
    if args.format not in FORMATS:
        raise UnsupportedFormatError(args.format, FORMATS)
    chart, verdict, scenario = _chart_and_verdict(args)
    if args.format == "dot":
        text = emit_dot(chart, args.trace)
    else:
        shown = chart if args.trace is None else subgraph_by_trace(chart, args.trace)
        text = (
            emit_cypher(shown)
            if args.format == "cypher"
            else emit_json(shown, verdict, scenario)
        )
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write(Path(args.out), text)
        logger.info("Wrote %s", args.out)
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    chart, _, _ = _chart_and_verdict(args)
    if args.thread is None:
        print(format_chain(chart, args.trace))
    else:
        print(format_slice(chart, args.trace, args.thread))
    if args.cypher:
        print()
        print(trace_query(args.trace, args.thread))
    return EXIT_OK


def _pairs(text: str) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    for chunk in filter(None, (part.strip() for part in text.split(";"))):
        letters = [letter.strip() for letter in chunk.split(",")]
        if (
            len(letters) != 2
            or any(len(letter) != 1 for letter in letters)
            or letters[0] == letters[1]
        ):
            raise InvalidValueError(
                param="independent",
                value=chunk,
                message=f"Pair {chunk!r} must be two distinct single letters, e.g. 'b,c'.",
            )
        pairs.append((letters[0], letters[1]))
    return pairs


def cmd_trace_class(args: argparse.Namespace) -> int:
    pairs = symmetric_closure(_pairs(args.independent))
    domain = frozenset(args.string) | {letter for pair in pairs for letter in pair}
    relation = IndependencyRelation(domain=domain, pairs=pairs)
    if args.max_len is not None and args.max_len < 1:
        raise InvalidValueError(
            param="max-len",
            value=args.max_len,
            message=f"--max-len must be at least 1, got {args.max_len}.",
        )
    limit = args.settings.max_trace_length if args.max_len is None else args.max_len
    members = enumerate_trace_class(args.string, relation, max_length=limit)
    for word in members.members:
        print(word)
    print(f"class size: {len(members)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="commutechart",
        description=(
            "Decide whether concurrent-object operations commute by exploring "
            "every interleaving of a scenario."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="run a scenario and print the verdict")
    analyze.add_argument("scenario", type=Path)
    analyze.add_argument("--expect", choices=sorted(EXPECTATIONS))
    analyze.add_argument("--no-quotient", action="store_true")
    analyze.add_argument("--out", type=Path, help="directory for the JSON artifact")
    analyze.set_defaults(handler=cmd_analyze)

    export = commands.add_parser("export", help="serialize the state chart")
    export.add_argument("input", type=Path, help="scenario file or JSON artifact")
    export.add_argument("--format", default="json", help=f"one of {', '.join(FORMATS)}")
    export.add_argument("--trace", type=int)
    export.add_argument("--out", type=Path)
    export.set_defaults(handler=cmd_export)

    query = commands.add_parser("query", help="list a trace or one thread of it")
    query.add_argument("input", type=Path, help="JSON artifact or scenario file")
    query.add_argument("--trace", type=int, required=True)
    query.add_argument("--thread", type=int)
    query.add_argument(
        "--cypher", action="store_true", help="also print the equivalent graph query"
    )
    query.set_defaults(handler=cmd_query)

    trace_class = commands.add_parser(
        "trace-class", help="enumerate the trace class of a word"
    )
    trace_class.add_argument("--string", required=True)
    trace_class.add_argument(
        "--independent", default="", help='independent pairs, e.g. "b,c;c,b"'
    )
    trace_class.add_argument("--max-len", type=int)
    trace_class.set_defaults(handler=cmd_trace_class)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        args.settings = ExplorerSettings.from_env()
        return args.handler(args)
    except CommuteChartError as exc:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
