# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Tests for commutechart.cli parsing, formatting and the trace-class command."""

from __future__ import annotations

import pytest

from commutechart import CommuteChart, __version__
from commutechart.cli import (
    EXIT_ERROR,
    EXIT_OK,
    _pairs,
    build_parser,
    format_chain,
    format_report,
    format_slice,
    main,
)
from commutechart.core.domain import MAX_STATES_ENV, Scenario
from commutechart.core.exceptions import InvalidValueError


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch):
    monkeypatch.delenv(MAX_STATES_ENV, raising=False)


@pytest.fixture(scope="module")
def queue_result():
    scenario = Scenario(structure="hw_queue", concurrent=["enqueue(100)", "dequeue()"])
    return CommuteChart.default().analyze(scenario)


class TestParser:
    """Test suite for build_parser."""

    def test_subcommands(self):
        """Test that query arguments parse into trace, thread and cypher fields."""
        parser = build_parser()

        args = parser.parse_args(["query", "a.json", "--trace", "1", "--thread", "2"])

        assert args.command == "query"
        assert (args.trace, args.thread, args.cypher) == (1, 2, False)

    def test_usage_error_exits_with_one(self, capsys):
        """Test that an unknown subcommand exits 1 with a usage message."""
        with pytest.raises(SystemExit) as exc_info:
            main(["frobnicate"])

        assert exc_info.value.code == EXIT_ERROR
        assert "invalid choice" in capsys.readouterr().err

    def test_query_requires_trace(self):
        """Test that query without --trace is a usage error."""
        with pytest.raises(SystemExit) as exc_info:
            main(["query", "a.json"])

        assert exc_info.value.code == EXIT_ERROR

    def test_version(self, capsys):
        """Test that --version prints the package version and exits 0."""
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])

        assert exc_info.value.code == 0
        assert __version__ in capsys.readouterr().out

    def test_export_defaults_to_json(self):
        """Test that export writes JSON of every trace by default."""
        args = build_parser().parse_args(["export", "s.toml"])

        assert args.format == "json"
        assert args.trace is None


class TestPairs:
    """Test suite for the --independent parser."""

    def test_parses_pairs(self):
        """Test that semicolon-separated pairs parse in order."""
        assert _pairs("b,c;c,b") == [("b", "c"), ("c", "b")]

    def test_empty_text(self):
        """Test that an empty --independent gives no pairs."""
        assert _pairs("") == []

    @pytest.mark.parametrize("text", ["b", "bc,d", "b,b", "a,b,c"])
    def test_rejects_malformed(self, text):
        """Test that pairs other than two distinct letters are rejected."""
        with pytest.raises(InvalidValueError, match="distinct single letters"):
            _pairs(text)


class TestTraceClassCommand:
    """Test suite for the trace-class subcommand."""

    def test_worked_example(self, capsys):
        """Test that [aabbca] with b and c independent lists three members."""
        code = main(["trace-class", "--string", "aabbca", "--independent", "b,c;c,b"])

        assert code == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "aabbca",
            "aabcba",
            "aacbba",
            "class size: 3",
        ]

    def test_one_sided_pair_is_mirrored(self, capsys):
        """Test that a single pair is made symmetric before enumeration."""
        main(["trace-class", "--string", "aabbca", "--independent", "b,c"])

        assert capsys.readouterr().out.splitlines()[-1] == "class size: 3"

    def test_single_letter(self, capsys):
        """Test that a one-letter word is its own class."""
        assert main(["trace-class", "--string", "a"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["a", "class size: 1"]

    def test_guard(self, capsys):
        """Test that words over the default guard are refused."""
        code = main(["trace-class", "--string", "a" * 13])

        assert code == EXIT_ERROR
        assert "exceeds the enumeration guard" in capsys.readouterr().err

    def test_guard_can_be_raised(self, capsys):
        """Test that --max-len raises the guard."""
        assert main(["trace-class", "--string", "a" * 13, "--max-len", "13"]) == EXIT_OK

    @pytest.mark.parametrize("limit", ["0", "-1"])
    def test_non_positive_guard_is_rejected(self, capsys, limit):
        """Test that --max-len below 1 is an error rather than the default guard."""
        code = main(["trace-class", "--string", "ab", "--max-len", limit])

        assert code == EXIT_ERROR
        assert "--max-len must be at least 1" in capsys.readouterr().err

    def test_guard_can_be_lowered(self, capsys):
        """Test that a --max-len shorter than the word trips the guard."""
        code = main(["trace-class", "--string", "abc", "--max-len", "2"])

        assert code == EXIT_ERROR
        assert "enumeration guard of 2 letters" in capsys.readouterr().err

    def test_bad_pair(self, capsys):
        """Test that a malformed pair exits 1 with an error line."""
        assert main(["trace-class", "--string", "ab", "--independent", "a"]) == EXIT_ERROR
        assert capsys.readouterr().err.startswith("error:")


class TestFormatting:
    """Test suite for the textual report and listings."""

    def test_report_echoes_scenario_and_verdict(self, queue_result):
        """Test that the report echoes the scenario and tabulates the verdict."""
        report = format_report(queue_result)

        assert "  structure: hw_queue" in report
        assert "  concurrent: ['enqueue(100)', 'dequeue()']" in report
        assert "executions: 4  traces: 3" in report
        assert "verdict: does not commute" in report
        assert "witness: traces 1 and 2" in report
        assert "  T3:dequeue(): 1=0x64  2=EMPTY  3=EMPTY" in report

    def test_report_is_deterministic(self, queue_result):
        """Test that formatting one result twice gives one report."""
        assert format_report(queue_result) == format_report(queue_result)

    def test_chain_lists_every_node(self, queue_result):
        """Test that the chain lists one line per node of the trace path."""
        chain = format_chain(queue_result.chart, 1).splitlines()

        assert chain[0] == "trace 1:"
        assert len(chain) - 1 == len(queue_result.chart.path(1))

    def test_slice_sections(self, queue_result):
        """Test that a thread slice shows the enqueue's RMW and write."""
        text = format_slice(queue_result.chart, 1, 2)

        assert text.startswith("trace 1, thread 2:")
        assert "[ATOMIC RMW 0x0→0x1]" in text
        assert "[ATOMIC WRITE 0x64]" in text
