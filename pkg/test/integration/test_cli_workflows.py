# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Integration tests for the command-line workflows.

Every test drives :func:`commutechart.cli.main` with real scenario files and
real artifacts written to a temporary directory.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from commutechart.cli import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK, main
from commutechart.core.domain import MAX_STATES_ENV
from commutechart.graph_io import load_document

SCENARIOS = Path(__file__).resolve().parents[2] / "scenarios"
QUEUE = str(SCENARIOS / "queue_three_traces.toml")
SET_ADD_ADD = str(SCENARIOS / "set_add_add.toml")

pytestmark = pytest.mark.integration


@pytest.fixture(autouse=True)
def _default_bound(monkeypatch):
    monkeypatch.delenv(MAX_STATES_ENV, raising=False)


@pytest.fixture
def artifact(tmp_path, capsys):
    assert main(["analyze", QUEUE, "--out", str(tmp_path)]) == EXIT_OK
    capsys.readouterr()
    return tmp_path / "queue_three_traces.json"


class TestAnalyzeWorkflow:
    """analyze subcommand."""

    def test_matching_expectation_exits_zero(self, capsys):
        """Test that a verdict matching --expect exits 0 and prints it."""
        assert main(["analyze", SET_ADD_ADD, "--expect", "commute"]) == EXIT_OK

        out = capsys.readouterr().out
        assert "verdict: commutes" in out

    def test_failed_expectation_exits_two(self, capsys):
        """Test that a verdict contradicting --expect exits 2."""
        code = main(["analyze", SET_ADD_ADD, "--expect", "non-commute"])

        assert code == EXIT_MISMATCH
        assert "expectation failed" in capsys.readouterr().err

    def test_missing_scenario_exits_one(self, tmp_path, capsys):
        """Test that a missing scenario file is reported as an error."""
        code = main(["analyze", str(tmp_path / "absent.toml")])

        assert code == EXIT_ERROR
        assert capsys.readouterr().err.startswith("error:")

    def test_out_writes_artifact_named_after_scenario(self, artifact):
        """Test that --out writes an artifact named after the scenario file."""
        document = load_document(artifact.read_bytes())

        assert document.chart.traces == (1, 2, 3)
        assert document.scenario is not None
        assert document.scenario.structure == "hw_queue"
        assert not document.verdict.commutes

    def test_no_quotient_reports_every_execution(self, capsys):
        """Test that --no-quotient keeps one trace per execution."""
        assert main(["analyze", QUEUE, "--no-quotient"]) == EXIT_OK

        assert "executions: 4  traces: 4" in capsys.readouterr().out

    def test_state_bound_from_environment_exits_one(self, monkeypatch, capsys):
        """Test that a state bound from the environment stops the analysis."""
        monkeypatch.setenv(MAX_STATES_ENV, "2")

        assert main(["analyze", QUEUE]) == EXIT_ERROR
        assert "error:" in capsys.readouterr().err


class TestExportWorkflow:
    """export subcommand over scenario files and artifacts."""

    def test_dot_from_scenario(self, capsys):
        """Test that a scenario file exports straight to DOT."""
        assert main(["export", QUEUE, "--format", "dot"]) == EXIT_OK

        assert capsys.readouterr().out.startswith('digraph "statechart" {')

    def test_cypher_from_artifact_to_file(self, artifact, tmp_path):
        """Test that an artifact exports to a Cypher file in a new directory."""
        target = tmp_path / "graph" / "chart.cypher"

        code = main(
            ["export", str(artifact), "--format", "cypher", "--out", str(target)]
        )

        assert code == EXIT_OK
        text = target.read_text(encoding="utf-8")
        assert text.startswith("CREATE (n0:Action {")
        assert text.endswith(";\n")

    def test_json_trace_filter_keeps_one_trace(self, artifact, capsys):
        """Test that --trace keeps a single trace in the JSON export."""
        assert main(["export", str(artifact), "--trace", "2"]) == EXIT_OK

        document = load_document(capsys.readouterr().out)
        assert document.chart.traces == (2,)
        assert all(edge.traces == (2,) for edge in document.chart.transitions)

    def test_unknown_format_lists_supported(self, capsys):
        """Test that an unknown format is rejected with the supported list."""
        assert main(["export", QUEUE, "--format", "xml"]) == EXIT_ERROR

        assert "cypher, dot, json" in capsys.readouterr().err

    def test_unknown_trace_exits_one(self, artifact, capsys):
        """Test that exporting an absent trace is an error."""
        assert main(["export", str(artifact), "--trace", "7"]) == EXIT_ERROR

    def test_broken_artifact_names_the_field(self, tmp_path, capsys):
        """Test that an invalid artifact reports the missing field."""
        broken = tmp_path / "broken.json"
        broken.write_text('{"schema_version": "commute-chart/1"}', encoding="utf-8")

        assert main(["export", str(broken)]) == EXIT_ERROR
        assert "chart" in capsys.readouterr().err


class TestQueryWorkflow:
    """query subcommand over a written artifact."""

    def test_trace_chain(self, artifact, capsys):
        """Test that a trace query lists the trace from start to finish."""
        assert main(["query", str(artifact), "--trace", "1"]) == EXIT_OK

        out = capsys.readouterr().out
        assert out.startswith("trace 1:")
        assert "THREAD FINISH" in out

    def test_enqueue_thread_slice(self, artifact, capsys):
        """Test that the enqueue thread slice shows its RMW and write."""
        code = main(["query", str(artifact), "--trace", "1", "--thread", "2"])

        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("trace 1, thread 2:")
        assert "ATOMIC RMW" in out
        assert "ATOMIC WRITE" in out

    def test_dequeue_thread_slice(self, artifact, capsys):
        """Test that the dequeue thread slice shows its read and RMW."""
        code = main(["query", str(artifact), "--trace", "1", "--thread", "3"])

        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "ATOMIC READ" in out
        assert "ATOMIC RMW" in out

    def test_absent_thread_exits_one(self, artifact, capsys):
        """Test that querying an absent thread is an error naming it."""
        code = main(["query", str(artifact), "--trace", "1", "--thread", "9"])

        assert code == EXIT_ERROR
        assert "Thread 9" in capsys.readouterr().err

    def test_cypher_flag_prints_graph_query(self, artifact, capsys):
        """Test that --cypher prints the per-thread graph query."""
        code = main(
            ["query", str(artifact), "--trace", "2", "--thread", "3", "--cypher"]
        )

        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "MATCH (a)-[r]->(b),(c)" in out
        assert "WHERE 2 IN r.id AND a.Thread='3'" in out


class TestTraceClassWorkflow:
    """trace-class subcommand."""

    def test_worked_example(self, capsys):
        """Test that [aabbca] with b and c independent has three members."""
        code = main(["trace-class", "--string", "aabbca", "--independent", "b,c"])

        assert code == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out == ["aabbca", "aabcba", "aacbba", "class size: 3"]
