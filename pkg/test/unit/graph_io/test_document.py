# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Tests for commutechart.graph_io.document."""

from __future__ import annotations

import json

import pytest

from commutechart.core.app import per_thread_slice
from commutechart.core.exceptions import SchemaError
from commutechart.graph_io import SCHEMA_VERSION, emit_json, load_document, load_json


class TestEmitJson:
    """Test suite for emit_json."""

    def test_document_shape(self, queue_result):
        """Test that the artifact carries the schema version, chart and verdict."""
        document = json.loads(emit_json(queue_result.chart, queue_result.verdict))

        assert document["schema_version"] == SCHEMA_VERSION
        assert isinstance(document["verdict"]["commutes"], bool)
        assert document["chart"]["transitions"][0]["traces"] == [1, 2, 3]
        assert document["scenario"] is None

    def test_field_order_is_stable(self, queue_result):
        """Test that top-level keys keep their order and repeated emits match."""
        text = emit_json(queue_result.chart, queue_result.verdict, queue_result.scenario)

        assert list(json.loads(text)) == ["schema_version", "scenario", "chart", "verdict"]
        assert text == emit_json(
            queue_result.chart, queue_result.verdict, queue_result.scenario
        )


class TestLoadJson:
    """Test suite for load_json and load_document."""

    @pytest.mark.parametrize("name", ["queue_result", "set_result"])
    def test_round_trip(self, name, request):
        """Test that emitted charts and verdicts load back equal."""
        result = request.getfixturevalue(name)

        chart, verdict = load_json(emit_json(result.chart, result.verdict))

        assert chart == result.chart
        assert verdict == result.verdict

    def test_scenario_round_trip(self, set_result):
        """Test that an embedded scenario loads back equal."""
        document = load_document(
            emit_json(set_result.chart, set_result.verdict, set_result.scenario)
        )

        assert document.scenario == set_result.scenario

    def test_queries_work_on_loaded_chart(self, queue_result):
        """Test that thread slices of a loaded chart match the original."""
        chart, _ = load_json(emit_json(queue_result.chart, queue_result.verdict))

        assert per_thread_slice(chart, 1, 2) == per_thread_slice(queue_result.chart, 1, 2)

    def test_truncated_document(self, queue_result):
        """Test that truncated JSON raises a schema error."""
        text = emit_json(queue_result.chart, queue_result.verdict)

        with pytest.raises(SchemaError):
            load_json(text[: len(text) // 2])

    def test_edge_to_missing_node_is_named(self, queue_result):
        """Test that a dangling transition is reported under chart."""
        document = json.loads(emit_json(queue_result.chart, queue_result.verdict))
        document["chart"]["transitions"][0]["target"] = 999

        with pytest.raises(SchemaError, match="transition 0") as exc_info:
            load_json(json.dumps(document))

        assert exc_info.value.path == "chart"

    def test_wrong_schema_version(self, queue_result):
        """Test that an unknown schema version is reported by path."""
        document = json.loads(emit_json(queue_result.chart, queue_result.verdict))
        document["schema_version"] = "commute-chart/0"

        with pytest.raises(SchemaError) as exc_info:
            load_json(json.dumps(document))

        assert exc_info.value.path == "schema_version"

    def test_missing_field_path(self, queue_result):
        """Test that a missing node field is reported by its dotted path."""
        document = json.loads(emit_json(queue_result.chart, queue_result.verdict))
        del document["chart"]["nodes"][0]["thread"]

        with pytest.raises(SchemaError) as exc_info:
            load_json(json.dumps(document))

        assert exc_info.value.path == "chart.nodes.0.thread"
