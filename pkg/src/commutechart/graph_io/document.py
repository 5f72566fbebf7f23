# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, ValidationError

from commutechart.core.domain import Scenario, StateChart, Verdict
from commutechart.core.exceptions import SchemaError

SCHEMA_VERSION = "commute-chart/1"


class ChartDocument(BaseModel):
    """JSON artifact of one scenario run.

    Attributes:
        schema_version: Always ``commute-chart/1``.
        scenario:       Scenario that produced the chart, when known.
        chart:          Nodes, transitions with trace-ID arrays and the
                        conditional-state annotation.
        verdict:        Decision with its per-trace evidence.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    schema_version: Literal["commute-chart/1"] = SCHEMA_VERSION
    scenario: Scenario | None = None
    chart: StateChart
    verdict: Verdict


def emit_json(
    chart: StateChart, verdict: Verdict, scenario: Scenario | None = None
) -> str:
    document = ChartDocument(scenario=scenario, chart=chart, verdict=verdict)
    return document.model_dump_json(indent=2) + "\n"


def load_document(text: str | bytes) -> ChartDocument:
    """Parse and validate a chart document.

    Raises:
        SchemaError: With the dotted path of the first offending field.
    """
    try:
        return ChartDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors(include_url=False)[0]
        path = ".".join(str(part) for part in first["loc"])
        raise SchemaError(path, first["msg"]) from exc


def load_json(text: str | bytes) -> tuple[StateChart, Verdict]:
    document = load_document(text)
    return document.chart, document.verdict
