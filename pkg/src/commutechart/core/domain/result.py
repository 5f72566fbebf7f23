# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict

from commutechart.core.domain.chart import StateChart
from commutechart.core.domain.execution import TraceSet
from commutechart.core.domain.scenario import Scenario
from commutechart.core.domain.verdict import Verdict


class ScenarioResult(BaseModel):
    """Everything one scenario run produced.

    Attributes:
        scenario: The scenario that ran.
        traces:   Explored executions and their representatives.
        chart:    Merged state chart with conditional states annotated.
        verdict:  Commutativity decision and its evidence.
        states:   Abstract contents of the object at the end of each trace.
        probe_states: Abstract contents when the probe of each trace began.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    scenario: Scenario
    traces: TraceSet
    chart: StateChart
    verdict: Verdict
    states: dict[int, tuple[Any, ...]]
    probe_states: dict[int, tuple[Any, ...]] = {}
