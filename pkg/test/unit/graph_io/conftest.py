# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

import pytest

from commutechart import CommuteChart
from commutechart.core.domain import Scenario


@pytest.fixture(scope="module")
def queue_result():
    """Concurrent enqueue(100) and dequeue() on an empty queue, no probe."""
    scenario = Scenario(structure="hw_queue", concurrent=["enqueue(100)", "dequeue()"])
    return CommuteChart.default().analyze(scenario)


@pytest.fixture(scope="module")
def set_result():
    scenario = Scenario(
        structure="list_set",
        setup=["add(1)"],
        concurrent=["add(5)", "remove(5)"],
        probe=["add(9)"],
    )
    return CommuteChart.default().analyze(scenario)
