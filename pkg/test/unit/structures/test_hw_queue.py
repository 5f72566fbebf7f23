# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Tests for commutechart.structures.app.hw_queue."""

from __future__ import annotations

import pytest

from commutechart.core.app import run_scenario
from commutechart.core.domain import EMPTY, NULL, OK, Scalar, Scenario
from commutechart.core.exceptions import CapacityExceededError, InvalidScenarioError
from commutechart.structures import HwQueueStructure
from commutechart.structures.domain import DEFAULT_QUEUE_CAPACITY, QUEUE_TAIL, slot


def run(setup=(), concurrent=("dequeue()",), probe=(), capacity=None):
    scenario = Scenario(
        structure="hw_queue",
        capacity=capacity,
        setup=setup,
        concurrent=concurrent,
        probe=probe,
    )
    return run_scenario(scenario, HwQueueStructure())


class TestHwQueueStructure:
    """Test suite for the structure definition."""

    def test_default_capacity_gives_four_init_writes(self):
        """Test that the default capacity of 3 gives the tail write plus three slot writes."""
        scenario = Scenario(structure="hw_queue", concurrent=["dequeue()"])

        writes = HwQueueStructure().init_writes(scenario)

        assert DEFAULT_QUEUE_CAPACITY == 3
        assert writes == [
            (QUEUE_TAIL, Scalar(value=0)),
            (slot(0), NULL),
            (slot(1), NULL),
            (slot(2), NULL),
        ]

    def test_capacity_override(self):
        """Test that a scenario capacity sets the number of slot writes."""
        scenario = Scenario(structure="hw_queue", capacity=5, concurrent=["dequeue()"])

        assert len(HwQueueStructure().init_writes(scenario)) == 6

    def test_too_many_enqueues(self):
        """Test that more enqueues than slots are rejected before exploring."""
        scenario = Scenario(
            structure="hw_queue",
            setup=["enqueue(1)", "enqueue(2)"],
            concurrent=["enqueue(3)"],
            probe=["enqueue(4)"],
        )

        with pytest.raises(CapacityExceededError, match="4 enqueues"):
            HwQueueStructure().build_program(scenario)

    def test_dequeue_takes_no_argument(self):
        """Test that dequeue with an argument is rejected."""
        scenario = Scenario(structure="hw_queue", concurrent=["dequeue(1)"])

        with pytest.raises(InvalidScenarioError, match="dequeue\\(\\)"):
            HwQueueStructure().validate(scenario)

    def test_abstract_state_reads_slots_in_order(self):
        """Test that the state lists non-null slots by index."""
        store = {
            QUEUE_TAIL: Scalar(value=3),
            slot(2): Scalar(value=9),
            slot(0): NULL,
            slot(1): Scalar(value=4),
        }

        assert HwQueueStructure().abstract_state(store) == (Scalar(value=4), Scalar(value=9))


class TestSequentialOperations:
    """Single concurrent operation on a prepared queue."""

    def test_dequeue_on_empty_queue(self):
        """Test that dequeue on the empty queue responds EMPTY."""
        result = run()

        assert result.verdict.evidence[1].responses == {"T2:dequeue()": EMPTY}

    def test_dequeue_is_fifo(self):
        """Test that dequeue returns the oldest value and leaves the rest."""
        result = run(setup=("enqueue(1)", "enqueue(2)"))

        assert result.verdict.evidence[1].responses == {"T2:dequeue()": Scalar(value=1)}
        assert result.states[1] == (Scalar(value=2),)

    def test_enqueue_responds_ok(self):
        """Test that enqueue responds OK and stores its value."""
        result = run(concurrent=("enqueue(100)",))

        assert result.verdict.evidence[1].responses == {"T2:enqueue(100)": OK}
        assert result.states[1] == (Scalar(value=100),)

    def test_probe_dequeues_count_reads_and_swaps(self):
        """Test that two probe dequeues read the tail twice and swap two slots."""
        result = run(concurrent=("enqueue(1)",), probe=("dequeue()", "dequeue()"))

        footprint = result.verdict.evidence[1].footprint
        assert footprint.read_count == 2
        assert len(footprint) == 4

    def test_single_trace_is_vacuous(self):
        """Test that a single trace commutes vacuously with a note."""
        result = run(concurrent=("enqueue(5)",))

        assert result.verdict.commutes
        assert result.verdict.note is not None

    def test_state_is_read_before_the_trailing_dequeue(self):
        """Test that the post-join state still holds the value dequeued afterwards."""
        result = run(concurrent=("enqueue(1)",), probe=("dequeue()",))

        assert result.probe_states == {1: (Scalar(value=1),)}
        assert result.states == {1: ()}
