# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from collections.abc import Mapping

from commutechart.core import Structure
from commutechart.core.app import ProgramBody
from commutechart.core.domain import (
    EMPTY,
    NULL,
    OK,
    Invoke,
    Null,
    Respond,
    Scalar,
    Scenario,
    Value,
    as_scalar,
    exchange,
    fetch_add,
    read,
    write,
)
from commutechart.core.exceptions import CapacityExceededError
from commutechart.structures.domain import (
    DEFAULT_QUEUE_CAPACITY,
    QUEUE_TAIL,
    StructureTypes,
    slot,
    slot_index,
)


def hwq_enqueue(value: int) -> ProgramBody:
    yield Invoke(method="enqueue", arguments=(Scalar(value=value),))
    index = as_scalar((yield fetch_add(QUEUE_TAIL, 1)), location=QUEUE_TAIL)
    yield write(slot(index), Scalar(value=value))
    yield Respond(method="enqueue", response=OK)


def hwq_dequeue() -> ProgramBody:
    """Single pass over the reserved slots; responds EMPTY when all are null."""
    yield Invoke(method="dequeue")
    tail = as_scalar((yield read(QUEUE_TAIL)), location=QUEUE_TAIL)
    for index in range(tail):
        taken = yield exchange(slot(index), NULL)
        if not isinstance(taken, Null):
            yield Respond(method="dequeue", response=taken)
            return
    yield Respond(method="dequeue", response=EMPTY)


class HwQueueStructure(Structure):
    """Instance of Structure for the Herlihy-Wing array queue.

    Name:
        `hw_queue`

    Operations:
        | Name        | Response        | Description                                |
        | ----------- | --------------- | ------------------------------------------ |
        | enqueue(v)  | `OK`            | Reserve a slot with fetch-add, then fill.  |
        | dequeue()   | value / `EMPTY` | Swap reserved slots to null in order.      |

    Restrictions:
        | Description                    | Error Type              |
        | ------------------------------ | ----------------------- |
        | enqueues ≤ capacity            | `CapacityExceededError` |
    """

    def __init__(self, default_capacity: int = DEFAULT_QUEUE_CAPACITY) -> None:
        super().__init__(
            type_name=StructureTypes.HW_QUEUE.value,
            operations={
                "enqueue": (True, hwq_enqueue),
                "dequeue": (False, hwq_dequeue),
            },
            default_capacity=default_capacity,
        )

    def validate(self, scenario: Scenario) -> None:
        super().validate(scenario)
        capacity = self.capacity(scenario)
        assert capacity is not None
        enqueues = sum(1 for op in scenario.operations() if op.name == "enqueue")
        if enqueues > capacity:
            raise CapacityExceededError(enqueues, capacity)

    def init_writes(self, scenario: Scenario) -> list[tuple[str, Value]]:
        capacity = self.capacity(scenario)
        assert capacity is not None
        writes: list[tuple[str, Value]] = [(QUEUE_TAIL, Scalar(value=0))]
        writes.extend((slot(index), NULL) for index in range(capacity))
        return writes

    def abstract_state(self, store: Mapping[str, Value]) -> tuple[Value, ...]:
        """Values still in the slots, in slot order."""
        slots = sorted(
            (index, value)
            for location, value in store.items()
            if (index := slot_index(location)) is not None
        )
        return tuple(value for _, value in slots if not isinstance(value, Null))
