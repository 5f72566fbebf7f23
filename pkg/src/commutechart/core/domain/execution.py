# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from collections.abc import Iterator
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic_core import PydanticCustomError

from commutechart.core.domain.actions import ActionRecord, Emission
from commutechart.core.domain.values import Value
from commutechart.core.exceptions import UnknownTraceError


class ReplayEntry(NamedTuple):
    """One emission processed during a replay, with the result fed back."""

    thread: int
    emission: Emission
    result: Value | None


class Execution(BaseModel):
    """A complete run of a program under one schedule.

    Attributes:
        records:     Ordered action records.
        final_store: Store contents after the last record.
        schedule:    Thread chosen at each scheduling step.
        blocks:      Number of records each scheduling step produced;
                     aligned with ``schedule``.
        probe_store: Store contents when the main thread began joining, before
                     any probe action.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    records: tuple[ActionRecord, ...]
    final_store: dict[str, Value]
    schedule: tuple[int, ...]
    blocks: tuple[int, ...]
    probe_store: dict[str, Value] = {}

    @model_validator(mode="after")
    def _check_blocks(self) -> Execution:
        if len(self.schedule) != len(self.blocks) or sum(self.blocks) != len(
            self.records
        ):
            raise PydanticCustomError(
                "execution_blocks",
                "blocks must align with the schedule and cover every record",
            )
        return self

    def steps(self) -> Iterator[tuple[int, tuple[ActionRecord, ...]]]:
        """Yield ``(thread, records)`` for every scheduling step in order."""
        start = 0
        for thread, size in zip(self.schedule, self.blocks, strict=True):
            yield thread, self.records[start : start + size]
            start += size

    def order_key(self) -> tuple[tuple[int, str, str, str], ...]:
        return tuple(record.sort_key() for record in self.records)


class TraceSet(BaseModel):
    """Explored executions and their quotient into representative traces.

    Attributes:
        raw:             Every distinct execution in exploration order.
        representatives: One execution per class; trace ID ``i`` is
                         ``representatives[i - 1]``.
        classes:         For each representative, indices into ``raw`` of
                         the executions it stands for.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    raw: tuple[Execution, ...]
    representatives: tuple[Execution, ...] = ()
    classes: tuple[tuple[int, ...], ...] = ()

    @property
    def trace_ids(self) -> list[int]:
        return list(range(1, len(self.representatives) + 1))

    def trace(self, trace_id: int) -> Execution:
        if not 1 <= trace_id <= len(self.representatives):
            raise UnknownTraceError(trace_id, self.trace_ids)
        return self.representatives[trace_id - 1]

    def items(self) -> Iterator[tuple[int, Execution]]:
        return enumerate(self.representatives, start=1)
