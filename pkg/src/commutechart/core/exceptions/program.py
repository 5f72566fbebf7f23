# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from typing import Any

from ._base import CommuteChartError, InvalidValueError


class ProgramError(CommuteChartError):
    """Domain-root for failures raised while a modeled program runs.

    Args:
        message: Human-readable description.
        context: Diagnostics such as the thread and location involved.
    """


class UninitializedReadError(ProgramError):
    """An atomic read or read-modify-write touched a location never written."""

    def __init__(self, location: str) -> None:
        super().__init__(
            f'Location "{location}" is read before it is initialized.',
            context={"location": location},
        )


class OperandTypeError(ProgramError, TypeError):
    """An atomic primitive received a value of the wrong kind."""

    def __init__(self, expected: str, actual: Any, *, location: str | None = None) -> None:
        where = f' at "{location}"' if location else ""
        super().__init__(
            f"Expected a {expected} value{where}, got {actual!r}.",
            context={"expected": expected, "actual": actual, "location": location},
        )


class StepBoundExceededError(ProgramError):
    """A thread program emitted more steps than the configured bound allows."""

    def __init__(self, thread: int, bound: int) -> None:
        super().__init__(
            f"Thread {thread} exceeded the step bound of {bound} emissions.",
            context={"thread": thread, "bound": bound},
        )


class StateSpaceBoundError(ProgramError):
    """Exploration produced more executions than the configured cap."""

    def __init__(self, bound: int) -> None:
        super().__init__(
            f"Exploration exceeded {bound} executions; raise "
            "COMMUTE_CHART_MAX_STATES to explore further.",
            context={"bound": bound},
        )


class InvalidScheduleError(InvalidValueError):
    """A replay schedule names a thread that cannot run at that point."""

    def __init__(self, position: int, thread: int, enabled: list[int]) -> None:
        super().__init__(
            param="schedule",
            value=thread,
            message=(
                f"Schedule entry {position} selects thread {thread}, "
                f"but only {enabled} can run."
            ),
            context={"position": position, "enabled": enabled},
        )
