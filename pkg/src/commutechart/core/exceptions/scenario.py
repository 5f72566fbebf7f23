# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from typing import Any

from ._base import CommuteChartError, InvalidValueError


class InvalidScenarioError(InvalidValueError):
    """Domain-root for scenarios a structure cannot run.

    Args:
        param: Scenario key at fault (``"structure"``, ``"concurrent"``, …).
        value: Offending value.
        message: Human-readable description.  If *None*, a neutral default is
            autogenerated.
        context: Arbitrary diagnostics, e.g. the pydantic error list.
    """

    def __init__(
        self,
        param: str,
        value: Any,
        message: str | None = None,
        *,
        context: dict[str, Any] | None = None,
    ) -> None:
        default = f"Scenario has an invalid value for {param!r}: {value!r}."
        super().__init__(param, value, message or default, context=context)


class CapacityExceededError(InvalidScenarioError):
    """Scenario enqueues more elements than the queue can hold."""

    def __init__(self, enqueues: int, capacity: int) -> None:
        super().__init__(
            param="capacity",
            value=capacity,
            message=(
                f"Scenario performs {enqueues} enqueues but the queue capacity "
                f"is {capacity}."
            ),
            context={"enqueues": enqueues, "capacity": capacity},
        )


class StructureAlreadyRegisteredError(InvalidValueError):
    """Conflict: two structures contend for the same **type_name**."""

    def __init__(self, type_name: str) -> None:
        super().__init__(
            param="type_name",
            value=type_name,
            message=f'Structure "{type_name}" is already registered.',
            context={"offender": type_name},
        )


class MissingResponseError(CommuteChartError):
    """A concurrent operation never produced a METHOD RESPONSE record."""

    def __init__(self, trace: int, label: str) -> None:
        super().__init__(
            f'Operation "{label}" has no response in trace {trace}.',
            context={"trace": trace, "label": label},
        )
