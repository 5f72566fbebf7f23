# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from commutechart.core.exceptions._base import CommuteChartError, InvalidValueError
from commutechart.core.exceptions.chart import (
    SchemaError,
    UnknownThreadError,
    UnknownTraceError,
    UnsupportedFormatError,
)
from commutechart.core.exceptions.monoid import (
    LetterDomainError,
    RelationValidationError,
    TraceSizeError,
)
from commutechart.core.exceptions.program import (
    InvalidScheduleError,
    OperandTypeError,
    ProgramError,
    StateSpaceBoundError,
    StepBoundExceededError,
    UninitializedReadError,
)
from commutechart.core.exceptions.scenario import (
    CapacityExceededError,
    InvalidScenarioError,
    MissingResponseError,
    StructureAlreadyRegisteredError,
)

__all__ = [
    "CapacityExceededError",
    "CommuteChartError",
    "InvalidScenarioError",
    "InvalidScheduleError",
    "InvalidValueError",
    "LetterDomainError",
    "MissingResponseError",
    "OperandTypeError",
    "ProgramError",
    "RelationValidationError",
    "SchemaError",
    "StateSpaceBoundError",
    "StepBoundExceededError",
    "StructureAlreadyRegisteredError",
    "TraceSizeError",
    "UninitializedReadError",
    "UnknownThreadError",
    "UnknownTraceError",
    "UnsupportedFormatError",
]
