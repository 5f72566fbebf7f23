# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Core abstractions and error contracts for **commutechart**.

This module defines the *extension surface* on which custom structures are
built.  Integrators subclass :class:`Structure` to model new concurrent
objects, and they trap the accompanying exceptions to keep error handling
deterministic across a batch of scenarios.
"""

from commutechart.core.app import ProgramSpec, Structure, ThreadProgram
from commutechart.core.domain import ExplorerSettings, Scenario, ScenarioResult
from commutechart.core.exceptions import (
    CapacityExceededError,
    CommuteChartError,
    InvalidScenarioError,
    InvalidValueError,
    ProgramError,
    SchemaError,
    StructureAlreadyRegisteredError,
    UnknownThreadError,
    UnknownTraceError,
    UnsupportedFormatError,
)

__all__ = [
    "CapacityExceededError",
    "CommuteChartError",
    "ExplorerSettings",
    "InvalidScenarioError",
    "InvalidValueError",
    "ProgramError",
    "ProgramSpec",
    "Scenario",
    "ScenarioResult",
    "SchemaError",
    "Structure",
    "StructureAlreadyRegisteredError",
    "ThreadProgram",
    "UnknownThreadError",
    "UnknownTraceError",
    "UnsupportedFormatError",
]
