# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

import os
from collections.abc import Mapping

from pydantic import BaseModel, ConfigDict, Field

from commutechart.core.exceptions import InvalidValueError

MAX_STATES_ENV = "COMMUTE_CHART_MAX_STATES"


class ExplorerSettings(BaseModel):
    """Bounds that keep exploration and enumeration finite.

    Attributes:
        max_states:       Executions the explorer may produce before failing.
        step_bound:       Emissions a single thread may produce in one execution.
        max_trace_length: Longest word whose trace class may be enumerated.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    max_states: int = Field(default=100_000, gt=0)
    step_bound: int = Field(default=10_000, gt=0)
    max_trace_length: int = Field(default=12, gt=0)

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> ExplorerSettings:
        env = os.environ if environ is None else environ
        raw = env.get(MAX_STATES_ENV)
        if raw is None or not raw.strip():
            return cls()
        try:
            max_states = int(raw)
        except ValueError as exc:
            raise InvalidValueError(
                param=MAX_STATES_ENV,
                value=raw,
                message=f"{MAX_STATES_ENV} must be a positive integer, got {raw!r}.",
            ) from exc
        if max_states <= 0:
            raise InvalidValueError(
                param=MAX_STATES_ENV,
                value=raw,
                message=f"{MAX_STATES_ENV} must be a positive integer, got {raw!r}.",
            )
        return cls(max_states=max_states)
