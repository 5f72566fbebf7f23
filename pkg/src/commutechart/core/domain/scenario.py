# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

import re
from enum import Enum
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field
from pydantic_core import PydanticCustomError

_CALL = re.compile(r"^\s*([A-Za-z_]\w*)\s*\(\s*(-?\d+)?\s*\)\s*$")


class OpCall(BaseModel):
    """One operation of a scenario, written ``name(arg)`` in scenario files."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    argument: int | None = None

    @classmethod
    def parse(cls, text: str) -> OpCall:
        match = _CALL.match(text)
        if match is None:
            raise PydanticCustomError(
                "op_call_syntax",
                "operation '{text}' is not of the form name(arg) or name()",
                {"text": text},
            )
        name, argument = match.groups()
        return cls(name=name, argument=None if argument is None else int(argument))

    def __str__(self) -> str:
        return f"{self.name}()" if self.argument is None else f"{self.name}({self.argument})"


def _coerce_call(value: Any) -> Any:
    return OpCall.parse(value) if isinstance(value, str) else value


Call = Annotated[OpCall, BeforeValidator(_coerce_call)]


class FootprintMode(str, Enum):
    CANONICAL = "canonical"
    EXACT = "exact"


class ScenarioOptions(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    footprint_mode: FootprintMode = FootprintMode.CANONICAL
    quotient: bool = True


class Scenario(BaseModel):
    """A commutativity experiment.

    Attributes:
        structure:  Registered structure name (``list_set``, ``hw_queue``).
        capacity:   Slot count of bounded structures; the structure supplies
                    its default when omitted.
        setup:      Operations run sequentially by the main thread first.
        concurrent: One operation per spawned thread, threads numbered from 2
                    in listed order.
        probe:      Operations run sequentially by the main thread after every
                    spawned thread joined.
        options:    Footprint mode and quotienting.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    structure: str
    capacity: int | None = Field(default=None, ge=1)
    setup: tuple[Call, ...] = ()
    concurrent: tuple[Call, ...] = Field(min_length=1)
    probe: tuple[Call, ...] = ()
    options: ScenarioOptions = ScenarioOptions()

    def operations(self) -> list[OpCall]:
        return [*self.setup, *self.concurrent, *self.probe]

    def to_document(self) -> dict[str, Any]:
        """Render the scenario with the keys and op strings of a scenario file."""
        document: dict[str, Any] = {"structure": self.structure}
        if self.capacity is not None:
            document["capacity"] = self.capacity
        document["setup"] = [str(op) for op in self.setup]
        document["concurrent"] = [str(op) for op in self.concurrent]
        document["probe"] = [str(op) for op in self.probe]
        document["options"] = {
            "footprint_mode": self.options.footprint_mode.value,
            "quotient": self.options.quotient,
        }
        return document
