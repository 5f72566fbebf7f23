# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from collections.abc import Callable, Mapping
from typing import Any

from commutechart.core.app.program import ProgramBody, ProgramSpec, ThreadProgram
from commutechart.core.domain import OpCall, Scenario, Value
from commutechart.core.exceptions import InvalidScenarioError

OperationFactory = Callable[..., ProgramBody]
"""Callable taking the operation's argument, if any, and returning its body."""


class Structure:
    """
    Abstract base class for every modeled concurrent object.

    A structure turns scenario operations into thread programs and knows how
    to initialize and read back its own store.  Structures are **opt-in**:
    they serve scenarios only after being registered via
    `CommuteChart.register()`.

    Usage contract:
        * Operation bodies must be deterministic in the results they are sent.
        * Subclasses override `init_writes()` and `abstract_state()`, and
        pass their operation table to the constructor.
        * Registration is strict: duplicate `type_name`'s must be replaced
        via `CommuteChart.update()`.
    """

    def __init__(
        self,
        *,
        type_name: str,
        operations: Mapping[str, tuple[bool, OperationFactory]],
        default_capacity: int | None = None,
    ) -> None:
        """

        Args:
            type_name:        Identifier used by the ``structure`` scenario key.
            operations:       Operation name to ``(takes_argument, factory)``.
            default_capacity: Capacity used when a scenario gives none;
                              ``None`` for unbounded structures, which then
                              reject a ``capacity`` key.
        """
        self._type_name = type_name
        self._operations = dict(operations)
        self._default_capacity = default_capacity

    @property
    def type_name(self) -> str:
        """Identifier for the structure type."""
        return self._type_name

    @property
    def operations(self) -> tuple[str, ...]:
        """Names of the operations scenario files may use."""
        return tuple(self._operations)

    @property
    def default_capacity(self) -> int | None:
        return self._default_capacity

    def capacity(self, scenario: Scenario) -> int | None:
        return scenario.capacity if scenario.capacity is not None else self._default_capacity

    def validate(self, scenario: Scenario) -> None:
        """Reject scenarios this structure cannot run.

        Raises:
            InvalidScenarioError: On unknown operations, missing or unexpected
                arguments, or a capacity given to an unbounded structure.
        """
        if scenario.capacity is not None and self._default_capacity is None:
            raise InvalidScenarioError(
                param="capacity",
                value=scenario.capacity,
                message=f'Structure "{self.type_name}" takes no capacity.',
            )
        for op in scenario.operations():
            if op.name not in self._operations:
                raise InvalidScenarioError(
                    param="operation",
                    value=str(op),
                    message=(
                        f'Structure "{self.type_name}" has no operation {op.name!r}; '
                        f"operations: {', '.join(self.operations)}."
                    ),
                    context={"operations": list(self.operations)},
                )
            takes_argument, _ = self._operations[op.name]
            if takes_argument != (op.argument is not None):
                expected = f"{op.name}(n)" if takes_argument else f"{op.name}()"
                raise InvalidScenarioError(
                    param="operation",
                    value=str(op),
                    message=f"Operation {str(op)!r} must be written {expected}.",
                )

    def init_writes(self, scenario: Scenario) -> list[tuple[str, Value]]:
        """Writes the main thread performs before any operation.

        Override in subclasses; the default initializes nothing.
        """
        return []

    def abstract_state(self, store: Mapping[str, Value]) -> tuple[Any, ...]:
        """Read the object's contents back from a store.

        Override in subclasses; the default reports an empty object.
        """
        return ()

    def program_for(self, op: OpCall) -> ThreadProgram:
        _, factory = self._operations[op.name]
        arguments = () if op.argument is None else (op.argument,)
        return ThreadProgram(lambda: factory(*arguments), label=str(op))

    def build_program(self, scenario: Scenario) -> ProgramSpec:
        """Translate ``scenario`` into the program the explorer runs.

        Setup operations run on the main thread before the spawned threads
        exist, concurrent operations get one thread each, and probe operations
        run on the main thread after every join.

        Raises:
            InvalidScenarioError: If ``scenario`` fails :meth:`validate`.
        """
        self.validate(scenario)

        def sequential(ops: tuple[OpCall, ...]) -> ThreadProgram | None:
            return ThreadProgram.sequence(map(self.program_for, ops)) if ops else None

        return ProgramSpec(
            init_writes=tuple(self.init_writes(scenario)),
            setup=sequential(scenario.setup),
            threads=tuple(self.program_for(op) for op in scenario.concurrent),
            probe=sequential(scenario.probe),
        )
