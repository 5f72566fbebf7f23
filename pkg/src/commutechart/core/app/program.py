# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from collections.abc import Callable, Generator, Iterable, Mapping, Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic_core import PydanticCustomError

from commutechart.core.domain import AtomicAction, Emission, Value

ProgramBody = Generator[Emission, Any, Any]
"""Generator that yields emissions and is sent the result of each one."""


class ThreadProgram:
    """Deterministic program of one thread.

    A program is a factory of fresh generators.  Each generator yields
    emissions and receives, through ``send``, the result of the previous
    emission: the value an atomic action returned, a reference for an
    allocation and ``None`` for annotations.  Returning from the generator
    (or yielding :class:`Finish`) ends the thread.

    Usage contract:
        * The body must depend only on the results it is sent; replaying the
          same results must produce the same emissions.
        * Bodies hold private state only; the store is reached through
          atomic actions.
    """

    def __init__(self, body: Callable[[], ProgramBody], *, label: str) -> None:
        """

        Args:
            body:  Zero-argument callable returning a fresh generator.
            label: Human-readable name, e.g. ``"add(5)"``.
        """
        self._body = body
        self._label = label

    @property
    def label(self) -> str:
        return self._label

    def start(self) -> ProgramBody:
        return self._body()

    def __repr__(self) -> str:
        return f"ThreadProgram({self._label!r})"

    @classmethod
    def sequence(cls, programs: Iterable[ThreadProgram]) -> ThreadProgram:
        """Run ``programs`` one after the other on the same thread."""
        parts = tuple(programs)

        def body() -> ProgramBody:
            for part in parts:
                yield from part.start()

        return cls(body, label="; ".join(part.label for part in parts))

    @classmethod
    def straight_line(cls, actions: Sequence[AtomicAction]) -> ThreadProgram:
        """Program that performs ``actions`` unconditionally, ignoring results."""
        steps = tuple(actions)

        def body() -> ProgramBody:
            for action in steps:
                yield action

        label = ", ".join(f"{action.op.value}({action.location})" for action in steps)
        return cls(body, label=label)


class ProgramSpec(BaseModel):
    """Everything the explorer needs to run one modeled program.

    The main thread is thread ``1``: it installs ``initial_store``, performs
    ``init_writes``, runs ``setup``, creates one thread per entry of
    ``threads`` (numbered ``2..n`` in order), joins them in ``join_order``,
    runs ``probe`` and finishes.

    Attributes:
        init_writes:   Atomic writes the main thread performs first.
        setup:         Main-thread program run before the threads are created.
        threads:       Programs of the spawned threads.
        probe:         Main-thread program run after every join.
        join_order:    Threads in the order main joins them; spawn order when
                       empty.
        initial_store: Locations present before the first record.
    """

    model_config = ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)

    init_writes: tuple[tuple[str, Value], ...] = ()
    setup: ThreadProgram | None = None
    threads: tuple[ThreadProgram, ...] = ()
    probe: ThreadProgram | None = None
    join_order: tuple[int, ...] = ()
    initial_store: Mapping[str, Value] = {}

    @model_validator(mode="after")
    def _check_join_order(self) -> ProgramSpec:
        if self.join_order and sorted(self.join_order) != list(self.spawned):
            raise PydanticCustomError(
                "join_order",
                "join order {order} must list every spawned thread {threads} once",
                {"order": list(self.join_order), "threads": list(self.spawned)},
            )
        return self

    @property
    def spawned(self) -> range:
        return range(2, len(self.threads) + 2)

    @property
    def joins(self) -> tuple[int, ...]:
        return self.join_order or tuple(self.spawned)

    def program(self, thread: int) -> ThreadProgram:
        return self.threads[thread - 2]
