# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Emissions of thread programs and the records the explorer keeps of them."""

from __future__ import annotations

from enum import Enum
from typing import Annotated, Literal, NamedTuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic_core import PydanticCustomError

from commutechart.core.domain.values import (
    Value,
    render,
    render_transition,
)

SEQ_CST = "seq_cst"


class ActionType(str, Enum):
    THREAD_CREATE = "THREAD CREATE"
    THREAD_START = "THREAD START"
    THREAD_JOIN = "THREAD JOIN"
    THREAD_FINISH = "THREAD FINISH"
    ATOMIC_READ = "ATOMIC READ"
    ATOMIC_WRITE = "ATOMIC WRITE"
    ATOMIC_RMW = "ATOMIC RMW"
    METHOD_INVOCATION = "METHOD INVOCATION"
    METHOD_RESPONSE = "METHOD RESPONSE"

    @property
    def is_atomic(self) -> bool:
        return self in _ATOMIC_TYPES

    @property
    def is_lifecycle(self) -> bool:
        return self in _LIFECYCLE_TYPES


_ATOMIC_TYPES = frozenset(
    {ActionType.ATOMIC_READ, ActionType.ATOMIC_WRITE, ActionType.ATOMIC_RMW}
)
_LIFECYCLE_TYPES = frozenset(
    {
        ActionType.THREAD_CREATE,
        ActionType.THREAD_START,
        ActionType.THREAD_JOIN,
        ActionType.THREAD_FINISH,
    }
)


class Phase(str, Enum):
    SETUP = "setup"
    CONCURRENT = "concurrent"
    PROBE = "probe"
    LIFECYCLE = "lifecycle"


class AtomicKind(str, Enum):
    READ = "read"
    WRITE = "write"
    RMW = "rmw"


class _Frozen(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class FetchAdd(_Frozen):
    kind: Literal["fetch_add"] = "fetch_add"
    k: int


class CompareAndSwap(_Frozen):
    kind: Literal["cas"] = "cas"
    expected: Value
    new: Value


class Exchange(_Frozen):
    kind: Literal["exchange"] = "exchange"
    new: Value


RmwOp = Annotated[FetchAdd | CompareAndSwap | Exchange, Field(discriminator="kind")]


class AtomicAction(_Frozen):
    """One atomic instruction on a single location.

    Attributes:
        op:           Read, write or read-modify-write.
        location:     Location the instruction operates on.
        operand:      Payload of a write; absent otherwise.
        rmw:          Primitive of a read-modify-write; absent otherwise.
        memory_order: Carried as metadata only; exploration is sequentially
                      consistent.
    """

    kind: Literal["atomic"] = "atomic"
    op: AtomicKind
    location: str
    operand: Value | None = None
    rmw: RmwOp | None = None
    memory_order: str = SEQ_CST

    @model_validator(mode="after")
    def _check_payload(self) -> AtomicAction:
        if (self.operand is not None) != (self.op is AtomicKind.WRITE):
            raise PydanticCustomError(
                "atomic_operand",
                "operand must be present exactly for writes (op={op})",
                {"op": self.op.value},
            )
        if (self.rmw is not None) != (self.op is AtomicKind.RMW):
            raise PydanticCustomError(
                "atomic_rmw",
                "rmw must be present exactly for read-modify-writes (op={op})",
                {"op": self.op.value},
            )
        return self


class Invoke(_Frozen):
    kind: Literal["invoke"] = "invoke"
    method: str
    arguments: tuple[Value, ...] = ()


class Respond(_Frozen):
    kind: Literal["respond"] = "respond"
    method: str
    response: Value


class Allocate(_Frozen):
    """Fresh node with the given fields; the program receives a reference to it."""

    kind: Literal["allocate"] = "allocate"
    fields: tuple[tuple[str, Value], ...]


class Finish(_Frozen):
    kind: Literal["finish"] = "finish"


Emission = Annotated[
    AtomicAction | Invoke | Respond | Allocate | Finish, Field(discriminator="kind")
]


def read(location: str) -> AtomicAction:
    return AtomicAction(op=AtomicKind.READ, location=location)


def write(location: str, value: Value) -> AtomicAction:
    return AtomicAction(op=AtomicKind.WRITE, location=location, operand=value)


def fetch_add(location: str, k: int) -> AtomicAction:
    return AtomicAction(op=AtomicKind.RMW, location=location, rmw=FetchAdd(k=k))


def compare_and_swap(location: str, expected: Value, new: Value) -> AtomicAction:
    return AtomicAction(
        op=AtomicKind.RMW,
        location=location,
        rmw=CompareAndSwap(expected=expected, new=new),
    )


def exchange(location: str, new: Value) -> AtomicAction:
    return AtomicAction(op=AtomicKind.RMW, location=location, rmw=Exchange(new=new))


class NodeKey(NamedTuple):
    """Identity of an action across traces; equal keys merge into one node."""

    phase: str
    action_type: str
    thread: int
    location: str
    value: str
    occurrence: int
    method: str


class ActionRecord(_Frozen):
    """One observed event of an execution.

    Attributes:
        seq:          Position in its execution.
        thread:       Acting thread; the main thread is ``1``.
        action_type:  Atomic, lifecycle or annotation type.
        phase:        Scenario phase the event belongs to.
        occurrence:   Index among the thread's events of the same type and phase.
        location:     Present exactly for atomic records.
        value:        Read result, written value, new value of an RMW, the
                      created/joined thread, or an annotation's argument/response.
        read_value:   Value an RMW read before writing.
        rmw_op:       ``fetch_add``, ``cas`` or ``exchange`` for RMW records.
        method:       Method name of annotation records.
        memory_order: ``seq_cst`` on atomic records.
    """

    seq: int
    thread: int
    action_type: ActionType
    phase: Phase
    occurrence: int = Field(ge=0)
    location: str | None = None
    value: Value | None = None
    read_value: Value | None = None
    rmw_op: str | None = None
    method: str | None = None
    memory_order: str | None = None

    @model_validator(mode="after")
    def _check_location(self) -> ActionRecord:
        if (self.location is not None) != self.action_type.is_atomic:
            raise PydanticCustomError(
                "record_location",
                "location must be present exactly for atomic records ({action_type})",
                {"action_type": self.action_type.value},
            )
        return self

    def value_label(self) -> str:
        if self.action_type is ActionType.ATOMIC_RMW:
            return render_transition(self.read_value, self.value)
        return render(self.value)

    def key(self) -> NodeKey:
        return NodeKey(
            phase=self.phase.value,
            action_type=self.action_type.value,
            thread=self.thread,
            location=self.location or "",
            value=self.value_label(),
            occurrence=self.occurrence,
            method=self.method or "",
        )

    def sort_key(self) -> tuple[int, str, str, str]:
        return (
            self.thread,
            self.action_type.value,
            self.location or "",
            self.value_label(),
        )
