# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Values stored in atomic locations and returned by modeled operations.

Scalars render as hexadecimal (``100`` → ``0x64``) so exported graphs read
like the addresses and payloads a model checker prints.  References carry an
explicit mark bit used for logical deletion.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field

from commutechart.core.exceptions import OperandTypeError

Renamer = Callable[[str], str]


class _ValueModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class Scalar(_ValueModel):
    kind: Literal["scalar"] = "scalar"
    value: int

    def render(self, rename: Renamer | None = None) -> str:
        return hex(self.value)


class Ref(_ValueModel):
    """Reference to a node group (``"n2.0"``, ``"tail"``) plus a mark bit."""

    kind: Literal["ref"] = "ref"
    target: str
    marked: bool = False

    def render(self, rename: Renamer | None = None) -> str:
        target = rename(self.target) if rename else self.target
        return f"ref({target},marked)" if self.marked else f"ref({target})"

    def with_mark(self, marked: bool) -> Ref:
        return Ref(target=self.target, marked=marked)


class Null(_ValueModel):
    kind: Literal["null"] = "null"

    def render(self, rename: Renamer | None = None) -> str:
        return "null"


class Empty(_ValueModel):
    """Distinguished response of a dequeue that found nothing."""

    kind: Literal["empty"] = "empty"

    def render(self, rename: Renamer | None = None) -> str:
        return "EMPTY"


class Flag(_ValueModel):
    kind: Literal["flag"] = "flag"
    value: bool

    def render(self, rename: Renamer | None = None) -> str:
        return "true" if self.value else "false"


class Ok(_ValueModel):
    kind: Literal["ok"] = "ok"

    def render(self, rename: Renamer | None = None) -> str:
        return "OK"


Value = Annotated[Scalar | Ref | Null | Empty | Flag | Ok, Field(discriminator="kind")]

NULL = Null()
EMPTY = Empty()
OK = Ok()
TRUE = Flag(value=True)
FALSE = Flag(value=False)


def render(value: Value | None, rename: Renamer | None = None) -> str:
    """Render an optional value; ``None`` renders as the empty string."""
    return "" if value is None else value.render(rename)


def render_transition(
    read: Value | None, written: Value | None, rename: Renamer | None = None
) -> str:
    """Render a read-modify-write as ``old→new``."""
    return f"{render(read, rename)}→{render(written, rename)}"


def as_scalar(value: Value | None, *, location: str | None = None) -> int:
    if not isinstance(value, Scalar):
        raise OperandTypeError("scalar", value, location=location)
    return value.value


def as_ref(value: Value | None, *, location: str | None = None) -> Ref:
    if not isinstance(value, Ref):
        raise OperandTypeError("reference", value, location=location)
    return value


def as_flag(value: Value | None) -> bool:
    if not isinstance(value, Flag):
        raise OperandTypeError("flag", value)
    return value.value
