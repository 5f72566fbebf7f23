# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Sequentially consistent store of atomic locations."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping

from commutechart.core.domain import (
    FALSE,
    TRUE,
    AtomicAction,
    AtomicKind,
    CompareAndSwap,
    Exchange,
    FetchAdd,
    Scalar,
    Value,
    as_scalar,
)
from commutechart.core.exceptions import UninitializedReadError

Store = dict[str, Value]

_ALLOCATED = re.compile(r"^n\d+\.\d+$")


def apply_atomic(
    store: Mapping[str, Value], action: AtomicAction
) -> tuple[Store, Value]:
    """Apply ``action`` to a copy of ``store``.

    Returns:
        The new store and the value the action hands back to its thread: the
        read value, the written operand, the old value of a fetch-add or an
        exchange, or a success flag for compare-and-swap.

    Raises:
        UninitializedReadError: If a read or read-modify-write touches a
            location never written.
        OperandTypeError: If a fetch-add meets a non-scalar.
    """
    updated = dict(store)
    location = action.location
    if action.op is AtomicKind.WRITE:
        assert action.operand is not None
        updated[location] = action.operand
        return updated, action.operand

    if location not in store:
        raise UninitializedReadError(location)
    current = store[location]
    if action.op is AtomicKind.READ:
        return updated, current

    match action.rmw:
        case FetchAdd(k=k):
            old = as_scalar(current, location=location)
            updated[location] = Scalar(value=old + k)
            return updated, current
        case CompareAndSwap(expected=expected, new=new):
            if current != expected:
                return updated, FALSE
            updated[location] = new
            return updated, TRUE
        case Exchange(new=new):
            updated[location] = new
            return updated, current
        case _:
            raise AssertionError(f"unhandled rmw primitive {action.rmw!r}")


def node_target(thread: int, counter: int) -> str:
    return f"n{thread}.{counter}"


def allocate(
    thread: int, counter: int, fields: Iterable[tuple[str, Value]]
) -> dict[str, Value]:
    """Name the locations of a fresh node ``n{thread}.{counter}.{field}``."""
    target = node_target(thread, counter)
    return {f"{target}.{name}": value for name, value in fields}


def is_allocated(target: str) -> bool:
    """Whether a reference target names an allocated node rather than a sentinel."""
    return _ALLOCATED.match(target) is not None
