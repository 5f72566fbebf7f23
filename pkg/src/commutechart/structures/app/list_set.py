# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from collections.abc import Generator, Mapping
from typing import Any, NamedTuple

from commutechart.core import Structure
from commutechart.core.app import ProgramBody
from commutechart.core.domain import (
    FALSE,
    TRUE,
    Allocate,
    Emission,
    Flag,
    Invoke,
    Ref,
    Respond,
    Scalar,
    Scenario,
    Value,
    as_flag,
    as_ref,
    as_scalar,
    compare_and_swap,
    read,
)
from commutechart.structures.domain import (
    HEAD_NEXT,
    LIST_TAIL,
    StructureTypes,
    key_of,
    next_of,
)


class _Window(NamedTuple):
    """Where a key belongs: ``curr`` is the first node whose key is not smaller."""

    pred: str
    curr: Ref
    key: int | None
    succ: Ref | None


def _find(key: int) -> Generator[Emission, Any, _Window]:
    """Locate ``key``, unlinking marked nodes on the way.

    Reads ``head.next`` first and then the key and next pointer of every node
    passed.  A failed unlink restarts the traversal from the head.
    """
    while True:
        pred = HEAD_NEXT
        curr = as_ref((yield read(pred)), location=pred)
        while True:
            if curr.target == LIST_TAIL:
                return _Window(pred, curr, None, None)
            curr_key = as_scalar((yield read(key_of(curr.target))))
            succ = as_ref((yield read(next_of(curr.target))))
            if succ.marked:
                unmarked = succ.with_mark(False)
                if not as_flag((yield compare_and_swap(pred, curr, unmarked))):
                    break
                curr = unmarked
                continue
            if curr_key >= key:
                return _Window(pred, curr, curr_key, succ)
            pred = next_of(curr.target)
            curr = succ


def set_add(key: int) -> ProgramBody:
    yield Invoke(method="add", arguments=(Scalar(value=key),))
    while True:
        window = yield from _find(key)
        if window.key == key:
            yield Respond(method="add", response=FALSE)
            return
        node = as_ref(
            (yield Allocate(fields=(("key", Scalar(value=key)), ("next", window.curr))))
        )
        if as_flag((yield compare_and_swap(window.pred, window.curr, node))):
            yield Respond(method="add", response=TRUE)
            return


def set_remove(key: int) -> ProgramBody:
    """Logically delete ``key`` by marking its next pointer, then unlink it.

    When the unlink CAS loses to a concurrent update, one more traversal snips
    the marked node before responding, so a successful remove never leaves its
    node reachable.
    """
    yield Invoke(method="remove", arguments=(Scalar(value=key),))
    while True:
        window = yield from _find(key)
        if window.key != key:
            yield Respond(method="remove", response=FALSE)
            return
        assert window.succ is not None
        marked = window.succ.with_mark(True)
        if not as_flag(
            (yield compare_and_swap(next_of(window.curr.target), window.succ, marked))
        ):
            continue
        if not as_flag((yield compare_and_swap(window.pred, window.curr, window.succ))):
            yield from _find(key)
        yield Respond(method="remove", response=TRUE)
        return


def set_contains(key: int) -> ProgramBody:
    """Wait-free membership test; never writes."""
    yield Invoke(method="contains", arguments=(Scalar(value=key),))
    curr = as_ref((yield read(HEAD_NEXT)), location=HEAD_NEXT)
    found = False
    while curr.target != LIST_TAIL:
        curr_key = as_scalar((yield read(key_of(curr.target))))
        succ = as_ref((yield read(next_of(curr.target))))
        if curr_key >= key:
            found = curr_key == key and not succ.marked
            break
        curr = succ.with_mark(False)
    yield Respond(method="contains", response=Flag(value=found))


class ListSetStructure(Structure):
    """Instance of Structure for the sorted linked-list set.

    Name:
        `list_set`

    Operations:
        | Name         | Response            | Description                          |
        | ------------ | ------------------- | ------------------------------------ |
        | add(k)       | `true` / `false`    | Insert ``k``; false if present.      |
        | remove(k)    | `true` / `false`    | Delete ``k``; false if absent.       |
        | contains(k)  | `true` / `false`    | Membership test.                     |

    Layout:
        | Location        | Value                                         |
        | --------------- | --------------------------------------------- |
        | head.next       | Reference to the first node or ``tail``.      |
        | n{t}.{c}.key    | Key of the node allocated by thread ``t``.    |
        | n{t}.{c}.next   | Successor reference; the mark deletes a node. |
    """

    def __init__(self) -> None:
        super().__init__(
            type_name=StructureTypes.LIST_SET.value,
            operations={
                "add": (True, set_add),
                "remove": (True, set_remove),
                "contains": (True, set_contains),
            },
        )

    def init_writes(self, scenario: Scenario) -> list[tuple[str, Value]]:
        return [(HEAD_NEXT, Ref(target=LIST_TAIL))]

    def abstract_state(self, store: Mapping[str, Value]) -> tuple[int, ...]:
        """Keys of the unmarked nodes reachable from the head, ascending."""
        keys: list[int] = []
        curr = as_ref(store.get(HEAD_NEXT), location=HEAD_NEXT)
        while curr.target != LIST_TAIL:
            succ = as_ref(store.get(next_of(curr.target)))
            if not succ.marked:
                keys.append(as_scalar(store.get(key_of(curr.target))))
            curr = succ.with_mark(False)
        return tuple(keys)
