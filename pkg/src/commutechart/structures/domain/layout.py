# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Location names of the modeled structures."""

import re

HEAD_NEXT = "head.next"
"""Successor pointer of the list's head sentinel."""

LIST_TAIL = "tail"
"""Reference target of the list's tail sentinel; it owns no locations."""

QUEUE_TAIL = "tail"
"""Next free slot index of the queue."""

DEFAULT_QUEUE_CAPACITY = 3

_SLOT = re.compile(r"^items\[(\d+)\]$")


def key_of(target: str) -> str:
    return f"{target}.key"


def next_of(target: str) -> str:
    return f"{target}.next"


def slot(index: int) -> str:
    return f"items[{index}]"


def slot_index(location: str) -> int | None:
    match = _SLOT.match(location)
    return int(match.group(1)) if match else None
