# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from .layout import (
    DEFAULT_QUEUE_CAPACITY,
    HEAD_NEXT,
    LIST_TAIL,
    QUEUE_TAIL,
    key_of,
    next_of,
    slot,
    slot_index,
)
from .structure_types import StructureTypes

__all__ = [
    "DEFAULT_QUEUE_CAPACITY",
    "HEAD_NEXT",
    "LIST_TAIL",
    "QUEUE_TAIL",
    "StructureTypes",
    "key_of",
    "next_of",
    "slot",
    "slot_index",
]
