# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from .hw_queue import HwQueueStructure, hwq_dequeue, hwq_enqueue
from .list_set import ListSetStructure, set_add, set_contains, set_remove

__all__ = [
    "HwQueueStructure",
    "ListSetStructure",
    "hwq_dequeue",
    "hwq_enqueue",
    "set_add",
    "set_contains",
    "set_remove",
]
