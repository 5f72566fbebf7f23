# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Structures sub-package for **commutechart**

This namespace aggregates the concrete `Structure` implementations that turn
scenario operations into thread programs over atomic locations.  All classes
inherit from `commutechart.core.Structure` and are **opt-in**, they become
active only after an explicit `CommuteChart.register()` call
(`CommuteChart.default()` registers both).

Structures Available:
    | Class              | Description                                             |
    |--------------------|---------------------------------------------------------|
    | ListSetStructure   | Sorted linked-list set with mark-bit logical deletion.  |
    | HwQueueStructure   | Herlihy-Wing array queue with a total dequeue.          |
"""

from .app import HwQueueStructure, ListSetStructure

__all__ = ["HwQueueStructure", "ListSetStructure"]
