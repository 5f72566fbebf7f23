# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from enum import Enum


class StructureTypes(str, Enum):
    LIST_SET = "list_set"
    HW_QUEUE = "hw_queue"
