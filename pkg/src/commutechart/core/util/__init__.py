# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from commutechart.core.util.scenario_file import load_scenario, parse_scenario

__all__ = ["load_scenario", "parse_scenario"]
