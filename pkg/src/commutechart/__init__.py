# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Commutativity checking for modeled concurrent objects.

The package explores every interleaving of a scenario's concurrent
operations, merges the resulting traces into a state-chart graph and decides
whether the operations commute by comparing the probe phase and the
responses of every trace.  Client code typically:

1. **Builds** a checker with the bundled structures.
2. **Analyzes** a scenario and inspects the verdict or exports the chart.

Public surface:
    * `CommuteChart`               : canonical entry point
    * `commutechart.core.Structure`: extension contract (advanced)
    * `commutechart.graph_io`      : Cypher, DOT and JSON export
    * All runtime errors derive from `commutechart.core.CommuteChartError`.

Example:
    ```python
    from commutechart import CommuteChart
    from commutechart.core import Scenario

    checker = CommuteChart.default()
    result = checker.analyze(
        Scenario(structure="list_set", concurrent=["add(5)", "remove(5)"], probe=["add(9)"])
    )
    assert not result.verdict.commutes
    ```
"""

from .checker import CommuteChart

__version__ = "0.1.0"
__all__ = ["CommuteChart"]
