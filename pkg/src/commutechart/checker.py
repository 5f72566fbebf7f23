# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from pathlib import Path

from commutechart.core.app import Service, Structure
from commutechart.core.domain import ExplorerSettings, Scenario, ScenarioResult
from commutechart.core.util import load_scenario
from commutechart.structures import HwQueueStructure, ListSetStructure


class CommuteChart:
    """Facade that orchestrates structure registration and scenario analysis.

    The class wraps an internal :class:`commutechart.core.app.Service` and
    surfaces a minimal, stable API for client code.  It is therefore the
    canonical entry point when integrating **commutechart** into a test suite
    or a batch of experiments.

    Attributes:
        service: Internal service component that performs the heavy lifting
            (registry management, exploration and the verdict).
    """

    def __init__(self, settings: ExplorerSettings | None = None) -> None:
        self.service = Service(settings)

    @classmethod
    def default(cls, settings: ExplorerSettings | None = None) -> CommuteChart:
        """Checker with the linked-list set and the array queue registered."""
        checker = cls(settings)
        checker.register(ListSetStructure())
        checker.register(HwQueueStructure())
        return checker

    def register(self, structure: Structure) -> None:
        """Register a **new** structure.

        Raises:
            StructureAlreadyRegisteredError: If a structure with the same name
                is already registered.
        """
        self.service.register(structure)

    def unregister(self, structure: Structure) -> None:
        self.service.unregister(structure)

    def update(self, structure: Structure) -> None:
        """Replace an existing structure **in-place**, registering it if new."""
        self.service.update(structure)

    def analyze(self, scenario: Scenario) -> ScenarioResult:
        """Explore ``scenario`` and decide whether its concurrent operations commute.

        Raises:
            InvalidScenarioError: If no registered structure can run it.
            ProgramError: If exploration exceeds its bounds.
        """
        return self.service.run_scenario(scenario)

    def analyze_file(self, path: str | Path) -> ScenarioResult:
        return self.analyze(load_scenario(path))
