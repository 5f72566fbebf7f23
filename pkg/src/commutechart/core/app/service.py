# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from commutechart.core.app.commutativity import run_scenario
from commutechart.core.app.registry import Registry
from commutechart.core.domain import ExplorerSettings, Scenario, ScenarioResult
from commutechart.core.exceptions import InvalidScenarioError

from .structure import Structure


class Service:
    """Runs scenarios against the structures registered with it.

    Attributes:
        _registry: Internal registry of the modeled structures.
        _settings: Exploration bounds applied to every run.
    """

    def __init__(self, settings: ExplorerSettings | None = None) -> None:
        self._registry = Registry()
        self._settings = settings or ExplorerSettings()

    @property
    def settings(self) -> ExplorerSettings:
        return self._settings

    def register(self, structure: Structure) -> None:
        """Register a new structure.

        Raises:
            StructureAlreadyRegisteredError: If a structure with the same
                type_name already exists.
        """
        self._registry.register(structure)

    def unregister(self, structure: Structure) -> None:
        self._registry.unregister(structure.type_name)

    def update(self, structure: Structure) -> None:
        """Update an already registered structure, registering it if new."""
        self._registry.update(structure)

    def structure(self, type_name: str) -> Structure:
        """Return the structure registered as ``type_name``.

        Raises:
            InvalidScenarioError: If no structure has that name.
        """
        found = self._registry.structure_for_name(type_name)
        if found is None:
            raise InvalidScenarioError(
                param="structure",
                value=type_name,
                message=(
                    f"Unknown structure {type_name!r}; registered: "
                    f"{', '.join(self._registry.names) or 'none'}."
                ),
                context={"registered": list(self._registry.names)},
            )
        return found

    def run_scenario(self, scenario: Scenario) -> ScenarioResult:
        return run_scenario(scenario, self.structure(scenario.structure), self._settings)
