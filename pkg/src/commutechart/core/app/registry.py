# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from commutechart.core.app.structure import Structure
from commutechart.core.exceptions import StructureAlreadyRegisteredError


class Registry:
    """Manages the lifecycle of registered *Structure* instances."""

    def __init__(self) -> None:
        """Initialize the empty name index.

        The registry is not thread-safe; the expected usage is write-once,
        read-many while scenarios run.
        """
        self._by_name: dict[str, Structure] = {}

    def register(self, structure: Structure, *, overwrite: bool = False) -> None:
        """Register a new structure.

        Args:
            structure: Instance of :class:`Structure` to register.
            overwrite: If True, an existing registration with the same
                type_name is replaced instead of raising an exception.

        Raises:
            StructureAlreadyRegisteredError: If a structure already exists for
                that type_name and overwrite is False.
        """
        if not overwrite and structure.type_name in self._by_name:
            raise StructureAlreadyRegisteredError(structure.type_name)
        self._by_name[structure.type_name] = structure

    def update(self, structure: Structure) -> None:
        """Replace the existing structure with the same ``type_name``."""
        self.register(structure, overwrite=True)

    def unregister(self, type_name: str) -> None:
        self._by_name.pop(type_name, None)

    def structure_for_name(self, type_name: str) -> Structure | None:
        """Return the structure registered as ``type_name`` or ``None``."""
        return self._by_name.get(type_name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(sorted(self._by_name))
