# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

import tomllib
from pathlib import Path

from pydantic import ValidationError

from commutechart.core.domain import Scenario
from commutechart.core.exceptions import InvalidScenarioError


def parse_scenario(text: str, *, source: str = "<string>") -> Scenario:
    """Parse a TOML scenario document.

    Raises:
        InvalidScenarioError: If the text is not TOML or does not describe a
            scenario; pydantic's error list is kept in ``context``.
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise InvalidScenarioError(
            param="file",
            value=source,
            message=f"{source}: not a TOML document ({exc}).",
        ) from exc
    try:
        return Scenario.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = ".".join(str(part) for part in first["loc"]) or "<document>"
        raise InvalidScenarioError(
            param=path,
            value=first.get("input"),
            message=f"{source}: {path}: {first['msg']}",
            context={"errors": exc.errors(include_url=False)},
        ) from exc


def load_scenario(path: str | Path) -> Scenario:
    """Read and validate the scenario file at ``path``.

    Raises:
        InvalidScenarioError: If the file cannot be read or is invalid.
    """
    file = Path(path)
    try:
        text = file.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidScenarioError(
            param="file",
            value=str(file),
            message=f"Cannot read scenario file {str(file)!r}: {exc.strerror or exc}.",
        ) from exc
    return parse_scenario(text, source=str(file))
