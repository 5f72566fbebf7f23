# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from typing import Any


class CommuteChartError(Exception):
    """Base class of every error the checker raises on purpose.

    A scenario run can fail while loading the scenario, while exploring it
    or while reading back an exported chart.  Each of those layers raises a
    subclass of this one, so callers that only want to report a failed
    analysis catch ``CommuteChartError`` and let programming errors
    propagate:

    ```python
    try:
        result = checker.analyze(scenario)
    except CommuteChartError as exc:
        logger.error("%s: %s", scenario.structure, exc)
    ```

    Attributes:
        context: Keyword details about the failure, such as the trace ID,
            thread or location involved.  ``None`` when the raiser had
            nothing to add.
    """

    def __init__(
        self, message: str | None = None, *, context: dict[str, Any] | None = None
    ) -> None:
        super().__init__(message or self.__class__.__name__)
        self.context: dict[str, Any] | None = context


class InvalidValueError(CommuteChartError, ValueError):
    """A caller handed in a value the checker cannot work with.

    Scenario files, trace-monoid relations, trace IDs and CLI options all
    report bad input through this class or one of its subclasses.  It is
    also a ``ValueError``, so generic input handling keeps working.

    Args:
        param: Name of the offending argument or scenario field.
        value: The rejected value, as the caller saw it.
        message: Explanation shown to the user.  Defaults to a sentence
            naming ``param`` and ``value``.
        context: Extra keyword details, e.g. the trace IDs a chart knows.

    Attributes:
        param: The ``param`` argument.
        value: The ``value`` argument.

    Example:
        ```python
        if trace not in chart.traces:
            raise InvalidValueError(
                param="trace",
                value=trace,
                message=f"Trace {trace} is not in the chart.",
                context={"known_traces": list(chart.traces)},
            )
        ```
    """

    def __init__(
        self,
        param: str,
        value: Any,
        message: str | None = None,
        *,
        context: dict[str, Any] | None = None,
    ) -> None:
        self.param: str = param
        self.value: Any = value
        default = f'Invalid value for "{param}": {value!r}.'
        super().__init__(message or default, context=context)
