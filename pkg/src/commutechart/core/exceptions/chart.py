# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from collections.abc import Iterable

from ._base import InvalidValueError


class UnknownTraceError(InvalidValueError):
    """The requested trace ID is not part of the chart."""

    def __init__(self, trace: int, known: Iterable[int]) -> None:
        ids = sorted(known)
        super().__init__(
            param="trace",
            value=trace,
            message=f"Trace {trace} does not exist; known traces: {ids}.",
            context={"known_traces": ids},
        )


class UnknownThreadError(InvalidValueError):
    """The requested thread has no node in the selected trace."""

    def __init__(self, thread: int, trace: int, known: Iterable[int]) -> None:
        ids = sorted(known)
        super().__init__(
            param="thread",
            value=thread,
            message=f"Thread {thread} does not act in trace {trace}; threads: {ids}.",
            context={"trace": trace, "known_threads": ids},
        )


class SchemaError(InvalidValueError):
    """A chart document does not conform to the ``commute-chart/1`` schema.

    Attributes:
        path: Dotted path to the offending field (``"chart.transitions.3"``).
    """

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(
            param=path or "<document>",
            value=None,
            message=f"{path or '<document>'}: {reason}",
            context={"path": path, "reason": reason},
        )
        self.path: str = path


class UnsupportedFormatError(InvalidValueError):
    """Export was asked for a serialization the package does not provide."""

    def __init__(self, fmt: str, supported: Iterable[str]) -> None:
        names = sorted(supported)
        super().__init__(
            param="format",
            value=fmt,
            message=f"Unsupported format {fmt!r}; supported formats: {', '.join(names)}.",
            context={"supported": names},
        )
