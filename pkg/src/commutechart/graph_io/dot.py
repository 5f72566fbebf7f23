# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""DOT rendering of a state chart.

Node fill colors by action type:

| Action type        | Fill        |
| ------------------ | ----------- |
| METHOD INVOCATION  | pink        |
| METHOD RESPONSE    | lightblue   |
| ATOMIC READ        | palegreen   |
| ATOMIC WRITE       | khaki       |
| ATOMIC RMW         | orange      |
| THREAD START       | lightgrey   |
| THREAD FINISH      | lightgrey   |
| THREAD CREATE      | white       |
| THREAD JOIN        | white       |

Conditional-state nodes get a red border.
"""

from __future__ import annotations

from commutechart.core.app import subgraph_by_trace
from commutechart.core.domain import ActionType, ChartNode, StateChart

PALETTE: dict[ActionType, str] = {
    ActionType.METHOD_INVOCATION: "pink",
    ActionType.METHOD_RESPONSE: "lightblue",
    ActionType.ATOMIC_READ: "palegreen",
    ActionType.ATOMIC_WRITE: "khaki",
    ActionType.ATOMIC_RMW: "orange",
    ActionType.THREAD_START: "lightgrey",
    ActionType.THREAD_FINISH: "lightgrey",
    ActionType.THREAD_CREATE: "white",
    ActionType.THREAD_JOIN: "white",
}


def _gvquote(text: str) -> str:
    return '"{}"'.format(text.replace('"', r"\""))


def node_label(node: ChartNode) -> str:
    """``RMW 0x0→0x1``-style label, followed by thread and location."""
    kind = node.action_type.value.removeprefix("ATOMIC ")
    if node.method is not None:
        kind = f"{kind} {node.method}"
    head = f"{kind} {node.value_label()}".rstrip()
    where = f"T{node.thread}" + (f" {node.location}" if node.location else "")
    return f"{head}\\n{where}"


def emit_dot(chart: StateChart, trace: int | None = None) -> str:
    """Render ``chart``, or only the path of ``trace``, as a digraph.

    Raises:
        UnknownTraceError: If ``trace`` is not part of the chart.
    """
    shown = chart if trace is None else subgraph_by_trace(chart, trace)
    conditional = set(shown.postconditional)
    if shown.preconditional is not None:
        conditional.add(shown.preconditional)
    lines = [
        'digraph "statechart" {',
        "\trankdir=TB;",
        '\tnode [shape=box, style="rounded,filled", fontname="Helvetica"];',
    ]
    for node in shown.nodes:
        attributes = [
            f"label={_gvquote(node_label(node))}",
            f"fillcolor={_gvquote(PALETTE[node.action_type])}",
        ]
        if node.id in conditional:
            attributes.append('color="red", penwidth=2')
        lines.append(f"\tn{node.id} [{', '.join(attributes)}];")
    for edge in shown.transitions:
        label = "{" + ",".join(str(t) for t in edge.traces) + "}"
        lines.append(f"\tn{edge.source} -> n{edge.target} [label={_gvquote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
