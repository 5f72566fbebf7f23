# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Graph-database import script for a state chart.

The script is a single statement made of ``CREATE`` clauses, one per line:
every node first, then every ``NEXT`` relationship.  Node properties are
``ActionType``, ``Thread``, ``Location``, ``Name``, ``Value``, ``Phase``,
``Order``, ``Method`` and ``Conditional``.  ``Location`` is a hex address
derived from the location name alone, so one location keeps its address in
every chart and every single-trace export; ``Name`` keeps the readable name.
Relationships carry ``id``, the list of trace IDs that take them.
Queries written against these names, such as
``MATCH (a)-[r]->(b) WHERE 1 IN r.id RETURN a,r,b``, run unmodified.
"""

from __future__ import annotations

import zlib

from commutechart.core.domain import ChartNode, StateChart


def _quote(text: str) -> str:
    return "'" + text.replace("\\", "\\\\").replace("'", "\\'") + "'"


def location_address(location: str) -> str:
    """Stable hex address of a location name."""
    return f"0x{zlib.crc32(location.encode()):08x}"


def _conditional(chart: StateChart, node: ChartNode) -> str:
    if node.id == chart.preconditional:
        return "pre"
    if node.id in chart.postconditional:
        return "post"
    return ""


def node_properties(chart: StateChart, node: ChartNode) -> dict[str, str | int]:
    """Properties a node is created with, in emission order."""
    properties: dict[str, str | int] = {
        "ActionType": _quote(node.action_type.value),
        "Thread": _quote(str(node.thread)),
        "Location": _quote(location_address(node.location) if node.location else ""),
        "Name": _quote(node.location or ""),
        "Value": _quote(node.value_label()),
        "Phase": _quote(node.phase.value),
        "Order": node.occurrence,
        "Method": _quote(node.method or ""),
        "Conditional": _quote(_conditional(chart, node)),
    }
    if node.memory_order is not None:
        properties["MemoryOrder"] = _quote(node.memory_order)
    if node.rmw_op is not None:
        properties["RmwOp"] = _quote(node.rmw_op)
    return properties


def emit_cypher(chart: StateChart) -> str:
    """Render ``chart`` as a self-contained import script."""
    lines: list[str] = []
    for node in chart.nodes:
        body = ", ".join(
            f"{name}:{value}" for name, value in node_properties(chart, node).items()
        )
        lines.append(f"CREATE (n{node.id}:Action {{{body}}})")
    for edge in chart.transitions:
        ids = ",".join(str(trace) for trace in edge.traces)
        lines.append(f"CREATE (n{edge.source})-[:NEXT {{id:[{ids}]}}]->(n{edge.target})")
    return "\n".join(lines) + ";\n"


def trace_query(trace: int, thread: int | None = None) -> str:
    """Query that lists ``trace`` (or one thread of it) against an imported script.

    With a thread, the first pattern finds consecutive pairs of that thread's
    nodes and ``c`` picks up its nodes that occur singly.
    """
    if thread is None:
        return f"MATCH (a)-[r]->(b) WHERE {trace} IN r.id RETURN a,r,b"
    return (
        f"MATCH (a)-[r]->(b),(c)\n"
        f"WHERE {trace} IN r.id AND a.Thread='{thread}'\n"
        f"AND b.Thread='{thread}' AND c<>a AND c<>b\n"
        f"AND c.Thread='{thread}' RETURN a,r,b,c"
    )
