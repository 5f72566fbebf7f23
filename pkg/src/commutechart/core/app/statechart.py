# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

import logging

from commutechart.core.domain import (
    ActionType,
    ChartNode,
    NodeKey,
    Phase,
    StateChart,
    ThreadSlice,
    TraceSet,
    Transition,
)
from commutechart.core.exceptions import UnknownThreadError, UnknownTraceError

logger = logging.getLogger(__name__)


def build_statechart(traces: TraceSet) -> StateChart:
    """Merge the representative traces into one graph.

    Records with equal :class:`NodeKey` become one node; node ids follow the
    order of first appearance walking traces ``1..n``.  Every pair of
    consecutive records of trace ``t`` yields a transition carrying ``t``.
    """
    if not traces.representatives:
        raise ValueError("a state chart needs at least one trace")
    ids: dict[NodeKey, int] = {}
    nodes: list[ChartNode] = []
    edges: dict[tuple[int, int], list[int]] = {}
    ends: set[int] = set()
    for trace_id, execution in traces.items():
        previous: int | None = None
        for record in execution.records:
            key = record.key()
            if key not in ids:
                ids[key] = len(ids)
                nodes.append(ChartNode.from_record(ids[key], record))
            current = ids[key]
            if previous is not None:
                edges.setdefault((previous, current), []).append(trace_id)
            previous = current
        assert previous is not None
        ends.add(previous)
    start = ids[traces.representatives[0].records[0].key()]
    logger.debug("Chart has %d node(s) and %d transition(s)", len(nodes), len(edges))
    return StateChart(
        nodes=tuple(nodes),
        transitions=tuple(
            Transition(source=source, target=target, traces=tuple(ids_))
            for (source, target), ids_ in edges.items()
        ),
        traces=tuple(traces.trace_ids),
        start=start,
        ends=tuple(sorted(ends)),
    )


def subgraph_by_trace(chart: StateChart, trace: int) -> StateChart:
    """Return the path of ``trace`` as a chart of its own.

    Raises:
        UnknownTraceError: If ``trace`` is not part of the chart.
    """
    path = [node.id for node in chart.path(trace)]
    on_path = set(path)
    return StateChart(
        nodes=tuple(node for node in chart.nodes if node.id in on_path),
        transitions=tuple(
            Transition(source=edge.source, target=edge.target, traces=(trace,))
            for edge in chart.transitions
            if trace in edge.traces
        ),
        traces=(trace,),
        start=chart.start,
        ends=(path[-1],),
        preconditional=(
            chart.preconditional if chart.preconditional in on_path else None
        ),
        postconditional=tuple(n for n in chart.postconditional if n in on_path),
    )


def per_thread_slice(chart: StateChart, trace: int, thread: int) -> ThreadSlice:
    """Split ``thread``'s nodes of ``trace`` into consecutive pairs and singles.

    Raises:
        UnknownTraceError: If ``trace`` is not part of the chart.
        UnknownThreadError: If ``thread`` has no node in ``trace``.
    """
    path = chart.path(trace)
    owned = [node.id for node in path if node.thread == thread]
    if not owned:
        raise UnknownThreadError(thread, trace, {node.thread for node in path})
    edges = tuple(
        (a.id, b.id)
        for a, b in zip(path, path[1:], strict=False)
        if a.thread == thread and b.thread == thread
    )
    paired = {node for edge in edges for node in edge}
    return ThreadSlice(
        trace=trace,
        thread=thread,
        edges=edges,
        isolated=tuple(node for node in owned if node not in paired),
    )


def annotate_conditional_states(chart: StateChart, traces: TraceSet) -> StateChart:
    """Mark the preconditional node and the postconditional probe nodes.

    The preconditional node is the last setup-phase node when the scenario has
    setup operations, and the main THREAD START otherwise.  Postconditional
    nodes are every probe-phase node.
    """
    if not traces.representatives:
        raise UnknownTraceError(1, ())
    records = traces.representatives[0].records
    ids = {node.key(): node.id for node in chart.nodes}
    setup = [record for record in records if record.phase is Phase.SETUP]
    has_setup_ops = any(
        record.action_type is ActionType.METHOD_INVOCATION for record in setup
    )
    preconditional = ids[setup[-1].key()] if has_setup_ops else chart.start
    postconditional = tuple(
        node.id for node in chart.nodes if node.phase is Phase.PROBE
    )
    return chart.model_copy(
        update={"preconditional": preconditional, "postconditional": postconditional}
    )
