# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic_core import PydanticCustomError

from commutechart.core.domain.actions import (
    ActionRecord,
    ActionType,
    NodeKey,
    Phase,
)
from commutechart.core.domain.values import Value, render, render_transition
from commutechart.core.exceptions import UnknownTraceError


class ChartNode(BaseModel):
    """An action node: every record with the same :class:`NodeKey`, merged.

    Attributes:
        id:           Stable node number, assigned in order of first appearance.
        action_type:  Type shared by the merged records.
        thread:       Acting thread.
        phase:        Scenario phase.
        occurrence:   Per-thread occurrence index of the merged records.
        location:     Atomic location, if any.
        value:        Value, or the new value of an RMW.
        read_value:   Old value of an RMW.
        rmw_op:       RMW primitive name.
        method:       Method name of annotation nodes.
        memory_order: Metadata carried from the records.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    id: int
    action_type: ActionType
    thread: int
    phase: Phase
    occurrence: int
    location: str | None = None
    value: Value | None = None
    read_value: Value | None = None
    rmw_op: str | None = None
    method: str | None = None
    memory_order: str | None = None

    @classmethod
    def from_record(cls, node_id: int, record: ActionRecord) -> ChartNode:
        return cls(
            id=node_id,
            **record.model_dump(exclude={"seq"}),
        )

    def value_label(self) -> str:
        if self.action_type is ActionType.ATOMIC_RMW:
            return render_transition(self.read_value, self.value)
        return render(self.value)

    def key(self) -> NodeKey:
        return NodeKey(
            phase=self.phase.value,
            action_type=self.action_type.value,
            thread=self.thread,
            location=self.location or "",
            value=self.value_label(),
            occurrence=self.occurrence,
            method=self.method or "",
        )


class Transition(BaseModel):
    """Directed edge between consecutive action nodes of one or more traces."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    source: int
    target: int
    traces: tuple[int, ...]


class StateChart(BaseModel):
    """Merged state-chart graph of a trace set.

    Attributes:
        nodes:           Action nodes ordered by id.
        transitions:     Edges ordered by first appearance.
        traces:          Trace IDs the chart covers.
        start:           Node of the main thread's THREAD START.
        ends:            Final nodes of the traces (main THREAD FINISH).
        preconditional:  Last node before the concurrent phase, once annotated.
        postconditional: Probe-phase nodes, once annotated.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    nodes: tuple[ChartNode, ...]
    transitions: tuple[Transition, ...]
    traces: tuple[int, ...]
    start: int
    ends: tuple[int, ...]
    preconditional: int | None = None
    postconditional: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_references(self) -> StateChart:
        ids = [node.id for node in self.nodes]
        known = set(ids)
        if len(known) != len(ids):
            raise PydanticCustomError("chart_node_ids", "node ids must be unique")
        for index, edge in enumerate(self.transitions):
            for endpoint in (edge.source, edge.target):
                if endpoint not in known:
                    raise PydanticCustomError(
                        "chart_missing_node",
                        "transition {index} ({source} -> {target}) references "
                        "missing node {node}",
                        {
                            "index": index,
                            "source": edge.source,
                            "target": edge.target,
                            "node": endpoint,
                        },
                    )
            if not set(edge.traces) <= set(self.traces):
                raise PydanticCustomError(
                    "chart_unknown_trace",
                    "transition {index} carries traces outside the chart",
                    {"index": index},
                )
        anchors = [self.start, *self.ends, *self.postconditional]
        if self.preconditional is not None:
            anchors.append(self.preconditional)
        for node_id in anchors:
            if node_id not in known:
                raise PydanticCustomError(
                    "chart_missing_anchor",
                    "anchor node {node} is not part of the chart",
                    {"node": node_id},
                )
        return self

    def node(self, node_id: int) -> ChartNode:
        for node in self.nodes:
            if node.id == node_id:
                return node
        raise KeyError(node_id)

    def path(self, trace: int) -> list[ChartNode]:
        """Return the node sequence of ``trace`` by following its edges from start."""
        if trace not in self.traces:
            raise UnknownTraceError(trace, self.traces)
        successor = {
            edge.source: edge.target for edge in self.transitions if trace in edge.traces
        }
        sequence = [self.start]
        while sequence[-1] in successor:
            sequence.append(successor[sequence[-1]])
        return [self.node(node_id) for node_id in sequence]


class ThreadSlice(BaseModel):
    """Nodes of one thread in one trace, split the way the per-thread query splits them.

    Attributes:
        edges:    Consecutive same-thread node pairs of the trace.
        isolated: The thread's nodes that belong to no such pair.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    trace: int
    thread: int
    edges: tuple[tuple[int, int], ...]
    isolated: tuple[int, ...]

    def node_ids(self) -> set[int]:
        return {node for edge in self.edges for node in edge} | set(self.isolated)
