# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from commutechart.core.domain.actions import ActionType
from commutechart.core.domain.values import Value


class FootprintEntry(BaseModel):
    """One atomic action of the probe phase, with canonical names."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    action_type: ActionType
    rmw_op: str | None = None
    location: str
    value: str
    read_value: str | None = None

    def describe(self) -> str:
        short = self.action_type.value.removeprefix("ATOMIC ")
        if self.read_value is not None:
            return f"{short} {self.rmw_op} {self.location} {self.read_value}→{self.value}"
        arrow = "→" if self.action_type is ActionType.ATOMIC_READ else "="
        return f"{short} {self.location}{arrow}{self.value}"


class ProbeFootprint(BaseModel):
    """Ordered atomic actions of the probe phase of one trace."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    entries: tuple[FootprintEntry, ...] = ()

    def count(self, action_type: ActionType) -> int:
        return sum(1 for entry in self.entries if entry.action_type is action_type)

    @property
    def read_count(self) -> int:
        return self.count(ActionType.ATOMIC_READ)

    def __len__(self) -> int:
        return len(self.entries)


class TraceEvidence(BaseModel):
    """What one trace shows about the object after the concurrent phase.

    Attributes:
        footprint:       Probe footprint of the trace.
        responses:       Response of every concurrent operation, by label.
        first_responder: Label of the concurrent operation that responded first.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    footprint: ProbeFootprint
    responses: dict[str, Value]
    first_responder: str | None = None


class Verdict(BaseModel):
    """Commutativity decision with the per-trace evidence it rests on.

    Attributes:
        commutes: ``True`` iff every trace has the same footprint and every
                  concurrent operation the same response.
        evidence: Evidence per trace ID.
        witness:  Least pair of trace IDs whose evidence differs.
        reason:   First difference between the witness traces, in words.
        groups:   Trace IDs grouped by the concurrent operation that
                  responded first.
        note:     Remark on degenerate verdicts (a single trace).
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    commutes: bool
    evidence: dict[int, TraceEvidence]
    witness: tuple[int, int] | None = None
    reason: str | None = None
    groups: dict[str, tuple[int, ...]] = {}
    note: str | None = None
