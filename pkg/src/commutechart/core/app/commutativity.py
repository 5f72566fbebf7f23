# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Commutativity decision from probe footprints and responses."""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from itertools import combinations

from commutechart.core.app.explorer import MAIN, explore, quotient, replay, unquotiented
from commutechart.core.app.program import ProgramSpec
from commutechart.core.app.statechart import (
    annotate_conditional_states,
    build_statechart,
)
from commutechart.core.app.store import is_allocated
from commutechart.core.app.structure import Structure
from commutechart.core.domain import (
    ActionRecord,
    ActionType,
    Execution,
    ExplorerSettings,
    FootprintEntry,
    FootprintMode,
    Phase,
    ProbeFootprint,
    Scalar,
    Scenario,
    ScenarioResult,
    TraceEvidence,
    TraceSet,
    Value,
    Verdict,
    render,
)
from commutechart.core.exceptions import InvalidValueError, MissingResponseError

logger = logging.getLogger(__name__)

VACUOUS_NOTE = "single trace: nothing to compare, commutes vacuously"


class _Canonical:
    """First-appearance renaming of locations (``L1``) and node references (``N1``)."""

    def __init__(self) -> None:
        self._locations: dict[str, str] = {}
        self._targets: dict[str, str] = {}

    def location(self, name: str) -> str:
        return self._locations.setdefault(name, f"L{len(self._locations) + 1}")

    def target(self, name: str) -> str:
        if not is_allocated(name):
            return name
        return self._targets.setdefault(name, f"N{len(self._targets) + 1}")


def _entry(
    record: ActionRecord,
    location: Callable[[str], str],
    target: Callable[[str], str] | None,
) -> FootprintEntry:
    assert record.location is not None
    renamed = location(record.location)
    return FootprintEntry(
        action_type=record.action_type,
        rmw_op=record.rmw_op,
        location=renamed,
        read_value=(
            render(record.read_value, target)
            if record.action_type is ActionType.ATOMIC_RMW
            else None
        ),
        value=render(record.value, target),
    )


def probe_footprint(
    trace: Execution, mode: FootprintMode = FootprintMode.CANONICAL
) -> ProbeFootprint:
    """Atomic actions of the probe phase of ``trace``, in order."""
    probe = [
        record
        for record in trace.records
        if record.phase is Phase.PROBE and record.action_type.is_atomic
    ]
    if mode is FootprintMode.EXACT:
        entries = [_entry(record, str, None) for record in probe]
    else:
        names = _Canonical()
        entries = [_entry(record, names.location, names.target) for record in probe]
    return ProbeFootprint(entries=tuple(entries))


def rerun_probe(
    spec: ProgramSpec,
    execution: Execution,
    mode: FootprintMode = FootprintMode.CANONICAL,
) -> ProbeFootprint:
    """Footprint of the probe of ``spec`` run alone from ``execution.probe_store``.

    Matches :func:`probe_footprint` of ``execution`` whenever the probe only
    depends on the store it starts from.
    """
    alone = ProgramSpec(probe=spec.probe, initial_store=execution.probe_store)
    return probe_footprint(replay(alone, (MAIN, MAIN)), mode)


def operation_label(record: ActionRecord) -> str:
    """Label ``T{thread}:{method}({arg})`` of the operation an invocation starts."""
    argument = record.value.value if isinstance(record.value, Scalar) else ""
    return f"T{record.thread}:{record.method}({argument})"


def _responses(trace_id: int, execution: Execution) -> tuple[dict[str, Value], str | None]:
    labels: dict[int, str] = {}
    responses: dict[str, Value] = {}
    first: str | None = None
    for record in execution.records:
        if record.phase is not Phase.CONCURRENT:
            continue
        if record.action_type is ActionType.METHOD_INVOCATION:
            labels[record.thread] = operation_label(record)
        elif record.action_type is ActionType.METHOD_RESPONSE:
            label = labels[record.thread]
            assert record.value is not None
            responses[label] = record.value
            first = first or label
    for label in labels.values():
        if label not in responses:
            raise MissingResponseError(trace_id, label)
    return dict(sorted(responses.items())), first


def response_table(traces: TraceSet) -> dict[tuple[int, str], Value]:
    """Response of every concurrent operation in every trace.

    Raises:
        MissingResponseError: If an invoked operation never responded.
    """
    table: dict[tuple[int, str], Value] = {}
    for trace_id, execution in traces.items():
        responses, _ = _responses(trace_id, execution)
        for label, value in responses.items():
            table[(trace_id, label)] = value
    return table


def collect_evidence(
    traces: TraceSet, mode: FootprintMode = FootprintMode.CANONICAL
) -> dict[int, TraceEvidence]:
    evidence: dict[int, TraceEvidence] = {}
    for trace_id, execution in traces.items():
        responses, first = _responses(trace_id, execution)
        evidence[trace_id] = TraceEvidence(
            footprint=probe_footprint(execution, mode),
            responses=responses,
            first_responder=first,
        )
    return evidence


def _difference(i: int, a: TraceEvidence, j: int, b: TraceEvidence) -> str:
    if a.footprint.read_count != b.footprint.read_count:
        return (
            f"trace {i} probe performs {a.footprint.read_count} ATOMIC READ(s), "
            f"trace {j} performs {b.footprint.read_count}"
        )
    if a.footprint != b.footprint:
        left, right = a.footprint.entries, b.footprint.entries
        for position in range(max(len(left), len(right))):
            x = left[position].describe() if position < len(left) else "nothing"
            y = right[position].describe() if position < len(right) else "nothing"
            if x != y:
                return (
                    f"probe action {position + 1} differs: trace {i} {x}, "
                    f"trace {j} {y}"
                )
        return f"probe footprints of traces {i} and {j} differ"
    for label in sorted(set(a.responses) | set(b.responses)):
        x, y = render(a.responses.get(label)), render(b.responses.get(label))
        if x != y:
            return f"{label} responds {x} in trace {i} but {y} in trace {j}"
    return f"traces {i} and {j} differ"


def _agree(a: TraceEvidence, b: TraceEvidence) -> bool:
    return a.footprint == b.footprint and a.responses == b.responses


def decide(evidence: Mapping[int, TraceEvidence]) -> Verdict:
    """Decide commutativity from per-trace evidence.

    Operations commute iff every trace shows the same probe footprint and each
    concurrent operation answers the same in every trace.  Otherwise the
    least pair of differing traces is the witness.
    """
    if not evidence:
        raise InvalidValueError(
            param="evidence", value={}, message="At least one trace is required."
        )
    ids = sorted(evidence)
    witness: tuple[int, int] | None = None
    for i, j in combinations(ids, 2):
        if not _agree(evidence[i], evidence[j]):
            witness = (i, j)
            break

    groups: dict[str, list[int]] = {}
    for trace_id in ids:
        label = evidence[trace_id].first_responder
        if label is not None:
            groups.setdefault(label, []).append(trace_id)

    verdict = Verdict(
        commutes=witness is None,
        evidence=dict(sorted(evidence.items())),
        witness=witness,
        reason=(
            _difference(witness[0], evidence[witness[0]], witness[1], evidence[witness[1]])
            if witness
            else None
        ),
        groups={label: tuple(members) for label, members in sorted(groups.items())},
        note=VACUOUS_NOTE if len(ids) == 1 else None,
    )
    logger.info(
        "Verdict over %d trace(s): %s",
        len(ids),
        "commutes" if verdict.commutes else f"does not commute ({verdict.reason})",
    )
    return verdict


def run_scenario(
    scenario: Scenario,
    structure: Structure,
    settings: ExplorerSettings | None = None,
) -> ScenarioResult:
    """Explore ``scenario`` on ``structure`` and decide commutativity.

    Raises:
        InvalidScenarioError: If the structure cannot run the scenario.
        StepBoundExceededError: If a thread never finishes.
        StateSpaceBoundError: If the scenario has too many executions.
    """
    settings = settings or ExplorerSettings()
    logger.info(
        "Running %s scenario with %d concurrent operation(s)",
        structure.type_name,
        len(scenario.concurrent),
    )
    spec = structure.build_program(scenario)
    explored = explore(spec, settings)
    if scenario.options.quotient:
        traces = quotient(explored.raw)
    else:
        traces = unquotiented(explored.raw)
    chart = annotate_conditional_states(build_statechart(traces), traces)
    verdict = decide(collect_evidence(traces, scenario.options.footprint_mode))
    return ScenarioResult(
        scenario=scenario,
        traces=traces,
        chart=chart,
        verdict=verdict,
        states={
            trace_id: structure.abstract_state(execution.final_store)
            for trace_id, execution in traces.items()
        },
        probe_states={
            trace_id: structure.abstract_state(execution.probe_store)
            for trace_id, execution in traces.items()
        },
    )
