# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Exhaustive interleaving exploration and its quotient into traces.

Exploration is stateless: every schedule prefix is replayed from a fresh
:class:`Machine`, and alternatives are pushed on a stack so executions come
out in lexicographic schedule order.

A scheduling step of a spawned thread is one atomic action together with the
annotations, allocations and lifecycle events that surround it up to the
thread's next atomic action.  The main thread has two steps: a prologue that
initializes the store, runs the setup program and creates every thread, and
an epilogue, enabled once every spawned thread finished, that joins them,
runs the probe program and finishes.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from commutechart.core.app.monoid import swap_closure
from commutechart.core.app.program import ProgramBody, ProgramSpec
from commutechart.core.app.store import Store, allocate, apply_atomic, node_target
from commutechart.core.domain import (
    ActionRecord,
    ActionType,
    Allocate,
    AtomicAction,
    AtomicKind,
    Emission,
    Execution,
    ExplorerSettings,
    Finish,
    Invoke,
    NodeKey,
    Phase,
    Ref,
    ReplayEntry,
    Respond,
    Scalar,
    TraceSet,
    Value,
    write,
)
from commutechart.core.exceptions import (
    InvalidScheduleError,
    StateSpaceBoundError,
    StepBoundExceededError,
)

logger = logging.getLogger(__name__)

MAIN = 1

_ATOMIC_TYPES = {
    AtomicKind.READ: ActionType.ATOMIC_READ,
    AtomicKind.WRITE: ActionType.ATOMIC_WRITE,
    AtomicKind.RMW: ActionType.ATOMIC_RMW,
}
_ORDERING = (ActionType.THREAD_CREATE, ActionType.THREAD_JOIN)


@dataclass
class _Thread:
    tid: int
    body: ProgramBody
    pending: Emission | None = None
    started: bool = False
    finished: bool = False


@dataclass
class _Main:
    stage: str = "prologue"
    emitted: int = 0


@dataclass
class Machine:
    """Replays one schedule of a :class:`ProgramSpec`.

    Attributes:
        spec:     Program being run.
        settings: Step bound for every thread.
        store:    Current contents of every location.
        records:  Records produced so far.
        log:      Every emission processed so far with its result.
    """

    spec: ProgramSpec
    settings: ExplorerSettings = field(default_factory=ExplorerSettings)
    store: Store = field(init=False)
    records: list[ActionRecord] = field(init=False, default_factory=list)
    log: list[ReplayEntry] = field(init=False, default_factory=list)
    _threads: dict[int, _Thread] = field(init=False, default_factory=dict)
    _main: _Main = field(init=False, default_factory=_Main)
    _occurrences: Counter[tuple[int, ActionType, Phase]] = field(
        init=False, default_factory=Counter
    )
    _allocations: Counter[int] = field(init=False, default_factory=Counter)
    _emitted: Counter[int] = field(init=False, default_factory=Counter)
    _probe_store: Store = field(init=False, default_factory=dict)

    def __post_init__(self) -> None:
        self.store = dict(self.spec.initial_store)
        for tid in self.spec.spawned:
            self._threads[tid] = _Thread(tid=tid, body=self.spec.program(tid).start())

    # ------------------------------------------------------------------ #
    # Scheduling                                                         #
    # ------------------------------------------------------------------ #
    def enabled(self) -> list[int]:
        """Threads that can take a step, ascending."""
        if self._main.stage == "prologue":
            return [MAIN]
        running = [tid for tid, thread in self._threads.items() if not thread.finished]
        if not running and self._main.stage == "waiting":
            return [MAIN]
        return sorted(running)

    def step(self, tid: int) -> int:
        """Run one scheduling step of ``tid`` and return how many records it added."""
        before = len(self.records)
        if tid == MAIN:
            if self._main.stage == "prologue":
                self._prologue()
            else:
                self._epilogue()
        else:
            self._advance(self._threads[tid])
        return len(self.records) - before

    def execution(self, schedule: Sequence[int], blocks: Sequence[int]) -> Execution:
        return Execution(
            records=tuple(self.records),
            final_store=dict(self.store),
            schedule=tuple(schedule),
            blocks=tuple(blocks),
            probe_store=self._probe_store,
        )

    # ------------------------------------------------------------------ #
    # Main thread                                                        #
    # ------------------------------------------------------------------ #
    def _prologue(self) -> None:
        self._record(MAIN, ActionType.THREAD_START, Phase.LIFECYCLE)
        for location, value in self.spec.init_writes:
            self._perform(MAIN, Phase.SETUP, write(location, value))
        if self.spec.setup is not None:
            self._run_to_end(MAIN, Phase.SETUP, self.spec.setup.start())
        for tid in self.spec.spawned:
            self._record(
                MAIN, ActionType.THREAD_CREATE, Phase.LIFECYCLE, value=Scalar(value=tid)
            )
        self._main.stage = "waiting"

    def _epilogue(self) -> None:
        self._probe_store = dict(self.store)
        for tid in self.spec.joins:
            self._record(
                MAIN, ActionType.THREAD_JOIN, Phase.LIFECYCLE, value=Scalar(value=tid)
            )
        if self.spec.probe is not None:
            self._run_to_end(MAIN, Phase.PROBE, self.spec.probe.start())
        self._record(MAIN, ActionType.THREAD_FINISH, Phase.LIFECYCLE)
        self.log.append(ReplayEntry(MAIN, Finish(), None))
        self._main.stage = "done"

    def _run_to_end(self, tid: int, phase: Phase, body: ProgramBody) -> None:
        result: Value | None = None
        while True:
            emission = self._send(tid, body, result)
            if emission is None:
                return
            result = self._perform(tid, phase, emission)

    # ------------------------------------------------------------------ #
    # Spawned threads                                                    #
    # ------------------------------------------------------------------ #
    def _advance(self, thread: _Thread) -> None:
        if thread.finished:
            raise InvalidScheduleError(len(self.records), thread.tid, self.enabled())
        if not thread.started:
            thread.started = True
            self._record(thread.tid, ActionType.THREAD_START, Phase.LIFECYCLE)
            thread.pending = self._send(thread.tid, thread.body, None)
        performed_atomic = False
        while thread.pending is not None:
            emission = thread.pending
            if isinstance(emission, AtomicAction):
                if performed_atomic:
                    return
                performed_atomic = True
            result = self._perform(thread.tid, Phase.CONCURRENT, emission)
            thread.pending = self._send(thread.tid, thread.body, result)
        thread.finished = True
        self._record(thread.tid, ActionType.THREAD_FINISH, Phase.LIFECYCLE)
        self.log.append(ReplayEntry(thread.tid, Finish(), None))

    def _send(self, tid: int, body: ProgramBody, result: Value | None) -> Emission | None:
        """Resume ``body`` with ``result``; ``None`` once the program ended."""
        try:
            emission = body.send(result)
        except StopIteration:
            return None
        if isinstance(emission, Finish):
            body.close()
            return None
        self._emitted[tid] += 1
        if self._emitted[tid] > self.settings.step_bound:
            raise StepBoundExceededError(tid, self.settings.step_bound)
        return emission

    # ------------------------------------------------------------------ #
    # Emissions                                                          #
    # ------------------------------------------------------------------ #
    def _perform(self, tid: int, phase: Phase, emission: Emission) -> Value | None:
        match emission:
            case AtomicAction():
                result = self._atomic(tid, phase, emission)
            case Invoke(method=method, arguments=arguments):
                self._record(
                    tid,
                    ActionType.METHOD_INVOCATION,
                    phase,
                    value=arguments[0] if arguments else None,
                    method=method,
                )
                result = None
            case Respond(method=method, response=response):
                self._record(
                    tid, ActionType.METHOD_RESPONSE, phase, value=response, method=method
                )
                result = None
            case Allocate(fields=fields):
                counter = self._fresh_node(tid)
                for location, value in allocate(tid, counter, fields).items():
                    self._atomic(tid, phase, write(location, value))
                result = Ref(target=node_target(tid, counter))
            case _:
                raise AssertionError(f"unexpected emission {emission!r}")
        self.log.append(ReplayEntry(tid, emission, result))
        return result

    def _fresh_node(self, tid: int) -> int:
        """Next allocation counter of ``tid`` whose node has no locations yet.

        Counters only collide when the run starts from a preloaded store.
        """
        while True:
            counter = self._allocations[tid]
            self._allocations[tid] += 1
            prefix = f"{node_target(tid, counter)}."
            if not any(location.startswith(prefix) for location in self.store):
                return counter

    def _atomic(self, tid: int, phase: Phase, action: AtomicAction) -> Value:
        old = self.store.get(action.location)
        self.store, result = apply_atomic(self.store, action)
        action_type = _ATOMIC_TYPES[action.op]
        if action.op is AtomicKind.RMW:
            assert action.rmw is not None
            self._record(
                tid,
                action_type,
                phase,
                location=action.location,
                value=self.store[action.location],
                read_value=old,
                rmw_op=action.rmw.kind,
                memory_order=action.memory_order,
            )
        else:
            self._record(
                tid,
                action_type,
                phase,
                location=action.location,
                value=result,
                memory_order=action.memory_order,
            )
        return result

    def _record(
        self,
        tid: int,
        action_type: ActionType,
        phase: Phase,
        *,
        location: str | None = None,
        value: Value | None = None,
        read_value: Value | None = None,
        rmw_op: str | None = None,
        method: str | None = None,
        memory_order: str | None = None,
    ) -> None:
        slot = (tid, action_type, phase)
        occurrence = self._occurrences[slot]
        self._occurrences[slot] += 1
        # Fields come from validated emissions; location is set only on atomics.
        self.records.append(
            ActionRecord.model_construct(
                seq=len(self.records),
                thread=tid,
                action_type=action_type,
                phase=phase,
                occurrence=occurrence,
                location=location,
                value=value,
                read_value=read_value,
                rmw_op=rmw_op,
                method=method,
                memory_order=memory_order,
            )
        )


def explore(spec: ProgramSpec, settings: ExplorerSettings | None = None) -> TraceSet:
    """Enumerate every execution of ``spec``.

    Returns:
        A trace set with ``raw`` populated in lexicographic schedule order and
        no representatives yet.

    Raises:
        StepBoundExceededError: If a thread emits more than the step bound.
        StateSpaceBoundError: If more than ``settings.max_states`` executions
            exist.
    """
    settings = settings or ExplorerSettings()
    logger.info("Exploring %d spawned thread(s)", len(spec.threads))
    pending: list[tuple[int, ...]] = [()]
    raw: list[Execution] = []
    while pending:
        prefix = pending.pop()
        machine = Machine(spec, settings)
        schedule: list[int] = []
        blocks: list[int] = []
        while enabled := machine.enabled():
            depth = len(schedule)
            if depth < len(prefix):
                choice = prefix[depth]
            else:
                choice = enabled[0]
                for alternative in reversed(enabled[1:]):
                    pending.append((*schedule, alternative))
            blocks.append(machine.step(choice))
            schedule.append(choice)
        raw.append(machine.execution(schedule, blocks))
        logger.debug("Execution %d: schedule %s", len(raw), schedule)
        if len(raw) > settings.max_states:
            raise StateSpaceBoundError(settings.max_states)
    logger.info("Explored %d execution(s)", len(raw))
    return TraceSet(raw=tuple(raw))


def run_sequential(
    spec: ProgramSpec,
    schedule: Sequence[int],
    settings: ExplorerSettings | None = None,
) -> list[ReplayEntry]:
    """Replay ``spec`` under a fixed schedule of scheduling steps.

    Raises:
        InvalidScheduleError: If the schedule names a thread that cannot run.
    """
    machine = Machine(spec, settings or ExplorerSettings())
    for position, tid in enumerate(schedule):
        enabled = machine.enabled()
        if tid not in enabled:
            raise InvalidScheduleError(position, tid, enabled)
        machine.step(tid)
    return list(machine.log)


def replay(
    spec: ProgramSpec,
    schedule: Sequence[int],
    settings: ExplorerSettings | None = None,
) -> Execution:
    """Replay ``spec`` under ``schedule`` and return the resulting execution."""
    machine = Machine(spec, settings or ExplorerSettings())
    blocks = []
    for position, tid in enumerate(schedule):
        enabled = machine.enabled()
        if tid not in enabled:
            raise InvalidScheduleError(position, tid, enabled)
        blocks.append(machine.step(tid))
    return machine.execution(schedule, blocks)


# ---------------------------------------------------------------------- #
# Quotient                                                               #
# ---------------------------------------------------------------------- #
def action_independent(p: ActionRecord, q: ActionRecord) -> bool:
    """Whether two records of one execution could be reordered.

    Records of one thread never commute; neither do accesses to the same
    location when one of them writes, nor a CREATE or JOIN and the records of
    the thread it names.
    """
    if p.thread == q.thread:
        return False
    if p.location is not None and p.location == q.location:
        writes = {ActionType.ATOMIC_WRITE, ActionType.ATOMIC_RMW}
        if p.action_type in writes or q.action_type in writes:
            return False
    for a, b in ((p, q), (q, p)):
        if a.action_type in _ORDERING and a.value == Scalar(value=b.thread):
            return False
    return True


@dataclass(frozen=True, eq=False)
class _Step:
    """Records of one scheduling step; equal steps have equal record keys."""

    thread: int
    records: tuple[ActionRecord, ...]
    keys: tuple[NodeKey, ...]

    @classmethod
    def of(cls, thread: int, records: tuple[ActionRecord, ...]) -> _Step:
        return cls(thread, records, tuple(record.key() for record in records))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Step) and self.keys == other.keys

    def __hash__(self) -> int:
        return hash(self.keys)


def _steps_independent(a: _Step, b: _Step) -> bool:
    return all(action_independent(p, q) for p in a.records for q in b.records)


def _word(execution: Execution) -> tuple[_Step, ...]:
    return tuple(_Step.of(thread, records) for thread, records in execution.steps())


def quotient(raw: Sequence[Execution]) -> TraceSet:
    """Group ``raw`` into equivalence classes of executions.

    Two executions are equivalent when one turns into the other by swapping
    adjacent independent scheduling steps.  Each class is represented by its
    member with the least ``(thread, action_type, location, value)``
    sequence, and representatives receive trace IDs in that same order.
    """
    if not raw:
        raise ValueError("quotient needs at least one execution")
    index = {_word(execution): position for position, execution in enumerate(raw)}
    assigned: set[int] = set()
    groups: list[tuple[int, ...]] = []
    for position, execution in enumerate(raw):
        if position in assigned:
            continue
        members = swap_closure(_word(execution), _steps_independent)
        group = tuple(sorted(index[word] for word in members if word in index))
        assigned.update(group)
        groups.append(group)

    def lead(group: tuple[int, ...]) -> int:
        return min(group, key=lambda member: raw[member].order_key())

    groups.sort(key=lambda group: raw[lead(group)].order_key())
    logger.info("Quotiented %d execution(s) into %d trace(s)", len(raw), len(groups))
    return TraceSet(
        raw=tuple(raw),
        representatives=tuple(raw[lead(group)] for group in groups),
        classes=tuple(groups),
    )


def unquotiented(raw: Sequence[Execution]) -> TraceSet:
    """Trace set in which every execution is its own trace."""
    order = sorted(range(len(raw)), key=lambda position: raw[position].order_key())
    return TraceSet(
        raw=tuple(raw),
        representatives=tuple(raw[position] for position in order),
        classes=tuple((position,) for position in order),
    )


__all__ = [
    "MAIN",
    "Machine",
    "action_independent",
    "explore",
    "quotient",
    "replay",
    "run_sequential",
    "unquotiented",
]
