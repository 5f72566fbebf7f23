# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from .commutativity import (
    collect_evidence,
    decide,
    probe_footprint,
    rerun_probe,
    response_table,
    run_scenario,
)
from .explorer import (
    MAIN,
    Machine,
    action_independent,
    explore,
    quotient,
    replay,
    run_sequential,
    unquotiented,
)
from .monoid import (
    are_equivalent,
    derive_independency,
    enumerate_trace_class,
    swap_closure,
    symmetric_closure,
    validate_dependency,
)
from .program import ProgramBody, ProgramSpec, ThreadProgram
from .registry import Registry
from .service import Service
from .statechart import (
    annotate_conditional_states,
    build_statechart,
    per_thread_slice,
    subgraph_by_trace,
)
from .store import Store, allocate, apply_atomic, is_allocated, node_target
from .structure import Structure

__all__ = [
    "MAIN",
    "Machine",
    "ProgramBody",
    "ProgramSpec",
    "Registry",
    "Service",
    "Store",
    "Structure",
    "ThreadProgram",
    "action_independent",
    "allocate",
    "annotate_conditional_states",
    "apply_atomic",
    "are_equivalent",
    "build_statechart",
    "collect_evidence",
    "decide",
    "derive_independency",
    "enumerate_trace_class",
    "explore",
    "is_allocated",
    "node_target",
    "per_thread_slice",
    "probe_footprint",
    "quotient",
    "replay",
    "rerun_probe",
    "response_table",
    "run_scenario",
    "run_sequential",
    "subgraph_by_trace",
    "swap_closure",
    "symmetric_closure",
    "unquotiented",
    "validate_dependency",
]
