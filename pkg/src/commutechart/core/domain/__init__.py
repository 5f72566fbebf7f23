# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from .actions import (
    SEQ_CST,
    ActionRecord,
    ActionType,
    Allocate,
    AtomicAction,
    AtomicKind,
    CompareAndSwap,
    Emission,
    Exchange,
    FetchAdd,
    Finish,
    Invoke,
    NodeKey,
    Phase,
    Respond,
    RmwOp,
    compare_and_swap,
    exchange,
    fetch_add,
    read,
    write,
)
from .chart import ChartNode, StateChart, ThreadSlice, Transition
from .execution import Execution, ReplayEntry, TraceSet
from .relations import DependencyRelation, IndependencyRelation, TraceClass
from .result import ScenarioResult
from .scenario import FootprintMode, OpCall, Scenario, ScenarioOptions
from .settings import MAX_STATES_ENV, ExplorerSettings
from .values import (
    EMPTY,
    FALSE,
    NULL,
    OK,
    TRUE,
    Empty,
    Flag,
    Null,
    Ok,
    Ref,
    Renamer,
    Scalar,
    Value,
    as_flag,
    as_ref,
    as_scalar,
    render,
    render_transition,
)
from .verdict import FootprintEntry, ProbeFootprint, TraceEvidence, Verdict

__all__ = [
    "EMPTY",
    "FALSE",
    "MAX_STATES_ENV",
    "NULL",
    "OK",
    "SEQ_CST",
    "TRUE",
    "ActionRecord",
    "ActionType",
    "Allocate",
    "AtomicAction",
    "AtomicKind",
    "ChartNode",
    "CompareAndSwap",
    "DependencyRelation",
    "Emission",
    "Empty",
    "Exchange",
    "Execution",
    "ExplorerSettings",
    "FetchAdd",
    "Finish",
    "Flag",
    "FootprintEntry",
    "FootprintMode",
    "IndependencyRelation",
    "Invoke",
    "NodeKey",
    "Null",
    "Ok",
    "OpCall",
    "Phase",
    "ProbeFootprint",
    "Ref",
    "Renamer",
    "ReplayEntry",
    "Respond",
    "RmwOp",
    "Scalar",
    "Scenario",
    "ScenarioOptions",
    "ScenarioResult",
    "StateChart",
    "ThreadSlice",
    "TraceClass",
    "TraceEvidence",
    "Transition",
    "Value",
    "Verdict",
    "as_flag",
    "as_ref",
    "as_scalar",
    "compare_and_swap",
    "exchange",
    "fetch_add",
    "read",
    "render",
    "render_transition",
    "write",
]
