# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Serializations of state charts: import script, DOT and JSON."""

from .cypher import emit_cypher, location_address, node_properties, trace_query
from .document import (
    SCHEMA_VERSION,
    ChartDocument,
    emit_json,
    load_document,
    load_json,
)
from .dot import PALETTE, emit_dot, node_label

FORMATS = ("cypher", "dot", "json")

__all__ = [
    "FORMATS",
    "PALETTE",
    "SCHEMA_VERSION",
    "ChartDocument",
    "emit_cypher",
    "emit_dot",
    "emit_json",
    "load_document",
    "load_json",
    "location_address",
    "node_label",
    "node_properties",
    "trace_query",
]
