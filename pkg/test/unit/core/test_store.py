# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Tests for commutechart.core.app.store."""

from __future__ import annotations

import pytest

from commutechart.core.app import allocate, apply_atomic, is_allocated, node_target
from commutechart.core.domain import (
    FALSE,
    NULL,
    TRUE,
    Ref,
    Scalar,
    compare_and_swap,
    exchange,
    fetch_add,
    read,
    write,
)
from commutechart.core.exceptions import OperandTypeError, UninitializedReadError


class TestApplyAtomic:
    """Test suite for the sequentially consistent primitives."""

    def test_read_after_write(self):
        """Test that a read returns the last written value."""
        store, written = apply_atomic({}, write("x", Scalar(value=5)))
        store, result = apply_atomic(store, read("x"))

        assert written == Scalar(value=5)
        assert result == Scalar(value=5)
        assert store == {"x": Scalar(value=5)}

    def test_fetch_add_returns_old_value(self):
        """Test that fetch_add returns the old value and stores the sum."""
        store, result = apply_atomic({"x": Scalar(value=0)}, fetch_add("x", 1))

        assert result == Scalar(value=0)
        assert store["x"] == Scalar(value=1)

    def test_compare_and_swap_success_then_failure(self):
        """Test that a repeated CAS fails and leaves the store untouched."""
        n1, n2 = Ref(target="n1"), Ref(target="n2")
        action = compare_and_swap("p", n1, n2)

        store, first = apply_atomic({"p": n1}, action)
        again, second = apply_atomic(store, action)

        assert first == TRUE
        assert store["p"] == n2
        assert second == FALSE
        assert again == store

    def test_compare_and_swap_distinguishes_mark_bit(self):
        """Test that CAS compares the mark bit too."""
        marked = Ref(target="n1", marked=True)

        _, result = apply_atomic({"p": marked}, compare_and_swap("p", Ref(target="n1"), NULL))

        assert result == FALSE

    def test_exchange_stores_new_and_returns_old(self):
        """Test that exchange swaps in the new value."""
        store, result = apply_atomic({"s": Scalar(value=100)}, exchange("s", NULL))

        assert result == Scalar(value=100)
        assert store["s"] == NULL

    def test_input_store_is_not_mutated(self):
        """Test that the input store is copied, not changed."""
        original = {"x": Scalar(value=1)}

        apply_atomic(original, fetch_add("x", 5))

        assert original == {"x": Scalar(value=1)}

    @pytest.mark.parametrize(
        "action", [read("missing"), fetch_add("missing", 1), exchange("missing", NULL)]
    )
    def test_uninitialized_location_raises(self, action):
        """Test that touching an unwritten location raises."""
        with pytest.raises(UninitializedReadError, match="missing"):
            apply_atomic({}, action)

    def test_fetch_add_on_reference_raises(self):
        """Test that fetch_add needs a scalar operand."""
        with pytest.raises(OperandTypeError, match="scalar"):
            apply_atomic({"x": Ref(target="tail")}, fetch_add("x", 1))


class TestAllocate:
    """Test suite for node allocation naming."""

    def test_names_fields_after_thread_and_counter(self):
        """Test that fields are named after the thread and counter."""
        result = allocate(2, 0, [("key", Scalar(value=5)), ("next", Ref(target="tail"))])

        assert result == {
            "n2.0.key": Scalar(value=5),
            "n2.0.next": Ref(target="tail"),
        }

    def test_successive_allocations_are_distinct(self):
        """Test that two allocations share no locations."""
        first = allocate(2, 0, [("key", NULL)])
        second = allocate(2, 1, [("key", NULL)])

        assert set(first).isdisjoint(second)

    def test_node_target_is_recognised_as_allocated(self):
        """Test that only node targets count as allocated."""
        assert is_allocated(node_target(3, 2))
        assert not is_allocated("tail")
        assert not is_allocated("n2.0.key")
