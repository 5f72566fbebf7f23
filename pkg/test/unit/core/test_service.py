# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Tests for commutechart.core.app.registry, service and the Structure base."""

from __future__ import annotations

from unittest.mock import Mock, patch

import pytest

from commutechart.core.app import Registry, Service, Structure
from commutechart.core.domain import (
    ExplorerSettings,
    Invoke,
    Respond,
    Scalar,
    Scenario,
    fetch_add,
)
from commutechart.core.exceptions import (
    InvalidScenarioError,
    StructureAlreadyRegisteredError,
)


def counter_increment():
    yield Invoke(method="inc")
    old = yield fetch_add("c", 1)
    yield Respond(method="inc", response=old)


class CounterStructure(Structure):
    """Shared counter used to exercise the base class."""

    def __init__(self, type_name: str = "counter") -> None:
        super().__init__(type_name=type_name, operations={"inc": (False, counter_increment)})

    def init_writes(self, scenario):
        return [("c", Scalar(value=0))]

    def abstract_state(self, store):
        return (store["c"].value,)


class TestRegistry:
    """Test suite for Registry."""

    def test_register_and_lookup(self):
        """Test that a registered structure is found by its name."""
        registry = Registry()
        structure = CounterStructure()

        registry.register(structure)

        assert registry.structure_for_name("counter") is structure
        assert registry.names == ("counter",)

    def test_duplicate_registration_raises(self):
        """Test that registering a name twice raises."""
        registry = Registry()
        registry.register(CounterStructure())

        with pytest.raises(StructureAlreadyRegisteredError, match="counter"):
            registry.register(CounterStructure())

    def test_update_replaces(self):
        """Test that update replaces a registered structure."""
        registry = Registry()
        registry.register(CounterStructure())
        replacement = CounterStructure()

        registry.update(replacement)

        assert registry.structure_for_name("counter") is replacement

    def test_unregister_is_idempotent(self):
        """Test that unregistering an unknown name is a no-op."""
        registry = Registry()
        registry.unregister("counter")
        registry.register(CounterStructure())
        registry.unregister("counter")

        assert registry.structure_for_name("counter") is None


class TestStructureValidation:
    """Test suite for Structure.validate."""

    def test_unknown_operation(self):
        """Test that an operation the structure lacks is rejected."""
        scenario = Scenario(structure="counter", concurrent=["dec()"])

        with pytest.raises(InvalidScenarioError, match="no operation 'dec'"):
            CounterStructure().validate(scenario)

    def test_argument_arity(self):
        """Test that an argument to a nullary operation is rejected."""
        scenario = Scenario(structure="counter", concurrent=["inc(3)"])

        with pytest.raises(InvalidScenarioError, match="inc\\(\\)"):
            CounterStructure().validate(scenario)

    def test_unbounded_structure_rejects_capacity(self):
        """Test that a capacity is rejected by an unbounded structure."""
        scenario = Scenario(structure="counter", capacity=2, concurrent=["inc()"])

        with pytest.raises(InvalidScenarioError, match="takes no capacity"):
            CounterStructure().validate(scenario)

    def test_build_program_maps_phases(self):
        """Test that scenario phases become setup, threads and probe."""
        scenario = Scenario(
            structure="counter", setup=["inc()"], concurrent=["inc()", "inc()"], probe=["inc()"]
        )

        spec = CounterStructure().build_program(scenario)

        assert spec.init_writes == (("c", Scalar(value=0)),)
        assert spec.setup is not None
        assert len(spec.threads) == 2
        assert spec.probe is not None
        assert spec.threads[0].label == "inc()"


class TestService:
    """Test suite for Service."""

    def test_unknown_structure_lists_registered(self):
        """Test that an unknown structure error lists the registered names."""
        service = Service()
        service.register(CounterStructure())

        with pytest.raises(InvalidScenarioError, match="registered: counter"):
            service.structure("stack")

    def test_run_scenario_on_custom_structure(self):
        """Test that two increments never commute: responses swap."""
        service = Service()
        service.register(CounterStructure())

        result = service.run_scenario(
            Scenario(structure="counter", concurrent=["inc()", "inc()"])
        )

        assert len(result.traces.representatives) == 2
        assert not result.verdict.commutes
        assert set(result.states.values()) == {(2,)}

    def test_settings_are_forwarded(self):
        """Test that service settings reach run_scenario."""
        settings = ExplorerSettings(max_states=10)
        service = Service(settings)
        service.register(CounterStructure())
        scenario = Scenario(structure="counter", concurrent=["inc()"])

        with patch("commutechart.core.app.service.run_scenario") as mock_run:
            mock_run.return_value = Mock()
            service.run_scenario(scenario)

        mock_run.assert_called_once()
        assert mock_run.call_args.args[2] is settings

    def test_unregister_and_update(self):
        """Test that an unregistered structure can no longer be looked up."""
        service = Service()
        structure = CounterStructure()
        service.update(structure)
        assert service.structure("counter") is structure

        service.unregister(structure)

        with pytest.raises(InvalidScenarioError):
            service.structure("counter")
