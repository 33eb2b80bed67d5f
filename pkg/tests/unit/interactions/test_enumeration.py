import logging

import pytest

from multiwise.core import UnknownFeatureError, compile_to_cnf
from multiwise.interactions import InteractionTuple, enumerate_valid_interactions
from multiwise.sat import DPLLEngine, enumerate_all_configurations
from multiwise.tools import generate_feature_model, generate_feature_tree
from tests._oracle import harvest_tuples


def _names(model, tuple_set):
    return {tuple(interaction.to_names(model)) for interaction in tuple_set}


def test_group_one_tuples(car_model):
    tuple_set = enumerate_valid_interactions(car_model, ["Car", "Radio", "Gearbox"], 1)
    assert _names(car_model, tuple_set) == {("Car",), ("Gearbox",), ("Radio",), ("!Radio",)}
    assert tuple_set.t == 1
    assert tuple_set.scope == ("Car", "Gearbox", "Radio")


def test_group_two_tuples(car_model):
    tuple_set = enumerate_valid_interactions(car_model, ["Carbody", "Manual", "Automatic"], 2)
    assert [interaction.to_names(car_model) for interaction in tuple_set] == [
        ["Carbody", "Manual"],
        ["Carbody", "!Manual"],
        ["Carbody", "Automatic"],
        ["Carbody", "!Automatic"],
        ["Manual", "!Automatic"],
        ["!Manual", "Automatic"],
    ]


def test_alternative_pairs(car_model):
    tuple_set = enumerate_valid_interactions(car_model, ["Manual", "Automatic"], 2)
    assert _names(car_model, tuple_set) == {("Manual", "!Automatic"), ("!Manual", "Automatic")}


def test_zero_strength(car_model):
    tuple_set = enumerate_valid_interactions(car_model, car_model.features, 0)
    assert len(tuple_set) == 0
    assert tuple_set.t == 0


def test_strength_above_scope_size(car_model, caplog):
    with caplog.at_level(logging.WARNING, logger="multiwise.interactions.enumeration"):
        tuple_set = enumerate_valid_interactions(car_model, ["Radio", "CD"], 3)
    assert len(tuple_set) == 0
    assert "Cannot build 3-wise interactions over 2 features" in caplog.text


def test_invalid_arguments(car_model):
    with pytest.raises(ValueError, match="non-negative"):
        enumerate_valid_interactions(car_model, ["Radio"], -1)
    with pytest.raises(UnknownFeatureError):
        enumerate_valid_interactions(car_model, ["Radio", "Sunroof"], 1)


def test_prefilter_keeps_result(car_model):
    with_filter = DPLLEngine(car_model)
    without_filter = DPLLEngine(car_model)
    filtered = enumerate_valid_interactions(car_model, car_model.features, 2, engine=with_filter)
    unfiltered = enumerate_valid_interactions(
        car_model, car_model.features, 2, engine=without_filter, use_prefilter=False
    )
    assert filtered == unfiltered


def test_shuffle(car_model):
    ordered = enumerate_valid_interactions(car_model, car_model.features, 2)
    shuffled = enumerate_valid_interactions(car_model, car_model.features, 2, shuffle_seed=5)
    assert shuffled.as_set() == ordered.as_set()
    assert shuffled.tuples != ordered.tuples
    assert enumerate_valid_interactions(car_model, car_model.features, 2, shuffle_seed=5) == shuffled


def test_lexicographic_order(car_model):
    tuples = enumerate_valid_interactions(car_model, car_model.features, 2).tuples
    keys = [(tuple(abs(lit) for lit in t), tuple(lit < 0 for lit in t)) for t in tuples]
    assert keys == sorted(keys)


def test_tuples_are_over_scope(car_model):
    scope = ["Radio", "USB", "CD", "Navigation"]
    tuple_set = enumerate_valid_interactions(car_model, scope, 3)
    variables = set(car_model.variables_of(scope))
    assert all({abs(lit) for lit in interaction} <= variables for interaction in tuple_set)
    assert InteractionTuple.from_names(car_model, ["!Radio", "USB", "CD"]) not in tuple_set


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("t", [1, 2])
def test_against_exhaustive_enumeration(seed, t):
    model = generate_feature_model(14, seed=seed)
    configurations = enumerate_all_configurations(model, cap=10**5)
    expected = harvest_tuples(model, configurations, model.features, t)
    tuple_set = enumerate_valid_interactions(model, model.features, t)
    assert {interaction.literals for interaction in tuple_set} == expected


@pytest.mark.parametrize("seed", range(3))
def test_three_wise_against_exhaustive_enumeration(seed):
    model = compile_to_cnf(generate_feature_tree(10, seed=seed, nb_constraints=2))
    configurations = enumerate_all_configurations(model, cap=10**5)
    scope = model.features[1:8]
    expected = harvest_tuples(model, configurations, scope, 3)
    tuple_set = enumerate_valid_interactions(model, scope, 3, use_prefilter=False)
    assert {interaction.literals for interaction in tuple_set} == expected
