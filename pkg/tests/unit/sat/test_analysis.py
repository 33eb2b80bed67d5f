import pytest

from multiwise.core import (
    CapExceededError,
    Configuration,
    FeatureModel,
    PartialConfiguration,
    UnsatisfiableConfigurationError,
    VoidModelError,
    compile_to_cnf,
)
from multiwise.sat import (
    DPLLEngine,
    complete_configuration,
    core_dead_features,
    enumerate_all_configurations,
    is_satisfiable,
)
from multiwise.tools import generate_feature_tree
from tests._oracle import truth_table_configurations


def test_is_satisfiable(car_model):
    both_gearboxes = PartialConfiguration.from_names(car_model, selected=["Manual", "Automatic"])
    assert not is_satisfiable(car_model, both_gearboxes)
    assert is_satisfiable(car_model, PartialConfiguration(car_model))
    assert not is_satisfiable(car_model, [-1])
    assert is_satisfiable(car_model, [4, 8])


def test_core_dead_car(car_model):
    core, dead = core_dead_features(car_model)
    assert core == ["Car", "Carbody", "Gearbox"]
    assert dead == []


def test_dead_feature():
    model = FeatureModel(features=("R", "X"), clauses=((1,), (-2, 1), (-2,)))
    assert core_dead_features(model) == (["R"], ["X"])


def test_core_dead_void_model():
    model = FeatureModel(features=("X",), clauses=((1,), (-1,)))
    with pytest.raises(VoidModelError):
        core_dead_features(model)


@pytest.mark.parametrize("seed", range(8))
def test_core_dead_against_brute_force(seed):
    tree = generate_feature_tree(12, seed=seed, nb_constraints=4)
    model = compile_to_cnf(tree)
    valid = truth_table_configurations(tree)
    core, dead = core_dead_features(model)
    assert core == [name for name in model.features if all(name in c for c in valid)]
    assert dead == [name for name in model.features if not any(name in c for c in valid)]


def test_complete_minimal_configuration(car_model):
    configuration = complete_configuration(car_model, PartialConfiguration.from_names(car_model, ["Car"]))
    assert isinstance(configuration, Configuration)
    assert configuration.selected == ["Car", "Carbody", "Gearbox", "Automatic"]


def test_complete_keeps_decisions(car_model):
    partial = PartialConfiguration.from_names(car_model, selected=["USB"], deselected=["Bluetooth"])
    configuration = complete_configuration(car_model, partial)
    assert partial.literals <= configuration.literals
    assert configuration.selected == ["Car", "Carbody", "Gearbox", "Automatic", "Radio", "Ports", "USB"]
    assert complete_configuration(car_model, configuration) == configuration


def test_complete_prefer_select(car_model):
    configuration = complete_configuration(car_model, [], policy="prefer-select")
    assert configuration.deselected == ["Automatic"]


def test_complete_random(car_model):
    engine = DPLLEngine(car_model)
    configurations = [complete_configuration(car_model, [6], "random", seed=seed, engine=engine) for seed in range(10)]
    assert all(6 in c.literals for c in configurations)
    assert all(car_model.is_satisfied_by(c.literals) for c in configurations)
    assert len({c.literals for c in configurations}) > 1
    assert complete_configuration(car_model, [6], "random", seed=3) == configurations[3]
    # phases are restored after a random completion
    assert complete_configuration(car_model, [], engine=engine).selected == ["Car", "Carbody", "Gearbox", "Automatic"]


def test_complete_unsatisfiable(car_model):
    with pytest.raises(UnsatisfiableConfigurationError, match="Manual, Automatic"):
        complete_configuration(car_model, [4, 5])


def test_complete_unknown_policy(car_model):
    with pytest.raises(ValueError, match="Unknown completion policy"):
        complete_configuration(car_model, [], policy="prefer-nothing")


def test_enumerate_car(car_tree, car_model):
    configurations = enumerate_all_configurations(car_model, cap=10**5)
    assert len(configurations) == 34
    assert len({c.literals for c in configurations}) == 34
    assert configurations[0] == complete_configuration(car_model, [])

    expected = {frozenset(s) for s in truth_table_configurations(car_tree)}
    assert {frozenset(c.selected) for c in configurations} == expected


def test_enumerate_cap(car_model):
    with pytest.raises(CapExceededError, match="more than 33"):
        enumerate_all_configurations(car_model, cap=33)
    assert len(enumerate_all_configurations(car_model, cap=34)) == 34
    with pytest.raises(ValueError, match="must be positive"):
        enumerate_all_configurations(car_model, cap=0)


def test_enumerate_small_models():
    void = FeatureModel(features=("X",), clauses=((1,), (-1,)))
    assert enumerate_all_configurations(void, cap=10) == []
    optional = FeatureModel(features=("R", "C"), clauses=((1,), (-2, 1)))
    assert [c.sorted_literals() for c in enumerate_all_configurations(optional, cap=10)] == [[1, -2], [1, 2]]


@pytest.mark.parametrize("seed", range(5))
def test_satisfiable_iff_some_extension(seed):
    model = compile_to_cnf(generate_feature_tree(10, seed=seed, nb_constraints=3))
    configurations = enumerate_all_configurations(model, cap=10**4)
    for first in range(1, 11):
        for second in range(first + 1, 11):
            for assumptions in ([first, second], [first, -second], [-first, -second]):
                expected = any(set(assumptions) <= c.literals for c in configurations)
                assert is_satisfiable(model, assumptions) == expected
