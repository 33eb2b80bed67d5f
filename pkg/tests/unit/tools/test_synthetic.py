import pytest

from multiwise.core import GroupKind
from multiwise.sat import is_satisfiable
from multiwise.tools import generate_feature_model, generate_feature_tree
from tests._oracle import count_structural_clauses


@pytest.mark.parametrize("nb_features", [1, 2, 10, 60])
def test_number_of_features(nb_features):
    tree = generate_feature_tree(nb_features, seed=1)
    assert tree.features == [f"F{i}" for i in range(nb_features)]


def test_seeded():
    assert generate_feature_tree(40, seed=3) == generate_feature_tree(40, seed=3)
    assert generate_feature_tree(40, seed=3) != generate_feature_tree(40, seed=4)


@pytest.mark.parametrize("seed", range(10))
def test_models_are_not_void(seed):
    model = generate_feature_model(30, seed=seed, nb_constraints=15)
    assert model.name == f"synthetic_30_{seed}"
    assert is_satisfiable(model)


def test_constraints():
    tree = generate_feature_tree(50, seed=0, nb_constraints=20)
    assert 0 < len(tree.constraints) <= 20
    default = generate_feature_tree(50, seed=0)
    assert default.constraints == generate_feature_tree(50, seed=0, nb_constraints=5).constraints
    model = generate_feature_model(50, seed=0, nb_constraints=0)
    assert len(model.clauses) == count_structural_clauses(generate_feature_tree(50, seed=0, nb_constraints=0))


def test_group_mix():
    tree = generate_feature_tree(40, seed=2, group_mix={"alternative": 1.0})
    kinds = {node.kind for node in tree.iter_nodes() if node.children}
    assert kinds == {GroupKind.ALT}

    tree = generate_feature_tree(40, seed=2, group_mix={"mandatory": 1.0})
    assert all(child.mandatory for node in tree.iter_nodes() for child in node.children)


TEST_INVALID_ARGUMENTS = [
    ({"nb_features": 0}, "at least one feature"),
    ({"nb_features": 5, "max_children": 0}, "max_children"),
    ({"nb_features": 5, "group_mix": {"xor": 1.0}}, "Unknown group kinds"),
    ({"nb_features": 5, "group_mix": {"or": 0.0}}, "positive sum"),
]


@pytest.mark.parametrize(("kwargs", "message"), TEST_INVALID_ARGUMENTS)
def test_invalid_arguments(kwargs, message):
    with pytest.raises(ValueError, match=message):
        generate_feature_tree(**kwargs)
