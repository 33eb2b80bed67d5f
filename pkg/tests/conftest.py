import pytest

from multiwise.tools import CAR_GROUP_SPEC, load_car_feature_tree, load_car_model


@pytest.fixture(scope="session")
def car_tree():
    return load_car_feature_tree()


@pytest.fixture(scope="session")
def car_model():
    return load_car_model()


@pytest.fixture(scope="session")
def car_spec():
    return CAR_GROUP_SPEC
