__all__ = [
    "CAR_GROUP_SPEC",
    "CAR_MODEL_FILE",
    "load_car_feature_tree",
    "load_car_model",
    "DEFAULT_GROUP_MIX",
    "generate_feature_model",
    "generate_feature_tree",
]

from multiwise.tools.car import CAR_GROUP_SPEC, CAR_MODEL_FILE, load_car_feature_tree, load_car_model
from multiwise.tools.synthetic import DEFAULT_GROUP_MIX, generate_feature_model, generate_feature_tree
