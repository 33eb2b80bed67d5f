from __future__ import annotations

__all__ = ["CAR_MODEL_FILE", "CAR_GROUP_SPEC", "load_car_feature_tree", "load_car_model"]

from pathlib import Path
from typing import TYPE_CHECKING

from multiwise.core.cnf import compile_to_cnf
from multiwise.io.uvl import load_feature_tree
from multiwise.sampling.group_spec import FeatureGroup, GroupSpec

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel
    from multiwise.core.feature_tree import FeatureTree

CAR_MODEL_FILE = Path(__file__).parent / "car.uvl"

CAR_GROUP_SPEC = GroupSpec(
    groups=(
        FeatureGroup("TG_1", 1, ("Car", "Radio", "Gearbox")),
        FeatureGroup("TG_2", 2, ("Carbody", "Manual", "Automatic")),
    ),
    default_t=0,
)


def load_car_feature_tree() -> FeatureTree:
    """Feature tree of the simplified car product line (11 features)."""
    return load_feature_tree(CAR_MODEL_FILE)


def load_car_model() -> FeatureModel:
    """CNF model of the simplified car product line."""
    return compile_to_cnf(load_car_feature_tree())
