"""Experiment setups: baselines and random splits between a pair-wise and a three-wise group."""

from __future__ import annotations

__all__ = ["SetupKind", "ExperimentSetup", "EXPERIMENT_SETUPS", "get_setup", "setup_index", "build_setup"]

import dataclasses
import enum
from typing import TYPE_CHECKING, Any

import numpy as np

from multiwise.sampling.group_spec import FeatureGroup, GroupSpec

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel


class SetupKind(enum.Enum):
    BASELINE = "baseline"
    SPLIT = "split"


@dataclasses.dataclass(frozen=True)
class ExperimentSetup:
    """How features are assigned to interaction groups in an experiment.

    A baseline setup puts every feature in a single group of strength
    `baseline_t`. A split setup randomly assigns `pct_t2` percent of the
    features to a pair-wise group and the others to a three-wise group.

    Attributes
    ----------
    id : str
        Identifier of the setup ("Exp1".."Exp7")
    kind : SetupKind
        Baseline or split
    baseline_t : int, optional
        Strength of the single group of a baseline setup
    pct_t2 : int
        Percentage of features in the pair-wise group of a split setup
    pct_t3 : int
        Percentage of features in the three-wise group of a split setup
    """

    id: str
    kind: SetupKind
    baseline_t: int | None = None
    pct_t2: int = 0
    pct_t3: int = 0

    def __post_init__(self):
        if self.kind is SetupKind.BASELINE:
            if self.baseline_t is None or self.baseline_t < 0:
                msg = f"Baseline setup '{self.id}' needs a non-negative strength"
                raise ValueError(msg)
        else:
            if self.pct_t2 + self.pct_t3 != 100 or not 0 <= self.pct_t2 <= 100:
                msg = f"Percentages of setup '{self.id}' must be within [0, 100] and sum to 100"
                raise ValueError(msg)

    def to_dict(self) -> dict[str, Any]:
        if self.kind is SetupKind.BASELINE:
            return {"id": self.id, "kind": self.kind.value, "t": self.baseline_t}
        return {"id": self.id, "kind": self.kind.value, "pct_t2": self.pct_t2, "pct_t3": self.pct_t3}


EXPERIMENT_SETUPS: dict[str, ExperimentSetup] = {
    "Exp1": ExperimentSetup("Exp1", SetupKind.BASELINE, baseline_t=2),
    "Exp2": ExperimentSetup("Exp2", SetupKind.SPLIT, pct_t2=100, pct_t3=0),
    "Exp3": ExperimentSetup("Exp3", SetupKind.SPLIT, pct_t2=75, pct_t3=25),
    "Exp4": ExperimentSetup("Exp4", SetupKind.SPLIT, pct_t2=50, pct_t3=50),
    "Exp5": ExperimentSetup("Exp5", SetupKind.SPLIT, pct_t2=25, pct_t3=75),
    "Exp6": ExperimentSetup("Exp6", SetupKind.SPLIT, pct_t2=0, pct_t3=100),
    "Exp7": ExperimentSetup("Exp7", SetupKind.BASELINE, baseline_t=3),
}


def get_setup(setup_id: str) -> ExperimentSetup:
    try:
        return EXPERIMENT_SETUPS[setup_id]
    except KeyError:
        msg = f"Unknown experiment setup '{setup_id}', expected one of {list(EXPERIMENT_SETUPS)}"
        raise ValueError(msg) from None


def setup_index(setup: ExperimentSetup) -> int:
    """Position of a setup among the predefined ones, used to derive run seeds."""
    ids = list(EXPERIMENT_SETUPS)
    return ids.index(setup.id) if setup.id in ids else len(ids)


def build_setup(setup: ExperimentSetup, model: FeatureModel, seed: int) -> GroupSpec:
    """Build the group specification of a setup for a model.

    For split setups, a seeded uniform permutation of the features is cut
    after `round(pct_t2 / 100 * n)` features (halves rounded up): the first
    part forms group `TG_t2` (t=2), the rest group `TG_t3` (t=3). Empty groups
    are left out. Members are listed in variable order and the default group
    strength is 0.
    """
    features = model.features
    if setup.kind is SetupKind.BASELINE:
        group = FeatureGroup(f"TG_t{setup.baseline_t}", setup.baseline_t, features)
        return GroupSpec((group,), default_t=0)

    nb_features = len(features)
    nb_t2 = (2 * nb_features * setup.pct_t2 + 100) // 200
    permutation = np.random.default_rng(seed).permutation(nb_features)
    t2_indices = sorted(int(i) for i in permutation[:nb_t2])
    t3_indices = sorted(int(i) for i in permutation[nb_t2:])

    groups = []
    if t2_indices:
        groups.append(FeatureGroup("TG_t2", 2, tuple(features[i] for i in t2_indices)))
    if t3_indices:
        groups.append(FeatureGroup("TG_t3", 3, tuple(features[i] for i in t3_indices)))
    return GroupSpec(tuple(groups), default_t=0)
