"""Satisfiability-based analyses of feature models."""

from __future__ import annotations

__all__ = [
    "CompletionPolicy",
    "is_satisfiable",
    "core_dead_features",
    "complete_configuration",
    "enumerate_all_configurations",
]

import logging
from typing import TYPE_CHECKING, Iterable, Union

import numpy as np
from typing_extensions import Literal

from multiwise.core.configuration import Configuration, PartialConfiguration
from multiwise.core.errors import CapExceededError, UnsatisfiableConfigurationError, VoidModelError
from multiwise.sat.engine import create_engine

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel
    from multiwise.sat.engine import SatEngine

logger = logging.getLogger(__name__)

CompletionPolicy = Literal["prefer-deselect", "prefer-select", "random"]
Assumptions = Union[PartialConfiguration, Iterable[int]]


def _literals_of(assumptions: Assumptions) -> list[int]:
    if isinstance(assumptions, PartialConfiguration):
        return assumptions.sorted_literals()
    return list(assumptions)


def is_satisfiable(
    model: FeatureModel,
    assumptions: Assumptions = (),
    engine: SatEngine | None = None,
) -> bool:
    """Check whether some valid configuration extends `assumptions`.

    Auxiliary variables are existentially quantified.
    """
    if engine is None:
        engine = create_engine(model)
    return engine.solve(_literals_of(assumptions))


def core_dead_features(model: FeatureModel, engine: SatEngine | None = None) -> tuple[list[str], list[str]]:
    """Compute the core and dead features of a model.

    A feature is core when it is selected in every valid configuration and
    dead when it is selected in none. Root-level propagation and the
    solutions found along the way settle most features, the others take
    one assumption query per polarity.

    Parameters
    ----------
    model : FeatureModel
        The model to analyse
    engine : SatEngine, optional
        Engine loaded with `model`, a new DPLL engine by default

    Returns
    -------
    core : list of str
        Core features, in variable order
    dead : list of str
        Dead features, in variable order

    Raises
    ------
    VoidModelError
        If the model has no valid configuration
    """
    if engine is None:
        engine = create_engine(model)
    if not engine.solve():
        msg = f"Feature model '{model.name}' has no valid configuration"
        raise VoidModelError(msg)

    seen: set[int] = set()

    def record(solution: list[int]):
        seen.update(lit for lit in solution[: model.nb_features])

    record(engine.get_model())
    forced = set(engine.propagate() or ())

    core, dead = [], []
    for var in range(1, model.nb_features + 1):
        for lit, bucket in ((var, dead), (-var, core)):
            if lit in seen:
                continue
            if -lit in forced or not engine.solve([lit]):
                bucket.append(model.name_of(var))
                break
            record(engine.get_model())
    logger.debug("Model '%s': %d core and %d dead features", model.name, len(core), len(dead))
    return core, dead


def complete_configuration(
    model: FeatureModel,
    partial: Assumptions,
    policy: CompletionPolicy = "prefer-deselect",
    seed: int | None = None,
    engine: SatEngine | None = None,
) -> Configuration:
    """Extend a partial configuration into a valid complete configuration.

    Undecided features are decided by ascending variable, each decision
    followed by unit propagation, using the value preferred by `policy`.

    Parameters
    ----------
    model : FeatureModel
        The model of the configuration
    partial : PartialConfiguration or iterable of int
        The decisions to keep
    policy : {"prefer-deselect", "prefer-select", "random"}, default="prefer-deselect"
        Preferred value of undecided features. "random" draws one phase per
        variable from `seed`.
    seed : int, optional
        Seed of the "random" policy
    engine : SatEngine, optional
        Engine loaded with `model`, a new DPLL engine by default

    Returns
    -------
    Configuration
        A valid configuration keeping every decision of `partial`

    Raises
    ------
    UnsatisfiableConfigurationError
        If no valid configuration extends `partial`
    """
    if engine is None:
        engine = create_engine(model)
    literals = _literals_of(partial)

    if policy == "prefer-deselect":
        pass
    elif policy == "prefer-select":
        engine.reset_phases(selected=True)
    elif policy == "random":
        rng = np.random.default_rng(seed)
        draws = rng.random(model.nb_vars) < 0.5
        engine.set_phases(v if draws[v - 1] else -v for v in range(1, model.nb_vars + 1))
    else:
        msg = f"Unknown completion policy '{policy}'"
        raise ValueError(msg)

    try:
        satisfiable = engine.solve(literals)
    finally:
        if policy != "prefer-deselect":
            engine.reset_phases()

    if not satisfiable:
        names = ", ".join(model.literal_name(lit) for lit in sorted(literals, key=abs))
        msg = f"No valid configuration extends the partial configuration {{{names}}}"
        raise UnsatisfiableConfigurationError(msg)
    solution = engine.get_model()
    return Configuration(model, frozenset(solution[: model.nb_features]))


def enumerate_all_configurations(
    model: FeatureModel,
    cap: int,
    engine: SatEngine | None = None,
) -> list[Configuration]:
    """Enumerate every valid configuration of a small model.

    Configurations are projected on feature variables and listed in
    lexicographic order of their assignments, deselection before selection,
    variable 1 first.

    Parameters
    ----------
    model : FeatureModel
        The model to enumerate
    cap : int
        Maximum number of configurations accepted
    engine : SatEngine, optional
        Engine loaded with `model`, a new DPLL engine by default

    Raises
    ------
    CapExceededError
        If the model has more than `cap` valid configurations
    """
    if cap < 1:
        msg = f"Enumeration cap must be positive, got {cap}"
        raise ValueError(msg)
    if engine is None:
        engine = create_engine(model)

    configurations: list[Configuration] = []
    stack: list[list[int]] = [[]]
    while stack:
        prefix = stack.pop()
        if not engine.solve(prefix):
            continue
        if len(prefix) == model.nb_features:
            configurations.append(Configuration(model, frozenset(prefix)))
            if len(configurations) > cap:
                msg = f"Model '{model.name}' has more than {cap} valid configurations"
                raise CapExceededError(msg)
            continue
        var = len(prefix) + 1
        # pushed in reverse so that deselection is explored first
        stack.append([*prefix, var])
        stack.append([*prefix, -var])
    return configurations
