"""Enumeration of valid t-wise interactions."""

from __future__ import annotations

__all__ = ["enumerate_valid_interactions"]

import logging
from itertools import combinations, product
from typing import TYPE_CHECKING, Sequence

import numpy as np

from multiwise.interactions.index import CoverageIndex
from multiwise.interactions.tuples import InteractionTuple, TupleSet
from multiwise.sat.analysis import core_dead_features
from multiwise.sat.engine import create_engine

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel
    from multiwise.sat.engine import SatEngine

logger = logging.getLogger(__name__)


def enumerate_valid_interactions(
    model: FeatureModel,
    scope: Sequence[str],
    t: int,
    engine: SatEngine | None = None,
    use_prefilter: bool = True,
    shuffle_seed: int | None = None,
    core_dead: tuple[Sequence[str], Sequence[str]] | None = None,
) -> TupleSet:
    """Enumerate the t-wise interactions over `scope` that some valid configuration contains.

    Candidates are produced in lexicographic order: feature subsets by
    ascending variables, then signs with selection before deselection. A
    candidate is valid when it is satisfiable as a set of assumptions. Every
    solution found is kept, and candidates already contained in one of them
    are accepted without a solver call.

    Parameters
    ----------
    model : FeatureModel
        The model
    scope : sequence of str
        Features the tuples range over
    t : int
        Interaction strength, 0 yields no tuple
    engine : SatEngine, optional
        Engine loaded with `model`, a new DPLL engine by default
    use_prefilter : bool, default=True
        Reject literals contradicting core or dead features without a solver
        call. Does not change the result.
    shuffle_seed : int, optional
        When given, the tuples are returned in a seeded random order
    core_dead : tuple of (sequence of str, sequence of str), optional
        Precomputed core and dead features used by the prefilter

    Returns
    -------
    TupleSet
        The valid tuples

    Raises
    ------
    UnknownFeatureError
        If `scope` contains an unknown feature
    """
    if t < 0:
        msg = f"Interaction strength must be non-negative, got {t}"
        raise ValueError(msg)
    variables = model.variables_of(scope)
    scope_names = tuple(model.name_of(v) for v in variables)
    if t == 0:
        return TupleSet(0, scope_names)
    if t > len(variables):
        log = logger.debug if not variables else logger.warning
        log("Cannot build %d-wise interactions over %d features, no tuple generated", t, len(variables))
        return TupleSet(t, scope_names)

    if engine is None:
        engine = create_engine(model)

    signs = {v: (v, -v) for v in variables}
    if use_prefilter:
        if core_dead is None:
            core_dead = core_dead_features(model, engine)
        core, dead = core_dead
        for var in model.variables_of(core):
            if var in signs:
                signs[var] = (var,)
        for var in model.variables_of(dead):
            if var in signs:
                signs[var] = (-var,)

    calls_before = engine.nb_calls
    solutions = CoverageIndex()
    tuples = []
    for subset in combinations(variables, t):
        for literals in product(*(signs[v] for v in subset)):
            if not solutions.covers(literals):
                if not engine.solve(literals):
                    continue
                solutions.add(engine.get_model()[: model.nb_features])
            tuples.append(InteractionTuple(literals))

    logger.debug(
        "%d valid %d-wise tuples over %d features (%d solver calls)",
        len(tuples),
        t,
        len(variables),
        engine.nb_calls - calls_before,
    )
    if shuffle_seed is not None:
        rng = np.random.default_rng(shuffle_seed)
        tuples = [tuples[i] for i in rng.permutation(len(tuples))]
    return TupleSet(t, scope_names, tuple(tuples))
