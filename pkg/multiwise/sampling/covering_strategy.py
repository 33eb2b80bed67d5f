"""Greedy covering of the t-wise interactions of one feature group."""

from __future__ import annotations

__all__ = ["CoveringStrategy", "covering_strategy"]

import logging
import time
from typing import TYPE_CHECKING, Sequence

from multiwise.core.configuration import Configuration, PartialConfiguration
from multiwise.core.operation import Operation
from multiwise.core.seeding import derive_seed
from multiwise.core.utils import iter_bits
from multiwise.interactions.enumeration import enumerate_valid_interactions
from multiwise.interactions.index import CoverageIndex
from multiwise.sampling.options import SamplingOptions
from multiwise.sampling.sample import GroupStats, Sample
from multiwise.sat.analysis import complete_configuration, core_dead_features
from multiwise.sat.engine import create_engine

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel
    from multiwise.sat.engine import SatEngine

logger = logging.getLogger(__name__)


class CoveringStrategy(Operation):
    """Greedy covering of the valid t-wise tuples of a feature set.

    Every tuple not yet covered by the sample is merged into the first
    configuration (in sample order) that can be extended with it while staying
    satisfiable. When no configuration can take it, the tuple starts a new
    partial configuration. Merged and new configurations also receive the
    literals implied by unit propagation. At the end, partial configurations
    are completed unless completion is deferred.

    Parameters
    ----------
    model : FeatureModel
        The model to sample
    options : SamplingOptions, optional
        Sampling options, defaults are used if not provided
    engine : SatEngine, optional
        Engine loaded with `model`, created from `options.engine` by default
    core_dead : tuple of (list of str, list of str), optional
        Precomputed core and dead features of `model`
    uid : str, optional
        Identifier of the operation
    name : str, optional
        Name of the operation
    """

    def __init__(
        self,
        model: FeatureModel,
        options: SamplingOptions | None = None,
        engine: SatEngine | None = None,
        core_dead: tuple[list[str], list[str]] | None = None,
        uid: str | None = None,
        name: str | None = None,
    ):
        if options is None:
            options = SamplingOptions()
        init_args = locals()
        init_args.pop("self")
        init_args.pop("engine")
        init_args.pop("core_dead")
        super().__init__(**init_args)

        self.model = model
        self.options = options
        self.engine = engine if engine is not None else create_engine(model, options.engine)
        self._core_dead = core_dead

    @property
    def core_dead(self) -> tuple[list[str], list[str]]:
        """Core and dead features, computed on first use.

        Raises
        ------
        VoidModelError
            If the model has no valid configuration
        """
        if self._core_dead is None:
            self._core_dead = core_dead_features(self.model, self.engine)
        return self._core_dead

    def run(
        self,
        members: Sequence[str],
        t: int,
        seed_sample: Sample | None = None,
        group_name: str | None = None,
        seed: int | None = None,
    ) -> Sample:
        """Extend `seed_sample` until it covers every valid t-wise tuple of `members`.

        Parameters
        ----------
        members : sequence of str
            Features of the group
        t : int
            Interaction strength
        seed_sample : Sample, optional
            Sample to extend, left untouched (an updated copy is returned)
        group_name : str, optional
            Name recorded in the statistics
        seed : int, optional
            Seed of tuple shuffling and random completion, derived from the
            options seed if not provided

        Returns
        -------
        Sample
            The extended sample
        """
        if seed is None:
            seed = derive_seed(self.options.seed, 0)
        if group_name is None:
            group_name = f"t{t}"
        configurations = list(seed_sample) if seed_sample is not None else []
        nb_before = len(configurations)
        start = time.perf_counter()
        calls_before = self.engine.nb_calls

        if t > 0:
            core_dead = self.core_dead
            tuple_set = enumerate_valid_interactions(
                self.model,
                members,
                t,
                engine=self.engine,
                use_prefilter=self.options.use_prefilter,
                shuffle_seed=seed if self.options.shuffle_tuples else None,
                core_dead=core_dead if self.options.use_prefilter else None,
            )
            nb_tuples = len(tuple_set)
            self._cover(configurations, tuple_set)
        else:
            nb_tuples = 0

        if not self.options.defer_completion:
            configurations = self._complete(configurations, seed)

        sample = Sample(self.model, configurations, description=self.description)
        if seed_sample is not None:
            sample.stats.groups.extend(seed_sample.stats.groups)
            sample.stats.completion_duration_s = seed_sample.stats.completion_duration_s
        stats = GroupStats(
            name=group_name,
            t=t,
            nb_tuples=nb_tuples,
            nb_configurations_before=nb_before,
            nb_configurations_after=len(sample),
            nb_solver_calls=self.engine.nb_calls - calls_before,
            duration_s=time.perf_counter() - start,
        )
        sample.stats.groups.append(stats)
        logger.debug(
            "Group '%s' (t=%d): %d tuples, %d -> %d configurations",
            group_name,
            t,
            nb_tuples,
            nb_before,
            len(sample),
        )
        return sample

    def complete(self, sample: Sample, seed: int | None = None) -> Sample:
        """Complete every partial configuration of `sample`, dropping duplicates."""
        if seed is None:
            seed = derive_seed(self.options.seed, "completion")
        start = time.perf_counter()
        configurations = self._complete(list(sample), seed)
        completed = Sample(self.model, configurations, stats=sample.stats, description=sample.description)
        completed.stats.completion_duration_s += time.perf_counter() - start
        return completed

    def _cover(self, configurations: list[PartialConfiguration], tuple_set):
        index = CoverageIndex(c.literals for c in configurations)
        for interaction in tuple_set:
            literals = interaction.literals
            if index.covers(literals):
                continue
            candidates = index.all_mask & ~index.conflicting(literals)
            for position in iter_bits(candidates):
                extended = self.engine.propagate(sorted(configurations[position].literals.union(literals), key=abs))
                if extended is None or not self.engine.solve(extended):
                    continue
                configurations[position] = PartialConfiguration(self.model, frozenset(extended))
                index.update(position, extended)
                break
            else:
                # valid tuples always propagate without conflict
                closure = self.engine.propagate(literals)
                configurations.append(PartialConfiguration(self.model, frozenset(closure)))
                index.add(closure)

    def _complete(self, configurations: list[PartialConfiguration], seed: int) -> list[PartialConfiguration]:
        completed = []
        for position, configuration in enumerate(configurations):
            if not isinstance(configuration, Configuration):
                configuration = complete_configuration(
                    self.model,
                    configuration,
                    policy=self.options.completion_policy,
                    seed=derive_seed(seed, position),
                    engine=self.engine,
                )
            completed.append(configuration)
        return completed


def covering_strategy(
    model: FeatureModel,
    members: Sequence[str],
    t: int,
    seed_sample: Sample | None = None,
    options: SamplingOptions | None = None,
) -> Sample:
    """Functional shortcut for `CoveringStrategy(model, options).run(members, t, seed_sample)`."""
    return CoveringStrategy(model, options).run(members, t, seed_sample)
