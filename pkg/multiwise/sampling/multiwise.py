"""Multi-group sampling driver."""

from __future__ import annotations

__all__ = ["MultiWiseSampler", "multiwise_sample"]

import logging
import time
from typing import TYPE_CHECKING

from multiwise.core.operation import Operation
from multiwise.core.seeding import derive_seed
from multiwise.sampling.covering_strategy import CoveringStrategy
from multiwise.sampling.options import SamplingOptions
from multiwise.sampling.sample import Sample
from multiwise.sat.analysis import core_dead_features
from multiwise.sat.engine import create_engine

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel
    from multiwise.sampling.group_spec import FeatureGroup, GroupSpec

logger = logging.getLogger(__name__)


class MultiWiseSampler(Operation):
    """Sample a model so that every feature group is covered at its own strength.

    Groups are processed one after the other, each one extending the sample
    built for the previous groups with the greedy covering strategy. Earlier
    coverage is never lost since configurations are only extended or
    appended.

    Parameters
    ----------
    model : FeatureModel
        The model to sample
    options : SamplingOptions, optional
        Sampling options, defaults are used if not provided
    uid : str, optional
        Identifier of the operation
    name : str, optional
        Name of the operation
    """

    def __init__(
        self,
        model: FeatureModel,
        options: SamplingOptions | None = None,
        uid: str | None = None,
        name: str | None = None,
    ):
        if options is None:
            options = SamplingOptions()
        init_args = locals()
        init_args.pop("self")
        super().__init__(**init_args)

        self.model = model
        self.options = options

    def run(self, spec: GroupSpec) -> Sample:
        """Compute a sample covering every group of `spec`.

        Parameters
        ----------
        spec : GroupSpec
            The feature groups and the strength of the default group

        Returns
        -------
        Sample
            A sample of complete valid configurations

        Raises
        ------
        UnknownFeatureError
            If a group references a feature missing from the model
        VoidModelError
            If the model has no valid configuration
        """
        groups = spec.resolve(self.model, self.options.max_t)
        engine = create_engine(self.model, self.options.engine)
        core_dead = core_dead_features(self.model, engine)
        strategy = CoveringStrategy(self.model, self.options, engine=engine, core_dead=core_dead)

        sample = Sample(self.model, description=self.description)
        for index in self._processing_order(groups):
            group = groups[index]
            sample = strategy.run(
                group.members,
                group.t,
                sample,
                group_name=group.name,
                seed=derive_seed(self.options.seed, index),
            )
            stats = sample.stats.groups[-1]
            logger.info(
                "Covered group '%s' (t=%d, %d features, %d tuples): %d new configurations in %.3fs",
                group.name,
                group.t,
                len(group.members),
                stats.nb_tuples,
                stats.nb_configurations_after - stats.nb_configurations_before,
                stats.duration_s,
            )

        if self.options.defer_completion:
            start = time.perf_counter()
            size_before = len(sample)
            sample = strategy.complete(sample, seed=derive_seed(self.options.seed, "completion"))
            logger.info(
                "Completed %d partial configurations into %d in %.3fs",
                size_before,
                len(sample),
                time.perf_counter() - start,
            )
        sample.description = self.description
        return sample

    def _processing_order(self, groups: list[FeatureGroup]) -> list[int]:
        indices = list(range(len(groups)))
        if self.options.order == "ascending-t":
            indices.sort(key=lambda i: groups[i].t)
        elif self.options.order == "descending-t":
            indices.sort(key=lambda i: -groups[i].t)
        return indices


def multiwise_sample(model: FeatureModel, spec: GroupSpec, options: SamplingOptions | None = None) -> Sample:
    """Functional shortcut for `MultiWiseSampler(model, options).run(spec)`."""
    return MultiWiseSampler(model, options).run(spec)
