from __future__ import annotations

__all__ = ["Sample", "SampleStats", "GroupStats"]

import dataclasses
from typing import TYPE_CHECKING, Any, Iterable, Iterator

from multiwise.core.configuration import Configuration

if TYPE_CHECKING:
    from multiwise.core.configuration import PartialConfiguration
    from multiwise.core.feature_model import FeatureModel
    from multiwise.core.operation import OperationDescription


@dataclasses.dataclass
class GroupStats:
    """Statistics of the covering of one group.

    Attributes
    ----------
    name : str
        Group name
    t : int
        Interaction strength of the group
    nb_tuples : int
        Number of valid tuples of the group
    nb_configurations_before : int
        Sample size before covering the group
    nb_configurations_after : int
        Sample size after covering the group
    nb_solver_calls : int
        Solver calls spent on the group
    duration_s : float
        Wall-clock duration of the group, in seconds
    """

    name: str
    t: int
    nb_tuples: int
    nb_configurations_before: int
    nb_configurations_after: int
    nb_solver_calls: int
    duration_s: float

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


@dataclasses.dataclass
class SampleStats:
    groups: list[GroupStats] = dataclasses.field(default_factory=list)
    completion_duration_s: float = 0.0

    @property
    def total_duration_s(self) -> float:
        return sum(group.duration_s for group in self.groups) + self.completion_duration_s

    @property
    def nb_tuples(self) -> int:
        return sum(group.nb_tuples for group in self.groups)

    def to_dict(self) -> dict[str, Any]:
        return {
            "groups": [group.to_dict() for group in self.groups],
            "nb_tuples": self.nb_tuples,
            "completion_duration_s": self.completion_duration_s,
            "total_duration_s": self.total_duration_s,
        }


class Sample:
    """Ordered, duplicate-free list of configurations of a model.

    While a sample is being built its configurations may be partial. Adding a
    configuration equal to one already in the sample is a no-op.

    Parameters
    ----------
    model : FeatureModel
        Model of the configurations
    configurations : iterable of PartialConfiguration, optional
        Initial configurations, duplicates are dropped
    stats : SampleStats, optional
        Statistics of the sampling run that produced the sample
    description : OperationDescription, optional
        Description of the operation that produced the sample
    """

    def __init__(
        self,
        model: FeatureModel,
        configurations: Iterable[PartialConfiguration] = (),
        stats: SampleStats | None = None,
        description: OperationDescription | None = None,
    ):
        self.model = model
        self.stats = stats if stats is not None else SampleStats()
        self.description = description
        self._configurations: list[PartialConfiguration] = []
        self._seen: set[frozenset[int]] = set()
        for configuration in configurations:
            self.add(configuration)

    def add(self, configuration: PartialConfiguration) -> bool:
        """Append a configuration, returns False if it was already in the sample."""
        if configuration.literals in self._seen:
            return False
        self._seen.add(configuration.literals)
        self._configurations.append(configuration)
        return True

    @property
    def configurations(self) -> list[PartialConfiguration]:
        return list(self._configurations)

    @property
    def is_complete(self) -> bool:
        return all(isinstance(c, Configuration) for c in self._configurations)

    def __len__(self) -> int:
        return len(self._configurations)

    def __iter__(self) -> Iterator[PartialConfiguration]:
        return iter(self._configurations)

    def __getitem__(self, index: int) -> PartialConfiguration:
        return self._configurations[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sample):
            return NotImplemented
        return [c.literals for c in self] == [c.literals for c in other]

    def __repr__(self) -> str:
        return f"Sample(model={self.model.name!r}, size={len(self)})"
