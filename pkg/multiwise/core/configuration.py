from __future__ import annotations

__all__ = ["Selection", "PartialConfiguration", "Configuration"]

import dataclasses
import enum
from typing import TYPE_CHECKING, Iterable, Mapping

from typing_extensions import Self

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel


class Selection(enum.Enum):
    SELECTED = "selected"
    DESELECTED = "deselected"
    UNDECIDED = "undecided"


@dataclasses.dataclass(frozen=True)
class PartialConfiguration:
    """Three-valued assignment of the features of a model.

    The assignment is stored as the set of decided feature literals: `v` for a
    selected feature, `-v` for a deselected one, features absent from the set
    are undecided. Two configurations are equal when they decide the same
    literals.

    Parameters
    ----------
    model : FeatureModel
        Model the configuration belongs to
    literals : frozenset of int
        Decided feature literals
    """

    model: FeatureModel = dataclasses.field(compare=False, repr=False)
    literals: frozenset[int] = frozenset()

    def __post_init__(self):
        literals = frozenset(self.literals)
        object.__setattr__(self, "literals", literals)
        for lit in literals:
            if not self.model.is_feature_literal(lit):
                msg = f"Literal {lit} does not reference a feature of the model"
                raise ValueError(msg)
            if -lit in literals:
                msg = f"Feature '{self.model.name_of(lit)}' is both selected and deselected"
                raise ValueError(msg)

    @classmethod
    def from_names(
        cls,
        model: FeatureModel,
        selected: Iterable[str] = (),
        deselected: Iterable[str] = (),
    ) -> Self:
        literals = {model.literal(name) for name in selected}
        literals.update(-model.literal(name) for name in deselected)
        return cls(model, frozenset(literals))

    @classmethod
    def from_mapping(cls, model: FeatureModel, assignment: Mapping[str, Selection]) -> Self:
        selected = [name for name, value in assignment.items() if value is Selection.SELECTED]
        deselected = [name for name, value in assignment.items() if value is Selection.DESELECTED]
        return cls.from_names(model, selected, deselected)

    def __getitem__(self, name: str) -> Selection:
        var = self.model.literal(name)
        if var in self.literals:
            return Selection.SELECTED
        if -var in self.literals:
            return Selection.DESELECTED
        return Selection.UNDECIDED

    def __len__(self) -> int:
        return len(self.literals)

    @property
    def selected(self) -> list[str]:
        return [self.model.name_of(lit) for lit in sorted(self.literals) if lit > 0]

    @property
    def deselected(self) -> list[str]:
        return [self.model.name_of(-lit) for lit in sorted(self.literals, key=abs) if lit < 0]

    @property
    def undecided(self) -> list[str]:
        decided = {abs(lit) for lit in self.literals}
        return [name for i, name in enumerate(self.model.features, start=1) if i not in decided]

    @property
    def is_complete(self) -> bool:
        return len(self.literals) == self.model.nb_features

    def sorted_literals(self) -> list[int]:
        """Decided literals by ascending variable index."""
        return sorted(self.literals, key=abs)

    def to_mapping(self) -> dict[str, Selection]:
        return {name: self[name] for name in self.model.features}

    def extend(self, literals: Iterable[int]) -> PartialConfiguration:
        """Return a new partial configuration with additional decisions."""
        return PartialConfiguration(self.model, self.literals.union(literals))


@dataclasses.dataclass(frozen=True)
class Configuration(PartialConfiguration):
    """Partial configuration deciding every feature.

    Validity with respect to the model clauses is guaranteed by the producers
    of configurations (completion, sample file reader), not re-checked here.
    """

    def __post_init__(self):
        super().__post_init__()
        if not self.is_complete:
            msg = (
                f"A configuration must decide all {self.model.nb_features} features,"
                f" got {len(self.literals)} decisions"
            )
            raise ValueError(msg)
