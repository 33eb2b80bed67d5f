from __future__ import annotations

__all__ = ["InteractionTuple", "TupleSet"]

import dataclasses
from typing import TYPE_CHECKING, Iterable, Iterator

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel


@dataclasses.dataclass(frozen=True)
class InteractionTuple:
    """A t-wise feature interaction.

    Literals are signed feature variables kept sorted by variable, so that two
    tuples over the same decisions are equal.

    Parameters
    ----------
    literals : tuple of int
        Signed feature variables, one per distinct feature
    """

    literals: tuple[int, ...]

    def __post_init__(self):
        literals = tuple(sorted(self.literals, key=abs))
        if not literals:
            msg = "An interaction tuple needs at least one literal"
            raise ValueError(msg)
        if len({abs(lit) for lit in literals}) != len(literals) or 0 in literals:
            msg = f"Interaction tuple {list(literals)} must reference distinct features"
            raise ValueError(msg)
        object.__setattr__(self, "literals", literals)

    @classmethod
    def of(cls, *literals: int) -> InteractionTuple:
        return cls(tuple(literals))

    @classmethod
    def from_names(cls, model: FeatureModel, names: Iterable[str]) -> InteractionTuple:
        """Build a tuple from feature names, `!name` meaning deselected."""
        return cls(tuple(model.literal(name) for name in names))

    def to_names(self, model: FeatureModel) -> list[str]:
        return [model.literal_name(lit) for lit in self.literals]

    @property
    def t(self) -> int:
        return len(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self) -> Iterator[int]:
        return iter(self.literals)


@dataclasses.dataclass(frozen=True)
class TupleSet:
    """Valid interaction tuples of strength `t` over a feature scope.

    Attributes
    ----------
    t : int
        Interaction strength
    scope : tuple of str
        Names of the features the tuples range over
    tuples : tuple of InteractionTuple
        The tuples, in enumeration order
    """

    t: int
    scope: tuple[str, ...]
    tuples: tuple[InteractionTuple, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "scope", tuple(self.scope))
        object.__setattr__(self, "tuples", tuple(self.tuples))
        for interaction in self.tuples:
            if interaction.t != self.t:
                msg = f"Tuple {list(interaction.literals)} does not have {self.t} literals"
                raise ValueError(msg)

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self) -> Iterator[InteractionTuple]:
        return iter(self.tuples)

    def __contains__(self, interaction: object) -> bool:
        return interaction in self.as_set()

    def as_set(self) -> frozenset[InteractionTuple]:
        return frozenset(self.tuples)

    def with_tuples(self, tuples: Iterable[InteractionTuple]) -> TupleSet:
        """Return a tuple set with the same strength and scope."""
        return TupleSet(self.t, self.scope, tuple(tuples))
