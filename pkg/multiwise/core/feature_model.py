from __future__ import annotations

__all__ = ["FeatureModel"]

import dataclasses
from functools import cached_property
from typing import Iterable, Sequence

from multiwise.core.errors import UnknownFeatureError


@dataclasses.dataclass(frozen=True)
class FeatureModel:
    """Feature model in conjunctive normal form.

    Feature variables are numbered from 1 in parse order, auxiliary variables
    (introduced by a Tseitin conversion or unnamed in a DIMACS file) come after
    all feature variables and never appear in configurations or tuples.

    Parameters
    ----------
    features : sequence of str
        Unique feature names, the i-th name is variable i + 1
    clauses : sequence of sequence of int
        Non-empty clauses of signed variable indices
    aux_var_count : int, default=0
        Number of auxiliary variables
    name : str, optional
        Name of the model (used in sample headers and experiment records)
    """

    features: tuple[str, ...]
    clauses: tuple[tuple[int, ...], ...]
    aux_var_count: int = 0
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "features", tuple(self.features))
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))

        if len(set(self.features)) != len(self.features):
            msg = "Feature names must be unique"
            raise ValueError(msg)
        if any(not f for f in self.features):
            msg = "Feature names must be non-empty strings"
            raise ValueError(msg)
        if self.aux_var_count < 0:
            msg = f"Invalid auxiliary variable count {self.aux_var_count}"
            raise ValueError(msg)

        nb_vars = self.nb_vars
        for clause in self.clauses:
            if not clause:
                msg = "Empty clause in feature model"
                raise ValueError(msg)
            for lit in clause:
                if lit == 0 or abs(lit) > nb_vars:
                    msg = f"Literal {lit} out of range [1, {nb_vars}]"
                    raise ValueError(msg)
                if -lit in clause:
                    msg = f"Tautological clause {list(clause)}"
                    raise ValueError(msg)

    @property
    def nb_features(self) -> int:
        return len(self.features)

    @property
    def nb_vars(self) -> int:
        """Number of variables, auxiliary ones included."""
        return len(self.features) + self.aux_var_count

    @cached_property
    def var_of(self) -> dict[str, int]:
        """Mapping from feature name to its 1-based variable index."""
        return {name: i + 1 for i, name in enumerate(self.features)}

    def name_of(self, var: int) -> str:
        var = abs(var)
        if not 1 <= var <= self.nb_features:
            msg = f"Variable {var} is not a feature variable"
            raise UnknownFeatureError(msg)
        return self.features[var - 1]

    def literal(self, name: str, selected: bool = True) -> int:
        """Return the signed literal of a feature.

        Names prefixed with `!` are read as deselections.
        """
        if name.startswith("!"):
            name = name[1:]
            selected = not selected
        var = self.var_of.get(name)
        if var is None:
            msg = f"Unknown feature '{name}'"
            raise UnknownFeatureError(msg)
        return var if selected else -var

    def literal_name(self, lit: int) -> str:
        """Return `name` or `!name` for a signed feature literal."""
        name = self.name_of(lit)
        return name if lit > 0 else "!" + name

    def variables_of(self, names: Iterable[str]) -> list[int]:
        """Return the sorted, de-duplicated variables of a feature set."""
        return sorted({abs(self.literal(name)) for name in names})

    def is_feature_literal(self, lit: int) -> bool:
        return 0 < abs(lit) <= self.nb_features

    def is_satisfied_by(self, literals: Sequence[int] | set[int]) -> bool:
        """Check a full assignment of every variable against all clauses."""
        assigned = set(literals)
        return all(any(lit in assigned for lit in clause) for clause in self.clauses)
