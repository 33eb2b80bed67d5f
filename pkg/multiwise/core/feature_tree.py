from __future__ import annotations

__all__ = [
    "GroupKind",
    "FeatureNode",
    "FeatureChild",
    "FeatureTree",
    "Expr",
    "Var",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
]

import dataclasses
import enum
from typing import AbstractSet, Iterator

from multiwise.core.errors import ModelParseError


class GroupKind(enum.Enum):
    """Relation between a feature and its children."""

    AND = "and"
    OR = "or"
    ALT = "alternative"


@dataclasses.dataclass(frozen=True)
class FeatureChild:
    """Child slot of a feature node.

    Attributes
    ----------
    node : FeatureNode
        The child feature
    mandatory : bool
        Whether the child must be selected with its parent. Only meaningful
        for children of `AND` nodes, always False for `OR`/`ALT` children.
    """

    node: FeatureNode
    mandatory: bool = False


@dataclasses.dataclass(frozen=True)
class FeatureNode:
    """Node of a feature diagram.

    Attributes
    ----------
    name : str
        Unique name of the feature
    kind : GroupKind
        How children relate to this feature
    children : tuple of FeatureChild
        Children in document order
    """

    name: str
    kind: GroupKind = GroupKind.AND
    children: tuple[FeatureChild, ...] = ()

    def __post_init__(self):
        if not self.name:
            msg = "Feature names must be non-empty strings"
            raise ModelParseError(msg)
        if self.kind is not GroupKind.AND:
            if not self.children:
                msg = f"Empty {self.kind.value} group under feature '{self.name}'"
                raise ModelParseError(msg)
            if any(c.mandatory for c in self.children):
                msg = f"Children of {self.kind.value} group '{self.name}' cannot be mandatory"
                raise ModelParseError(msg)

    def iter_nodes(self) -> Iterator[FeatureNode]:
        """Iterate over this node and its descendants, depth-first pre-order."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(child.node for child in reversed(node.children))


class Expr:
    """Base class of propositional constraint expressions."""

    def evaluate(self, selected: AbstractSet[str]) -> bool:
        raise NotImplementedError

    def features(self) -> list[str]:
        """Return the feature names referenced by the expression, in order of appearance."""
        names: dict[str, None] = {}
        self._collect(names)
        return list(names)

    def _collect(self, names: dict[str, None]):
        raise NotImplementedError


@dataclasses.dataclass(frozen=True)
class Var(Expr):
    name: str

    def evaluate(self, selected: AbstractSet[str]) -> bool:
        return self.name in selected

    def _collect(self, names: dict[str, None]):
        names[self.name] = None


@dataclasses.dataclass(frozen=True)
class Not(Expr):
    operand: Expr

    def evaluate(self, selected: AbstractSet[str]) -> bool:
        return not self.operand.evaluate(selected)

    def _collect(self, names: dict[str, None]):
        self.operand._collect(names)


@dataclasses.dataclass(frozen=True)
class _Binary(Expr):
    left: Expr
    right: Expr

    def _collect(self, names: dict[str, None]):
        self.left._collect(names)
        self.right._collect(names)


@dataclasses.dataclass(frozen=True)
class And(_Binary):
    def evaluate(self, selected: AbstractSet[str]) -> bool:
        return self.left.evaluate(selected) and self.right.evaluate(selected)


@dataclasses.dataclass(frozen=True)
class Or(_Binary):
    def evaluate(self, selected: AbstractSet[str]) -> bool:
        return self.left.evaluate(selected) or self.right.evaluate(selected)


@dataclasses.dataclass(frozen=True)
class Implies(_Binary):
    def evaluate(self, selected: AbstractSet[str]) -> bool:
        return not self.left.evaluate(selected) or self.right.evaluate(selected)


@dataclasses.dataclass(frozen=True)
class Iff(_Binary):
    def evaluate(self, selected: AbstractSet[str]) -> bool:
        return self.left.evaluate(selected) == self.right.evaluate(selected)


@dataclasses.dataclass(frozen=True)
class FeatureTree:
    """Feature diagram with cross-tree constraints.

    Parameters
    ----------
    root : FeatureNode
        Root feature
    constraints : tuple of Expr
        Cross-tree constraints over feature names

    Raises
    ------
    ModelParseError
        If feature names are not unique or a constraint references an unknown feature
    """

    root: FeatureNode
    constraints: tuple[Expr, ...] = ()

    def __post_init__(self):
        seen = set()
        for node in self.root.iter_nodes():
            if node.name in seen:
                msg = f"Duplicate feature name '{node.name}'"
                raise ModelParseError(msg)
            seen.add(node.name)
        for constraint in self.constraints:
            unknown = [name for name in constraint.features() if name not in seen]
            if unknown:
                msg = f"Constraint references unknown feature '{unknown[0]}'"
                raise ModelParseError(msg)

    @property
    def features(self) -> list[str]:
        """Feature names in document (depth-first pre-order) order."""
        return [node.name for node in self.root.iter_nodes()]

    def iter_nodes(self) -> Iterator[FeatureNode]:
        return self.root.iter_nodes()

    def get_node(self, name: str) -> FeatureNode | None:
        return next((node for node in self.iter_nodes() if node.name == name), None)
