"""Feature interaction groups."""

from __future__ import annotations

__all__ = ["FeatureGroup", "GroupSpec", "DEFAULT_GROUP_NAME"]

import dataclasses
import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, Mapping, Sequence

import yaml

from multiwise.sampling.options import default_max_t

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel

logger = logging.getLogger(__name__)

DEFAULT_GROUP_NAME = "default"


@dataclasses.dataclass(frozen=True)
class FeatureGroup:
    """Features whose interactions must be covered at strength `t`.

    Attributes
    ----------
    name : str
        Name of the group
    t : int
        Interaction strength, 0 means the group needs no coverage
    members : tuple of str
        Names of the features of the group
    """

    name: str
    t: int
    members: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not isinstance(self.t, int) or isinstance(self.t, bool) or self.t < 0:
            msg = f"Interaction strength of group '{self.name}' must be a non-negative integer, got {self.t!r}"
            raise ValueError(msg)

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "t": self.t, "features": list(self.members)}


@dataclasses.dataclass(frozen=True)
class GroupSpec:
    """Ordered feature groups plus the strength of the implicit default group.

    The default group holds every feature belonging to no explicit group. It
    is only materialized by `resolve`, against a given model. Groups may
    overlap.

    Attributes
    ----------
    groups : tuple of FeatureGroup
        Explicit groups, in specification order
    default_t : int
        Interaction strength of the default group
    """

    groups: tuple[FeatureGroup, ...] = ()
    default_t: int = 0

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        names = [group.name for group in self.groups]
        if len(set(names)) != len(names):
            msg = "Group names must be unique"
            raise ValueError(msg)
        if DEFAULT_GROUP_NAME in names:
            msg = f"Group name '{DEFAULT_GROUP_NAME}' is reserved for the default group"
            raise ValueError(msg)
        if not isinstance(self.default_t, int) or self.default_t < 0:
            msg = f"default_t must be a non-negative integer, got {self.default_t!r}"
            raise ValueError(msg)

    @classmethod
    def uniform(cls, t: int) -> GroupSpec:
        """Spec covering all features at the same strength."""
        return cls(groups=(), default_t=t)

    def resolve(self, model: FeatureModel, max_t: int | None = None) -> list[FeatureGroup]:
        """Check the groups against `model` and materialize the default group.

        Members are returned in variable order. The default group is appended
        last when it is not empty, so that the union of the returned groups
        is the whole feature set.

        Raises
        ------
        UnknownFeatureError
            If a group references a feature missing from `model`
        ValueError
            If a strength exceeds `max_t`
        """
        if max_t is None:
            max_t = default_max_t()

        resolved = []
        grouped: set[int] = set()
        for group in self.groups:
            variables = model.variables_of(group.members)
            if not variables:
                logger.warning("Group '%s' has no member", group.name)
            grouped.update(variables)
            resolved.append(FeatureGroup(group.name, group.t, tuple(model.name_of(v) for v in variables)))

        remaining = [name for var, name in enumerate(model.features, start=1) if var not in grouped]
        if remaining:
            resolved.append(FeatureGroup(DEFAULT_GROUP_NAME, self.default_t, tuple(remaining)))

        for group in resolved:
            if group.t > max_t:
                msg = f"Interaction strength {group.t} of group '{group.name}' exceeds the maximum {max_t}"
                raise ValueError(msg)
        return resolved

    def scopes(self, model: FeatureModel, max_t: int | None = None) -> list[tuple[str, Sequence[str], int]]:
        """Labelled scopes of the resolved groups, as expected by `coverage_report`."""
        return [(group.name, group.members, group.t) for group in self.resolve(model, max_t)]

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> GroupSpec:
        """Build a spec from `{"groups": [{"name", "t", "features"}, ...], "default_t"}`."""
        if not isinstance(data, Mapping):
            msg = "A group specification must be a mapping"
            raise ValueError(msg)
        unknown_keys = set(data) - {"groups", "default_t"}
        if unknown_keys:
            msg = f"Unexpected keys in group specification: {sorted(unknown_keys)}"
            raise ValueError(msg)
        groups = []
        for item in data.get("groups") or []:
            try:
                name, t, features = item["name"], item["t"], item["features"]
            except (KeyError, TypeError):
                msg = f"Invalid group entry {item!r}, expected name, t and features"
                raise ValueError(msg) from None
            if isinstance(features, str) or not isinstance(features, Sequence):
                msg = f"Features of group '{name}' must be a list of names"
                raise ValueError(msg)
            groups.append(FeatureGroup(str(name), t, tuple(str(f) for f in features)))
        return cls(tuple(groups), data.get("default_t", 0))

    def to_dict(self) -> dict[str, Any]:
        return {"groups": [group.to_dict() for group in self.groups], "default_t": self.default_t}

    @classmethod
    def load(cls, path: str | Path) -> GroupSpec:
        """Load a spec from a JSON file, or a YAML file for any other suffix."""
        path = Path(path)
        with path.open(encoding="utf-8") as fp:
            data = json.load(fp) if path.suffix == ".json" else yaml.safe_load(fp)
        return cls.from_dict(data)

    def save(self, path: str | Path):
        """Save the spec as JSON, or YAML when the file suffix is .yml/.yaml."""
        path = Path(path)
        with path.open("w", encoding="utf-8") as fp:
            if path.suffix in (".yml", ".yaml"):
                yaml.safe_dump(self.to_dict(), fp, sort_keys=False)
            else:
                json.dump(self.to_dict(), fp, indent=2)
                fp.write("\n")
