from __future__ import annotations

__all__ = ["SamplingOptions", "GroupOrder", "MAX_T_ENV_VAR", "default_max_t"]

import os
from dataclasses import dataclass, field, fields
from typing import Any

from typing_extensions import Literal

GroupOrder = Literal["spec", "ascending-t", "descending-t"]

MAX_T_ENV_VAR = "MULTIWISE_MAX_T"
_DEFAULT_MAX_T = 6


def default_max_t() -> int:
    """Ceiling on interaction strengths, read from `MULTIWISE_MAX_T` (6 if unset)."""
    value = os.environ.get(MAX_T_ENV_VAR)
    if value is None or not value.strip():
        return _DEFAULT_MAX_T
    try:
        max_t = int(value)
    except ValueError:
        msg = f"{MAX_T_ENV_VAR} must be an integer, got '{value}'"
        raise ValueError(msg) from None
    if max_t < 0:
        msg = f"{MAX_T_ENV_VAR} must be non-negative, got {max_t}"
        raise ValueError(msg)
    return max_t


@dataclass
class SamplingOptions:
    """Options of the covering strategy and the multi-group sampler.

    Parameters
    ----------
    order:
        Processing order of the groups: as listed in the group specification,
        or by ascending/descending interaction strength (ties keep the listed
        order).
    defer_completion:
        If `True`, configurations stay partial across groups and are completed
        once after the last group, otherwise they are completed at the end of
        every group.
    seed:
        Root seed. Each group derives its own sub-seed from it and its index in
        the specification.
    shuffle_tuples:
        Process the tuples of a group in a seeded random order instead of the
        lexicographic one.
    completion_policy:
        Preferred value of undecided features when completing configurations.
    use_prefilter:
        Skip tuples contradicting core or dead features without solver calls.
    max_t:
        Largest accepted interaction strength, defaults to the value of the
        `MULTIWISE_MAX_T` environment variable or 6.
    engine:
        Satisfiability engine implementation.
    """

    order: GroupOrder = "spec"
    defer_completion: bool = False
    seed: int = 0
    shuffle_tuples: bool = False
    completion_policy: Literal["prefer-deselect", "prefer-select", "random"] = "prefer-deselect"
    use_prefilter: bool = True
    max_t: int = field(default_factory=default_max_t)
    engine: Literal["dpll", "pysat"] = "dpll"

    def __post_init__(self):
        if self.order not in ("spec", "ascending-t", "descending-t"):
            msg = f"Unknown group order '{self.order}'"
            raise ValueError(msg)
        if self.completion_policy not in ("prefer-deselect", "prefer-select", "random"):
            msg = f"Unknown completion policy '{self.completion_policy}'"
            raise ValueError(msg)
        if self.engine not in ("dpll", "pysat"):
            msg = f"Unknown engine kind '{self.engine}'"
            raise ValueError(msg)
        if self.max_t < 0:
            msg = f"max_t must be non-negative, got {self.max_t}"
            raise ValueError(msg)

    def to_dict(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}
