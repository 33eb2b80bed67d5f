"""Seeded random feature models."""

from __future__ import annotations

__all__ = ["generate_feature_tree", "generate_feature_model", "DEFAULT_GROUP_MIX"]

import logging
from typing import TYPE_CHECKING, Mapping

import numpy as np

from multiwise.core.cnf import compile_to_cnf
from multiwise.core.feature_tree import FeatureChild, FeatureNode, FeatureTree, GroupKind, Implies, Not, Var
from multiwise.sat.analysis import is_satisfiable

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel

logger = logging.getLogger(__name__)

DEFAULT_GROUP_MIX = {"mandatory": 0.2, "optional": 0.5, "or": 0.15, "alternative": 0.15}


def generate_feature_tree(
    nb_features: int,
    seed: int = 0,
    group_mix: Mapping[str, float] | None = None,
    nb_constraints: int | None = None,
    max_children: int = 4,
) -> FeatureTree:
    """Generate a random feature tree with cross-tree constraints.

    The tree is grown breadth-first: every expanded feature gets between 1
    and `max_children` children related as an and-group (each child mandatory
    or optional), an or-group or an alternative group, drawn from
    `group_mix`. Features are named `F0`, `F1`... in document order, so that
    `F<i>` is variable `i + 1` of the compiled model. Constraints are random
    implications `A => B` and exclusions `A => !B` between non-root features.
    A constraint that would leave the model without valid configuration is
    dropped.

    Parameters
    ----------
    nb_features : int
        Number of features, at least 1
    seed : int, default=0
        Seed of the generator
    group_mix : mapping of str to float, optional
        Relative weights of "mandatory", "optional", "or" and "alternative"
        children. Defaults to `DEFAULT_GROUP_MIX`.
    nb_constraints : int, optional
        Number of constraints attempted, `nb_features // 10` by default
    max_children : int, default=4
        Maximum number of children of a feature

    Returns
    -------
    FeatureTree
        A tree whose compiled model is not void
    """
    if nb_features < 1:
        msg = f"A feature tree needs at least one feature, got {nb_features}"
        raise ValueError(msg)
    if max_children < 1:
        msg = f"max_children must be at least 1, got {max_children}"
        raise ValueError(msg)
    mix = dict(DEFAULT_GROUP_MIX if group_mix is None else group_mix)
    unknown = set(mix) - set(DEFAULT_GROUP_MIX)
    if unknown:
        msg = f"Unknown group kinds in group mix: {sorted(unknown)}"
        raise ValueError(msg)
    weights = np.array([mix.get(kind, 0.0) for kind in DEFAULT_GROUP_MIX], dtype=float)
    if weights.sum() <= 0 or (weights < 0).any():
        msg = "Group mix weights must be non-negative with a positive sum"
        raise ValueError(msg)
    if nb_constraints is None:
        nb_constraints = nb_features // 10

    rng = np.random.default_rng(seed)
    p_and = (weights[0] + weights[1]) / weights.sum()
    p_mandatory = weights[0] / (weights[0] + weights[1]) if weights[0] + weights[1] > 0 else 0.0
    group_weights = weights[2:] / weights[2:].sum() if weights[2:].sum() > 0 else None

    # node id -> (kind, [(child id, mandatory)])
    structure: dict[int, tuple[GroupKind, list[tuple[int, bool]]]] = {0: (GroupKind.AND, [])}
    queue = [0]
    next_id = 1
    while next_id < nb_features:
        parent = queue.pop(0)
        remaining = nb_features - next_id
        nb_children = min(int(rng.integers(1, max_children + 1)), remaining)
        is_group = group_weights is not None and (nb_children >= 2 or p_and == 0) and rng.random() >= p_and
        if is_group:
            kind = GroupKind.OR if rng.choice(2, p=group_weights) == 0 else GroupKind.ALT
            children = [(next_id + i, False) for i in range(nb_children)]
        else:
            kind = GroupKind.AND
            children = [(next_id + i, bool(rng.random() < p_mandatory)) for i in range(nb_children)]
        structure[parent] = (kind, children)
        for child, _ in children:
            structure[child] = (GroupKind.AND, [])
            queue.append(child)
        next_id += nb_children

    order = _preorder(structure)
    names = {node_id: f"F{i}" for i, node_id in enumerate(order)}
    root = _build_node(0, structure, names)
    tree = FeatureTree(root)

    candidates = [f"F{i}" for i in range(1, nb_features)]
    constraints = []
    if len(candidates) >= 2:
        for _ in range(nb_constraints):
            first, second = rng.choice(len(candidates), size=2, replace=False)
            right = Var(candidates[second])
            if rng.random() < 0.5:
                right = Not(right)
            constraint = Implies(Var(candidates[first]), right)
            attempt = FeatureTree(root, (*constraints, constraint))
            if is_satisfiable(compile_to_cnf(attempt)):
                constraints.append(constraint)
            else:
                logger.debug("Dropping constraint %s, the model would be void", constraint)
        tree = FeatureTree(root, tuple(constraints))
    return tree


def generate_feature_model(nb_features: int, seed: int = 0, **kwargs) -> FeatureModel:
    """Compile a tree from `generate_feature_tree` into a model named `synthetic_<n>_<seed>`."""
    tree = generate_feature_tree(nb_features, seed=seed, **kwargs)
    return compile_to_cnf(tree, name=f"synthetic_{nb_features}_{seed}")


def _preorder(structure: dict[int, tuple[GroupKind, list[tuple[int, bool]]]]) -> list[int]:
    order, stack = [], [0]
    while stack:
        node_id = stack.pop()
        order.append(node_id)
        stack.extend(child for child, _ in reversed(structure[node_id][1]))
    return order


def _build_node(node_id: int, structure, names: dict[int, str]) -> FeatureNode:
    kind, children = structure[node_id]
    return FeatureNode(
        names[node_id],
        kind,
        tuple(FeatureChild(_build_node(child, structure, names), mandatory) for child, mandatory in children),
    )
