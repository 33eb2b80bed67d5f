"""Compilation of feature diagrams into conjunctive normal form."""

from __future__ import annotations

__all__ = ["compile_to_cnf", "constraint_to_clauses"]

import logging
from itertools import combinations
from typing import Mapping

from typing_extensions import Literal

from multiwise.core.feature_model import FeatureModel
from multiwise.core.feature_tree import And, Expr, FeatureTree, GroupKind, Iff, Implies, Not, Or, Var

logger = logging.getLogger(__name__)

Conversion = Literal["distributive", "tseitin"]


def compile_to_cnf(
    tree: FeatureTree,
    conversion: Conversion = "distributive",
    name: str | None = None,
) -> FeatureModel:
    """Compile a feature tree into a CNF feature model.

    Feature variables are numbered 1..n in document order. Clauses are emitted
    in this order: root unit clause, then for every feature (document order)
    its child/parent implications, mandatory implications, group clauses and
    pairwise alternative exclusions, then the cross-tree constraints.

    Parameters
    ----------
    tree : FeatureTree
        The feature diagram to compile
    conversion : {"distributive", "tseitin"}, default="distributive"
        How cross-tree constraints are turned into clauses. The distributive
        conversion is equivalence-preserving and introduces no variable, the
        Tseitin conversion stays linear in the constraint size but adds
        auxiliary variables numbered after the features.
    name : str, optional
        Name of the model, defaults to the root feature name

    Returns
    -------
    FeatureModel
        The compiled model
    """
    features = tree.features
    var_of = {feature: i + 1 for i, feature in enumerate(features)}

    clauses: list[tuple[int, ...]] = [(var_of[tree.root.name],)]
    for node in tree.iter_nodes():
        parent = var_of[node.name]
        children = [var_of[child.node.name] for child in node.children]
        for child, child_var in zip(node.children, children):
            clauses.append((-child_var, parent))
            if node.kind is GroupKind.AND and child.mandatory:
                clauses.append((-parent, child_var))
        if node.kind is not GroupKind.AND:
            clauses.append((-parent, *children))
        if node.kind is GroupKind.ALT:
            clauses.extend((-a, -b) for a, b in combinations(children, 2))

    next_var = len(features) + 1
    for constraint in tree.constraints:
        constraint_clauses, next_var = constraint_to_clauses(constraint, var_of, conversion, next_var)
        clauses.extend(constraint_clauses)

    aux_var_count = next_var - len(features) - 1
    if aux_var_count:
        logger.debug("Tseitin conversion introduced %d auxiliary variables", aux_var_count)
    return FeatureModel(
        features=tuple(features),
        clauses=tuple(clauses),
        aux_var_count=aux_var_count,
        name=name or tree.root.name,
    )


def constraint_to_clauses(
    expr: Expr,
    var_of: Mapping[str, int],
    conversion: Conversion = "distributive",
    next_var: int | None = None,
) -> tuple[list[tuple[int, ...]], int]:
    """Convert a single constraint into clauses.

    Parameters
    ----------
    expr : Expr
        Constraint expression
    var_of : mapping of str to int
        Variable of each feature name
    conversion : {"distributive", "tseitin"}, default="distributive"
        Conversion method
    next_var : int, optional
        First free variable for auxiliary variables (Tseitin only),
        defaults to `len(var_of) + 1`

    Returns
    -------
    clauses : list of tuple of int
        The clauses, without tautologies and duplicates
    next_var : int
        The next free variable after conversion
    """
    if next_var is None:
        next_var = len(var_of) + 1
    nnf = _to_nnf(expr, var_of, positive=True)

    if conversion == "distributive":
        raw = _distribute(nnf)
    elif conversion == "tseitin":
        raw = []
        # top-level conjuncts are asserted separately, no need to name them
        for conjunct in _flatten(nnf, _NAnd):
            top, next_var = _tseitin(conjunct, raw, next_var)
            raw.append((top,))
    else:
        msg = f"Unknown CNF conversion '{conversion}'"
        raise ValueError(msg)
    return _clean(raw), next_var


# NNF nodes: int literal, or tuple-based conjunction/disjunction
class _NAnd(tuple):
    pass


class _NOr(tuple):
    pass


def _to_nnf(expr: Expr, var_of: Mapping[str, int], positive: bool):
    if isinstance(expr, Var):
        return var_of[expr.name] if positive else -var_of[expr.name]
    if isinstance(expr, Not):
        return _to_nnf(expr.operand, var_of, not positive)
    if isinstance(expr, Implies):
        return _to_nnf(Or(Not(expr.left), expr.right), var_of, positive)
    if isinstance(expr, Iff):
        both = And(Or(Not(expr.left), expr.right), Or(expr.left, Not(expr.right)))
        return _to_nnf(both, var_of, positive)
    if isinstance(expr, (And, Or)):
        left = _to_nnf(expr.left, var_of, positive)
        right = _to_nnf(expr.right, var_of, positive)
        conjunctive = isinstance(expr, And) == positive
        return _NAnd((left, right)) if conjunctive else _NOr((left, right))
    msg = f"Unsupported expression {expr!r}"
    raise TypeError(msg)


def _flatten(node, kind: type) -> list:
    if isinstance(node, kind):
        return [leaf for child in node for leaf in _flatten(child, kind)]
    return [node]


def _distribute(node) -> list[tuple[int, ...]]:
    if isinstance(node, int):
        return [(node,)]
    if isinstance(node, _NAnd):
        return [clause for child in node for clause in _distribute(child)]
    # disjunction: cross product of the operands' clause sets
    left, right = (_distribute(child) for child in node)
    return [a + b for a in left for b in right]


def _tseitin(node, clauses: list[tuple[int, ...]], next_var: int) -> tuple[int, int]:
    if isinstance(node, int):
        return node, next_var
    is_and = isinstance(node, _NAnd)
    operands = []
    for child in _flatten(node, _NAnd if is_and else _NOr):
        lit, next_var = _tseitin(child, clauses, next_var)
        operands.append(lit)
    aux = next_var
    next_var += 1
    if is_and:
        clauses.extend((-aux, lit) for lit in operands)
        clauses.append((aux, *(-lit for lit in operands)))
    else:
        clauses.append((-aux, *operands))
        clauses.extend((aux, -lit) for lit in operands)
    return aux, next_var


def _clean(raw: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    clauses = []
    seen = set()
    for clause in raw:
        literals = tuple(dict.fromkeys(clause))
        if any(-lit in literals for lit in literals):
            continue
        key = frozenset(literals)
        if key in seen:
            continue
        seen.add(key)
        clauses.append(literals)
    return clauses
