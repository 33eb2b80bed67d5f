"""Reader and writer of the UVL subset describing feature diagrams.

A document lists the feature tree under a `features` section, one feature
per line, children indented with spaces under `mandatory`, `optional`, `or`
and `alternative` blocks, followed by an optional `constraints` section
with one propositional formula per line::

    features
        Car
            mandatory
                Gearbox
                    alternative
                        Manual
                        Automatic
            optional
                Radio
    constraints
        Radio => Automatic
"""

from __future__ import annotations

__all__ = [
    "parse_feature_tree",
    "load_feature_tree",
    "write_feature_tree",
    "save_feature_tree",
    "UVLInputConverter",
]

import logging
from functools import lru_cache
from itertools import groupby
from pathlib import Path
from typing import TYPE_CHECKING

from lark import Lark, Token, Transformer, Tree
from lark.exceptions import UnexpectedInput, VisitError
from lark.indenter import DedentError, Indenter

from multiwise.core.cnf import compile_to_cnf
from multiwise.core.conversion import InputConverter
from multiwise.core.errors import ModelParseError
from multiwise.core.feature_tree import (
    And,
    Expr,
    FeatureChild,
    FeatureNode,
    FeatureTree,
    GroupKind,
    Iff,
    Implies,
    Not,
    Or,
    Var,
)

if TYPE_CHECKING:
    from multiwise.core.cnf import Conversion
    from multiwise.core.feature_model import FeatureModel

logger = logging.getLogger(__name__)

_GRAMMAR_FILE = Path(__file__).parent / "uvl.grammar"
_INDENT_WIDTH = 4
_OPERATORS = {And: "&", Or: "|", Implies: "=>", Iff: "<=>"}


class _UVLIndenter(Indenter):
    NL_type = "_NL"
    OPEN_PAREN_types = ["LPAR"]
    CLOSE_PAREN_types = ["RPAR"]
    INDENT_type = "_INDENT"
    DEDENT_type = "_DEDENT"
    tab_len = 8


@lru_cache(maxsize=1)
def _get_parser() -> Lark:
    return Lark(
        _GRAMMAR_FILE.read_text(encoding="utf-8"),
        parser="lalr",
        postlex=_UVLIndenter(),
        maybe_placeholders=False,
    )


class _ExprBuilder(Transformer):
    def var(self, items):
        return Var(str(items[0]))

    def not_op(self, items):
        return Not(items[0])

    def and_op(self, items):
        return And(*items)

    def or_op(self, items):
        return Or(*items)

    def implies_op(self, items):
        return Implies(*items)

    def iff_op(self, items):
        return Iff(*items)


def parse_feature_tree(text: str) -> FeatureTree:
    """Parse a UVL-subset document.

    Parameters
    ----------
    text : str
        The document

    Returns
    -------
    FeatureTree
        The feature tree, features in document order

    Raises
    ------
    ModelParseError
        On syntax errors, duplicate feature names, empty `or`/`alternative`
        groups, features mixing group kinds, and constraints referencing
        unknown features
    """
    for line_nb, line in enumerate(text.splitlines(), start=1):
        indent = line[: len(line) - len(line.lstrip(" \t"))]
        if "\t" in indent:
            msg = "Tabs are not allowed in indentation"
            raise ModelParseError(msg, line_nb, indent.index("\t") + 1)

    try:
        parse_tree = _get_parser().parse(text if text.endswith("\n") else text + "\n")
    except UnexpectedInput as err:
        msg = f"Syntax error, unexpected {_describe_unexpected(err)}"
        line = err.line if err.line > 0 else None
        column = err.column if err.column > 0 else None
        raise ModelParseError(msg, line, column) from None
    except DedentError:
        msg = "Inconsistent indentation"
        raise ModelParseError(msg) from None

    feature_tree, constraints_tree = parse_tree.children[0], None
    if len(parse_tree.children) > 1:
        constraints_tree = parse_tree.children[1]

    names: dict[str, Token] = {}
    root = _build_node(feature_tree, names)
    constraints = _build_constraints(constraints_tree, names) if constraints_tree is not None else ()
    tree = FeatureTree(root, constraints)
    logger.debug("Parsed feature tree with %d features and %d constraints", len(names), len(constraints))
    return tree


def _describe_unexpected(err: UnexpectedInput) -> str:
    token = getattr(err, "token", None)
    if token is None:
        char = getattr(err, "char", None)
        return f"character {char!r}" if char is not None else "end of input"
    if token.type == "$END":
        return "end of input"
    if token.type in ("_INDENT", "_DEDENT"):
        return "indentation"
    if token.type == "_NL":
        return "end of line"
    return f"'{token}'"


def _build_node(tree: Tree, names: dict[str, Token]) -> FeatureNode:
    name_token, *blocks = tree.children
    name = str(name_token)
    if name in names:
        msg = f"Duplicate feature name '{name}'"
        raise ModelParseError(msg, name_token.line, name_token.column)
    names[name] = name_token

    kind = GroupKind.AND
    children: list[FeatureChild] = []
    for block in blocks:
        kind_token = block.children[0].children[0]
        keyword = str(kind_token)
        members = [_build_node(child, names) for child in block.children[1:]]
        if keyword in ("or", "alternative"):
            if not members:
                msg = f"Empty {keyword} group under feature '{name}'"
                raise ModelParseError(msg, kind_token.line, kind_token.column)
            if len(blocks) > 1:
                msg = f"Feature '{name}' mixes a {keyword} group with other child blocks"
                raise ModelParseError(msg, kind_token.line, kind_token.column)
            kind = GroupKind(keyword)
            children.extend(FeatureChild(member) for member in members)
        else:
            children.extend(FeatureChild(member, mandatory=keyword == "mandatory") for member in members)
    return FeatureNode(name, kind, tuple(children))


def _build_constraints(tree: Tree, names: dict[str, Token]) -> tuple[Expr, ...]:
    for token in tree.scan_values(lambda v: isinstance(v, Token) and v.type == "NAME"):
        if str(token) not in names:
            msg = f"Constraint references unknown feature '{token}'"
            raise ModelParseError(msg, token.line, token.column)
    try:
        built = _ExprBuilder().transform(tree)
    except VisitError as err:
        raise err.orig_exc from None
    return tuple(built.children)


def load_feature_tree(path: str | Path) -> FeatureTree:
    return parse_feature_tree(Path(path).read_text(encoding="utf-8"))


def write_feature_tree(tree: FeatureTree) -> str:
    """Serialize a feature tree in canonical UVL-subset form.

    Children of an and-node are written in consecutive `mandatory` and
    `optional` blocks following their order, so that parsing the output gives
    back an equal tree.
    """
    lines = ["features"]
    _write_node(tree.root, 1, lines)
    if tree.constraints:
        lines.append("constraints")
        lines.extend(" " * _INDENT_WIDTH + _format_expr(expr) for expr in tree.constraints)
    return "\n".join(lines) + "\n"


def _write_node(node: FeatureNode, depth: int, lines: list[str]):
    indent = " " * (_INDENT_WIDTH * depth)
    lines.append(indent + node.name)
    if not node.children:
        return
    if node.kind is GroupKind.AND:
        runs = [
            ("mandatory" if mandatory else "optional", [child.node for child in run])
            for mandatory, run in groupby(node.children, key=lambda child: child.mandatory)
        ]
    else:
        runs = [(node.kind.value, [child.node for child in node.children])]
    for keyword, members in runs:
        lines.append(indent + " " * _INDENT_WIDTH + keyword)
        for member in members:
            _write_node(member, depth + 2, lines)


def _format_expr(expr: Expr) -> str:
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Not):
        return "!" + _format_operand(expr.operand)
    operator = _OPERATORS[type(expr)]
    return f"{_format_operand(expr.left)} {operator} {_format_operand(expr.right)}"


def _format_operand(expr: Expr) -> str:
    text = _format_expr(expr)
    return text if isinstance(expr, (Var, Not)) else f"({text})"


def save_feature_tree(tree: FeatureTree, path: str | Path):
    Path(path).write_text(write_feature_tree(tree), encoding="utf-8")


class UVLInputConverter(InputConverter):
    """Load feature models from UVL-subset files.

    Parameters
    ----------
    conversion : {"distributive", "tseitin"}, default="distributive"
        CNF conversion of cross-tree constraints
    """

    def __init__(self, conversion: Conversion = "distributive"):
        self.conversion = conversion

    def load(self, path: str | Path) -> FeatureModel:
        tree = load_feature_tree(path)
        return compile_to_cnf(tree, conversion=self.conversion)
