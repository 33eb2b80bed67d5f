"""Reader and writer of DIMACS CNF files with feature name comments.

Feature names are given by `c <var> <name>` comment lines, as exported by
FeatureIDE. Named variables are the features and must come first, unnamed
variables after them are auxiliary.
"""

from __future__ import annotations

__all__ = [
    "parse_dimacs",
    "load_dimacs",
    "write_dimacs",
    "save_dimacs",
    "DimacsInputConverter",
    "DimacsOutputConverter",
]

import logging
from pathlib import Path

from multiwise.core.conversion import InputConverter, OutputConverter
from multiwise.core.errors import ModelParseError
from multiwise.core.feature_model import FeatureModel

logger = logging.getLogger(__name__)


def parse_dimacs(text: str, name: str | None = None) -> FeatureModel:
    """Parse a DIMACS CNF document.

    Parameters
    ----------
    text : str
        The document
    name : str, optional
        Name given to the model

    Returns
    -------
    FeatureModel
        The model, tautological clauses removed

    Raises
    ------
    ModelParseError
        On a missing or malformed header, a literal out of range, an empty or
        unterminated clause, or inconsistent name comments
    """
    names: dict[int, str] = {}
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    current_line = 0

    for line_nb, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("c"):
            _read_name_comment(line, line_nb, names)
            continue
        if line.startswith("p"):
            if header is not None:
                msg = "Duplicate problem line"
                raise ModelParseError(msg, line_nb)
            header = _read_header(line, line_nb)
            continue
        if header is None:
            msg = "Clause before the problem line"
            raise ModelParseError(msg, line_nb)

        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                msg = f"Invalid literal '{token}'"
                raise ModelParseError(msg, line_nb) from None
            if lit == 0:
                if not current:
                    msg = "Empty clause"
                    raise ModelParseError(msg, line_nb)
                clauses.append(tuple(current))
                current = []
                continue
            if abs(lit) > header[0]:
                msg = f"Literal {lit} out of range [1, {header[0]}]"
                raise ModelParseError(msg, line_nb)
            if not current:
                current_line = line_nb
            current.append(lit)

    if header is None:
        msg = "Missing problem line 'p cnf <vars> <clauses>'"
        raise ModelParseError(msg)
    if current:
        msg = "Clause is not terminated by 0"
        raise ModelParseError(msg, current_line)

    nb_vars, nb_clauses = header
    if len(clauses) != nb_clauses:
        logger.warning("Problem line announces %d clauses, found %d", nb_clauses, len(clauses))

    features = _features_from_names(names, nb_vars)
    kept = []
    for clause in clauses:
        literals = tuple(dict.fromkeys(clause))
        if any(-lit in literals for lit in literals):
            logger.warning("Dropping tautological clause %s", list(clause))
            continue
        kept.append(literals)
    return FeatureModel(
        features=tuple(features),
        clauses=tuple(kept),
        aux_var_count=nb_vars - len(features),
        name=name,
    )


def _read_header(line: str, line_nb: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
        msg = f"Malformed problem line '{line}'"
        raise ModelParseError(msg, line_nb)
    try:
        nb_vars, nb_clauses = int(parts[2]), int(parts[3])
    except ValueError:
        msg = f"Malformed problem line '{line}'"
        raise ModelParseError(msg, line_nb) from None
    if nb_vars < 0 or nb_clauses < 0:
        msg = f"Malformed problem line '{line}'"
        raise ModelParseError(msg, line_nb)
    return nb_vars, nb_clauses


def _read_name_comment(line: str, line_nb: int, names: dict[int, str]):
    parts = line[1:].split(maxsplit=1)
    if len(parts) != 2 or not parts[0].lstrip("-").isdigit():
        # free comment
        return
    var, name = int(parts[0]), parts[1].strip()
    if var <= 0:
        msg = f"Invalid variable {var} in name comment"
        raise ModelParseError(msg, line_nb)
    if var in names:
        msg = f"Variable {var} is named twice"
        raise ModelParseError(msg, line_nb)
    names[var] = name


def _features_from_names(names: dict[int, str], nb_vars: int) -> list[str]:
    if not names:
        logger.warning("No variable is named, all %d variables are auxiliary", nb_vars)
        return []
    if max(names) > nb_vars:
        msg = f"Name comment for variable {max(names)} beyond the {nb_vars} declared variables"
        raise ModelParseError(msg)
    if sorted(names) != list(range(1, len(names) + 1)):
        missing = min(set(range(1, max(names) + 1)) - set(names))
        msg = f"Variable {missing} is unnamed but followed by named variables"
        raise ModelParseError(msg)
    features = [names[var] for var in range(1, len(names) + 1)]
    if len(set(features)) != len(features):
        msg = "Duplicate feature names in name comments"
        raise ModelParseError(msg)
    return features


def load_dimacs(path: str | Path) -> FeatureModel:
    path = Path(path)
    return parse_dimacs(path.read_text(encoding="utf-8"), name=path.stem)


def write_dimacs(model: FeatureModel) -> str:
    """Serialize a model as DIMACS CNF, feature names as `c <var> <name>` comments."""
    lines = [f"c {var} {name}" for var, name in enumerate(model.features, start=1)]
    lines.append(f"p cnf {model.nb_vars} {len(model.clauses)}")
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in model.clauses)
    return "\n".join(lines) + "\n"


def save_dimacs(model: FeatureModel, path: str | Path):
    Path(path).write_text(write_dimacs(model), encoding="utf-8")


class DimacsInputConverter(InputConverter):
    """Load feature models from DIMACS files, named after the file stem."""

    def load(self, path: str | Path) -> FeatureModel:
        return load_dimacs(path)


class DimacsOutputConverter(OutputConverter):
    """Save feature models as DIMACS files."""

    def save(self, model: FeatureModel, path: str | Path):
        save_dimacs(model, path)
