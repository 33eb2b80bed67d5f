"""Sample files: one configuration per line, `name`/`!name` entries separated by `;`."""

from __future__ import annotations

__all__ = ["read_sample", "load_sample", "write_sample", "save_sample"]

import logging
import re
from pathlib import Path
from typing import TYPE_CHECKING

from multiwise.core.configuration import Configuration
from multiwise.core.errors import SampleFormatError, UnsatisfiableConfigurationError
from multiwise.sampling.sample import Sample
from multiwise.sat.engine import create_engine

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel

logger = logging.getLogger(__name__)

_ENTRY_PATTERN = re.compile(r"!?[^!\s]+")


def write_sample(sample: Sample, seed: int | None = None) -> str:
    """Serialize a sample, every feature written in variable order.

    The first line is a header `# model=<name> seed=<seed>`.
    """
    model = sample.model
    lines = [f"# model={model.name or ''} seed={'' if seed is None else seed}"]
    for configuration in sample:
        if not configuration.is_complete:
            msg = "Only complete configurations can be written to a sample file"
            raise ValueError(msg)
        lines.append(";".join(model.literal_name(lit) for lit in configuration.sorted_literals()))
    return "\n".join(lines) + "\n"


def save_sample(sample: Sample, path: str | Path, seed: int | None = None):
    Path(path).write_text(write_sample(sample, seed), encoding="utf-8")


def read_sample(text: str, model: FeatureModel) -> Sample:
    """Parse a sample file against `model`.

    Lines starting with `#` and blank lines are ignored. Duplicate
    configurations are dropped.

    Raises
    ------
    SampleFormatError
        If a line has an empty or malformed entry, decides a feature twice or leaves a
        feature undecided
    UnknownFeatureError
        If an entry names a feature missing from `model`
    UnsatisfiableConfigurationError
        If a configuration violates the model
    """
    engine = create_engine(model)
    sample = Sample(model)
    for line_nb, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        literals = set()
        for entry in line.split(";"):
            entry = entry.strip()
            if not entry or entry == "!":
                msg = f"Empty entry on line {line_nb}"
                raise SampleFormatError(msg)
            if _ENTRY_PATTERN.fullmatch(entry) is None:
                msg = f"Malformed entry '{entry}' on line {line_nb}"
                raise SampleFormatError(msg)
            lit = model.literal(entry)
            if lit in literals or -lit in literals:
                msg = f"Feature '{model.name_of(lit)}' decided twice on line {line_nb}"
                raise SampleFormatError(msg)
            literals.add(lit)
        if len(literals) != model.nb_features:
            msg = f"Line {line_nb} decides {len(literals)} of the {model.nb_features} features"
            raise SampleFormatError(msg)
        if not engine.solve(sorted(literals, key=abs)):
            msg = f"Configuration on line {line_nb} is not valid for model '{model.name}'"
            raise UnsatisfiableConfigurationError(msg)
        if not sample.add(Configuration(model, frozenset(literals))):
            logger.warning("Dropping duplicate configuration on line %d", line_nb)
    return sample


def load_sample(path: str | Path, model: FeatureModel) -> Sample:
    return read_sample(Path(path).read_text(encoding="utf-8"), model)
