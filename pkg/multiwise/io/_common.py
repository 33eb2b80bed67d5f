from __future__ import annotations

__all__ = ["load_feature_model", "MODEL_SUFFIXES"]

import logging
from pathlib import Path
from typing import TYPE_CHECKING

from multiwise.core.errors import ModelParseError, VoidModelError
from multiwise.io.dimacs import DimacsInputConverter
from multiwise.io.uvl import UVLInputConverter
from multiwise.sat.analysis import is_satisfiable

if TYPE_CHECKING:
    from multiwise.core.cnf import Conversion
    from multiwise.core.feature_model import FeatureModel

logger = logging.getLogger(__name__)

MODEL_SUFFIXES = {".uvl": "uvl", ".dimacs": "dimacs", ".cnf": "dimacs"}


def load_feature_model(
    path: str | Path,
    conversion: Conversion = "distributive",
    check_void: bool = True,
) -> FeatureModel:
    """Load a feature model, picking the format from the file suffix.

    Parameters
    ----------
    path : str or Path
        A `.uvl` file, or a `.dimacs`/`.cnf` file
    conversion : {"distributive", "tseitin"}, default="distributive"
        CNF conversion of UVL cross-tree constraints
    check_void : bool, default=True
        Reject models without any valid configuration

    Raises
    ------
    ModelParseError
        If the suffix is unknown or the file is invalid
    VoidModelError
        If `check_void` is set and the model has no valid configuration
    """
    path = Path(path)
    kind = MODEL_SUFFIXES.get(path.suffix.lower())
    if kind is None:
        msg = f"Unsupported model file '{path.name}', expected one of {sorted(MODEL_SUFFIXES)}"
        raise ModelParseError(msg)
    converter = UVLInputConverter(conversion) if kind == "uvl" else DimacsInputConverter()
    model = converter.load(path)
    logger.info(
        "Loaded model '%s': %d features, %d clauses, %d auxiliary variables",
        model.name,
        model.nb_features,
        len(model.clauses),
        model.aux_var_count,
    )
    if check_void and not is_satisfiable(model):
        msg = f"Feature model '{model.name}' has no valid configuration"
        raise VoidModelError(msg)
    return model
