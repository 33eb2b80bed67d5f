from __future__ import annotations

__all__ = ["SatEngine", "EngineKind", "create_engine"]

import logging
from typing import TYPE_CHECKING, Iterable, Sequence

from typing_extensions import Literal, Protocol

from multiwise.core.utils import modules_are_available
from multiwise.sat.dpll import DPLLEngine

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel

logger = logging.getLogger(__name__)

EngineKind = Literal["dpll", "pysat"]


class SatEngine(Protocol):
    """Interface of satisfiability engines.

    An engine is stateful and single-threaded, concurrent work must use one
    engine per task. Literals are signed variable indices of the model the
    engine was created from.
    """

    nb_calls: int

    def solve(self, assumptions: Sequence[int] = ()) -> bool: ...

    def get_model(self) -> list[int] | None: ...

    def propagate(self, assumptions: Sequence[int] = ()) -> list[int] | None: ...

    def set_phases(self, literals: Iterable[int]): ...

    def reset_phases(self, selected: bool = False): ...

    def add_clause(self, clause: Iterable[int]): ...


def create_engine(model: FeatureModel, kind: EngineKind = "dpll") -> SatEngine:
    """Create a fresh engine loaded with the clauses of `model`.

    Parameters
    ----------
    model : FeatureModel
        The model to load
    kind : {"dpll", "pysat"}, default="dpll"
        Engine implementation. "pysat" requires the optional `python-sat`
        package and falls back to "dpll" with a warning when it is missing.

    Returns
    -------
    SatEngine
        The new engine
    """
    if kind == "pysat":
        if modules_are_available(["pysat"]):
            from multiwise.sat.pysat_engine import PySatEngine

            return PySatEngine(model)
        logger.warning("python-sat is not installed, falling back to the internal DPLL engine")
        return DPLLEngine(model)
    if kind == "dpll":
        return DPLLEngine(model)
    msg = f"Unknown engine kind '{kind}'"
    raise ValueError(msg)
