__all__ = [
    "DPLLEngine",
    "EngineKind",
    "SatEngine",
    "create_engine",
    "CompletionPolicy",
    "complete_configuration",
    "core_dead_features",
    "enumerate_all_configurations",
    "is_satisfiable",
]

from multiwise.sat.analysis import (
    CompletionPolicy,
    complete_configuration,
    core_dead_features,
    enumerate_all_configurations,
    is_satisfiable,
)
from multiwise.sat.dpll import DPLLEngine
from multiwise.sat.engine import EngineKind, SatEngine, create_engine
