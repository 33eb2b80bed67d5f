from __future__ import annotations

__all__ = ["ExperimentConfig"]

from dataclasses import dataclass, field, fields
from typing import Any

from typing_extensions import Literal

from multiwise.experiments.setups import EXPERIMENT_SETUPS


@dataclass
class ExperimentConfig:
    """Experiment configuration.

    Parameters
    ----------
    output_dir:
        Directory receiving `results.csv`, `summary.csv` and
        `experiment_config.yml`. Nothing is written if `None`.
    setups:
        Identifiers of the setups to run, in order.
    repetitions:
        Number of runs of each setup.
    root_seed:
        Seed every run seed is derived from, with the setup and repetition
        indices.
    nb_workers:
        Number of worker processes. With 1, runs are executed in the main
        process.
    engine:
        Satisfiability engine used by the runs.
    record_time:
        If `False`, sampling times are written as 0 so that reruns produce
        byte-identical CSV files.
    """

    output_dir: str | None = None
    setups: list[str] = field(default_factory=lambda: list(EXPERIMENT_SETUPS))
    repetitions: int = 10
    root_seed: int = 0
    nb_workers: int = 1
    engine: Literal["dpll", "pysat"] = "dpll"
    record_time: bool = True

    def __post_init__(self):
        if self.repetitions < 1:
            msg = f"repetitions must be at least 1, got {self.repetitions}"
            raise ValueError(msg)
        if self.nb_workers < 1:
            msg = f"nb_workers must be at least 1, got {self.nb_workers}"
            raise ValueError(msg)
        unknown = [s for s in self.setups if s not in EXPERIMENT_SETUPS]
        if unknown:
            msg = f"Unknown experiment setups {unknown}, expected a subset of {list(EXPERIMENT_SETUPS)}"
            raise ValueError(msg)

    def to_dict(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "output_dir"}
