"""Repeated sampling runs over experiment setups."""

from __future__ import annotations

__all__ = ["RunRecord", "ExperimentRunner", "run_experiments", "write_results_csv", "RESULTS_HEADER"]

import csv
import dataclasses
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterable, Sequence

import yaml

from multiwise.core.errors import ExperimentRunError
from multiwise.core.seeding import derive_seed
from multiwise.experiments.callbacks import DefaultPrinterCallback, ExperimentCallback
from multiwise.experiments.config import ExperimentConfig
from multiwise.experiments.setups import build_setup, get_setup, setup_index
from multiwise.experiments.summary import summarize, write_summary_csv
from multiwise.interactions.coverage import coverage_ratio
from multiwise.interactions.enumeration import enumerate_valid_interactions
from multiwise.sampling.multiwise import MultiWiseSampler
from multiwise.sampling.options import SamplingOptions
from multiwise.sat.engine import create_engine

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel
    from multiwise.experiments.setups import ExperimentSetup
    from multiwise.interactions.tuples import TupleSet

logger = logging.getLogger(__name__)

RESULTS_HEADER = ["experiment", "model", "repetition", "seed", "sample_size", "time_ms", "cov_t2", "cov_t3"]


@dataclasses.dataclass(frozen=True)
class RunRecord:
    """Measurements of one sampling run.

    Attributes
    ----------
    experiment_id : str
        Setup of the run
    model_name : str
        Name of the sampled model
    repetition : int
        1-based repetition index
    seed : int
        Seed of the run
    sample_size : int
        Number of configurations
    time_ms : float
        Duration of sampling (tuple enumeration and covering), in milliseconds
    cov_t2 : float
        Pair-wise coverage over all features
    cov_t3 : float
        Three-wise coverage over all features
    nb_tuples : int
        Number of tuples the run had to cover, summed over its groups
    """

    experiment_id: str
    model_name: str
    repetition: int
    seed: int
    sample_size: int
    time_ms: float
    cov_t2: float
    cov_t3: float
    nb_tuples: int = 0

    def to_csv_row(self) -> dict[str, Any]:
        return {
            "experiment": self.experiment_id,
            "model": self.model_name,
            "repetition": self.repetition,
            "seed": self.seed,
            "sample_size": self.sample_size,
            "time_ms": f"{self.time_ms:.3f}",
            "cov_t2": f"{self.cov_t2:.6f}",
            "cov_t3": f"{self.cov_t3:.6f}",
        }


def _run_once(
    model: FeatureModel,
    setup: ExperimentSetup,
    repetition: int,
    seed: int,
    engine: str,
    global_tuples: dict[int, TupleSet],
) -> RunRecord:
    spec = build_setup(setup, model, seed)
    sampler = MultiWiseSampler(model, SamplingOptions(seed=seed, engine=engine))

    start = time.perf_counter()
    sample = sampler.run(spec)
    time_ms = (time.perf_counter() - start) * 1000

    return RunRecord(
        experiment_id=setup.id,
        model_name=model.name or "",
        repetition=repetition,
        seed=seed,
        sample_size=len(sample),
        time_ms=time_ms,
        cov_t2=float(coverage_ratio(model, sample, 2, tuple_set=global_tuples[2])),
        cov_t3=float(coverage_ratio(model, sample, 3, tuple_set=global_tuples[3])),
        nb_tuples=sample.stats.nb_tuples,
    )


def _run_task(args) -> RunRecord:
    return _run_once(*args)


class ExperimentRunner:
    """Run experiment setups repeatedly on a model and record their metrics.

    Every run gets its own seed, derived from the root seed, the setup index
    and the repetition index, and its own engine. Records are returned in
    (setup, repetition) order whatever the number of workers.

    Parameters
    ----------
    config : ExperimentConfig
        Experiment configuration
    callback : ExperimentCallback, optional
        Callback notified of progress, a `DefaultPrinterCallback` by default
    """

    def __init__(self, config: ExperimentConfig, callback: ExperimentCallback | None = None):
        self.config = config
        self.callback = callback if callback is not None else DefaultPrinterCallback()

    def run(self, model: FeatureModel) -> list[RunRecord]:
        """Run every configured setup and save the results if `output_dir` is set.

        Raises
        ------
        ExperimentRunError
            If a run fails, naming its setup, repetition and seed
        """
        config = self.config
        self.callback.on_experiment_begin(config, model.name or "")

        # global coverage is measured against the same tuple sets in every run
        engine = create_engine(model, config.engine)
        global_tuples = {t: enumerate_valid_interactions(model, model.features, t, engine=engine) for t in (2, 3)}

        records: list[RunRecord] = []
        executor = ProcessPoolExecutor(config.nb_workers) if config.nb_workers > 1 else None
        try:
            for setup_id in config.setups:
                setup = get_setup(setup_id)
                self.callback.on_setup_begin(setup, config.repetitions)
                index = setup_index(setup)
                tasks = [
                    (model, setup, rep + 1, derive_seed(config.root_seed, index, rep), config.engine, global_tuples)
                    for rep in range(config.repetitions)
                ]
                records.extend(self._run_tasks(tasks, executor))
                self.callback.on_setup_end(setup)
        finally:
            if executor is not None:
                executor.shutdown()

        self.callback.on_experiment_end(records)
        if config.output_dir is not None:
            self.save(records, model)
        return records

    def _run_tasks(self, tasks: list[tuple], executor: ProcessPoolExecutor | None) -> list[RunRecord]:
        slots: list[RunRecord | None] = [None] * len(tasks)
        futures = [executor.submit(_run_task, task) for task in tasks] if executor is not None else None
        for i, task in enumerate(tasks):
            _, setup, repetition, seed, _, _ = task
            try:
                record = futures[i].result() if futures is not None else _run_task(task)
            except Exception as err:
                raise ExperimentRunError(setup.id, repetition, seed, err) from err
            if not self.config.record_time:
                record = dataclasses.replace(record, time_ms=0.0)
            slots[i] = record
            self.callback.on_run_end(record)
        return slots

    def save(self, records: Sequence[RunRecord], model: FeatureModel):
        """Write `results.csv`, `summary.csv` and `experiment_config.yml` in the output directory."""
        output_dir = Path(self.config.output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)
        results_path = output_dir / "results.csv"
        if results_path.exists():
            logger.warning("Overwriting experiment results in %s", output_dir)

        write_results_csv(records, results_path)
        if records:
            write_summary_csv(summarize(records), output_dir / "summary.csv")

        config_data = {"model": model.name, **self.config.to_dict()}
        with (output_dir / "experiment_config.yml").open("w", encoding="utf-8") as fp:
            yaml.safe_dump(config_data, fp, sort_keys=False)
        self.callback.on_save(str(output_dir))


def write_results_csv(records: Iterable[RunRecord], path: str | Path):
    """Write run records with header `experiment,model,repetition,seed,sample_size,time_ms,cov_t2,cov_t3`."""
    with Path(path).open("w", newline="", encoding="utf-8") as fp:
        writer = csv.DictWriter(fp, fieldnames=RESULTS_HEADER, lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(record.to_csv_row())


def run_experiments(
    model: FeatureModel,
    setups: Sequence[str] | None = None,
    repetitions: int = 10,
    root_seed: int = 0,
    nb_workers: int = 1,
    callback: ExperimentCallback | None = None,
) -> list[RunRecord]:
    """Run experiment setups without writing any file.

    Returns
    -------
    list of RunRecord
        `repetitions * len(setups)` records in (setup, repetition) order
    """
    config = ExperimentConfig(
        output_dir=None,
        repetitions=repetitions,
        root_seed=root_seed,
        nb_workers=nb_workers,
    )
    if setups is not None:
        config = dataclasses.replace(config, setups=list(setups))
    return ExperimentRunner(config, callback if callback is not None else ExperimentCallback()).run(model)
