from __future__ import annotations

__all__ = ["ExperimentCallback", "DefaultPrinterCallback"]

import logging
from typing import TYPE_CHECKING

from tqdm import tqdm

if TYPE_CHECKING:
    from multiwise.experiments.config import ExperimentConfig
    from multiwise.experiments.runner import RunRecord
    from multiwise.experiments.setups import ExperimentSetup


class ExperimentCallback:
    """Base class for experiment runner callbacks."""

    def on_experiment_begin(self, config: ExperimentConfig, model_name: str):
        """Event called before the first run."""

    def on_experiment_end(self, records: list[RunRecord]):
        """Event called after the last run."""

    def on_setup_begin(self, setup: ExperimentSetup, nb_runs: int):
        """Event called before the runs of a setup."""

    def on_setup_end(self, setup: ExperimentSetup):
        """Event called after the runs of a setup."""

    def on_run_end(self, record: RunRecord):
        """Event called after each run."""

    def on_save(self, output_dir: str):
        """Event called once results are written."""


class DefaultPrinterCallback(ExperimentCallback):
    """Default implementation of :class:`~.experiments.ExperimentCallback`."""

    def __init__(self):
        self.logger = logging.getLogger(__class__.__name__)
        self.logger.setLevel(logging.INFO)

        console_handler = logging.StreamHandler()
        console_handler.setLevel(logging.INFO)
        formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        console_handler.setFormatter(formatter)

        # ensure a single handler for the logger
        for handler in self.logger.handlers:
            self.logger.removeHandler(handler)
        self.logger.addHandler(console_handler)

        self._progress_bar = None

    def on_experiment_begin(self, config, model_name):
        message = (
            f"Running experiments on '{model_name}':\n"
            f"\tSetups: {', '.join(config.setups)}\n"
            f"\tRepetitions: {config.repetitions}\n"
            f"\tRoot seed: {config.root_seed}\n"
            f"\tWorkers: {config.nb_workers}\n"
        )
        self.logger.info(message)

    def on_setup_begin(self, setup, nb_runs):
        self._progress_bar = tqdm(total=nb_runs, desc=setup.id, unit="run", leave=False)

    def on_run_end(self, record):
        if self._progress_bar is not None:
            self._progress_bar.update(1)
            self._progress_bar.set_postfix(size=record.sample_size)

    def on_setup_end(self, setup):
        if self._progress_bar is not None:
            self._progress_bar.close()
            self._progress_bar = None
        self.logger.info("Setup %s done", setup.id)

    def on_experiment_end(self, records):
        self.logger.info("Experiments done, %d runs", len(records))

    def on_save(self, output_dir):
        self.logger.info("Results saved in %s", output_dir)
