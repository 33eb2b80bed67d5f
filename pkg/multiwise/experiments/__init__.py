__all__ = [
    "DefaultPrinterCallback",
    "ExperimentCallback",
    "ExperimentConfig",
    "ExperimentRunner",
    "RunRecord",
    "run_experiments",
    "write_results_csv",
    "EXPERIMENT_SETUPS",
    "ExperimentSetup",
    "SetupKind",
    "build_setup",
    "get_setup",
    "SummaryRow",
    "summarize",
    "write_summary_csv",
]

from multiwise.experiments.callbacks import DefaultPrinterCallback, ExperimentCallback
from multiwise.experiments.config import ExperimentConfig
from multiwise.experiments.runner import ExperimentRunner, RunRecord, run_experiments, write_results_csv
from multiwise.experiments.setups import EXPERIMENT_SETUPS, ExperimentSetup, SetupKind, build_setup, get_setup
from multiwise.experiments.summary import SummaryRow, summarize, write_summary_csv
