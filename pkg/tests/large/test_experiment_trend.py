import csv

import numpy as np
import pytest

from multiwise.experiments import ExperimentCallback, ExperimentConfig, ExperimentRunner
from multiwise.interactions import enumerate_valid_interactions
from multiwise.io import load_feature_model, save_feature_tree
from multiwise.tools import generate_feature_tree

_SPLIT_SETUPS = ["Exp2", "Exp3", "Exp4", "Exp5", "Exp6"]


@pytest.fixture(scope="module")
def model(tmp_path_factory):
    model_path = tmp_path_factory.mktemp("trend") / "synthetic.uvl"
    save_feature_tree(generate_feature_tree(50, seed=0, nb_constraints=80), model_path)
    return load_feature_model(model_path)


@pytest.fixture(scope="module")
def experiment(model, tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("results")
    config = ExperimentConfig(output_dir=str(out_dir), repetitions=10, root_seed=0, record_time=False)
    records = ExperimentRunner(config, ExperimentCallback()).run(model)
    with (out_dir / "results.csv").open() as fp:
        rows = list(csv.DictReader(fp))
    return records, rows


@pytest.fixture(scope="module")
def results(experiment):
    return experiment[1]


@pytest.fixture(scope="module")
def records(experiment):
    return experiment[0]


def _sizes(rows, setup_id):
    return [int(row["sample_size"]) for row in rows if row["experiment"] == setup_id]


def _tuple_counts(records, setup_id):
    return [record.nb_tuples for record in records if record.experiment_id == setup_id]


def _median(values):
    return np.percentile(values, 50, method="lower")


def test_all_runs_recorded(results):
    assert len(results) == 70
    assert [row["experiment"] for row in results[::10]] == [f"Exp{i}" for i in range(1, 8)]
    assert all(row["time_ms"] == "0.000" for row in results)


def test_baselines_match_extreme_splits(results):
    assert _sizes(results, "Exp1") == _sizes(results, "Exp2")
    assert _sizes(results, "Exp6") == _sizes(results, "Exp7")


def test_baselines_enumerate_the_same_tuples(model, records):
    pair_wise = len(enumerate_valid_interactions(model, model.features, 2))
    three_wise = len(enumerate_valid_interactions(model, model.features, 3))
    assert _tuple_counts(records, "Exp1") == _tuple_counts(records, "Exp2") == [pair_wise] * 10
    assert _tuple_counts(records, "Exp6") == _tuple_counts(records, "Exp7") == [three_wise] * 10


def test_three_wise_baseline_is_larger(results):
    assert _median(_sizes(results, "Exp7")) >= _median(_sizes(results, "Exp1"))


def test_size_grows_with_three_wise_share(results):
    medians = [_median(_sizes(results, setup_id)) for setup_id in _SPLIT_SETUPS]
    assert medians == sorted(medians)
    assert medians[0] < medians[-1]


def test_single_group_coverage(results):
    for row in results:
        if row["experiment"] in ("Exp1", "Exp2", "Exp6", "Exp7"):
            assert float(row["cov_t2"]) == 1
        if row["experiment"] in ("Exp6", "Exp7"):
            assert float(row["cov_t3"]) == 1
