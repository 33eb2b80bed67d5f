from fractions import Fraction

import numpy as np
import pytest

from multiwise.core import PartialConfiguration
from multiwise.interactions import (
    CoverageReport,
    InteractionTuple,
    coverage_ratio,
    coverage_report,
    enumerate_valid_interactions,
    tuple_covered,
    uncovered_tuples,
    write_coverage_csv,
)
from multiwise.sampling import Sample, covering_strategy
from multiwise.sat import complete_configuration, enumerate_all_configurations
from multiwise.tools import generate_feature_model
from tests._oracle import brute_force_ratio

_GROUP_ONE = ["Car", "Radio", "Gearbox"]
_GROUP_TWO = ["Carbody", "Manual", "Automatic"]


@pytest.fixture()
def group_one_sample(car_model):
    return covering_strategy(car_model, _GROUP_ONE, 1)


def test_tuple_covered(car_model):
    configuration = complete_configuration(car_model, PartialConfiguration.from_names(car_model, ["Manual", "Radio"]))
    assert tuple_covered(configuration, InteractionTuple.from_names(car_model, ["Carbody", "Manual"]))
    assert not tuple_covered(configuration, InteractionTuple.from_names(car_model, ["!Manual", "Automatic"]))
    assert tuple_covered(configuration, InteractionTuple.from_names(car_model, ["Radio"]))


def test_uncovered_tuples(car_model, group_one_sample):
    group_one = enumerate_valid_interactions(car_model, _GROUP_ONE, 1)
    assert len(uncovered_tuples(group_one, group_one_sample)) == 0
    assert uncovered_tuples(group_one, []) == group_one
    empty = group_one.with_tuples([])
    assert len(uncovered_tuples(empty, group_one_sample)) == 0


def test_coverage_ratio(car_model, group_one_sample):
    assert coverage_ratio(car_model, group_one_sample, 1, _GROUP_ONE) == 1
    assert coverage_ratio(car_model, Sample(car_model), 2, _GROUP_TWO) == 0
    assert coverage_ratio(car_model, Sample(car_model), 0) == 1
    ratio = coverage_ratio(car_model, group_one_sample, 2)
    assert isinstance(ratio, Fraction)
    assert 0 < ratio < 1


def test_coverage_ratio_against_brute_force(car_model, group_one_sample):
    configurations = enumerate_all_configurations(car_model, cap=100)
    for t in (1, 2, 3):
        expected = brute_force_ratio(car_model, configurations, group_one_sample, car_model.features, t)
        assert float(coverage_ratio(car_model, group_one_sample, t)) == pytest.approx(expected)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("t", [1, 2])
def test_coverage_ratio_against_brute_force_on_synthetic_models(seed, t):
    model = generate_feature_model(14, seed=seed)
    configurations = enumerate_all_configurations(model, cap=10**5)
    rng = np.random.default_rng(seed)
    picked = rng.choice(len(configurations), size=min(3, len(configurations)), replace=False)
    sample = [configurations[i] for i in sorted(picked)]
    for scope in (model.features, model.features[::2]):
        expected = brute_force_ratio(model, configurations, sample, scope, t)
        assert float(coverage_ratio(model, sample, t, scope)) == pytest.approx(expected)


def test_coverage_is_monotone(car_model):
    configurations = enumerate_all_configurations(car_model, cap=100)
    tuple_set = enumerate_valid_interactions(car_model, car_model.features, 2)
    previous = Fraction(0)
    for size in range(len(configurations) + 1):
        ratio = coverage_ratio(car_model, configurations[:size], 2, tuple_set=tuple_set)
        assert ratio >= previous
        previous = ratio
    assert previous == 1


@pytest.mark.parametrize("seed", range(5))
def test_three_wise_coverage_implies_pair_wise(seed):
    model = generate_feature_model(9, seed=seed)
    sample = covering_strategy(model, model.features, 3)
    assert coverage_ratio(model, sample, 3) == 1
    assert coverage_ratio(model, sample, 2) == 1
    assert coverage_ratio(model, sample, 1) == 1


def test_coverage_report(tmp_path, car_model, car_spec, group_one_sample):
    reports = coverage_report(car_model, group_one_sample, car_spec.scopes(car_model))
    assert [report.scope for report in reports] == ["TG_1", "TG_2", "default"]
    assert (reports[0].valid_tuples, reports[0].covered_tuples, reports[0].ratio) == (4, 4, 1)
    assert reports[1].valid_tuples == 6
    assert reports[2].ratio == 1

    path = tmp_path / "coverage.csv"
    write_coverage_csv(reports, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "scope,t,valid_tuples,covered_tuples,ratio"
    assert lines[1] == "TG_1,1,4,4,1.000000"
    assert lines[3] == "default,0,0,0,1.000000"


def test_report_ratio():
    report = CoverageReport("all", 2, 3, 2)
    assert report.ratio == Fraction(2, 3)
    assert report.to_dict()["ratio"] == "0.666667"
    assert CoverageReport("empty", 2, 0, 0).ratio == 1
