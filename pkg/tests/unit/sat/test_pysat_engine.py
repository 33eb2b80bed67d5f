import pytest

pytest.importorskip(modname="pysat", reason="python-sat is not installed")

from multiwise.sat import DPLLEngine, core_dead_features, create_engine, enumerate_all_configurations
from multiwise.sat.pysat_engine import PySatEngine


def test_create(car_model):
    assert isinstance(create_engine(car_model, "pysat"), PySatEngine)


def test_agrees_with_dpll(car_model):
    engine = PySatEngine(car_model)
    reference = DPLLEngine(car_model)
    assert engine.propagate([6]) == reference.propagate([6])
    assert engine.propagate([4, 5]) is None
    for assumptions in ([], [4], [4, 5], [-1], [8, -7]):
        assert engine.solve(assumptions) == reference.solve(assumptions)
    assert engine.nb_calls == 5


def test_model_and_phases(car_model):
    engine = PySatEngine(car_model)
    engine.reset_phases(selected=False)
    assert engine.solve([6])
    solution = engine.get_model()
    assert len(solution) == 11
    assert car_model.is_satisfied_by(solution)


def test_analyses(car_model):
    engine = PySatEngine(car_model)
    assert core_dead_features(car_model, engine) == (["Car", "Carbody", "Gearbox"], [])
    assert len(enumerate_all_configurations(car_model, cap=100, engine=engine)) == 34
