import logging

import pytest

from multiwise.sat import DPLLEngine, create_engine


def test_create_dpll(car_model):
    engine = create_engine(car_model)
    assert isinstance(engine, DPLLEngine)
    assert engine.nb_vars == 11


def test_unknown_kind(car_model):
    with pytest.raises(ValueError, match="Unknown engine kind"):
        create_engine(car_model, "cadical")


def test_pysat_fallback(mocker, caplog, car_model):
    mocker.patch("multiwise.sat.engine.modules_are_available", return_value=False)
    with caplog.at_level(logging.WARNING, logger="multiwise.sat.engine"):
        engine = create_engine(car_model, "pysat")
    assert isinstance(engine, DPLLEngine)
    assert "falling back to the internal DPLL engine" in caplog.text
