import logging

import pytest

from multiwise.core import PartialConfiguration, SampleFormatError, UnknownFeatureError, UnsatisfiableConfigurationError
from multiwise.io import load_sample, read_sample, save_sample, write_sample
from multiwise.sampling import MultiWiseSampler, Sample
from multiwise.sat import complete_configuration

_MINIMAL = "Car;Carbody;Gearbox;!Manual;Automatic;!Radio;!Ports;!USB;!CD;!Navigation;!Bluetooth"


def test_write(car_model):
    sample = Sample(car_model, [complete_configuration(car_model, [1])])
    assert write_sample(sample, seed=7) == f"# model=Car seed=7\n{_MINIMAL}\n"


def test_write_partial_configuration(car_model):
    sample = Sample(car_model, [PartialConfiguration(car_model, frozenset({1}))])
    with pytest.raises(ValueError, match="Only complete configurations"):
        write_sample(sample)


def test_read(car_model):
    manual = "  Car ; Carbody;Gearbox;Manual;!Automatic;!Radio;!Ports;!USB;!CD;!Navigation;!Bluetooth"
    text = f"# model=Car seed=7\n\n{_MINIMAL}\n{manual}\n"
    sample = read_sample(text, car_model)
    assert len(sample) == 2
    assert sample.is_complete
    assert sample[1].selected == ["Car", "Carbody", "Gearbox", "Manual"]


def test_round_trip(tmp_path, car_model, car_spec):
    sample = MultiWiseSampler(car_model).run(car_spec)
    path = tmp_path / "sample.txt"
    save_sample(sample, path, seed=0)
    assert load_sample(path, car_model) == sample


def test_duplicates_dropped(car_model, caplog):
    with caplog.at_level(logging.WARNING, logger="multiwise.io.sample_file"):
        sample = read_sample(f"{_MINIMAL}\n{_MINIMAL}\n", car_model)
    assert len(sample) == 1
    assert "Dropping duplicate configuration on line 2" in caplog.text


TEST_ERRORS = [
    (_MINIMAL + ";", SampleFormatError, "Empty entry on line 1"),
    (_MINIMAL + ";!", SampleFormatError, "Empty entry"),
    (_MINIMAL + ";!Car", SampleFormatError, "decided twice"),
    ("Car;Carbody", SampleFormatError, "decides 2 of the 11 features"),
    (_MINIMAL.replace("!Manual", "!!Manual"), SampleFormatError, "Malformed entry '!!Manual' on line 1"),
    (_MINIMAL.replace("Carbody", "Car body"), SampleFormatError, "Malformed entry"),
    (_MINIMAL.replace("!Radio", "Radio!"), SampleFormatError, "Malformed entry"),
    (_MINIMAL + ";Sunroof", UnknownFeatureError, "Unknown feature 'Sunroof'"),
    (_MINIMAL.replace("!Manual", "Manual"), UnsatisfiableConfigurationError, "line 1 is not valid"),
]


@pytest.mark.parametrize(("text", "error", "match"), TEST_ERRORS)
def test_errors(car_model, text, error, match):
    with pytest.raises(error, match=match):
        read_sample(text, car_model)
