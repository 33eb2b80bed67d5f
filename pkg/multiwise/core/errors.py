from __future__ import annotations

__all__ = [
    "ModelParseError",
    "VoidModelError",
    "UnsatisfiableConfigurationError",
    "UnknownFeatureError",
    "CapExceededError",
    "SampleFormatError",
    "ExperimentRunError",
]


class ModelParseError(ValueError):
    """Raised when a feature model source (UVL subset or DIMACS) is invalid.

    Parameters
    ----------
    message : str
        Description of the problem
    line : int, optional
        1-based line of the offending input, when known
    column : int, optional
        1-based column of the offending input, when known
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            location = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{message} ({location})"
        super().__init__(message)


class VoidModelError(RuntimeError):
    """Raised when a feature model has no valid configuration."""


class UnsatisfiableConfigurationError(RuntimeError):
    """Raised when a partial configuration has no valid extension."""


class UnknownFeatureError(KeyError):
    """Raised when a name does not belong to the feature model."""

    def __str__(self) -> str:
        # KeyError quotes its argument, keep messages readable
        return str(self.args[0]) if self.args else ""


class CapExceededError(RuntimeError):
    """Raised when exhaustive enumeration goes over its configured cap."""


class SampleFormatError(ValueError):
    """Raised when a sample file cannot be parsed."""


class ExperimentRunError(RuntimeError):
    """Raised when a single experiment run fails.

    Attributes
    ----------
    experiment_id : str
        Identifier of the failing setup (Exp1..Exp7)
    repetition : int
        1-based repetition index
    seed : int
        Seed of the failing run
    """

    def __init__(self, experiment_id: str, repetition: int, seed: int, cause: BaseException):
        self.experiment_id = experiment_id
        self.repetition = repetition
        self.seed = seed
        msg = f"Run {experiment_id}#{repetition} (seed={seed}) failed: {cause}"
        super().__init__(msg)
