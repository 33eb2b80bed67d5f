from __future__ import annotations

__all__ = ["InputConverter", "OutputConverter"]

import abc
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel


class InputConverter:
    """Abstract class for loading feature models from external formats."""

    @abc.abstractmethod
    def load(self, path: str | Path, **kwargs) -> FeatureModel:
        raise NotImplementedError


class OutputConverter:
    """Abstract class for writing feature models to external formats."""

    @abc.abstractmethod
    def save(self, model: FeatureModel, path: str | Path, **kwargs) -> None:
        raise NotImplementedError
