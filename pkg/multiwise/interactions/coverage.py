"""Coverage of interaction tuples by samples."""

from __future__ import annotations

__all__ = [
    "CoverageReport",
    "tuple_covered",
    "uncovered_tuples",
    "coverage_ratio",
    "coverage_report",
    "write_coverage_csv",
]

import csv
import dataclasses
import logging
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

from multiwise.interactions.enumeration import enumerate_valid_interactions
from multiwise.interactions.index import CoverageIndex

if TYPE_CHECKING:
    from multiwise.core.configuration import PartialConfiguration
    from multiwise.core.feature_model import FeatureModel
    from multiwise.interactions.tuples import InteractionTuple, TupleSet
    from multiwise.sat.engine import SatEngine

logger = logging.getLogger(__name__)


def tuple_covered(configuration: PartialConfiguration, interaction: InteractionTuple) -> bool:
    """Check whether a configuration agrees with every literal of a tuple."""
    return all(lit in configuration.literals for lit in interaction.literals)


def uncovered_tuples(tuple_set: TupleSet, sample: Iterable[PartialConfiguration]) -> TupleSet:
    """Return the tuples covered by no configuration of `sample`."""
    index = CoverageIndex(configuration.literals for configuration in sample)
    return tuple_set.with_tuples(t for t in tuple_set if not index.covers(t.literals))


def coverage_ratio(
    model: FeatureModel,
    sample: Iterable[PartialConfiguration],
    t: int,
    scope: Sequence[str] | None = None,
    tuple_set: TupleSet | None = None,
    engine: SatEngine | None = None,
) -> Fraction:
    """Ratio of valid t-wise tuples over `scope` covered by `sample`.

    Parameters
    ----------
    model : FeatureModel
        The model
    sample : iterable of PartialConfiguration
        The configurations (a `Sample` is accepted)
    t : int
        Interaction strength
    scope : sequence of str, optional
        Features the tuples range over, all features by default
    tuple_set : TupleSet, optional
        Precomputed valid tuples, skips enumeration when given
    engine : SatEngine, optional
        Engine used for enumeration

    Returns
    -------
    Fraction
        Covered over valid tuples, exactly 1 when there is no valid tuple
    """
    if tuple_set is None:
        scope = model.features if scope is None else scope
        tuple_set = enumerate_valid_interactions(model, scope, t, engine=engine)
    if not tuple_set.tuples:
        return Fraction(1)
    nb_uncovered = len(uncovered_tuples(tuple_set, sample))
    return Fraction(len(tuple_set) - nb_uncovered, len(tuple_set))


@dataclasses.dataclass(frozen=True)
class CoverageReport:
    """Coverage of one scope at one strength.

    Attributes
    ----------
    scope : str
        Label of the scope (group name or "all")
    t : int
        Interaction strength
    valid_tuples : int
        Number of valid tuples
    covered_tuples : int
        Number of valid tuples covered by the sample
    """

    scope: str
    t: int
    valid_tuples: int
    covered_tuples: int

    @property
    def ratio(self) -> Fraction:
        if self.valid_tuples == 0:
            return Fraction(1)
        return Fraction(self.covered_tuples, self.valid_tuples)

    def to_dict(self) -> dict[str, str | int]:
        return {
            "scope": self.scope,
            "t": self.t,
            "valid_tuples": self.valid_tuples,
            "covered_tuples": self.covered_tuples,
            "ratio": f"{float(self.ratio):.6f}",
        }


def coverage_report(
    model: FeatureModel,
    sample: Iterable[PartialConfiguration],
    scopes: Iterable[tuple[str, Sequence[str], int]],
    engine: SatEngine | None = None,
) -> list[CoverageReport]:
    """Measure coverage of a sample over several labelled scopes.

    Parameters
    ----------
    model : FeatureModel
        The model
    sample : iterable of PartialConfiguration
        The configurations
    scopes : iterable of (str, sequence of str, int)
        Label, features and strength of each measured scope
    engine : SatEngine, optional
        Engine used for enumeration

    Returns
    -------
    list of CoverageReport
        One report per scope, in input order
    """
    configurations = list(sample)
    reports = []
    for label, features, t in scopes:
        tuple_set = enumerate_valid_interactions(model, features, t, engine=engine)
        nb_uncovered = len(uncovered_tuples(tuple_set, configurations))
        report = CoverageReport(label, t, len(tuple_set), len(tuple_set) - nb_uncovered)
        logger.debug("Coverage of %s at t=%d: %d/%d", label, t, report.covered_tuples, report.valid_tuples)
        reports.append(report)
    return reports


def write_coverage_csv(reports: Iterable[CoverageReport], path: str | Path):
    """Write coverage reports as CSV with header `scope,t,valid_tuples,covered_tuples,ratio`."""
    with Path(path).open("w", newline="", encoding="utf-8") as fp:
        fieldnames = ["scope", "t", "valid_tuples", "covered_tuples", "ratio"]
        writer = csv.DictWriter(fp, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for report in reports:
            writer.writerow(report.to_dict())
