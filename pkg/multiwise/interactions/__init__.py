__all__ = [
    "CoverageIndex",
    "CoverageReport",
    "coverage_ratio",
    "coverage_report",
    "tuple_covered",
    "uncovered_tuples",
    "write_coverage_csv",
    "enumerate_valid_interactions",
    "InteractionTuple",
    "TupleSet",
]

from multiwise.interactions.coverage import (
    CoverageReport,
    coverage_ratio,
    coverage_report,
    tuple_covered,
    uncovered_tuples,
    write_coverage_csv,
)
from multiwise.interactions.enumeration import enumerate_valid_interactions
from multiwise.interactions.index import CoverageIndex
from multiwise.interactions.tuples import InteractionTuple, TupleSet
