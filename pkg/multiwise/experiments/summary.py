from __future__ import annotations

__all__ = ["SummaryRow", "summarize", "write_summary_csv", "SUMMARY_HEADER", "METRICS"]

import csv
import dataclasses
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterable, Sequence

import numpy as np

if TYPE_CHECKING:
    from multiwise.experiments.runner import RunRecord

SUMMARY_HEADER = ["experiment", "model", "metric", "median", "q1", "q3", "min", "max"]
METRICS = ("sample_size", "time_ms", "cov_t2", "cov_t3")
_FORMATS = {"sample_size": "{:.0f}", "time_ms": "{:.3f}", "cov_t2": "{:.6f}", "cov_t3": "{:.6f}"}


@dataclasses.dataclass(frozen=True)
class SummaryRow:
    """Distribution of one metric over the runs of a setup on a model.

    The median is the lower median (for an even number of runs, the smaller
    of the two middle values), quartiles use the same convention.
    """

    experiment_id: str
    model_name: str
    metric: str
    median: float
    q1: float
    q3: float
    min: float
    max: float

    def to_csv_row(self) -> dict[str, Any]:
        fmt = _FORMATS[self.metric]
        return {
            "experiment": self.experiment_id,
            "model": self.model_name,
            "metric": self.metric,
            **{key: fmt.format(getattr(self, key)) for key in ("median", "q1", "q3", "min", "max")},
        }


def summarize(records: Sequence[RunRecord]) -> list[SummaryRow]:
    """Compute median, quartiles and range of every metric per setup and model.

    Rows follow the order in which setups and models first appear in
    `records`, then the metric order `sample_size, time_ms, cov_t2, cov_t3`.

    Raises
    ------
    ValueError
        If `records` is empty
    """
    if not records:
        msg = "Cannot summarize an empty list of run records"
        raise ValueError(msg)

    groups: dict[tuple[str, str], list[RunRecord]] = {}
    for record in records:
        groups.setdefault((record.experiment_id, record.model_name), []).append(record)

    rows = []
    for (experiment_id, model_name), group in groups.items():
        for metric in METRICS:
            values = np.array([getattr(record, metric) for record in group], dtype=float)
            median, q1, q3 = np.percentile(values, [50, 25, 75], method="lower")
            rows.append(
                SummaryRow(
                    experiment_id=experiment_id,
                    model_name=model_name,
                    metric=metric,
                    median=float(median),
                    q1=float(q1),
                    q3=float(q3),
                    min=float(values.min()),
                    max=float(values.max()),
                )
            )
    return rows


def write_summary_csv(rows: Iterable[SummaryRow], path: str | Path):
    with Path(path).open("w", newline="", encoding="utf-8") as fp:
        writer = csv.DictWriter(fp, fieldnames=SUMMARY_HEADER, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row.to_csv_row())
