"""Metric reports, the model comparison harness and report writers."""

from .reports import (
    CSV_HEADER,
    DISTRIBUTION_NAMES,
    REPORT_FORMATS,
    SCALAR_NAMES,
    ComparisonRun,
    MetricReport,
    ModelRuns,
    emit_metric_report,
    emit_report,
)
from .analyzer import analyze
from .comparison import (
    DEFAULT_SEEDS_PER_MODEL,
    ks_statistics,
    pmf_ks_distance,
    run_comparison,
    summarize,
)

__all__ = [
    "CSV_HEADER",
    "DISTRIBUTION_NAMES",
    "REPORT_FORMATS",
    "SCALAR_NAMES",
    "ComparisonRun",
    "MetricReport",
    "ModelRuns",
    "emit_metric_report",
    "emit_report",
    "analyze",
    "DEFAULT_SEEDS_PER_MODEL",
    "ks_statistics",
    "pmf_ks_distance",
    "run_comparison",
    "summarize"
]
