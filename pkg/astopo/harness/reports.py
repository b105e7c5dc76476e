"""
Report containers and their JSON / CSV / plot-data serializations.

JSON layout (comparison.json):

    {
      "master_seed": int, "seeds_per_model": int,
      "target": <report>,
      "runs": [{"model": str, "config": {...}, "seeds": [int],
                "reports": [<report>], "summary": {scalar: {"mean","min","max"}},
                "ks": {distribution: [float]}, "inapplicable": str | null}]
    }
    <report> = {"graph_id": str, "n": int, "m": int,
                "scalars": {name: number | null},
                "distributions": {name: {key: value} | [eigenvalues]},
                "absent": {metric: reason}}

Distribution keys are integers written as JSON strings.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..core.errors import ConfigError
from ..utils.validation import validate_choice

SCALAR_NAMES = (
    "avg_degree",
    "max_degree",
    "assortativity",
    "gamma",
    "gamma_literal",
    "mean_path",
    "diameter",
    "unreachable_pairs",
    "avg_betweenness",
    "max_core",
    "top_clique",
    "lambda_min_nonzero",
    "lambda_max",
)
DISTRIBUTION_NAMES = ("p_k", "knn_norm", "c_of_k", "phi", "p_h", "coreness", "eigenvalues")
REPORT_FORMATS = ("json", "csv", "plotdata")
CSV_HEADER = ("graph_id", "model", "run", "seed", "metric", "value")

Distribution = Union[Dict[int, float], List[float]]


@dataclass
class MetricReport:
    """All computed scalars and distributions for one graph."""
    graph_id: str
    n: int
    m: int
    scalars: Dict[str, Optional[float]] = field(default_factory=dict)
    distributions: Dict[str, Distribution] = field(default_factory=dict)
    absent: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "scalars": dict(self.scalars),
            "distributions": {
                name: list(values) if isinstance(values, list)
                else {str(k): v for k, v in values.items()}
                for name, values in self.distributions.items()
            },
            "absent": dict(self.absent),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MetricReport":
        distributions = {}
        for name, values in data.get("distributions", {}).items():
            if isinstance(values, list):
                distributions[name] = list(values)
            else:
                distributions[name] = {int(k): v for k, v in values.items()}
        return cls(
            graph_id=data["graph_id"],
            n=data["n"],
            m=data["m"],
            scalars=dict(data.get("scalars", {})),
            distributions=distributions,
            absent=dict(data.get("absent", {})),
        )


@dataclass
class ModelRuns:
    """Every synthetic instance of one model, with cross-seed summaries."""
    model: str
    config: Dict[str, Any] = field(default_factory=dict)
    seeds: List[int] = field(default_factory=list)
    reports: List[MetricReport] = field(default_factory=list)
    summary: Dict[str, Dict[str, float]] = field(default_factory=dict)
    ks: Dict[str, List[Optional[float]]] = field(default_factory=dict)
    inapplicable: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "config": dict(self.config),
            "seeds": list(self.seeds),
            "reports": [r.to_dict() for r in self.reports],
            "summary": {k: dict(v) for k, v in self.summary.items()},
            "ks": {k: list(v) for k, v in self.ks.items()},
            "inapplicable": self.inapplicable,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ModelRuns":
        return cls(
            model=data["model"],
            config=dict(data.get("config", {})),
            seeds=list(data.get("seeds", [])),
            reports=[MetricReport.from_dict(r) for r in data.get("reports", [])],
            summary={k: dict(v) for k, v in data.get("summary", {}).items()},
            ks={k: list(v) for k, v in data.get("ks", {}).items()},
            inapplicable=data.get("inapplicable"),
        )


@dataclass
class ComparisonRun:
    """A measured target against size-matched synthetic graphs per model."""
    target: MetricReport
    runs: List[ModelRuns] = field(default_factory=list)
    master_seed: int = 0
    seeds_per_model: int = 1

    def model(self, name: str) -> ModelRuns:
        for runs in self.runs:
            if runs.model == name:
                return runs
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "master_seed": self.master_seed,
            "seeds_per_model": self.seeds_per_model,
            "target": self.target.to_dict(),
            "runs": [r.to_dict() for r in self.runs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ComparisonRun":
        return cls(
            target=MetricReport.from_dict(data["target"]),
            runs=[ModelRuns.from_dict(r) for r in data.get("runs", [])],
            master_seed=data.get("master_seed", 0),
            seeds_per_model=data.get("seeds_per_model", 1),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ComparisonRun":
        return cls.from_dict(json.loads(text))


# ----------------------------------------------------------------------
# Writers
# ----------------------------------------------------------------------
def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _scalar_rows(report: MetricReport, model: str, run: str, seed: str):
    for name in SCALAR_NAMES:
        if name in report.scalars:
            yield (report.graph_id, model, run, seed, name, _format_value(report.scalars[name]))


def _write_csv(path: Path, rows) -> Path:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    path.write_text(buffer.getvalue(), encoding="utf-8")
    return path


def plotdata_lines(values: Distribution) -> str:
    """Two-column 'x y' text; eigenvalues are numbered from 1."""
    if isinstance(values, list):
        pairs = enumerate(values, start=1)
    else:
        pairs = sorted(values.items())
    return "".join(f"{x} {_format_value(float(y))}\n" for x, y in pairs)


def _write_plotdata(directory: Path, report: MetricReport) -> List[Path]:
    target = directory / report.graph_id
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name in DISTRIBUTION_NAMES:
        if name in report.distributions:
            path = target / f"{name}.dat"
            path.write_text(plotdata_lines(report.distributions[name]), encoding="utf-8")
            written.append(path)
    return written


def emit_report(run: ComparisonRun, fmt: str, out: Union[str, Path]) -> List[Path]:
    """
    Write a ComparisonRun into directory `out`.

    json: comparison.json; csv: scalars.csv, one row per (graph, scalar);
    plotdata: plotdata/<graph_id>/<distribution>.dat.
    """
    validate_choice(fmt, REPORT_FORMATS, "format")
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        path = out / "comparison.json"
        path.write_text(run.to_json(), encoding="utf-8")
        return [path]
    if fmt == "csv":
        rows = list(_scalar_rows(run.target, "target", "", ""))
        for runs in run.runs:
            for index, (report, seed) in enumerate(zip(runs.reports, runs.seeds)):
                rows.extend(_scalar_rows(report, runs.model, str(index), str(seed)))
        return [_write_csv(out / "scalars.csv", rows)]
    written = _write_plotdata(out / "plotdata", run.target)
    for runs in run.runs:
        for report in runs.reports:
            written.extend(_write_plotdata(out / "plotdata", report))
    return written


def emit_metric_report(report: MetricReport, fmt: str, out: Union[str, Path]) -> List[Path]:
    """
    Write a single MetricReport: json and csv go to the file `out`,
    plotdata to the directory `out`.
    """
    validate_choice(fmt, REPORT_FORMATS, "format")
    out = Path(out)
    if fmt == "plotdata":
        out.mkdir(parents=True, exist_ok=True)
        return _write_plotdata(out, report)
    if out.is_dir():
        raise ConfigError(f"--out must be a file for format '{fmt}', got directory {out}")
    out.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        out.write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
        return [out]
    return [_write_csv(out, _scalar_rows(report, "", "", ""))]
