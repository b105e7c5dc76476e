"""
Comparison harness: measure a target topology, generate size-matched
instances of each model and summarize how their metrics line up.
"""
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import ks_2samp

from ..core.errors import ConfigError
from ..core.graph import Graph
from ..core.models import MetricOptions
from ..generators import MODEL_NAMES, child_seed, generate, model_config
from ..utils.validation import validate_choice, validate_integer_range
from .analyzer import analyze
from .reports import SCALAR_NAMES, ComparisonRun, MetricReport, ModelRuns

logger = logging.getLogger(__name__)

DEFAULT_SEEDS_PER_MODEL = 10
PMF_DISTRIBUTIONS = ("p_k", "p_h", "coreness")

_Task = Tuple[str, Any, int, MetricOptions, str]


def pmf_ks_distance(p: Mapping[int, float], q: Mapping[int, float]) -> float:
    """Largest gap between the CDFs of two integer-keyed distributions."""
    keys = sorted(set(p) | set(q))
    if not keys:
        return 0.0
    cdf_p = np.cumsum([p.get(k, 0.0) for k in keys])
    cdf_q = np.cumsum([q.get(k, 0.0) for k in keys])
    # Coreness layers are counts, not probabilities
    if cdf_p[-1] > 0:
        cdf_p = cdf_p / cdf_p[-1]
    if cdf_q[-1] > 0:
        cdf_q = cdf_q / cdf_q[-1]
    return float(np.max(np.abs(cdf_p - cdf_q)))


def ks_statistics(target: MetricReport, report: MetricReport) -> Dict[str, Optional[float]]:
    """KS distance per distribution present in both reports."""
    result: Dict[str, Optional[float]] = {}
    for name in PMF_DISTRIBUTIONS:
        if name in target.distributions and name in report.distributions:
            result[name] = pmf_ks_distance(target.distributions[name], report.distributions[name])
    if "eigenvalues" in target.distributions and "eigenvalues" in report.distributions:
        result["eigenvalues"] = float(ks_2samp(target.distributions["eigenvalues"],
                                               report.distributions["eigenvalues"]).statistic)
    return result


def summarize(reports: Sequence[MetricReport]) -> Dict[str, Dict[str, float]]:
    """Mean, min and max of every scalar across reports, skipping missing values."""
    summary = {}
    for name in SCALAR_NAMES:
        values = [r.scalars[name] for r in reports if r.scalars.get(name) is not None]
        if values:
            summary[name] = {
                "mean": float(np.mean(values)),
                "min": float(np.min(values)),
                "max": float(np.max(values)),
            }
    return summary


def _generate_and_analyze(task: _Task) -> MetricReport:
    model, cfg, seed, options, graph_id = task
    return analyze(generate(model, cfg, seed), options, graph_id)


def _execute(tasks: List[_Task], jobs: int) -> List[MetricReport]:
    if jobs == 1 or len(tasks) <= 1:
        return [_generate_and_analyze(task) for task in tasks]
    logger.info("Running %d generate/analyze tasks on %d processes", len(tasks), jobs)
    # fork is unsafe once numba has started its threading layer here
    context = multiprocessing.get_context("spawn")
    with ProcessPoolExecutor(max_workers=jobs, mp_context=context) as pool:
        return list(pool.map(_generate_and_analyze, tasks))


def _size_matched(model: str, base: Any, n: int) -> Any:
    cfg = base.for_size(n)
    before, after = asdict(base), asdict(cfg)
    clamped = {k: (before[k], after[k]) for k in before if k != "n" and before[k] != after[k]}
    if clamped:
        logger.info("Clamped %s parameters for N=%d: %s", model, n,
                    ", ".join(f"{k} {old} -> {new}" for k, (old, new) in clamped.items()))
    return cfg


def run_comparison(target: Graph, models: Sequence[str],
                   seeds_per_model: int = DEFAULT_SEEDS_PER_MODEL,
                   options: Optional[MetricOptions] = None,
                   master_seed: int = 0,
                   model_configs: Optional[Mapping[str, Any]] = None,
                   target_id: str = "target",
                   compute_ks: bool = True,
                   jobs: Optional[int] = None) -> ComparisonRun:
    """
    Compare `target` against `seeds_per_model` synthetic graphs per model.

    Every synthetic graph has the target's node count. Models whose
    constraints cannot be met at that size (Inet below its minimum node
    count) get an `inapplicable` record instead of reports. Run j of model
    i uses child_seed(master_seed, i, j) with i the model's index in
    MODEL_NAMES, so results depend only on (target, models, master_seed)
    and never on `jobs`.
    """
    validate_integer_range(seeds_per_model, "seeds_per_model", 1)
    options = options or MetricOptions()
    jobs = options.jobs if jobs is None else jobs
    validate_integer_range(jobs, "jobs", 1)
    model_configs = dict(model_configs or {})
    for model in list(models) + list(model_configs):
        validate_choice(model, MODEL_NAMES, "model")

    n = target.node_count
    target_report = analyze(target, options, target_id)

    runs: List[ModelRuns] = []
    tasks: List[_Task] = []
    for model in models:
        base = model_configs.get(model) or model_config(model)
        runs_for_model = ModelRuns(model=model)
        runs.append(runs_for_model)
        try:
            cfg = _size_matched(model, base, n)
        except ConfigError as exc:
            runs_for_model.config = asdict(base)
            runs_for_model.inapplicable = str(exc)
            logger.warning("Model %s is inapplicable at N=%d: %s", model, n, exc)
            continue
        runs_for_model.config = asdict(cfg)
        counter = MODEL_NAMES.index(model)
        for run in range(seeds_per_model):
            seed = child_seed(master_seed, counter, run)
            runs_for_model.seeds.append(seed)
            tasks.append((model, cfg, seed, options, f"{model}-{run:03d}"))
        logger.info("Queued %d %s instances with N=%d", seeds_per_model, model, n)

    reports = iter(_execute(tasks, jobs))
    for runs_for_model in runs:
        runs_for_model.reports = [next(reports) for _ in runs_for_model.seeds]
        runs_for_model.summary = summarize(runs_for_model.reports)
        if compute_ks:
            per_report = [ks_statistics(target_report, r) for r in runs_for_model.reports]
            names = sorted({name for stats in per_report for name in stats})
            runs_for_model.ks = {name: [stats.get(name) for stats in per_report] for name in names}

    return ComparisonRun(
        target=target_report,
        runs=runs,
        master_seed=master_seed,
        seeds_per_model=seeds_per_model,
    )
