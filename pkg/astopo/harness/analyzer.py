"""
Run the metric suite on one graph and collect the results into a MetricReport.

A failing metric never aborts the run: its reason is recorded under
`absent` and the remaining metrics are still computed.
"""
import logging
import math
import time
from typing import Callable, Optional

from ..core.errors import CliqueTimeout, UndefinedMetricError
from ..core.graph import Graph
from ..core.models import METRIC_NAMES, MetricOptions
from ..metrics import (
    assortativity,
    centrality,
    clustering,
    coreness,
    degree_profile,
    normalized_laplacian_spectrum,
    path_stats,
    rich_club,
    shortest_path_sweep,
    top_clique_size,
)
from .reports import MetricReport

logger = logging.getLogger(__name__)


def _finite_or_none(value: float) -> Optional[float]:
    return None if math.isnan(value) else float(value)


class _ReportBuilder:
    def __init__(self, g: Graph, options: MetricOptions, graph_id: str):
        self.g = g
        self.options = options
        self.report = MetricReport(graph_id=graph_id, n=g.node_count, m=g.edge_count)
        self._sweep = None

    def sweep(self):
        if self._sweep is None:
            start = time.perf_counter()
            self._sweep = shortest_path_sweep(self.g)
            logger.debug("Shortest-path sweep for %s took %.2fs",
                         self.report.graph_id, time.perf_counter() - start)
        return self._sweep

    def run(self, metric: str, compute: Callable[[], None]):
        if not self.options.enabled(metric):
            self.report.absent[metric] = "not requested"
            return
        try:
            compute()
        except Exception as exc:
            self.report.absent[metric] = f"{type(exc).__name__}: {exc}"
            logger.warning("Metric %s failed on %s: %s", metric, self.report.graph_id, exc)

    # Metric sections; each fills report.scalars / report.distributions
    def degree(self):
        profile = degree_profile(self.g)
        self.report.scalars["avg_degree"] = profile.avg_degree
        self.report.scalars["max_degree"] = profile.max_degree
        self.report.distributions["p_k"] = dict(profile.p_k)
        self.report.distributions["knn_norm"] = dict(profile.knn_norm)

    def assortativity(self):
        try:
            self.report.scalars["assortativity"] = assortativity(self.g)
        except UndefinedMetricError as exc:
            self.report.scalars["assortativity"] = None
            self.report.absent["assortativity"] = f"undefined: {exc}"

    def clustering(self):
        profile = clustering(self.g, self.options.clustering_mode)
        self.report.scalars["gamma"] = profile.gamma
        self.report.scalars["gamma_literal"] = profile.gamma_literal
        self.report.distributions["c_of_k"] = dict(profile.c_of_k)

    def rich_club(self):
        self.report.distributions["phi"] = dict(rich_club(self.g).phi)

    def paths(self):
        stats = path_stats(self.g, self.sweep())
        self.report.scalars["mean_path"] = _finite_or_none(stats.mean)
        self.report.scalars["diameter"] = stats.diameter
        self.report.scalars["unreachable_pairs"] = stats.unreachable_pairs
        self.report.distributions["p_h"] = dict(stats.p_h)
        if stats.reachable_pairs == 0:
            self.report.absent["mean_path"] = "no reachable pairs"

    def centrality(self):
        profile = centrality(self.g, self.sweep())
        self.report.scalars["avg_betweenness"] = profile.avg_betweenness

    def coreness(self):
        profile = coreness(self.g)
        self.report.scalars["max_core"] = profile.max_core
        self.report.distributions["coreness"] = dict(profile.layers)

    def clique(self):
        try:
            self.report.scalars["top_clique"] = top_clique_size(self.g, self.options.clique_budget)
        except CliqueTimeout as exc:
            self.report.scalars["top_clique"] = None
            self.report.absent["clique"] = (
                f"timeout after {exc.budget:g}s; lower bound {exc.lower_bound}"
            )
            logger.warning("Clique search on %s timed out; best size so far %d",
                           self.report.graph_id, exc.lower_bound)

    def spectrum(self):
        profile = normalized_laplacian_spectrum(
            self.g,
            mode=self.options.spectrum_mode,
            k=self.options.spectrum_k,
            full_limit=self.options.full_spectrum_limit,
        )
        self.report.scalars["lambda_min_nonzero"] = profile.smallest_nonzero
        self.report.scalars["lambda_max"] = profile.largest
        self.report.distributions["eigenvalues"] = list(profile.eigenvalues)
        if not profile.complete:
            self.report.absent["full_spectrum"] = (
                f"only the {self.options.spectrum_k} smallest and largest eigenvalues"
            )


def analyze(g: Graph, options: Optional[MetricOptions] = None,
            graph_id: str = "graph") -> MetricReport:
    """
    Compute every enabled metric on `g`.

    Metrics switched off in `options` are listed in `absent` as
    "not requested"; failures and clique timeouts are listed with a reason.
    """
    options = options or MetricOptions()
    builder = _ReportBuilder(g, options, graph_id)
    start = time.perf_counter()
    for metric in METRIC_NAMES:
        builder.run(metric, getattr(builder, metric))
    logger.info("Analyzed %s (N=%d, M=%d) in %.2fs", graph_id, g.node_count,
                g.edge_count, time.perf_counter() - start)
    return builder.report
