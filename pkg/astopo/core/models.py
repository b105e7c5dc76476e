"""
Configuration models for topology generators and metric analysis.

Defaults for GLP, PFP and Inet are calibration inputs taken from each model's
original publication; they are not measurements of any particular AS graph.
"""
import warnings
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from .errors import ConfigError
from ..utils.validation import (
    validate_choice,
    validate_integer_range,
    validate_non_negative,
    validate_open_unit_interval,
    validate_positive,
    validate_probability,
    validate_unit_interval,
)

INET_MIN_NODES = 3037


@dataclass(frozen=True)
class WaxmanConfig:
    """
    Waxman random graph on a square plane.

    Candidate pair (u, v) is accepted with probability
        P(u, v) = alpha * exp(-d / (beta * L))
    where d is the Euclidean distance and L the largest inter-node distance.
    """
    n: int = 1000
    alpha: float = 0.15
    beta: float = 0.2
    plane_size: float = 1.0
    target_degree: float = 4.0    # Average degree reached before rewiring

    def __post_init__(self):
        validate_integer_range(self.n, "n", 2)
        validate_unit_interval(self.alpha, "alpha")
        validate_unit_interval(self.beta, "beta")
        validate_positive(self.plane_size, "plane_size")
        validate_positive(self.target_degree, "target_degree")
        if self.target_degree > self.n - 1:
            raise ConfigError(
                f"target_degree must be <= n-1 = {self.n - 1}, got {self.target_degree}"
            )
        if self.target_degree > 0.5 * (self.n - 1) and self.n > 10:
            warnings.warn(
                f"Waxman target_degree={self.target_degree} exceeds half of n-1; "
                f"the graph will be dense and edge trials slow to converge.",
                UserWarning
            )

    @property
    def target_edges(self) -> int:
        return max(self.n - 1, int(round(self.target_degree * self.n / 2)))

    def for_size(self, n: int) -> "WaxmanConfig":
        return replace(self, n=n, target_degree=min(self.target_degree, n - 1))


@dataclass(frozen=True)
class BaConfig:
    """
    Barabasi-Albert preferential attachment grown from an m0-node ring.

    Final edge count is exactly m0 + m * (n - m0).
    """
    n: int = 1000
    m: int = 2          # Links added per arriving node
    m0: int = 3         # Seed ring size

    def __post_init__(self):
        validate_integer_range(self.m, "m", 1)
        validate_integer_range(self.m0, "m0", 3)
        if self.m > self.m0:
            raise ConfigError(f"m must be <= m0={self.m0}, got m={self.m}")
        if self.n < self.m0:
            raise ConfigError(f"n must be >= m0={self.m0}, got n={self.n}")

    @property
    def expected_edges(self) -> int:
        return self.m0 + self.m * (self.n - self.m0)

    def for_size(self, n: int) -> "BaConfig":
        m0 = min(self.m0, n)
        return replace(self, n=n, m0=m0, m=min(self.m, m0))


@dataclass(frozen=True)
class GlpConfig:
    """
    Generalized Linear Preference growth.

    Each step adds, with probability p_add, a new node with m links, and
    otherwise m links between existing nodes. Endpoints are chosen with
    probability proportional to (k - beta_pref).
    """
    n: int = 1000
    m: int = 1
    m0: int = 10
    p_add: float = 0.5305
    beta_pref: float = 0.6447

    def __post_init__(self):
        validate_integer_range(self.m, "m", 1)
        validate_integer_range(self.m0, "m0", 3)
        if self.m > self.m0:
            raise ConfigError(f"m must be <= m0={self.m0}, got m={self.m}")
        if self.n < self.m0:
            raise ConfigError(f"n must be >= m0={self.m0}, got n={self.n}")
        validate_probability(self.p_add, "p_add")
        if self.p_add == 0:
            raise ConfigError("p_add must be > 0, otherwise no node is ever added")
        if not self.beta_pref < 1:
            raise ConfigError(f"beta_pref must be < 1, got {self.beta_pref}")
        if self.beta_pref > 0.99:
            warnings.warn(
                f"beta_pref={self.beta_pref} leaves degree-1 nodes with almost no "
                f"attachment weight.",
                UserWarning
            )

    @property
    def minimum_edges(self) -> int:
        return self.m0 + self.m * (self.n - self.m0)

    def for_size(self, n: int) -> "GlpConfig":
        m0 = max(3, min(self.m0, n))
        return replace(self, n=n, m0=m0, m=min(self.m, m0))


@dataclass(frozen=True)
class InetConfig:
    """
    Inet-style degree-driven generator with a full-mesh core.

    Node degrees follow a power-law frequency model P(k) ~ k^-exponent for
    k >= 2 with a fixed fraction of degree-1 nodes. The core_size highest
    degree nodes are meshed, the rest attach by linear preference.
    """
    n: int = INET_MIN_NODES
    frac_degree_one: float = 0.3
    exponent: float = 2.2
    core_size: int = 12
    max_degree: Optional[int] = None    # None: natural cutoff n^(1/(exponent-1))

    def __post_init__(self):
        if self.n < INET_MIN_NODES:
            raise ConfigError(
                f"Inet requires n >= {INET_MIN_NODES} (the model's minimum node count), "
                f"got n={self.n}"
            )
        validate_open_unit_interval(self.frac_degree_one, "frac_degree_one")
        if not self.exponent > 1:
            raise ConfigError(f"exponent must be > 1, got {self.exponent}")
        validate_integer_range(self.core_size, "core_size", 2, self.n - 1)
        if self.max_degree is not None:
            validate_integer_range(self.max_degree, "max_degree", 2, self.n - 1)

    @property
    def degree_cutoff(self) -> int:
        if self.max_degree is not None:
            return self.max_degree
        natural = int(round(self.n ** (1.0 / (self.exponent - 1.0))))
        return max(2, min(self.n - 1, natural))

    def for_size(self, n: int) -> "InetConfig":
        return replace(self, n=n)


@dataclass(frozen=True)
class PfpConfig:
    """
    Positive-Feedback Preference growth.

    Per step, with probability p_new a new node joins one host and the host
    gains one link to a peer; with q_new the new node joins two hosts and one
    host gains a peer link; otherwise the new node joins one host and the host
    gains two peer links. Hosts and peers are chosen with weight
    k^(1 + delta * log10 k).
    """
    n: int = 1000
    p_new: float = 0.3
    q_new: float = 0.1
    delta: float = 0.048
    m0: int = 3

    def __post_init__(self):
        validate_probability(self.p_new, "p_new")
        validate_probability(self.q_new, "q_new")
        if self.p_new + self.q_new > 1:
            raise ConfigError(
                f"p_new + q_new must be <= 1, got {self.p_new + self.q_new}"
            )
        validate_non_negative(self.delta, "delta")
        validate_integer_range(self.m0, "m0", 3)
        if self.n < self.m0:
            raise ConfigError(f"n must be >= m0={self.m0}, got n={self.n}")

    def for_size(self, n: int) -> "PfpConfig":
        return replace(self, n=n, m0=min(self.m0, n))


METRIC_NAMES: Tuple[str, ...] = (
    "degree",
    "assortativity",
    "clustering",
    "rich_club",
    "paths",
    "centrality",
    "coreness",
    "clique",
    "spectrum",
)


@dataclass(frozen=True)
class MetricOptions:
    """Selection and knobs for a metric suite run."""
    metrics: Tuple[str, ...] = METRIC_NAMES
    clustering_mode: str = "restricted"     # 'restricted' or 'literal'
    spectrum_mode: str = "auto"             # 'auto', 'full' or 'extremes'
    spectrum_k: int = 50
    full_spectrum_limit: int = 3000
    clique_budget: float = 60.0             # Seconds
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "metrics", tuple(self.metrics))
        for name in self.metrics:
            validate_choice(name, METRIC_NAMES, "metric")
        validate_choice(self.clustering_mode, ("restricted", "literal"), "clustering_mode")
        validate_choice(self.spectrum_mode, ("auto", "full", "extremes"), "spectrum_mode")
        validate_integer_range(self.spectrum_k, "spectrum_k", 1)
        validate_integer_range(self.full_spectrum_limit, "full_spectrum_limit", 2)
        validate_positive(self.clique_budget, "clique_budget")
        validate_integer_range(self.jobs, "jobs", 1)

    def enabled(self, metric: str) -> bool:
        return metric in self.metrics
