"""
astopo: synthetic and measured AS-level Internet topologies.

Five generators (Waxman, BA, GLP, Inet, PFP), a metric suite (degree,
assortativity, clustering, rich club, shortest paths, betweenness, coreness,
maximum clique, normalized Laplacian spectrum), edge-list ingestion and a
harness that compares a measured topology against size-matched models.
"""

__version__ = "1.0.0"

from .core.errors import TopologyError, ConfigError
from .core.graph import Graph, build_graph
from .core.models import BaConfig, GlpConfig, InetConfig, MetricOptions, PfpConfig, WaxmanConfig
from .datasets import parse_edge_list, read_edge_list, write_edge_list
from .generators import MODEL_NAMES, generate
from .harness import analyze, emit_report, run_comparison

# Main public API
__all__ = [
    "TopologyError",
    "ConfigError",
    "Graph",
    "build_graph",
    "WaxmanConfig",
    "BaConfig",
    "GlpConfig",
    "InetConfig",
    "PfpConfig",
    "MetricOptions",
    "MODEL_NAMES",
    "generate",
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
    "analyze",
    "run_comparison",
    "emit_report",
    "create_example_configs"
]


def create_example_configs(n: int = 1000) -> dict:
    """One config per model at node count n (Inet is raised to its minimum)."""
    return {
        "waxman": WaxmanConfig(n=n, alpha=0.15, beta=0.2, target_degree=4.0),
        "ba": BaConfig(n=n, m=2, m0=3),
        "glp": GlpConfig(n=n, m=1, m0=10, p_add=0.5305, beta_pref=0.6447),
        "inet": InetConfig(n=max(n, InetConfig().n), frac_degree_one=0.3, core_size=12),
        "pfp": PfpConfig(n=n, p_new=0.3, q_new=0.1, delta=0.048),
    }
