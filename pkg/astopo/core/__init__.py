"""Core components: graph type, configuration models, result containers."""

from .errors import (
    TopologyError,
    ConfigError,
    EmptyInputError,
    DuplicateEdgeError,
    ParseError,
    UndefinedMetricError,
    CliqueTimeout,
    SpectrumSizeLimit
)
from .graph import (
    Graph,
    BuildStats,
    ComponentPartition,
    build_graph,
    degree_sequence,
    connected_components,
    is_connected,
    largest_component
)
from .models import (
    WaxmanConfig,
    BaConfig,
    GlpConfig,
    InetConfig,
    PfpConfig,
    MetricOptions,
    METRIC_NAMES,
    INET_MIN_NODES
)

__all__ = [
    "TopologyError",
    "ConfigError",
    "EmptyInputError",
    "DuplicateEdgeError",
    "ParseError",
    "UndefinedMetricError",
    "CliqueTimeout",
    "SpectrumSizeLimit",
    "Graph",
    "BuildStats",
    "ComponentPartition",
    "build_graph",
    "degree_sequence",
    "connected_components",
    "is_connected",
    "largest_component",
    "WaxmanConfig",
    "BaConfig",
    "GlpConfig",
    "InetConfig",
    "PfpConfig",
    "MetricOptions",
    "METRIC_NAMES",
    "INET_MIN_NODES"
]
