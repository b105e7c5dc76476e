"""
Measured AS topology ingestion.

Reference scales of the measured datasets (unique ASs) used as fixture sizes:
the regional traceroute topology, the traceroute-derived AS graph, the merged
BGP-table graph and the last-seen-filtered long-running collection.
"""

from .edge_list import (
    ParseStats,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
    format_edge_list,
    is_public_asn
)
from .timestamped import (
    TimestampedEdge,
    TimestampedTopology,
    parse_timestamped,
    filter_last_seen,
    node_last_seen,
    SIX_MONTHS_SECONDS
)

CHINESE_AS_COUNT = 84
SKITTER_AS_COUNT = 9204
ROUTEVIEWS_AS_COUNT = 17446
UCLA_AS_COUNT = 28899

__all__ = [
    "ParseStats",
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
    "format_edge_list",
    "is_public_asn",
    "TimestampedEdge",
    "TimestampedTopology",
    "parse_timestamped",
    "filter_last_seen",
    "node_last_seen",
    "SIX_MONTHS_SECONDS",
    "CHINESE_AS_COUNT",
    "SKITTER_AS_COUNT",
    "ROUTEVIEWS_AS_COUNT",
    "UCLA_AS_COUNT"
]
