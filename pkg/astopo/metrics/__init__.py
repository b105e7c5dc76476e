"""Topological metrics computed on an immutable Graph."""

from .degree import degree_profile, assortativity
from .clustering import clustering, local_clustering, triangle_counts
from .richclub import rich_club
from .paths import ShortestPathSweep, shortest_path_sweep, path_stats, centrality
from .coreness import coreness, core_numbers, degeneracy_order
from .clique import maximum_clique, top_clique_size
from .spectrum import normalized_laplacian, normalized_laplacian_spectrum

__all__ = [
    "degree_profile",
    "assortativity",
    "clustering",
    "local_clustering",
    "triangle_counts",
    "rich_club",
    "ShortestPathSweep",
    "shortest_path_sweep",
    "path_stats",
    "centrality",
    "coreness",
    "core_numbers",
    "degeneracy_order",
    "maximum_clique",
    "top_clique_size",
    "normalized_laplacian",
    "normalized_laplacian_spectrum"
]
