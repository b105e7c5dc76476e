"""
Rich-club connectivity over the degree-ranked node sequence.
"""
import numpy as np

from ..core.graph import Graph
from ..core.profiles import RichClubProfile


def degree_rank(g: Graph) -> np.ndarray:
    """Nodes ordered by non-increasing degree, ties by ascending index."""
    return np.lexsort((np.arange(g.node_count), -g.degrees))


def rich_club(g: Graph) -> RichClubProfile:
    """
    phi(rho) = links among the rho top-ranked nodes / (rho (rho - 1) / 2).

    An edge joins the club once both endpoints are ranked, i.e. at
    rho = max(rank(u), rank(v)) + 1, so one cumulative count gives every rho.
    """
    n = g.node_count
    rank = np.empty(n, dtype=np.int64)
    rank[degree_rank(g)] = np.arange(n)
    joins = np.maximum(rank[g.edges[:, 0]], rank[g.edges[:, 1]]) + 1
    inside = np.cumsum(np.bincount(joins, minlength=n + 1))

    phi = {}
    for rho in range(2, n + 1):
        phi[rho] = float(inside[rho] / (rho * (rho - 1) / 2))
    return RichClubProfile(phi=phi)
