"""
Clustering coefficient gamma(G) and the per-degree distribution C(k).
"""
import numpy as np
from numba import jit

from ..core.graph import Graph
from ..core.profiles import ClusteringProfile
from ..utils.validation import validate_choice


@jit(nopython=True)
def _triangle_counts(indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Number of triangles T_i through every node, via neighbor marking."""
    n = len(indptr) - 1
    triangles = np.zeros(n, dtype=np.int64)
    marked = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        for p in range(indptr[v], indptr[v + 1]):
            marked[indices[p]] = True
        closed = 0
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            for q in range(indptr[u], indptr[u + 1]):
                if marked[indices[q]]:
                    closed += 1
        # Each triangle at v is seen from both of its other corners
        triangles[v] = closed // 2
        for p in range(indptr[v], indptr[v + 1]):
            marked[indices[p]] = False
    return triangles


def triangle_counts(g: Graph) -> np.ndarray:
    return _triangle_counts(g.indptr, g.indices)


def local_clustering(g: Graph) -> np.ndarray:
    """T_i / (k_i (k_i - 1) / 2) per node; NaN where k_i < 2."""
    degrees = g.degrees.astype(np.float64)
    local = np.full(g.node_count, np.nan)
    eligible = degrees >= 2
    local[eligible] = triangle_counts(g)[eligible] / (degrees[eligible] * (degrees[eligible] - 1) / 2)
    return local


def clustering(g: Graph, mode: str = "restricted") -> ClusteringProfile:
    """
    Clustering coefficient over nodes of degree >= 2.

    mode='restricted' averages over the eligible nodes only, so a triangle
    plus an isolated node still scores 1. mode='literal' divides the same
    sum by N.
    """
    validate_choice(mode, ("restricted", "literal"), "mode")
    degrees = g.degrees
    local = local_clustering(g)
    eligible = degrees >= 2
    total = float(local[eligible].sum())
    restricted = total / int(eligible.sum()) if eligible.any() else 0.0
    literal = total / g.node_count

    c_of_k = {}
    for k in np.unique(degrees[eligible]):
        c_of_k[int(k)] = float(local[degrees == k].mean())

    return ClusteringProfile(
        gamma=restricted if mode == "restricted" else literal,
        c_of_k=c_of_k,
        mode=mode,
        gamma_restricted=restricted,
        gamma_literal=literal,
    )
