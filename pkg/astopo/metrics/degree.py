"""
Degree-based metrics: P(k), average neighbor connectivity and assortativity.
"""
import numpy as np

from ..core.errors import UndefinedMetricError
from ..core.graph import Graph
from ..core.profiles import DegreeProfile


def _neighbor_degree_sums(g: Graph) -> np.ndarray:
    degrees = g.degrees
    sums = np.zeros(g.node_count, dtype=np.int64)
    u, v = g.edges[:, 0], g.edges[:, 1]
    np.add.at(sums, u, degrees[v])
    np.add.at(sums, v, degrees[u])
    return sums


def degree_profile(g: Graph) -> DegreeProfile:
    """
    Degree distribution P(k) = n(k)/N, average degree 2M/N and the
    normalized average neighbor connectivity k_nn(k)/(N-1).

    Degrees with no nodes are absent from knn_norm; isolated nodes have no
    neighbors and contribute nothing to it.
    """
    n = g.node_count
    degrees = g.degrees
    counts = np.bincount(degrees)
    present = np.flatnonzero(counts)
    p_k = {int(k): float(counts[k] / n) for k in present}

    knn_norm = {}
    if n > 1:
        connected = degrees > 0
        mean_nbr = np.zeros(n, dtype=np.float64)
        mean_nbr[connected] = _neighbor_degree_sums(g)[connected] / degrees[connected]
        sums = np.bincount(degrees, weights=mean_nbr)
        for k in present:
            if k > 0:
                knn_norm[int(k)] = float(sums[k] / counts[k] / (n - 1))

    return DegreeProfile(
        p_k=p_k,
        avg_degree=2.0 * g.edge_count / n,
        knn_norm=knn_norm,
        max_degree=int(degrees.max()),
    )


def assortativity(g: Graph) -> float:
    """
    Newman degree assortativity coefficient r.

    Pearson correlation of the degrees at either end of every edge, each
    undirected edge contributing both orientations. Raises
    UndefinedMetricError when the endpoint degrees have zero variance
    (regular graphs) or the graph has no edges.
    """
    if g.edge_count == 0:
        raise UndefinedMetricError("assortativity undefined on a graph without edges")
    degrees = g.degrees
    du = degrees[g.edges[:, 0]]
    dv = degrees[g.edges[:, 1]]

    # Exact integer moments; symmetric orientation makes both marginals equal
    count = 2 * g.edge_count
    s1 = int(du.sum()) + int(dv.sum())
    s2 = int((du * du).sum()) + int((dv * dv).sum())
    sxy = 2 * int((du * dv).sum())
    variance = count * s2 - s1 * s1
    if variance == 0:
        raise UndefinedMetricError("assortativity undefined: all edge endpoints share one degree")
    return (count * sxy - s1 * s1) / variance
