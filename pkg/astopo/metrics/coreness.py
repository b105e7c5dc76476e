"""
k-core (coreness) decomposition by bucket peeling.
"""
from typing import Tuple

import numpy as np
from numba import jit

from ..core.graph import Graph
from ..core.profiles import CorenessProfile


@jit(nopython=True)
def _core_decomposition(indptr: np.ndarray, indices: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Batagelj-Zaversnik O(M) peeling.

    Returns (core number per node, removal order). The removal order is a
    degeneracy ordering: each node has at most max_core neighbors after it.
    """
    n = len(indptr) - 1
    deg = np.empty(n, dtype=np.int64)
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
    max_deg = 0
    for v in range(n):
        if deg[v] > max_deg:
            max_deg = deg[v]

    bins = np.zeros(max_deg + 1, dtype=np.int64)
    for v in range(n):
        bins[deg[v]] += 1
    start = 0
    for d in range(max_deg + 1):
        count = bins[d]
        bins[d] = start
        start += count

    pos = np.empty(n, dtype=np.int64)
    vert = np.empty(n, dtype=np.int64)
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(max_deg, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    for i in range(n):
        v = vert[i]
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            if deg[u] > deg[v]:
                du = deg[u]
                pu = pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bins[du] += 1
                deg[u] -= 1
    return deg, vert


def core_numbers(g: Graph) -> np.ndarray:
    return _core_decomposition(g.indptr, g.indices)[0]


def degeneracy_order(g: Graph) -> np.ndarray:
    return _core_decomposition(g.indptr, g.indices)[1]


def coreness(g: Graph) -> CorenessProfile:
    """Coreness l of every node: largest l whose l-core contains it."""
    cores = core_numbers(g)
    layers = np.bincount(cores)
    return CorenessProfile(
        coreness={v: int(c) for v, c in enumerate(cores)},
        max_core=int(cores.max()),
        layers={int(l): int(layers[l]) for l in np.flatnonzero(layers)},
    )
