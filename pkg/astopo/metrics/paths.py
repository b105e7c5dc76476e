"""
Shortest-path metrics: hop distribution P(h), betweenness and closeness.

All three come from one breadth-first sweep per source node with Brandes
dependency accumulation. Sources are split into a fixed number of chunks that
run under prange; partial results are summed in chunk order so the floating
point output does not depend on the number of threads.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import jit, prange

from ..core.graph import Graph
from ..core.profiles import CentralityProfile, PathStats

SWEEP_CHUNKS = 64


@jit(nopython=True)
def _sweep_sources(indptr, indices, sources, hop_counts, distance_sums, reach_counts, between):
    """BFS + dependency accumulation for a block of sources (ordered pairs)."""
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.float64)
    delta = np.zeros(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)

    for s in sources:
        head = 0
        tail = 1
        order[0] = s
        dist[s] = 0
        sigma[s] = 1.0
        while head < tail:
            v = order[head]
            head += 1
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]

        total = 0
        for i in range(1, tail):
            d = dist[order[i]]
            hop_counts[d] += 1
            total += d
        distance_sums[s] = total
        reach_counts[s] = tail - 1

        # Reverse BFS order: every successor is final before its predecessors
        for i in range(tail - 1, 0, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            for p in range(indptr[w], indptr[w + 1]):
                v = indices[p]
                if dist[v] == dist[w] - 1:
                    delta[v] += sigma[v] * coeff
            between[w] += delta[w]

        for i in range(tail):
            v = order[i]
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0


@jit(nopython=True, parallel=True)
def _sweep_all(indptr, indices, n_chunks):
    n = len(indptr) - 1
    hop_parts = np.zeros((n_chunks, n), dtype=np.int64)
    between_parts = np.zeros((n_chunks, n), dtype=np.float64)
    distance_sums = np.zeros(n, dtype=np.int64)
    reach_counts = np.zeros(n, dtype=np.int64)
    for c in prange(n_chunks):
        sources = np.arange(c, n, n_chunks)
        _sweep_sources(indptr, indices, sources, hop_parts[c], distance_sums,
                       reach_counts, between_parts[c])

    hop_counts = np.zeros(n, dtype=np.int64)
    between = np.zeros(n, dtype=np.float64)
    for c in range(n_chunks):
        hop_counts += hop_parts[c]
        between += between_parts[c]
    return hop_counts, distance_sums, reach_counts, between


@dataclass(frozen=True)
class ShortestPathSweep:
    """
    Raw all-sources BFS result.

    hop_counts[h] counts ordered reachable pairs at distance h; betweenness
    is already halved to unordered pairs.
    """
    hop_counts: np.ndarray
    distance_sums: np.ndarray
    reach_counts: np.ndarray
    betweenness: np.ndarray


def shortest_path_sweep(g: Graph) -> ShortestPathSweep:
    n_chunks = max(1, min(SWEEP_CHUNKS, g.node_count))
    hop_counts, distance_sums, reach_counts, between = _sweep_all(g.indptr, g.indices, n_chunks)
    return ShortestPathSweep(
        hop_counts=hop_counts,
        distance_sums=distance_sums,
        reach_counts=reach_counts,
        betweenness=between / 2.0,
    )


def path_stats(g: Graph, sweep: Optional[ShortestPathSweep] = None) -> PathStats:
    """
    Hop-count distribution over reachable unordered pairs, its mean and the
    diameter. Unreachable pairs are counted separately.
    """
    sweep = sweep or shortest_path_sweep(g)
    n = g.node_count
    counts = sweep.hop_counts // 2
    reachable = int(counts.sum())
    unreachable = n * (n - 1) // 2 - reachable
    if reachable == 0:
        return PathStats(p_h={}, mean=float("nan"), diameter=0,
                         unreachable_pairs=unreachable, reachable_pairs=0)

    hops = np.flatnonzero(counts)
    p_h = {int(h): float(counts[h] / reachable) for h in hops}
    mean = float((hops * counts[hops]).sum() / reachable)
    return PathStats(
        p_h=p_h,
        mean=mean,
        diameter=int(hops[-1]),
        unreachable_pairs=unreachable,
        reachable_pairs=reachable,
    )


def centrality(g: Graph, sweep: Optional[ShortestPathSweep] = None) -> CentralityProfile:
    """
    Node betweenness B(v) summed over unordered pairs s != v != t with
    fractional credit, and closeness 1 / (sum of distances to reachable
    nodes). Nodes that reach nobody have no closeness entry.
    """
    sweep = sweep or shortest_path_sweep(g)
    between = sweep.betweenness
    closeness = {
        int(v): 1.0 / int(sweep.distance_sums[v])
        for v in np.flatnonzero(sweep.reach_counts)
    }
    return CentralityProfile(
        betweenness={v: float(b) for v, b in enumerate(between)},
        avg_betweenness=float(between.mean()),
        closeness=closeness,
    )
