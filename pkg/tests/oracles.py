"""
Brute-force reference implementations used to cross-check the fast metrics.

Everything here works on a dense adjacency matrix and favours obviousness
over speed; inputs stay below ~40 nodes.
"""
from itertools import combinations

import numpy as np

from astopo.core.graph import Graph


def dense(g: Graph) -> np.ndarray:
    a = np.zeros((g.node_count, g.node_count), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def distance_matrix(g: Graph) -> np.ndarray:
    """Hop distances from powers of the adjacency matrix; -1 when unreachable."""
    a = dense(g)
    n = g.node_count
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reach = np.eye(n, dtype=np.int64)
    for h in range(1, n):
        reach = np.minimum(reach @ a + reach, 1)
        dist[(dist < 0) & (reach > 0)] = h
    return dist


def path_counts(g: Graph) -> np.ndarray:
    """Number of shortest paths between every pair (walk counts at the distance)."""
    a = dense(g)
    dist = distance_matrix(g)
    n = g.node_count
    sigma = np.eye(n, dtype=np.int64)
    walks = np.eye(n, dtype=np.int64)
    for h in range(1, n):
        walks = walks @ a
        sigma[dist == h] = walks[dist == h]
    return sigma


def betweenness(g: Graph) -> np.ndarray:
    """Sum over unordered pairs s<t of sigma_st(v) / sigma_st."""
    dist = distance_matrix(g)
    sigma = path_counts(g)
    n = g.node_count
    between = np.zeros(n)
    for s, t in combinations(range(n), 2):
        if dist[s, t] <= 0:
            continue
        for v in range(n):
            if v in (s, t) or dist[s, v] < 0 or dist[v, t] < 0:
                continue
            if dist[s, v] + dist[v, t] == dist[s, t]:
                between[v] += sigma[s, v] * sigma[v, t] / sigma[s, t]
    return between


def triangles(g: Graph) -> np.ndarray:
    a = dense(g)
    n = g.node_count
    count = np.zeros(n, dtype=np.int64)
    for i, j, k in combinations(range(n), 3):
        if a[i, j] and a[j, k] and a[i, k]:
            count[[i, j, k]] += 1
    return count


def core_numbers(g: Graph) -> np.ndarray:
    """Peel the l-cores for l = 1, 2, ... until nothing remains."""
    a = dense(g)
    n = g.node_count
    alive = np.ones(n, dtype=bool)
    cores = np.zeros(n, dtype=np.int64)
    level = 0
    while alive.any():
        level += 1
        changed = True
        while changed:
            degrees = (a[:, alive].sum(axis=1)) * alive
            drop = alive & (degrees < level)
            changed = bool(drop.any())
            alive &= ~drop
        cores[alive] = level
    return cores


def clique_number(g: Graph) -> int:
    a = dense(g)
    n = g.node_count
    best = 1 if n else 0
    for size in range(2, n + 1):
        found = False
        for nodes in combinations(range(n), size):
            if all(a[u, v] for u, v in combinations(nodes, 2)):
                found = True
                break
        if not found:
            break
        best = size
    return best


def rich_club(g: Graph) -> dict:
    a = dense(g)
    n = g.node_count
    order = sorted(range(n), key=lambda v: (-int(a[v].sum()), v))
    phi = {}
    for rho in range(2, n + 1):
        club = order[:rho]
        links = a[np.ix_(club, club)].sum() / 2
        phi[rho] = links / (rho * (rho - 1) / 2)
    return phi


def laplacian_spectrum(g: Graph) -> np.ndarray:
    a = dense(g).astype(float)
    degrees = a.sum(axis=1)
    lap = np.zeros_like(a)
    for i in range(g.node_count):
        for j in range(g.node_count):
            if i == j and degrees[i] > 0:
                lap[i, j] = 1.0
            elif a[i, j]:
                lap[i, j] = -1.0 / np.sqrt(degrees[i] * degrees[j])
    return np.linalg.eigvalsh(lap)
