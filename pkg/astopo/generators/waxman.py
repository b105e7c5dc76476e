"""
Waxman random graphs with iterative rewiring into a single component.
"""
import logging
from typing import List, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components
from scipy.spatial import ConvexHull
from scipy.spatial.distance import cdist, pdist

from ..core.errors import ConfigError
from ..core.graph import Graph
from ..core.models import WaxmanConfig
from ..utils.validation import format_parameter_summary
from .rng import make_rng

logger = logging.getLogger(__name__)

_BATCH = 4096
_MAX_TRIALS_PER_PAIR = 200


def waxman_probability(d, alpha: float, beta: float, L: float):
    """
    Acceptance probability alpha * exp(-d / (beta * L)).

    Strictly decreasing in d; equals alpha at d = 0. A zero L (all nodes
    at one point) means every distance is zero.
    """
    d = np.asarray(d, dtype=np.float64)
    if L <= 0:
        p = np.full(d.shape, alpha)
    else:
        p = alpha * np.exp(-d / (beta * L))
    return p if p.ndim else float(p)


def max_distance(positions: np.ndarray) -> float:
    """Largest inter-node distance L, taken over convex hull vertices."""
    points = positions
    if len(positions) > 3:
        try:
            points = positions[ConvexHull(positions).vertices]
        except RuntimeError:  # degenerate (collinear) point sets
            points = positions
    if len(points) < 2:
        return 0.0
    return float(pdist(points).max())


def generate_waxman(cfg: WaxmanConfig, seed: int) -> Graph:
    """
    Waxman graph on a plane_size x plane_size square.

    Node pairs are drawn uniformly at random and accepted with the Waxman
    probability until the target number of links exists. Remaining
    components are then rewired into the giant one.
    """
    logger.debug("Waxman config:\n%s", format_parameter_summary(cfg))
    rng = make_rng(seed)
    n = cfg.n
    positions = rng.random((n, 2)) * cfg.plane_size
    L = max_distance(positions)

    target = cfg.target_edges
    max_pairs = n * (n - 1) // 2
    if target > max_pairs:
        raise ConfigError(f"target of {target} links exceeds the {max_pairs} possible pairs")

    seen = set()
    edges: List[Tuple[int, int]] = []
    trials = 0
    trial_limit = _MAX_TRIALS_PER_PAIR * max_pairs + _BATCH
    while len(edges) < target:
        if trials > trial_limit:
            raise ConfigError(
                f"Waxman acceptance too low to reach {target} links "
                f"(alpha={cfg.alpha}, beta={cfg.beta})"
            )
        u = rng.integers(0, n, _BATCH)
        v = rng.integers(0, n, _BATCH)
        d = np.hypot(*(positions[u] - positions[v]).T)
        accepted = rng.random(_BATCH) < waxman_probability(d, cfg.alpha, cfg.beta, L)
        trials += _BATCH
        for a, b in zip(u[accepted].tolist(), v[accepted].tolist()):
            if a == b:
                continue
            key = (a, b) if a < b else (b, a)
            if key in seen:
                continue
            seen.add(key)
            edges.append(key)
            if len(edges) == target:
                break

    edges = rewire_components(n, edges, positions)
    return Graph(n, edges)


def rewire_components(n: int, edges: List[Tuple[int, int]],
                      positions: np.ndarray) -> List[Tuple[int, int]]:
    """
    Reassign links until one component remains.

    Each round takes the minor component holding the smallest node index,
    removes its lowest-probability (longest) link and replaces it with the
    highest-probability link from the component into the giant one. An
    isolated node simply gains that link. Each round moves at least one node
    into the giant component.
    """
    edges = list(edges)
    rounds = 0
    while True:
        count, labels = _components(n, edges)
        if count == 1:
            break
        sizes = np.bincount(labels)
        giant = int(np.argmax(sizes))
        minor_label = labels[np.flatnonzero(labels != giant)[0]]
        minor = np.flatnonzero(labels == minor_label)
        core = np.flatnonzero(labels == giant)

        gap = cdist(positions[minor], positions[core])
        i, j = np.unravel_index(np.argmin(gap), gap.shape)
        bridge = (int(minor[i]), int(core[j]))

        internal = [k for k, (a, b) in enumerate(edges) if labels[a] == minor_label]
        if internal:
            lengths = [np.hypot(*(positions[edges[k][0]] - positions[edges[k][1]])) for k in internal]
            edges[internal[int(np.argmax(lengths))]] = tuple(sorted(bridge))
        else:
            edges.append(tuple(sorted(bridge)))
        rounds += 1

    if rounds:
        logger.debug("Waxman rewiring took %d rounds for N=%d", rounds, n)
    return edges


def _components(n: int, edges: List[Tuple[int, int]]):
    if not edges:
        return connected_components(sp.csr_matrix((n, n)), directed=False)
    e = np.asarray(edges, dtype=np.int64)
    adjacency = sp.csr_matrix((np.ones(len(e)), (e[:, 0], e[:, 1])), shape=(n, n))
    return connected_components(adjacency, directed=False)
