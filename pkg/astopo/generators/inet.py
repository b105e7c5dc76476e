"""
Inet-style generator: power-law degree assignment, full-mesh core, linear
preference attachment.

Node indices are ordered by assigned degree (largest first), so the core is
always nodes 0..core_size-1.
"""
import logging

import numpy as np

from ..core.errors import ConfigError
from ..core.graph import Graph
from ..core.models import InetConfig
from ..utils.validation import format_parameter_summary
from .rng import make_rng

logger = logging.getLogger(__name__)


def assign_degrees(cfg: InetConfig, rng: np.random.Generator) -> np.ndarray:
    """
    Target degree per node, sorted non-increasing.

    round(frac_degree_one * n) nodes get degree 1; the rest draw from
    P(k) ~ k^-exponent on 2..degree_cutoff. Core nodes are raised to at least
    core_size - 1 and the total is made even.
    """
    ones = int(round(cfg.frac_degree_one * cfg.n))
    rest = cfg.n - ones
    if rest < cfg.core_size:
        raise ConfigError(
            f"core_size={cfg.core_size} exceeds the {rest} nodes of degree >= 2"
        )
    support = np.arange(2, cfg.degree_cutoff + 1)
    frequency = support.astype(np.float64) ** -cfg.exponent
    drawn = rng.choice(support, size=rest, p=frequency / frequency.sum())

    degrees = np.concatenate([np.sort(drawn)[::-1], np.ones(ones, dtype=np.int64)])
    degrees[:cfg.core_size] = np.maximum(degrees[:cfg.core_size], cfg.core_size - 1)
    if degrees.sum() % 2:
        degrees[0] += 1
    return degrees.astype(np.int64)


def _pick(rng: np.random.Generator, candidates: np.ndarray, weights: np.ndarray) -> int:
    cumulative = np.cumsum(weights)
    return int(candidates[np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right")])


def generate_inet(cfg: InetConfig, seed: int) -> Graph:
    """
    Inet topology.

    1. the core_size top-degree nodes form a full mesh;
    2. the other degree >= 2 nodes join one by one (descending degree), each
       linking to an already placed node with free stubs, weight = its degree;
    3. degree-1 nodes attach the same way to degree >= 2 nodes;
    4. leftover stubs of degree >= 2 nodes are matched by linear preference.
    Steps 1-3 build a spanning tree around the core, so the result is
    connected. When no placed node has a free stub, any placed node may be
    chosen.
    """
    logger.debug("Inet config:\n%s", format_parameter_summary(cfg))
    rng = make_rng(seed)
    degrees = assign_degrees(cfg, rng)
    n = cfg.n
    big = int(np.count_nonzero(degrees >= 2))
    core = cfg.core_size
    free = degrees.copy()
    adjacency = [set() for _ in range(n)]
    edges = []

    def link(u: int, v: int):
        adjacency[u].add(v)
        adjacency[v].add(u)
        edges.append((u, v))
        free[u] -= 1
        free[v] -= 1

    for u in range(core):
        for v in range(u + 1, core):
            link(u, v)

    def attach(v: int, pool_end: int):
        pool = np.arange(pool_end)
        open_pool = pool[free[:pool_end] > 0]
        if len(open_pool) == 0:
            open_pool = pool
        link(v, _pick(rng, open_pool, degrees[open_pool]))

    for v in range(core, big):
        attach(v, v)
    for v in range(big, n):
        attach(v, big)

    pool = np.arange(big)
    for v in range(big):
        while free[v] > 0:
            open_mask = free[:big] > 0
            open_mask[v] = False
            if adjacency[v]:
                linked = np.fromiter(adjacency[v], dtype=np.int64)
                open_mask[linked[linked < big]] = False
            candidates = pool[open_mask]
            if len(candidates) == 0:
                break
            link(v, _pick(rng, candidates, degrees[candidates]))

    unfilled = int(free[free > 0].sum())
    if unfilled:
        logger.debug("Inet left %d stubs unmatched for N=%d", unfilled, n)
    return Graph(n, edges)
