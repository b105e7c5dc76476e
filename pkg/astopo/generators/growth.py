"""
Growth models driven by preferential attachment: BA, GLP and PFP.
"""
import logging

import numpy as np

from ..core.graph import Graph
from ..core.models import BaConfig, GlpConfig, PfpConfig
from ..utils.validation import format_parameter_summary
from .preference import GrowingGraph, ring_edges
from .rng import make_rng

logger = logging.getLogger(__name__)

# A GLP link step gives up after this many draws that hit existing links
_LINK_ATTEMPTS = 32


def generate_ba(cfg: BaConfig, seed: int) -> Graph:
    """
    Barabasi-Albert graph grown from an m0-node ring.

    Every arriving node links to m distinct existing nodes, each drawn with
    probability d_j / sum_k d_k. Drawing a uniform entry of the edge endpoint
    list realizes exactly that probability.
    """
    logger.debug("BA config:\n%s", format_parameter_summary(cfg))
    rng = make_rng(seed)
    edges = ring_edges(cfg.m0)
    endpoints = np.empty(2 * cfg.expected_edges, dtype=np.int64)
    endpoints[:2 * cfg.m0] = np.asarray(edges, dtype=np.int64).ravel()
    filled = 2 * cfg.m0

    for new in range(cfg.m0, cfg.n):
        targets = []
        while len(targets) < cfg.m:
            t = int(endpoints[rng.integers(filled)])
            if t not in targets:
                targets.append(t)
        for t in targets:
            edges.append((t, new))
            endpoints[filled] = t
            endpoints[filled + 1] = new
            filled += 2

    return Graph(cfg.n, edges)


def glp_weight(degree, beta_pref: float):
    """Shifted linear preference k - beta_pref."""
    return degree - beta_pref


def generate_glp(cfg: GlpConfig, seed: int) -> Graph:
    """
    Generalized Linear Preference growth from an m0-node ring.

    With probability p_add a new node arrives with m links to distinct
    existing nodes; otherwise m new links are placed between existing nodes.
    All endpoints are drawn with weight k - beta_pref.
    """
    logger.debug("GLP config:\n%s", format_parameter_summary(cfg))
    rng = make_rng(seed)
    grown = GrowingGraph(cfg.n, lambda k: glp_weight(k, cfg.beta_pref))
    grown.add_nodes(cfg.m0)
    for u, v in ring_edges(cfg.m0):
        grown.add_edge(u, v)

    while grown.size < cfg.n:
        if rng.random() < cfg.p_add:
            targets = grown.sample_distinct(rng, cfg.m)
            new = grown.size
            grown.add_nodes(1)
            for t in targets:
                grown.add_edge(new, t)
        else:
            for _ in range(cfg.m):
                _add_glp_link(grown, rng)

    return grown.freeze()


def _add_glp_link(grown: GrowingGraph, rng: np.random.Generator) -> bool:
    for _ in range(_LINK_ATTEMPTS):
        u = grown.sample(rng)
        v = grown.sample_peer(rng, u)
        if v is not None:
            return grown.add_edge(u, v)
    return False


def pfp_preference(degree, delta: float):
    """
    Nonlinear positive-feedback kernel k^(1 + delta * log10 k).

    Zero for k = 0; reduces to k when delta = 0.
    """
    k = np.asarray(degree, dtype=np.float64)
    safe = np.where(k > 0, k, 1.0)
    weight = np.where(k > 0, safe ** (1.0 + delta * np.log10(safe)), 0.0)
    return weight if weight.ndim else float(weight)


def generate_pfp(cfg: PfpConfig, seed: int) -> Graph:
    """
    Positive-Feedback Preference growth from an m0-node ring.

    Each step adds one node and picks one of three interactive variants:
      p_new        : new node -> 1 host; host -> 1 peer
      q_new        : new node -> 2 hosts; first host -> 1 peer
      1-p_new-q_new: new node -> 1 host; host -> 2 peers
    Hosts and peers are drawn with the positive-feedback kernel; peer links
    that cannot be placed without duplicating an edge are skipped.
    """
    logger.debug("PFP config:\n%s", format_parameter_summary(cfg))
    rng = make_rng(seed)
    grown = GrowingGraph(cfg.n, lambda k: pfp_preference(k, cfg.delta))
    grown.add_nodes(cfg.m0)
    for u, v in ring_edges(cfg.m0):
        grown.add_edge(u, v)

    while grown.size < cfg.n:
        r = rng.random()
        if r < cfg.p_new:
            hosts, peers = grown.sample_distinct(rng, 1), 1
        elif r < cfg.p_new + cfg.q_new:
            hosts, peers = grown.sample_distinct(rng, 2), 1
        else:
            hosts, peers = grown.sample_distinct(rng, 1), 2

        new = grown.size
        grown.add_nodes(1)
        for host in hosts:
            grown.add_edge(new, host)
        for _ in range(peers):
            peer = grown.sample_peer(rng, hosts[0])
            if peer is not None:
                grown.add_edge(hosts[0], peer)

    return grown.freeze()
