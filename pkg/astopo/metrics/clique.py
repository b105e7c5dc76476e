"""
Exact maximum clique (top clique size) by branch and bound.

Vertices are visited in degeneracy order; the clique search for a vertex is
restricted to its later neighbors, which keeps candidate sets no larger than
the graph's max core on sparse AS-like graphs. Inside a candidate set the
search uses greedy coloring as the upper bound, with candidate sets held as
Python int bitsets.
"""
import logging
import time
from typing import List, Tuple

import numpy as np

from ..core.errors import CliqueTimeout
from ..core.graph import Graph
from ..utils.validation import validate_positive
from .coreness import _core_decomposition

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 60.0
_CLOCK_EVERY = 256


def _color_sort(candidates: int, adjacency: List[int]) -> Tuple[List[int], List[int]]:
    """Greedy sequential coloring; returns vertices and their color bounds."""
    order = []
    bounds = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~adjacency[v]
            available &= ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


class _CliqueSearch:
    def __init__(self, g: Graph, budget: float):
        self.g = g
        self.budget = budget
        self.deadline = time.monotonic() + budget
        self.best: Tuple[int, ...] = (0,)
        self.calls = 0

    def _check_clock(self):
        self.calls += 1
        if self.calls % _CLOCK_EVERY == 0 and time.monotonic() > self.deadline:
            raise CliqueTimeout(self.budget, self.best)

    def run(self) -> Tuple[int, ...]:
        g = self.g
        if g.edge_count == 0:
            return self.best
        self.best = tuple(int(x) for x in g.edges[0])
        cores, order = _core_decomposition(g.indptr, g.indices)
        position = np.empty(g.node_count, dtype=np.int64)
        position[order] = np.arange(g.node_count)

        # Later vertices first so large cores are found early
        for v in order[::-1]:
            v = int(v)
            if cores[v] + 1 <= len(self.best):
                continue
            nbrs = g.neighbors(v)
            later = [int(u) for u in nbrs if position[u] > position[v]]
            if len(later) + 1 <= len(self.best):
                continue
            self._search_around(v, later)
        return self.best

    def _search_around(self, v: int, local_nodes: List[int]):
        local_index = {u: i for i, u in enumerate(local_nodes)}
        adjacency = []
        for u in local_nodes:
            mask = 0
            for w in self.g.neighbors(u):
                i = local_index.get(int(w))
                if i is not None:
                    mask |= 1 << i
            adjacency.append(mask)
        everything = (1 << len(local_nodes)) - 1
        self._expand(everything, [v], adjacency, local_nodes)

    def _expand(self, candidates: int, current: List[int], adjacency: List[int],
                local_nodes: List[int]):
        self._check_clock()
        order, bounds = _color_sort(candidates, adjacency)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(self.best):
                return
            v = order[i]
            current.append(local_nodes[v])
            narrowed = candidates & adjacency[v]
            if narrowed:
                self._expand(narrowed, current, adjacency, local_nodes)
            elif len(current) > len(self.best):
                self.best = tuple(sorted(current))
            current.pop()
            candidates &= ~(1 << v)


def maximum_clique(g: Graph, budget: float = DEFAULT_BUDGET) -> Tuple[int, ...]:
    """
    Nodes of one maximum clique, sorted.

    Raises CliqueTimeout (carrying the best clique found so far) if the
    search runs longer than `budget` seconds.
    """
    validate_positive(budget, "budget")
    clique = _CliqueSearch(g, budget).run()
    logger.debug("Maximum clique of size %d in %r", len(clique), g)
    return clique


def top_clique_size(g: Graph, budget: float = DEFAULT_BUDGET) -> int:
    """Clique number of the graph."""
    return len(maximum_clique(g, budget))
