"""
Shared machinery for growth models: edge bookkeeping and weighted node draws.
"""
from typing import Callable, Iterable, List, Optional, Set

import numpy as np

from ..core.graph import Graph


def ring_edges(size: int) -> List[tuple]:
    """Cycle on nodes 0..size-1 (size >= 3)."""
    return [(i, (i + 1) % size) for i in range(size)]


class GrowingGraph:
    """
    Mutable edge set used while a model grows; frozen into a Graph at the end.

    Node weights are kept in step with degrees through the model's kernel so
    preferential draws always see current degrees.
    """

    def __init__(self, capacity: int, kernel: Callable[[np.ndarray], np.ndarray]):
        self.kernel = kernel
        self.degrees = np.zeros(capacity, dtype=np.int64)
        self.weights = np.zeros(capacity, dtype=np.float64)
        self.adjacency: List[Set[int]] = [set() for _ in range(capacity)]
        self.edges: List[tuple] = []
        self.size = 0

    def add_nodes(self, count: int):
        self.size += count

    def add_edge(self, u: int, v: int) -> bool:
        if u == v or v in self.adjacency[u]:
            return False
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)
        self.edges.append((u, v))
        for x in (u, v):
            self.degrees[x] += 1
            self.weights[x] = self.kernel(np.float64(self.degrees[x]))
        return True

    def sample(self, rng: np.random.Generator, exclude: Iterable[int] = ()) -> Optional[int]:
        """
        One node drawn with probability proportional to its weight, skipping
        `exclude`. Returns None when no node carries positive weight.
        """
        weights = self.weights[:self.size].copy()
        excluded = list(exclude)
        if excluded:
            weights[excluded] = 0.0
        cumulative = np.cumsum(weights)
        total = cumulative[-1] if len(cumulative) else 0.0
        if total <= 0:
            return None
        return int(np.searchsorted(cumulative, rng.random() * total, side="right"))

    def sample_distinct(self, rng: np.random.Generator, count: int,
                        exclude: Iterable[int] = ()) -> List[int]:
        """Sequential draws without replacement."""
        chosen: List[int] = []
        excluded = list(exclude)
        for _ in range(count):
            v = self.sample(rng, excluded + chosen)
            if v is None:
                break
            chosen.append(v)
        return chosen

    def sample_peer(self, rng: np.random.Generator, host: int) -> Optional[int]:
        """Node not yet linked to `host`, drawn by weight."""
        return self.sample(rng, [host, *self.adjacency[host]])

    def freeze(self) -> Graph:
        return Graph(self.size, self.edges)
