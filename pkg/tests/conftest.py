"""Shared fixtures: small analytic graphs and seeded random connected graphs."""
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from astopo.core.graph import Graph

DATA_DIR = Path(__file__).parent / "data"


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Hub 0 joined to nodes 1..leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_connected_graph(n: int, density: float, seed: int) -> Graph:
    """Random spanning tree plus extra edges with probability `density`."""
    rng = np.random.default_rng(seed)
    edges = set()
    order = rng.permutation(n)
    for i in range(1, n):
        u, v = int(order[i]), int(order[rng.integers(i)])
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if rng.random() < density:
            edges.add((u, v))
    return Graph(n, sorted(edges))


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def star4():
    return star_graph(4)


@pytest.fixture
def k4_minus_edge():
    """K4 without link (2, 3): nodes 0, 1 have degree 3, nodes 2, 3 degree 2."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def data_dir():
    return DATA_DIR
