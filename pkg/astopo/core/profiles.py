"""
Result containers for the topology metrics.

Distributions are plain dicts keyed by an integer (degree, rank, hop count,
core layer) in ascending key order so they serialize deterministically.
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np


@dataclass(frozen=True)
class DegreeProfile:
    """Degree distribution P(k), average degree and average neighbor connectivity."""
    p_k: Dict[int, float]
    avg_degree: float
    knn_norm: Dict[int, float]      # k_nn(k) / (N - 1), absent for unused degrees
    max_degree: int = 0


@dataclass(frozen=True)
class ClusteringProfile:
    """
    Graph clustering gamma and its per-degree breakdown C(k).

    gamma follows the selected mode; both averages are kept so the gap
    between them stays visible in reports.
    """
    gamma: float
    c_of_k: Dict[int, float]
    mode: str = "restricted"
    gamma_restricted: float = 0.0   # Mean over nodes with k >= 2
    gamma_literal: float = 0.0      # Sum over nodes with k >= 2, divided by N


@dataclass(frozen=True)
class RichClubProfile:
    """phi(rho) for rho = 2..N over nodes ranked by non-increasing degree."""
    phi: Dict[int, float]


@dataclass(frozen=True)
class PathStats:
    """Hop-count distribution over reachable unordered pairs."""
    p_h: Dict[int, float]
    mean: float
    diameter: int
    unreachable_pairs: int
    reachable_pairs: int = 0


@dataclass(frozen=True)
class CentralityProfile:
    """Node betweenness (unordered pairs, endpoints excluded) and closeness."""
    betweenness: Dict[int, float]
    avg_betweenness: float
    closeness: Dict[int, float]     # Nodes without reachable peers are absent


@dataclass(frozen=True)
class CorenessProfile:
    """k-core decomposition result with l-core layer sizes."""
    coreness: Dict[int, int]
    max_core: int
    layers: Dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class SpectrumProfile:
    """Eigenvalues of the normalized Laplacian, ascending."""
    eigenvalues: Tuple[float, ...]
    complete: bool

    @property
    def smallest_nonzero(self) -> float:
        values = np.asarray(self.eigenvalues)
        nonzero = values[values > 1e-8]
        return float(nonzero[0]) if len(nonzero) else 0.0

    @property
    def largest(self) -> float:
        return float(self.eigenvalues[-1])
