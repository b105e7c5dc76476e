"""
Spectrum of the normalized Laplacian L = I - D^(-1/2) A D^(-1/2).

Isolated nodes get a zero row and column, so each contributes one zero
eigenvalue and the zero multiplicity equals the number of components.
"""
import logging

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.linalg import eigsh

from ..core.errors import SpectrumSizeLimit
from ..core.graph import Graph
from ..core.profiles import SpectrumProfile
from ..utils.validation import validate_choice, validate_integer_range

logger = logging.getLogger(__name__)

FULL_SPECTRUM_LIMIT = 3000
DEFAULT_EXTREMES = 50
SHIFT = -1e-3   # Shift-invert target just below the zero eigenvalue


def normalized_laplacian(g: Graph) -> sp.csr_matrix:
    degrees = g.degrees.astype(np.float64)
    connected = degrees > 0
    inv_sqrt = np.zeros(g.node_count)
    inv_sqrt[connected] = 1.0 / np.sqrt(degrees[connected])
    scale = sp.diags(inv_sqrt)
    identity = sp.diags(connected.astype(np.float64))
    return (identity - scale @ g.to_scipy() @ scale).tocsr()


def _full_spectrum(laplacian: sp.csr_matrix) -> np.ndarray:
    return scipy.linalg.eigh(laplacian.toarray(), eigvals_only=True)


def _extreme_spectrum(laplacian: sp.csr_matrix, k: int) -> np.ndarray:
    n = laplacian.shape[0]
    # Fixed start vector keeps ARPACK deterministic
    v0 = np.random.default_rng(0).random(n) + 0.5
    smallest = eigsh(laplacian.tocsc(), k=k, sigma=SHIFT, which="LM", v0=v0,
                     return_eigenvectors=False)
    largest = eigsh(laplacian, k=k, which="LA", v0=v0, return_eigenvectors=False)
    return np.concatenate([smallest, largest])


def normalized_laplacian_spectrum(g: Graph, mode: str = "auto", k: int = DEFAULT_EXTREMES,
                                  full_limit: int = FULL_SPECTRUM_LIMIT) -> SpectrumProfile:
    """
    Eigenvalues of the normalized Laplacian, sorted ascending.

    mode='full' returns all N values and raises SpectrumSizeLimit above
    `full_limit` nodes; mode='extremes' returns the k smallest and k largest
    (all of them when 2k >= N); mode='auto' picks full up to the limit.
    """
    validate_choice(mode, ("auto", "full", "extremes"), "mode")
    validate_integer_range(k, "k", 1)
    n = g.node_count
    if mode == "auto":
        mode = "full" if n <= full_limit else "extremes"
    if mode == "full" and n > full_limit:
        raise SpectrumSizeLimit(n, full_limit, hint=f"use mode='extremes' (k={k})")

    laplacian = normalized_laplacian(g)
    if n == 1:
        values, complete = np.zeros(1), True
    elif mode == "full" or 2 * k >= n:
        values, complete = _full_spectrum(laplacian), True
    else:
        logger.debug("Computing %d extreme eigenvalues on each end for N=%d", k, n)
        values, complete = _extreme_spectrum(laplacian, k), False

    return SpectrumProfile(
        eigenvalues=tuple(float(x) for x in np.sort(values)),
        complete=complete,
    )
