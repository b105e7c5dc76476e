import numpy as np
import pytest

from astopo.core.errors import ConfigError, SpectrumSizeLimit
from astopo.core.graph import Graph, connected_components
from astopo.metrics import normalized_laplacian, normalized_laplacian_spectrum
from conftest import complete_graph, random_connected_graph, star_graph


def test_triangle(k3):
    assert normalized_laplacian_spectrum(k3).eigenvalues == pytest.approx((0.0, 1.5, 1.5))


def test_complete_graph(k4):
    assert normalized_laplacian_spectrum(k4).eigenvalues == pytest.approx((0.0, 4 / 3, 4 / 3, 4 / 3))


def test_star_is_bipartite():
    values = normalized_laplacian_spectrum(star_graph(5)).eigenvalues
    assert values == pytest.approx((0.0, 1.0, 1.0, 1.0, 1.0, 2.0), abs=1e-12)


def test_single_node():
    profile = normalized_laplacian_spectrum(Graph(1, []))
    assert profile.eigenvalues == (0.0,)
    assert profile.complete


def test_isolated_node_adds_zero():
    g = Graph(4, [(0, 1), (1, 2), (0, 2)])
    values = normalized_laplacian_spectrum(g).eigenvalues
    assert values == pytest.approx((0.0, 0.0, 1.5, 1.5), abs=1e-12)
    assert normalized_laplacian(g).toarray()[3].tolist() == [0.0, 0.0, 0.0, 0.0]


@pytest.mark.parametrize("seed", range(50))
def test_bounds_trace_and_zero_multiplicity(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(5, 201))
    # Union of two random connected pieces exercises the multiplicity check
    left = random_connected_graph(n // 2 + 1, 3.0 / n, seed)
    right = random_connected_graph(n - n // 2 + 1, 3.0 / n, seed + 500)
    offset = left.node_count
    g = Graph(offset + right.node_count,
              np.vstack([left.edges, right.edges + offset]))
    values = np.asarray(normalized_laplacian_spectrum(g, mode="full").eigenvalues)
    assert values.min() >= -1e-8
    assert values.max() <= 2 + 1e-8
    assert values.sum() == pytest.approx(g.node_count, abs=1e-6)
    zeros = int(np.count_nonzero(np.abs(values) < 1e-8))
    assert zeros == connected_components(g).count == 2


def test_full_mode_limit(k5):
    with pytest.raises(SpectrumSizeLimit, match="extremes"):
        normalized_laplacian_spectrum(k5, mode="full", full_limit=4)


def test_auto_switches_to_extremes():
    g = random_connected_graph(60, 0.1, seed=3)
    profile = normalized_laplacian_spectrum(g, mode="auto", k=5, full_limit=50)
    assert not profile.complete
    assert len(profile.eigenvalues) == 10


def test_extremes_match_full():
    g = random_connected_graph(150, 0.05, seed=8)
    full = np.asarray(normalized_laplacian_spectrum(g, mode="full").eigenvalues)
    extremes = normalized_laplacian_spectrum(g, mode="extremes", k=6)
    values = np.asarray(extremes.eigenvalues)
    assert values[:6] == pytest.approx(full[:6], abs=1e-6)
    assert values[6:] == pytest.approx(full[-6:], abs=1e-6)
    assert extremes.smallest_nonzero == pytest.approx(full[1], abs=1e-6)
    assert extremes.largest == pytest.approx(full[-1], abs=1e-6)


def test_extremes_fall_back_to_full_when_small():
    profile = normalized_laplacian_spectrum(complete_graph(6), mode="extremes", k=3)
    assert profile.complete
    assert len(profile.eigenvalues) == 6


def test_bad_mode(k4):
    with pytest.raises(ConfigError):
        normalized_laplacian_spectrum(k4, mode="partial")
