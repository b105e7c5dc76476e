"""
Cross-check every metric against networkx and brute-force references on
seeded random connected graphs (N <= 40, density 0.1-0.9).
"""
import networkx as nx
import numpy as np
import pytest

import oracles
from astopo.metrics import (
    assortativity,
    centrality,
    clustering,
    core_numbers,
    degree_profile,
    normalized_laplacian_spectrum,
    path_stats,
    rich_club,
    top_clique_size,
    triangle_counts,
)
from conftest import random_connected_graph

CASES = [
    (5 + (i * 7) % 36, 0.1 + 0.8 * (i % 9) / 8, 1000 + i)
    for i in range(100)
]
TOL = 1e-9


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.node_count))
    h.add_edges_from(g.edges.tolist())
    return h


@pytest.fixture(params=CASES, ids=lambda c: f"n{c[0]}-d{c[1]:.2f}-s{c[2]}")
def case(request):
    n, density, seed = request.param
    g = random_connected_graph(n, density, seed)
    return g, to_nx(g)


def test_degree_profile(case):
    g, h = case
    profile = degree_profile(g)
    n = g.node_count
    histogram = nx.degree_histogram(h)
    expected = {k: c / n for k, c in enumerate(histogram) if c}
    assert profile.p_k == pytest.approx(expected, abs=TOL)
    knn = {k: v / (n - 1) for k, v in nx.average_degree_connectivity(h).items()}
    assert profile.knn_norm == pytest.approx(knn, abs=TOL)


def test_assortativity(case):
    g, h = case
    degrees = g.degrees[g.edges.ravel()]
    if np.all(degrees == degrees[0]):
        pytest.skip("regular graph")
    assert assortativity(g) == pytest.approx(nx.degree_assortativity_coefficient(h), abs=1e-8)


def test_clustering(case):
    g, h = case
    assert np.array_equal(triangle_counts(g), oracles.triangles(g))
    local = nx.clustering(h)
    eligible = [v for v in h if h.degree(v) >= 2]
    expected = sum(local[v] for v in eligible) / len(eligible)
    profile = clustering(g)
    assert profile.gamma == pytest.approx(expected, abs=TOL)
    assert profile.gamma_literal == pytest.approx(nx.average_clustering(h), abs=TOL)


def test_rich_club(case):
    g, _ = case
    assert rich_club(g).phi == pytest.approx(oracles.rich_club(g), abs=TOL)


def test_path_stats(case):
    g, h = case
    lengths = dict(nx.all_pairs_shortest_path_length(h))
    n = g.node_count
    pairs = [lengths[u][v] for u in range(n) for v in range(u + 1, n)]
    stats = path_stats(g)
    assert stats.mean == pytest.approx(np.mean(pairs), abs=TOL)
    assert stats.diameter == max(pairs)
    assert stats.diameter == oracles.distance_matrix(g).max()
    assert sum(stats.p_h.values()) == pytest.approx(1.0)


def test_betweenness_and_closeness(case):
    g, h = case
    profile = centrality(g)
    expected = nx.betweenness_centrality(h, normalized=False)
    assert [profile.betweenness[v] for v in range(g.node_count)] == pytest.approx(
        [expected[v] for v in range(g.node_count)], abs=TOL)
    if g.node_count <= 20:
        brute = oracles.betweenness(g)
        assert [profile.betweenness[v] for v in range(g.node_count)] == pytest.approx(brute, abs=TOL)
    # networkx scales closeness by (N - 1) on connected graphs
    nx_closeness = nx.closeness_centrality(h)
    for v, c in profile.closeness.items():
        assert c * (g.node_count - 1) == pytest.approx(nx_closeness[v], abs=TOL)


def test_coreness(case):
    g, h = case
    cores = core_numbers(g)
    expected = nx.core_number(h)
    assert cores.tolist() == [expected[v] for v in range(g.node_count)]
    assert cores.tolist() == oracles.core_numbers(g).tolist()


def test_clique(case):
    g, h = case
    if g.node_count > 20:
        expected = max(len(c) for c in nx.find_cliques(h))
    else:
        expected = oracles.clique_number(g)
    assert top_clique_size(g) == expected


def test_full_spectrum(case):
    g, _ = case
    values = normalized_laplacian_spectrum(g, mode="full").eigenvalues
    assert values == pytest.approx(oracles.laplacian_spectrum(g).tolist(), abs=1e-6)


def test_betweenness_sums_to_interior_hops(case):
    g, _ = case
    stats = path_stats(g)
    total = sum(centrality(g).betweenness.values())
    assert total == pytest.approx(stats.reachable_pairs * (stats.mean - 1), abs=1e-6)


def test_clique_bounded_by_core(case):
    g, _ = case
    assert top_clique_size(g) - 1 <= int(core_numbers(g).max())
