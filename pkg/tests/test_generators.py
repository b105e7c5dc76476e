import warnings

import numpy as np
import pytest

from astopo.core.errors import ConfigError
from astopo.core.graph import Graph, connected_components, is_connected
from astopo.core.models import (
    INET_MIN_NODES,
    BaConfig,
    GlpConfig,
    InetConfig,
    PfpConfig,
    WaxmanConfig,
)
from astopo.generators import (
    MODEL_NAMES,
    child_seed,
    generate,
    make_rng,
    model_config,
    pfp_preference,
    waxman_probability,
)
from astopo.generators.inet import assign_degrees
from astopo.generators.waxman import rewire_components

SMALL_CONFIGS = {
    "waxman": WaxmanConfig(n=100),
    "ba": BaConfig(n=100),
    "glp": GlpConfig(n=100),
    "inet": InetConfig(n=INET_MIN_NODES),
    "pfp": PfpConfig(n=100),
}

CONTRACT_SIZES = {
    "waxman": (100, 1000),
    "ba": (100, 1000),
    "glp": (100, 1000),
    "inet": (INET_MIN_NODES, 4000),
    "pfp": (100, 1000),
}
CONTRACT_CASES = [
    pytest.param(model, n, marks=pytest.mark.slow) if n >= 1000 else (model, n)
    for model, sizes in CONTRACT_SIZES.items()
    for n in sizes
]
CONTRACT_SEEDS = range(5)


def assert_simple(g):
    e = g.edges
    assert np.all(e[:, 0] < e[:, 1])
    assert len({tuple(row) for row in e.tolist()}) == g.edge_count


class TestRng:
    def test_same_seed_same_stream(self):
        assert make_rng(5).random(4).tolist() == make_rng(5).random(4).tolist()

    def test_child_seeds_differ(self):
        seeds = {child_seed(0, m, r) for m in range(5) for r in range(10)}
        assert len(seeds) == 50
        assert child_seed(3, 1, 2) == child_seed(3, 1, 2)

    @pytest.mark.parametrize("seed", [-1, 2 ** 64, 1.5])
    def test_invalid_seed(self, seed):
        with pytest.raises(ConfigError):
            make_rng(seed)


class TestRegistry:
    def test_unknown_model(self):
        with pytest.raises(ConfigError, match="Unknown model"):
            generate("nosuch")

    def test_wrong_config_type(self):
        with pytest.raises(ConfigError):
            generate("ba", GlpConfig(n=100))

    def test_unknown_parameter(self):
        with pytest.raises(ConfigError):
            model_config("ba", gamma=3)


@pytest.mark.parametrize("model, n", CONTRACT_CASES)
def test_connected_and_simple(model, n):
    cfg = model_config(model, n=n)
    for seed in CONTRACT_SEEDS:
        g = generate(model, cfg, seed)
        assert g.node_count == n
        assert is_connected(g)
        assert_simple(g)


@pytest.mark.parametrize("model", MODEL_NAMES)
class TestContracts:
    def test_deterministic(self, model):
        cfg = SMALL_CONFIGS[model]
        assert generate(model, cfg, 11) == generate(model, cfg, 11)

    def test_seed_changes_graph(self, model):
        cfg = SMALL_CONFIGS[model]
        assert generate(model, cfg, 1) != generate(model, cfg, 2)


class TestBa:
    @pytest.mark.parametrize("n, m, m0", [
        (3, 1, 3), (10, 1, 3), (10, 3, 3), (50, 2, 5), (100, 2, 3),
        (100, 4, 4), (200, 1, 10), (37, 5, 7), (64, 3, 8), (500, 2, 3),
        (4, 3, 3), (5, 2, 4), (12, 6, 6), (25, 1, 25), (80, 7, 9),
        (150, 3, 12), (256, 8, 8), (333, 2, 17), (750, 5, 5), (1000, 3, 4),
    ])
    def test_edge_count(self, n, m, m0):
        g = generate("ba", BaConfig(n=n, m=m, m0=m0), seed=n + m)
        assert g.edge_count == m0 + m * (n - m0)

    def test_cli_example_count(self):
        assert generate("ba", BaConfig(n=100, m=2, m0=3), seed=7).edge_count == 197

    def test_min_degree_is_m(self):
        g = generate("ba", BaConfig(n=300, m=3, m0=3), seed=4)
        assert g.degrees.min() >= 2
        assert g.degrees[3:].min() == 3

    def test_invalid(self):
        with pytest.raises(ConfigError):
            BaConfig(n=100, m=4, m0=3)
        with pytest.raises(ConfigError):
            BaConfig(n=2, m=1, m0=3)

    @pytest.mark.slow
    def test_power_law_slope(self):
        slopes = []
        for seed in range(5):
            g = generate("ba", BaConfig(n=10000, m=2, m0=3), seed)
            counts = np.bincount(g.degrees)
            k = np.flatnonzero(counts >= 10)
            slope, _ = np.polyfit(np.log(k), np.log(counts[k]), 1)
            slopes.append(-3.5 <= slope <= -2.5)
        assert sum(slopes) >= 3


class TestGlp:
    @pytest.mark.parametrize("n, m, m0", [(50, 1, 3), (200, 2, 5), (1000, 1, 10)])
    def test_pure_node_addition_count(self, n, m, m0):
        cfg = GlpConfig(n=n, m=m, m0=m0, p_add=1.0, beta_pref=0.0)
        assert generate("glp", cfg, 4).edge_count == m0 + m * (n - m0)

    @pytest.mark.parametrize("seed", range(3))
    def test_link_steps_exceed_minimum(self, seed):
        cfg = GlpConfig(n=1000, p_add=0.5)
        assert generate("glp", cfg, seed).edge_count > cfg.minimum_edges

    def test_beta_pref_bounds(self):
        with pytest.raises(ConfigError):
            GlpConfig(beta_pref=1.0)
        with pytest.warns(UserWarning):
            GlpConfig(beta_pref=0.995)

    def test_for_size_clamps_seed(self):
        cfg = GlpConfig(m0=10).for_size(5)
        assert cfg.n == 5 and cfg.m0 == 5


class TestPfp:
    def test_kernel(self):
        assert pfp_preference(0, 0.048) == 0.0
        assert pfp_preference(1, 0.048) == pytest.approx(1.0)
        assert pfp_preference(10, 0.048) == pytest.approx(10 ** 1.048)
        assert pfp_preference(7, 0.0) == pytest.approx(7.0)

    def test_kernel_is_superlinear(self):
        k = np.arange(2, 100)
        ratio = pfp_preference(k, 0.048) / k
        assert np.all(np.diff(ratio) > 0)

    def test_mixture_probabilities(self):
        with pytest.raises(ConfigError):
            PfpConfig(p_new=0.7, q_new=0.4)


class TestWaxman:
    def test_probability_monotone(self):
        d = np.linspace(0, 1.4, 50)
        p = waxman_probability(d, 0.15, 0.2, 1.4)
        assert p[0] == pytest.approx(0.15)
        assert np.all(np.diff(p) < 0)

    def test_probability_at_scale_distance(self):
        alpha, beta, span = 0.15, 0.2, 1.3
        assert waxman_probability(beta * span, alpha, beta, span) == pytest.approx(alpha * np.exp(-1))

    @pytest.mark.parametrize("seed", range(3))
    def test_connected_at_500(self, seed):
        g = generate("waxman", WaxmanConfig(n=500, alpha=0.15, beta=0.2), seed)
        assert g.node_count == 500
        assert connected_components(g).count == 1

    def test_reaches_target_edges(self):
        cfg = WaxmanConfig(n=200, target_degree=4)
        g = generate("waxman", cfg, 9)
        assert g.edge_count >= cfg.target_edges

    def test_target_degree_bounds(self):
        with pytest.raises(ConfigError):
            WaxmanConfig(n=5, target_degree=5)
        with pytest.warns(UserWarning):
            WaxmanConfig(n=21, target_degree=15)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            WaxmanConfig(n=21, target_degree=4)

    def test_rewire_joins_components(self):
        positions = np.array([[0.0, 0.0], [0.1, 0.0], [0.2, 0.0], [0.9, 0.9], [1.0, 1.0], [0.5, 0.5]])
        edges = rewire_components(6, [(0, 1), (1, 2), (3, 4)], positions)
        assert is_connected(Graph(6, edges))


class TestInet:
    def test_rejects_small_n(self):
        with pytest.raises(ConfigError, match="3037"):
            InetConfig(n=3000)

    def test_core_is_full_mesh(self):
        cfg = InetConfig(n=INET_MIN_NODES, core_size=12)
        g = generate("inet", cfg, 1)
        core = g.subgraph(range(12))
        assert core.edge_count == 12 * 11 // 2

    def test_degree_assignment(self):
        cfg = InetConfig(n=4000)
        degrees = assign_degrees(cfg, make_rng(0))
        assert np.all(np.diff(degrees) <= 0)
        assert degrees.sum() % 2 == 0
        assert np.count_nonzero(degrees == 1) == pytest.approx(1200, abs=1)

    @pytest.mark.slow
    def test_degree_one_fraction(self):
        cfg = InetConfig(n=4000)
        for seed in range(10):
            g = generate("inet", cfg, seed)
            fraction = np.count_nonzero(g.degrees == 1) / g.node_count
            assert 0.25 <= fraction <= 0.35
