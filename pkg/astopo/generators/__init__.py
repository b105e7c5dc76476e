"""
Synthetic AS topology generators behind one seeded interface.

    graph = generate("ba", BaConfig(n=1000, m=2), seed=7)
"""
from typing import Any, Callable, Dict, Optional, Tuple, Type

from ..core.errors import ConfigError
from ..core.graph import Graph
from ..core.models import BaConfig, GlpConfig, InetConfig, PfpConfig, WaxmanConfig
from .growth import generate_ba, generate_glp, generate_pfp, glp_weight, pfp_preference
from .inet import assign_degrees, generate_inet
from .rng import child_seed, fresh_seed, make_rng
from .waxman import generate_waxman, waxman_probability

# Model lookup for dynamic dispatch; order fixes the per-model seed counter
GENERATORS: Dict[str, Tuple[Type, Callable[[Any, int], Graph]]] = {
    "waxman": (WaxmanConfig, generate_waxman),
    "ba": (BaConfig, generate_ba),
    "glp": (GlpConfig, generate_glp),
    "inet": (InetConfig, generate_inet),
    "pfp": (PfpConfig, generate_pfp),
}
MODEL_NAMES = tuple(GENERATORS)


def _lookup(model: str):
    try:
        return GENERATORS[model]
    except KeyError:
        raise ConfigError(f"Unknown model '{model}'; choose from {list(MODEL_NAMES)}") from None


def model_config(model: str, **params) -> Any:
    """Config object for `model` with the given overrides."""
    config_type, _ = _lookup(model)
    try:
        return config_type(**params)
    except TypeError as exc:
        raise ConfigError(f"Invalid parameters for {model}: {exc}") from None


def generate(model: str, cfg: Optional[Any] = None, seed: int = 0) -> Graph:
    """Generate a graph with `model`; cfg defaults to the model's defaults."""
    config_type, generator = _lookup(model)
    cfg = cfg if cfg is not None else config_type()
    if not isinstance(cfg, config_type):
        raise ConfigError(f"{model} expects {config_type.__name__}, got {type(cfg).__name__}")
    return generator(cfg, seed)


__all__ = [
    "GENERATORS",
    "MODEL_NAMES",
    "model_config",
    "generate",
    "generate_waxman",
    "generate_ba",
    "generate_glp",
    "generate_inet",
    "generate_pfp",
    "waxman_probability",
    "glp_weight",
    "pfp_preference",
    "assign_degrees",
    "make_rng",
    "child_seed",
    "fresh_seed"
]
