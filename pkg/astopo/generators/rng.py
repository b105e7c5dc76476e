"""
Seeded random streams for the generators.

Every run draws from one counter-based Philox generator. Child seeds for
repeated runs are derived from a master seed and integer counters through
SeedSequence, so (master, model, run) always maps to the same stream.
"""
import numpy as np

from ..core.errors import ConfigError

SEED_LIMIT = 2 ** 64


def validate_seed(seed: int) -> int:
    if isinstance(seed, bool) or int(seed) != seed or not 0 <= seed < SEED_LIMIT:
        raise ConfigError(f"seed must be an integer in [0, 2**64), got {seed!r}")
    return int(seed)


def make_rng(seed: int) -> np.random.Generator:
    """Philox-backed generator for one generator invocation."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(validate_seed(seed))))


def child_seed(master: int, *counters: int) -> int:
    """64-bit seed for the stream identified by (master, *counters)."""
    sequence = np.random.SeedSequence([validate_seed(master), *(int(c) for c in counters)])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def fresh_seed() -> int:
    """Entropy-derived seed for runs where the user gave none."""
    return int(np.random.SeedSequence().entropy % SEED_LIMIT)
