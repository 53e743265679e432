"""Seeded random streams"""
import numpy as np

# First key of each consumer's stream; every consumer owns its own prefix
CONFIG_STREAM = 0
SCHEDULE_STREAM = 1
SRW_STREAM = 2
MBP_STREAM = 3


def stream(seed: int, *key: int) -> np.random.Generator:
    """
    Independent generator for (seed, key...).

    Streams with different keys are statistically independent, and the same
    (seed, key) always yields the same sequence, so replicas may run in any order.
    Keys are zero-padded by SeedSequence, so callers start with one of the
    *_STREAM prefixes above rather than a bare counter.
    """
    if seed < 0:
        raise ValueError("seed must be non-negative")
    return np.random.default_rng(np.random.SeedSequence([int(seed), *(int(k) for k in key)]))
