"""Monte Carlo simple random walk on a wired cover"""
import logging
import math
from typing import Optional

import numpy as np

from rotorwalk.core.config import settings
from rotorwalk.core.exceptions import DomainError
from rotorwalk.core.random import SRW_STREAM, stream
from rotorwalk.models.tree import NO_NODE, ROOT, CoverTree
from rotorwalk.schemas.simulation import SrwEstimate

log = logging.getLogger(__name__)


def _walk_batch(tree: CoverTree, size: int, rng: np.random.Generator) -> int:
    """Run `size` walks from the root in lockstep; returns how many were absorbed up"""
    arrays = tree.arrays
    internal = tree.internal_count
    positions = np.full(size, ROOT, dtype=np.int64)
    active = np.arange(size)
    up = 0
    while active.size:
        current = positions[active]
        degree = arrays.child_count[current]
        choice = np.minimum((rng.random(active.size) * (degree + 1)).astype(np.int64), degree)
        target = np.where(choice == 0, arrays.parent[current], arrays.first_child[current] + choice - 1)
        positions[active] = target
        absorbed_up = target >= internal
        up += int(absorbed_up.sum())
        active = active[~(absorbed_up | (target == NO_NODE))]
    return up


def srw_escape_estimate(tree: CoverTree, walks: int, seed: int, batch_size: Optional[int] = None) -> SrwEstimate:
    """Fraction of simple random walks from the root absorbed at depth h"""
    if walks < 1:
        raise DomainError(f"Walk count {walks} must be at least 1")
    batch_size = batch_size or settings.SRW_BATCH_SIZE
    up = 0
    for batch, start in enumerate(range(0, walks, batch_size)):
        up += _walk_batch(tree, min(batch_size, walks - start), stream(seed, SRW_STREAM, batch))
    fraction = up / walks
    half_width = 1.96 * math.sqrt(fraction * (1.0 - fraction) / walks)
    log.info("SRW at height %d: %d/%d walks absorbed up", tree.height, up, walks)
    return SrwEstimate(walks=walks, up_fraction=fraction, half_width=half_width, height=tree.height, seed=seed)
