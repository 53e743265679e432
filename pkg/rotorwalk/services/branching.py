"""Sampling the good-children multitype branching process"""
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from rotorwalk.core.config import settings
from rotorwalk.core.exceptions import DomainError
from rotorwalk.core.random import MBP_STREAM, stream
from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.models.branching import RotorDistributionFamily
from rotorwalk.schemas.analysis import SurvivalEstimate
from rotorwalk.services.analysis import good_children_table, validate_distributions

log = logging.getLogger(__name__)


def _replica(table: List[np.ndarray], probs: List[np.ndarray], root_index: int, depth: int,
             cap: int, rng: np.random.Generator) -> Tuple[bool, bool]:
    """(survived to `depth`, survival declared by the population cap)"""
    population = np.zeros(len(table), dtype=np.int64)
    population[root_index] = 1
    for _ in range(depth):
        offspring = np.zeros_like(population)
        for j in np.flatnonzero(population):
            states = rng.multinomial(population[j], probs[j])
            offspring += states @ table[j]
        population = offspring
        if not population.any():
            return False, False
        if population.sum() > cap:
            return True, True
    return True, False


def mbp_survival_estimate(graph: BaseGraph, dists: RotorDistributionFamily, depth: int, samples: int,
                          seed: int, cap: Optional[int] = None) -> SurvivalEstimate:
    """Per root type, the fraction of independent runs with Z_depth ≠ 0"""
    if depth < 1 or samples < 1:
        raise DomainError(f"Depth {depth} and samples {samples} must both be at least 1")
    validate_distributions(graph, dists)
    cap = cap or settings.MBP_POPULATION_CAP
    table = good_children_table(graph)
    probs = []
    for row in dists.probs:
        values = np.asarray([float(p) for p in row])
        probs.append(values / values.sum())

    frequencies, half_widths, capped = [], [], []
    for root in range(graph.m):
        survived = hit_cap = 0
        for replica in range(samples):
            alive, by_cap = _replica(table, probs, root, depth, cap, stream(seed, MBP_STREAM, root, replica))
            survived += alive
            hit_cap += by_cap
        frequency = survived / samples
        frequencies.append(frequency)
        half_widths.append(1.96 * math.sqrt(frequency * (1.0 - frequency) / samples))
        capped.append(hit_cap)
        log.debug("Type %d survived %d/%d runs to depth %d", root + 1, survived, samples, depth)
    return SurvivalEstimate(seed=seed, depth=depth, samples=samples, frequencies=frequencies,
                            half_widths=half_widths, capped=capped)
