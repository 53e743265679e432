"""Rotor-router walks on wired covers"""
import logging
from collections import Counter
from typing import Optional, Set

import numpy as np

from rotorwalk.core.exceptions import ContractViolation, DiagnosticsError, DomainError
from rotorwalk.core.random import CONFIG_STREAM, stream
from rotorwalk.models.branching import RotorDistributionFamily
from rotorwalk.models.enums import Absorption
from rotorwalk.models.rotor import Odometer, RotorConfiguration, WalkOutcome
from rotorwalk.models.tree import NO_NODE, ROOT, CoverTree
from rotorwalk.schemas.simulation import SimulationReport
from rotorwalk.services.analysis import validate_distributions

log = logging.getLogger(__name__)

# rotor_step's return value when the root's rotor wraps to its ancestor
DOWN_SINK = NO_NODE


def sample_config(tree: CoverTree, dists: RotorDistributionFamily, seed: int) -> RotorConfiguration:
    """
    Independent rotor per internal node, node x of type j drawing k with
    probability 𝒟_j(k).

    One uniform per node is consumed in node-id order, so the configuration
    of a shorter tree over the same graph and seed is a prefix of this one.
    """
    validate_distributions(tree.graph, dists)
    rng = stream(seed, CONFIG_STREAM)
    uniforms = rng.random(tree.internal_count)
    types = tree.arrays.types[:tree.internal_count]
    states = np.zeros(tree.internal_count, dtype=np.int64)
    for j in np.unique(types):
        probs = np.asarray([float(p) for p in dists.probs[j]])
        cdf = np.cumsum(probs) / probs.sum()
        mask = types == j
        states[mask] = np.minimum(np.searchsorted(cdf, uniforms[mask], side="right"), len(probs) - 1)
    return RotorConfiguration(states.tolist())


def rotor_step(tree: CoverTree, config: RotorConfiguration, node: int) -> int:
    """Increment the rotor at `node`, then return where it now points (DOWN_SINK past the root)"""
    if not 0 <= node < tree.internal_count:
        raise ContractViolation(f"rotor_step called on node {node}, which is not an internal node")
    state = (config.states[node] + 1) % (tree.child_count[node] + 1)
    config.states[node] = state
    if state == 0:
        return tree.parent[node]
    return tree.first_child[node] + state - 1


def step_cap(tree: CoverTree) -> int:
    """Steps after which a single walk is declared runaway"""
    return 10 * tree.node_count * (tree.graph.d_max + 2) ** (tree.height + 1)


def route_particle(tree: CoverTree, config: RotorConfiguration, odometer: Optional[Odometer] = None,
                   cap: Optional[int] = None) -> WalkOutcome:
    """Walk one particle from the root until a sink absorbs it; mutates `config`"""
    states = config.states
    parent = tree.parent
    first_child = tree.first_child
    child_count = tree.child_count
    internal = tree.internal_count
    cap = cap or step_cap(tree)

    node = ROOT
    steps = 0
    while True:
        state = states[node] + 1
        if state > child_count[node]:
            state = 0
        states[node] = state
        steps += 1
        if odometer is not None:
            odometer.record(node, state)
        if state == 0:
            node = parent[node]
            if node == DOWN_SINK:
                return WalkOutcome(Absorption.DOWN, steps)
        else:
            node = first_child[node] + state - 1
            if node >= internal:
                return WalkOutcome(Absorption.UP, steps, leaf=node)
        if steps > cap:
            raise DiagnosticsError(f"Walk exceeded {cap} steps without absorption")


def run_transfinite(tree: CoverTree, config: RotorConfiguration, n: int, seed: Optional[int] = None) -> SimulationReport:
    """Route n particles one after another without resetting rotors; mutates `config`"""
    if n < 1:
        raise DomainError(f"Particle count {n} must be at least 1")
    cap = step_cap(tree)
    escapes = []
    leaf_hits: Counter = Counter()
    escaped = 0
    down = 0
    for _ in range(n):
        outcome = route_particle(tree, config, cap=cap)
        if outcome.absorbed is Absorption.UP:
            escaped += 1
            leaf_hits[outcome.leaf] += 1
        else:
            down += 1
        escapes.append(escaped)
    log.info("Routed %d particles at height %d: %d escaped", n, tree.height, escaped)
    return SimulationReport(n=n, escapes=escapes, height=tree.height, seed=seed,
                            down_count=down, leaf_hits=dict(sorted(leaf_hits.items())))


def has_good_path(tree: CoverTree, config: RotorConfiguration) -> bool:
    """A root-to-depth-h path through good children only exists"""
    states = config.states
    stack = [ROOT]
    while stack:
        node = stack.pop()
        if tree.is_sink(node):
            return True
        start = tree.first_child[node]
        stack.extend(range(start + states[node], start + tree.child_count[node]))
    return False


def live_nodes(tree: CoverTree, config: RotorConfiguration) -> bytearray:
    """live[x] = 1 iff a good-children path runs from x down to depth h"""
    states = config.states
    live = bytearray(tree.node_count)
    for leaf in range(tree.internal_count, tree.node_count):
        live[leaf] = 1
    for node in reversed(range(tree.internal_count)):
        start = tree.first_child[node]
        live[node] = any(live[child] for child in range(start + states[node], start + tree.child_count[node]))
    return live


def good_path_vertices_at_level(tree: CoverTree, config: RotorConfiguration, level: int) -> Set[int]:
    """Level-`level` nodes from which a good-children path reaches depth h"""
    if not 1 <= level < tree.height:
        raise DomainError(f"Level {level} outside 1..{tree.height - 1}")
    live = live_nodes(tree, config)
    return {node for node in tree.level(level) if live[node]}


def min_particles_to_cover_level(tree: CoverTree, config: RotorConfiguration) -> int:
    """Particles routed (on a copy of `config`) until every up-sink leaf has been hit"""
    working = config.copy()
    bound = (tree.graph.d_max + 1) ** tree.height
    cap = step_cap(tree)
    unhit = set(range(tree.internal_count, tree.node_count))
    particles = 0
    while unhit:
        if particles >= bound:
            raise DiagnosticsError(f"{len(unhit)} leaves still unhit after {bound} particles")
        outcome = route_particle(tree, working, cap=cap)
        particles += 1
        if outcome.leaf is not None:
            unhit.discard(outcome.leaf)
    return particles

