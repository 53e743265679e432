"""Exhaustive and randomised oracles for the rotor-router walk"""
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from rotorwalk.core.config import settings
from rotorwalk.core.exceptions import CapacityError, DomainError
from rotorwalk.core.random import SCHEDULE_STREAM, stream
from rotorwalk.models.enums import Absorption, Schedule
from rotorwalk.models.rotor import RotorConfiguration
from rotorwalk.models.tree import CoverTree
from rotorwalk.schemas.simulation import OracleCheck
from rotorwalk.services.rotor import (
    DOWN_SINK,
    good_path_vertices_at_level,
    has_good_path,
    min_particles_to_cover_level,
    rotor_step,
    route_particle,
    run_transfinite,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbsorptionRecord:
    """Everything the abelian property says is schedule-independent"""
    states: tuple
    leaf_hits: Dict[int, int]
    down_count: int


def configuration_count(tree: CoverTree) -> int:
    """Π over internal nodes of (d + 1)"""
    return math.prod(tree.child_count[node] + 1 for node in range(tree.internal_count))


def enumerate_configs(tree: CoverTree, limit: Optional[int] = None) -> Iterator[RotorConfiguration]:
    """Mixed-radix enumeration in node-id order; the last internal node varies fastest"""
    limit = limit or settings.MAX_ENUMERATED_CONFIGS
    projected = configuration_count(tree)
    if projected > limit:
        raise CapacityError(f"{projected} rotor configurations exceed the enumeration limit {limit}",
                            projected, limit)
    radices = [range(tree.child_count[node] + 1) for node in range(tree.internal_count)]
    for states in itertools.product(*radices):
        yield RotorConfiguration(list(states))


def first_particle_oracle(tree: CoverTree, configs: Iterable[RotorConfiguration]) -> OracleCheck:
    """The first particle escapes exactly when a good path exists"""
    checked = passed = 0
    for config in configs:
        checked += 1
        escaped = route_particle(tree, config.copy()).absorbed is Absorption.UP
        if escaped == has_good_path(tree, config):
            passed += 1
        else:
            log.warning("First-particle mismatch on configuration %s", config.to_line().strip())
    return OracleCheck(name="first-particle equivalence", checked=checked, passed=passed,
                       detail=f"{passed}/{checked} configurations pass first-particle equivalence")


def concurrent_run(tree: CoverTree, config: RotorConfiguration, n: int, schedule: Schedule,
                   seed: int = 0) -> AbsorptionRecord:
    """
    Start n particles at the root together and advance one particle by one
    step at a time, the particle chosen by `schedule`. Works on a copy.
    """
    working = config.copy()
    rng = stream(seed, SCHEDULE_STREAM)
    positions: List[int] = [0] * n
    hits: Counter = Counter()
    down = 0
    turn = 0
    while positions:
        if schedule is Schedule.SEQUENTIAL:
            index = 0
        elif schedule is Schedule.ROUND_ROBIN:
            index = turn % len(positions)
        elif schedule is Schedule.RANDOM:
            index = int(rng.integers(len(positions)))
        else:
            index = max(range(len(positions)), key=lambda p: (tree.depth[positions[p]], -p))
        turn += 1
        location = rotor_step(tree, working, positions[index])
        if location == DOWN_SINK:
            down += 1
            del positions[index]
        elif tree.is_sink(location):
            hits[location] += 1
            del positions[index]
        else:
            positions[index] = location
    return AbsorptionRecord(tuple(working.states), dict(hits), down)


def abelian_check(tree: CoverTree, config: RotorConfiguration, n: int,
                  schedules: Sequence[Schedule], seed: int = 0) -> bool:
    """Final rotors, leaf hits and down count agree across schedules and with the sequential run"""
    if n < 1:
        raise DomainError(f"Particle count {n} must be at least 1")
    working = config.copy()
    report = run_transfinite(tree, working, n)
    reference = AbsorptionRecord(tuple(working.states), report.leaf_hits, report.down_count)
    for schedule in schedules:
        if concurrent_run(tree, config, n, schedule, seed) != reference:
            log.warning("Schedule %s disagrees with the sequential run", schedule.value)
            return False
    return True


def abelian_oracle(tree: CoverTree, configs: Iterable[RotorConfiguration], n: int,
                   schedules: Sequence[Schedule], seed: int = 0) -> OracleCheck:
    checked = passed = 0
    for config in configs:
        checked += 1
        passed += abelian_check(tree, config, n, schedules, seed + checked)
    names = ", ".join(schedule.value for schedule in schedules)
    return OracleCheck(name="abelian", checked=checked, passed=passed,
                       detail=f"{passed}/{checked} configurations agree across {names} with n={n}")


def n_bound_search(tree: CoverTree, limit: Optional[int] = None) -> int:
    """n_root(h): the worst case of min_particles_to_cover_level over every configuration"""
    return max(min_particles_to_cover_level(tree, config) for config in enumerate_configs(tree, limit))


def n_bound_oracle(tree: CoverTree, limit: Optional[int] = None) -> OracleCheck:
    """n_root(h) <= (D_max + 1)^h, and n_root(1) = d_root + 1 exactly"""
    found = n_bound_search(tree, limit)
    bound = (tree.graph.d_max + 1) ** tree.height
    ok = found <= bound
    if tree.height == 1:
        ok = ok and found == tree.child_count[0] + 1
    return OracleCheck(name="n-bound", checked=1, passed=int(ok),
                       detail=f"n({tree.height}) = {found} <= {bound}: {'pass' if ok else 'fail'}")


def escape_lower_bound_check(tree: CoverTree, config: RotorConfiguration, level: int) -> bool:
    """With (D_max + 1)^level particles, E_n is at least the number of live level-`level` nodes"""
    live = good_path_vertices_at_level(tree, config, level)
    n = (tree.graph.d_max + 1) ** level
    report = run_transfinite(tree, config.copy(), n)
    return report.escaped >= len(live)


def escape_lower_bound_oracle(tree: CoverTree, configs: Iterable[RotorConfiguration], level: int) -> OracleCheck:
    checked = passed = 0
    for config in configs:
        checked += 1
        passed += escape_lower_bound_check(tree, config, level)
    return OracleCheck(name="escape lower bound", checked=checked, passed=passed,
                       detail=f"{passed}/{checked} configurations escape at least their live level-{level} nodes")
