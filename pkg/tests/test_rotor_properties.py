"""Property-based tests for rotor configurations and rotor-router routing"""
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rotorwalk.core.exceptions import ContractViolation, DomainError
from rotorwalk.models.branching import RotorDistributionFamily
from rotorwalk.models.enums import Absorption
from rotorwalk.models.rotor import Odometer, RotorConfiguration
from rotorwalk.models.tree import ROOT
from rotorwalk.services.rotor import (
    DOWN_SINK,
    good_path_vertices_at_level,
    has_good_path,
    min_particles_to_cover_level,
    rotor_step,
    route_particle,
    run_transfinite,
    sample_config,
)
from rotorwalk.services.tree import build_cover, node_at_path
from tests.conftest import BINARY, CHI_A, CHI_C, FIBONACCI, uniform

seeds = st.integers(min_value=0, max_value=2**32)


def zeros(tree):
    return RotorConfiguration([0] * tree.internal_count)


def maxed(tree):
    return RotorConfiguration([tree.child_count[node] for node in range(tree.internal_count)])


def test_point_mass_at_zero_samples_all_zero():
    """Test deterministic rotors sample deterministically"""
    tree = build_cover(CHI_C, 2, 5)
    dists = RotorDistributionFamily.point_mass(CHI_C, [0, 0])
    assert sample_config(tree, dists, seed=7).states == [0] * tree.internal_count


def test_sampling_is_reproducible():
    """Test the same seed yields the same configuration"""
    tree = build_cover(FIBONACCI, 2, 2)
    assert sample_config(tree, uniform(FIBONACCI), 11) == sample_config(tree, uniform(FIBONACCI), 11)


# Feature: rotorwalk, Property 14: Lower trees see a prefix of the configuration
@pytest.mark.property
@settings(max_examples=30)
@given(seed=seeds, low=st.integers(min_value=1, max_value=5))
def test_sampling_restricts_consistently(seed, low):
    """
    Property: For any seed, the system SHALL sample on a lower tree exactly
    the restriction of the configuration of a taller tree.
    """
    tall = sample_config(build_cover(CHI_C, 2, 7), uniform(CHI_C), seed)
    short_tree = build_cover(CHI_C, 2, low)
    short = sample_config(short_tree, uniform(CHI_C), seed)
    assert tall.states[:short_tree.internal_count] == short.states


def test_sampled_frequencies_match_distribution():
    """Test per-state frequencies over 10^5 nodes"""
    tree = build_cover(BINARY, 1, 17)
    dists = RotorDistributionFamily(((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)),))
    states = sample_config(tree, dists, 2024).states
    n = len(states)
    assert n > 100_000
    counts = Counter(states)
    for k, p in enumerate((1 / 2, 1 / 3, 1 / 6)):
        standard_error = (p * (1 - p) / n) ** 0.5
        assert abs(counts[k] / n - p) <= 4 * standard_error


def test_rotor_step_examples():
    """Test wrap-around, first move and return to the parent"""
    tree = build_cover(FIBONACCI, 2, 2)
    config = zeros(tree)
    config.states[ROOT] = 2
    assert rotor_step(tree, config, ROOT) == DOWN_SINK
    assert config.states[ROOT] == 0
    assert rotor_step(tree, config, ROOT) == tree.first_child[ROOT]
    assert config.states[ROOT] == 1
    child = node_at_path(tree, [1])
    config.states[child] = tree.child_count[child]
    assert rotor_step(tree, config, child) == ROOT


def test_rotor_step_refuses_sinks():
    """Test stepping from an up-sink leaf violates the contract"""
    tree = build_cover(FIBONACCI, 2, 1)
    with pytest.raises(ContractViolation):
        rotor_step(tree, zeros(tree), tree.internal_count)


# Feature: rotorwalk, Property 15: A step turns exactly one rotor by one
@pytest.mark.property
@settings(max_examples=100)
@given(seed=seeds, data=st.data())
def test_single_step_conservation(seed, data):
    """
    Property: For any configuration and internal node, the system SHALL
    change exactly that node's rotor, by +1 modulo d + 1.
    """
    tree = build_cover(CHI_C, 2, 4)
    config = sample_config(tree, uniform(CHI_C), seed)
    before = list(config.states)
    node = data.draw(st.integers(min_value=0, max_value=tree.internal_count - 1))
    rotor_step(tree, config, node)
    changed = [x for x in range(tree.internal_count) if config.states[x] != before[x]]
    assert changed == [node]
    assert config.states[node] == (before[node] + 1) % (tree.child_count[node] + 1)


def test_route_particle_examples():
    """Test one-step walks at height 1 and an all-good Fibonacci tree"""
    tree = build_cover(CHI_A, 2, 1)
    outcome = route_particle(tree, zeros(tree))
    assert outcome.absorbed is Absorption.UP
    assert outcome.steps == 1
    assert outcome.leaf == tree.first_child[ROOT]
    outcome = route_particle(tree, maxed(tree))
    assert outcome.absorbed is Absorption.DOWN
    assert outcome.steps == 1
    fibonacci = build_cover(FIBONACCI, 2, 2)
    assert route_particle(fibonacci, zeros(fibonacci)).absorbed is Absorption.UP


def test_every_leaf_hit_after_one_rotor_turn():
    """Test d_root + 1 particles hit every child of a height-1 tree"""
    tree = build_cover(CHI_A, 2, 1)
    for start in range(tree.child_count[ROOT] + 1):
        config = zeros(tree)
        config.states[ROOT] = start
        report = run_transfinite(tree, config, tree.child_count[ROOT] + 1)
        assert set(report.leaf_hits) == set(tree.children_of(ROOT))
        assert report.down_count == 1


# Feature: rotorwalk, Property 16: Particles are conserved and escapes accumulate
@pytest.mark.property
@settings(max_examples=50)
@given(seed=seeds, n=st.integers(min_value=1, max_value=60))
def test_particle_conservation(seed, n):
    """
    Property: For any configuration and n, the system SHALL absorb every
    particle, with E_k nondecreasing and 0 <= E_k <= k.
    """
    tree = build_cover(CHI_C, 2, 5)
    report = run_transfinite(tree, sample_config(tree, uniform(CHI_C), seed), n, seed=seed)
    assert report.down_count + report.escaped == n
    assert sum(report.leaf_hits.values()) == report.escaped
    assert all(0 <= e <= k for k, e in enumerate(report.escapes, start=1))
    assert all(a <= b for a, b in zip(report.escapes, report.escapes[1:]))
    assert report.ratio == report.escaped / n


def test_run_transfinite_requires_a_particle():
    """Test n = 0 is outside the domain"""
    tree = build_cover(CHI_C, 2, 2)
    with pytest.raises(DomainError):
        run_transfinite(tree, zeros(tree), 0)


# Feature: rotorwalk, Property 17: Exit counts follow the rotor cycle
@pytest.mark.property
@settings(max_examples=50)
@given(seed=seeds, n=st.integers(min_value=1, max_value=30))
def test_odometer_is_consistent(seed, n):
    """
    Property: For any configuration, the system SHALL route so that exits
    toward each neighbour are fixed by the initial state and the visit count.
    """
    tree = build_cover(CHI_C, 2, 4)
    initial = sample_config(tree, uniform(CHI_C), seed)
    config = initial.copy()
    odometer = Odometer()
    for _ in range(n):
        route_particle(tree, config, odometer)
    assert odometer.consistent_with(initial, config, tree)


# Feature: rotorwalk, Property 18: Escapes do not grow with the height
@pytest.mark.property
@settings(max_examples=20, deadline=None)
@given(seed=seeds, n=st.integers(min_value=1, max_value=40))
def test_escapes_nonincreasing_in_height(seed, n):
    """
    Property: For any seed, the system SHALL report E_n on consistently
    restricted configurations that never increases with the height.
    """
    escaped = []
    for h in range(2, 8):
        tree = build_cover(BINARY, 1, h)
        escaped.append(run_transfinite(tree, sample_config(tree, uniform(BINARY), seed), n).escaped)
    assert all(later <= earlier for earlier, later in zip(escaped, escaped[1:]))


def test_good_path_extremes():
    """Test all-zero rotors make every child good and maxed rotors none"""
    tree = build_cover(CHI_C, 2, 4)
    assert has_good_path(tree, zeros(tree))
    assert not has_good_path(tree, maxed(tree))
    assert good_path_vertices_at_level(tree, zeros(tree), 2) == set(tree.level(2))
    assert good_path_vertices_at_level(tree, maxed(tree), 2) == set()


def test_good_path_level_must_be_interior():
    """Test level 0 and level h are rejected"""
    tree = build_cover(CHI_C, 2, 3)
    with pytest.raises(DomainError):
        good_path_vertices_at_level(tree, zeros(tree), 0)
    with pytest.raises(DomainError):
        good_path_vertices_at_level(tree, zeros(tree), 3)


# Feature: rotorwalk, Property 19: Live vertices below the root imply a live root
@pytest.mark.property
@settings(max_examples=50)
@given(seed=seeds)
def test_live_vertices_consistent_with_good_path(seed):
    """
    Property: For any configuration, the system SHALL report a good path from
    the root only when some level-1 node is live.
    """
    tree = build_cover(CHI_C, 2, 5)
    config = sample_config(tree, uniform(CHI_C), seed)
    live = good_path_vertices_at_level(tree, config, 1)
    good_first_level = set(range(tree.first_child[ROOT] + config.states[ROOT],
                                 tree.first_child[ROOT] + tree.child_count[ROOT]))
    assert has_good_path(tree, config) == bool(live & good_first_level)


def test_min_particles_at_height_one():
    """Test all-zero rotors need d_root particles and any other start d_root + 1"""
    tree = build_cover(CHI_A, 2, 1)
    d = tree.child_count[ROOT]
    assert min_particles_to_cover_level(tree, zeros(tree)) == d
    for start in range(1, d + 1):
        config = zeros(tree)
        config.states[ROOT] = start
        assert min_particles_to_cover_level(tree, config) == d + 1
        assert config.states[ROOT] == start


def test_configuration_line_format():
    """Test the rotor line is space separated and newline terminated"""
    tree = build_cover(FIBONACCI, 2, 2)
    config = RotorConfiguration([2, 0, 1])
    assert config.to_line() == "2 0 1\n"
    assert RotorConfiguration.from_line("2 0 1\n", tree) == config
    with pytest.raises(DomainError):
        RotorConfiguration.from_line("2 0\n", tree)
    with pytest.raises(DomainError):
        RotorConfiguration.from_line("2 0 2\n", tree)
