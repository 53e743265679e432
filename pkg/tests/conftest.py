"""Pytest configuration and fixtures"""
import json
from fractions import Fraction
from typing import List

import pytest
from hypothesis import strategies as st

from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.models.branching import RotorDistributionFamily

FIBONACCI = BaseGraph(((2,), (2, 1)), "fibonacci")
# the three planar embeddings of D = [[0, 1], [2, 1]]
CHI_A = BaseGraph(((2,), (2, 1, 1)), "chi_a")
CHI_B = BaseGraph(((2,), (1, 2, 1)), "chi_b")
CHI_C = BaseGraph(((2,), (1, 1, 2)), "chi_c")
BINARY = BaseGraph(((1, 1),), "binary")
TERNARY = BaseGraph(((1, 1, 1),), "ternary")
HALF_LINE = BaseGraph(((1,),), "half_line")
BIREGULAR = BaseGraph(((2, 2), (1, 1, 1)), "biregular_2_3")


def generalized_fibonacci(alpha: int) -> BaseGraph:
    """χ_1 = (2, ..., 2) alpha times, χ_2 = (2, 1)"""
    return BaseGraph(((2,) * alpha, (2, 1)), f"generalized_fibonacci_{alpha}")


def uniform(graph: BaseGraph) -> RotorDistributionFamily:
    return RotorDistributionFamily.uniform(graph)


@st.composite
def strongly_connected_graphs(draw, max_types: int = 3, max_extra: int = 2):
    """Random generation functions; type i always has a child of type i + 1 (mod m)"""
    m = draw(st.integers(min_value=1, max_value=max_types))
    rows = []
    for i in range(m):
        extra = draw(st.lists(st.integers(min_value=1, max_value=m), max_size=max_extra))
        position = draw(st.integers(min_value=0, max_value=len(extra)))
        rows.append(tuple(extra[:position] + [(i + 1) % m + 1] + extra[position:]))
    return BaseGraph(tuple(rows))


@st.composite
def exact_distributions(draw, graph: BaseGraph):
    """Rational rotor laws built from integer weights"""
    rows = []
    for d in graph.degrees:
        weights = draw(st.lists(st.integers(min_value=0, max_value=5), min_size=d + 1, max_size=d + 1)
                       .filter(lambda w: sum(w) > 0))
        total = sum(weights)
        rows.append(tuple(Fraction(w, total) for w in weights))
    return RotorDistributionFamily(tuple(rows))


@st.composite
def graphs_with_distributions(draw, max_types: int = 3):
    graph = draw(strongly_connected_graphs(max_types=max_types))
    return graph, draw(exact_distributions(graph))


@pytest.fixture
def fibonacci() -> BaseGraph:
    return FIBONACCI


@pytest.fixture
def chi_c() -> BaseGraph:
    return CHI_C


@pytest.fixture
def write_config(tmp_path):
    """Write an experiment configuration to a temporary JSON file and return its path"""
    def _write(children: List[List[int]], root: int, dists="uniform", **extra) -> str:
        path = tmp_path / "experiment.json"
        payload = {"m": len(children), "children": children, "dists": dists, "root": root, **extra}
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return _write
