"""Base graph validation, adjacency and embeddings"""
import itertools
import logging
import math
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from rotorwalk.core.config import settings
from rotorwalk.core.exceptions import CapacityError
from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.schemas.analysis import ValidationReport

log = logging.getLogger(__name__)


def validate(graph: BaseGraph) -> ValidationReport:
    """Check every structural assumption; never raises"""
    violations: List[str] = []
    if graph.m == 0:
        violations.append("graph has no types")
    for i, row in enumerate(graph.children, start=1):
        if not row:
            violations.append(f"type {i} has an empty child list (every type needs at least one child)")
        for position, child in enumerate(row, start=1):
            if not 1 <= child <= graph.m:
                violations.append(f"type {i}: child {position} has type {child} outside 1..{graph.m}")
    if not violations:
        digraph = to_networkx(graph)
        mutual = (nx.descendants(digraph, 1) | {1}) & (nx.ancestors(digraph, 1) | {1})
        for t in range(1, graph.m + 1):
            if t not in mutual:
                violations.append(f"graph is not strongly connected: type {t} is not mutually reachable with type 1")
    return ValidationReport(ok=not violations, violations=violations)


def to_networkx(graph: BaseGraph) -> nx.MultiDiGraph:
    """One directed edge per child slot, keyed by its position in χ_i"""
    digraph = nx.MultiDiGraph()
    digraph.add_nodes_from(range(1, graph.m + 1))
    for i, row in enumerate(graph.children, start=1):
        for position, child in enumerate(row, start=1):
            digraph.add_edge(i, child, key=position)
    return digraph


def adjacency_matrix(graph: BaseGraph) -> np.ndarray:
    """D with d_ij = multiplicity of type j in χ_i"""
    matrix = np.zeros((graph.m, graph.m), dtype=np.int64)
    for i, row in enumerate(graph.child_indices):
        for j in row:
            matrix[i, j] += 1
    return matrix


def embedding_count(graph: BaseGraph) -> int:
    """Distinct orderings of every χ_i's multiset, multiplied over types"""
    total = 1
    for row in graph.children:
        total *= _multiset_permutations(row)
    return total


def enumerate_embeddings(graph: BaseGraph, limit: Optional[int] = None) -> List[BaseGraph]:
    """All generation functions with the same adjacency matrix, lexicographically ordered"""
    limit = limit or settings.MAX_ENUMERATED_CONFIGS
    projected = embedding_count(graph)
    if projected > limit:
        raise CapacityError(f"{projected} embeddings exceed the enumeration limit {limit}", projected, limit)
    per_type = [list(_distinct_orderings(sorted(row))) for row in graph.children]
    embeddings = [BaseGraph(tuple(choice)) for choice in itertools.product(*per_type)]
    log.debug("Enumerated %d embeddings", len(embeddings))
    return embeddings


def _multiset_permutations(row: Sequence[int]) -> int:
    count = math.factorial(len(row))
    for value in set(row):
        count //= math.factorial(row.count(value))
    return count


def _distinct_orderings(items: List[int]) -> Iterator[Tuple[int, ...]]:
    """Distinct permutations of a sorted multiset, in lexicographic order"""
    if not items:
        yield ()
        return
    for index, value in enumerate(items):
        if index and items[index - 1] == value:
            continue
        for rest in _distinct_orderings(items[:index] + items[index + 1:]):
            yield (value, *rest)
