"""Truncated, wired directed covers"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from rotorwalk.core.config import settings
from rotorwalk.core.exceptions import CapacityError, DomainError, PathError
from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.models.tree import NO_NODE, ROOT, CoverTree
from rotorwalk.services.analysis import level_counts

log = logging.getLogger(__name__)


def projected_node_count(graph: BaseGraph, root_type: int, height: int) -> int:
    """Σ_{n <= height} w_root(n), computed without building anything"""
    total = 0
    census = [0] * graph.m
    census[root_type - 1] = 1
    for _ in range(height + 1):
        total += sum(census)
        step = [0] * graph.m
        for i, count in enumerate(census):
            if count:
                for j in graph.child_indices[i]:
                    step[j] += count
        census = step
    return total


def build_cover(graph: BaseGraph, root_type: int, height: int, max_nodes: Optional[int] = None) -> CoverTree:
    """Breadth-first arena of 𝒯_root^height; depth-height nodes are the up sink"""
    if not 1 <= root_type <= graph.m:
        raise DomainError(f"Root type {root_type} outside 1..{graph.m}")
    if height < 1:
        raise DomainError(f"Height {height} must be at least 1")
    max_nodes = max_nodes or settings.MAX_TREE_NODES
    projected = projected_node_count(graph, root_type, height)
    if projected > max_nodes:
        raise CapacityError(f"Tree of height {height} would have {projected} nodes, limit is {max_nodes}",
                            projected, max_nodes)

    types: List[int] = [root_type - 1]
    depth: List[int] = [0]
    parent: List[int] = [NO_NODE]
    first_child: List[int] = []
    child_count: List[int] = []
    level_start: List[int] = [0, 1]
    for n in range(height):
        for node in range(level_start[n], level_start[n + 1]):
            row = graph.child_indices[types[node]]
            first_child.append(len(types))
            child_count.append(len(row))
            types.extend(row)
            depth.extend([n + 1] * len(row))
            parent.extend([node] * len(row))
        level_start.append(len(types))
    leaves = len(types) - len(first_child)
    first_child.extend([NO_NODE] * leaves)
    child_count.extend([0] * leaves)

    tree = CoverTree(
        graph=graph,
        root_type=root_type,
        height=height,
        types=tuple(types),
        depth=tuple(depth),
        parent=tuple(parent),
        first_child=tuple(first_child),
        child_count=tuple(child_count),
        level_start=tuple(level_start),
    )
    log.info("Built cover of type %d, height %d: %d nodes, %d up-sink leaves",
             root_type, height, tree.node_count, tree.leaf_count)
    return tree


def level_census(tree: CoverTree, n: int) -> List[int]:
    """Nodes of each type at depth n, in type order"""
    counts = [0] * tree.graph.m
    for node in tree.level(n):
        counts[tree.types[node]] += 1
    return counts


def census_matches_levels(tree: CoverTree) -> bool:
    """Every level's type census equals row root_type of D^n"""
    return all(
        level_census(tree, n) == level_counts(tree.graph, n)[tree.root_type - 1]
        for n in range(tree.height + 1)
    )


def node_at_path(tree: CoverTree, path: Sequence[int]) -> int:
    """Follow 1-based child indices from the root"""
    node = ROOT
    for step, index in enumerate(path):
        if tree.is_sink(node):
            raise PathError(f"Step {step}: node {node} is an up-sink leaf and has no children", step)
        if not 1 <= index <= tree.child_count[node]:
            raise PathError(
                f"Step {step}: child index {index} outside 1..{tree.child_count[node]} at node {node}", step
            )
        node = tree.first_child[node] + index - 1
    return node


def edge_list(tree: CoverTree) -> Iterator[Tuple[int, int, int, int]]:
    """(parent id, child id, 1-based child type, child depth) per edge, in child-id order"""
    for node in range(1, tree.node_count):
        yield tree.parent[node], node, tree.type_of(node), tree.depth[node]
