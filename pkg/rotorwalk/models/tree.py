"""Cover tree arena"""
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np

from rotorwalk.models.base_graph import BaseGraph

ROOT = 0
NO_NODE = -1


@dataclass(frozen=True, eq=False)
class CoverTree:
    """
    Truncated wired directed cover stored as breadth-first parallel arrays.

    Node ids are breadth-first, so the children of a node are the contiguous
    ids `first_child[x] .. first_child[x] + child_count[x] - 1` in χ order,
    and the internal nodes (depth < height) are exactly ids
    `0 .. internal_count - 1`. Depth-`height` nodes are the up sink: they have
    no children and carry no rotor. The down sink is virtual: it is the
    ancestor of the root and has no id.
    """
    graph: BaseGraph
    root_type: int
    height: int
    types: Tuple[int, ...]          # 0-based type per node
    depth: Tuple[int, ...]
    parent: Tuple[int, ...]         # NO_NODE for the root
    first_child: Tuple[int, ...]    # NO_NODE for up-sink leaves
    child_count: Tuple[int, ...]
    level_start: Tuple[int, ...]    # level_start[n] = first id at depth n; has height + 2 entries

    @property
    def node_count(self) -> int:
        return len(self.types)

    @property
    def internal_count(self) -> int:
        return self.level_start[self.height]

    @property
    def leaf_count(self) -> int:
        return self.node_count - self.internal_count

    def level(self, n: int) -> range:
        """Node ids at depth n"""
        return range(self.level_start[n], self.level_start[n + 1])

    def is_sink(self, node: int) -> bool:
        return node >= self.internal_count

    def type_of(self, node: int) -> int:
        """1-based type of `node`"""
        return self.types[node] + 1

    def children_of(self, node: int) -> range:
        if self.child_count[node] == 0:
            return range(0)
        start = self.first_child[node]
        return range(start, start + self.child_count[node])

    @cached_property
    def arrays(self) -> "TreeArrays":
        return TreeArrays(
            types=np.asarray(self.types, dtype=np.int64),
            depth=np.asarray(self.depth, dtype=np.int64),
            parent=np.asarray(self.parent, dtype=np.int64),
            first_child=np.asarray(self.first_child, dtype=np.int64),
            child_count=np.asarray(self.child_count, dtype=np.int64),
        )


@dataclass(frozen=True, eq=False)
class TreeArrays:
    """numpy views of the arena for vectorised samplers"""
    types: np.ndarray
    depth: np.ndarray
    parent: np.ndarray
    first_child: np.ndarray
    child_count: np.ndarray
