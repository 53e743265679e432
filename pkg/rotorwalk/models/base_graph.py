"""Base graph model"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Tuple


@dataclass(frozen=True)
class BaseGraph:
    """
    Finite directed multigraph given by its generation function.

    `children[i - 1]` is the ordered child-type list of type i (1-based types).
    The order fixes the planar embedding, and with it the rotor sequence of
    every vertex of that type. Instances may be structurally invalid; use
    `services.base_graph.validate` before relying on the invariants.
    """
    children: Tuple[Tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @classmethod
    def from_child_lists(cls, child_lists: Sequence[Sequence[int]], name: str = "") -> "BaseGraph":
        return cls(tuple(tuple(int(t) for t in row) for row in child_lists), name)

    @property
    def m(self) -> int:
        return len(self.children)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """d_i for every type, in type order"""
        return tuple(len(row) for row in self.children)

    @property
    def d_max(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def child_indices(self) -> Tuple[Tuple[int, ...], ...]:
        """Child types as 0-based indices"""
        return tuple(tuple(t - 1 for t in row) for row in self.children)

    def degree(self, type_id: int) -> int:
        """d_i for the 1-based type `type_id`"""
        return self.degrees[type_id - 1]

    def child_types(self, type_id: int) -> Tuple[int, ...]:
        """χ_i for the 1-based type `type_id`"""
        return self.children[type_id - 1]
