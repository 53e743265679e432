"""Rotor configuration and walk records"""
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from rotorwalk.core.exceptions import DomainError
from rotorwalk.models.enums import Absorption
from rotorwalk.models.tree import CoverTree


@dataclass
class RotorConfiguration:
    """
    Rotor state of every internal node, indexed by node id.

    State k points at neighbour x^(k); state 0 is the ancestor. Routing
    mutates `states` in place, so a configuration must not be shared between
    concurrent walks.
    """
    states: List[int]

    def copy(self) -> "RotorConfiguration":
        return RotorConfiguration(list(self.states))

    def to_line(self) -> str:
        return " ".join(str(s) for s in self.states) + "\n"

    @classmethod
    def from_line(cls, text: str, tree: CoverTree) -> "RotorConfiguration":
        """Parse the space-separated serialisation and check it fits `tree`"""
        try:
            states = [int(token) for token in text.strip().split(" ")] if text.strip() else []
        except ValueError as exc:
            raise DomainError(f"Rotor line is not a list of integers: {exc}") from exc
        if len(states) != tree.internal_count:
            raise DomainError(
                f"Rotor line has {len(states)} states, tree has {tree.internal_count} internal nodes"
            )
        for node, state in enumerate(states):
            if not 0 <= state <= tree.child_count[node]:
                raise DomainError(f"Rotor state {state} out of range at node {node}")
        return cls(states)


@dataclass(frozen=True)
class WalkOutcome:
    """Where a particle was absorbed and how many rotor increments it took"""
    absorbed: Absorption
    steps: int
    leaf: Optional[int] = None


@dataclass
class Odometer:
    """Exit counts per internal node and neighbour index, filled during routing"""
    exits: Dict[int, Dict[int, int]] = field(default_factory=lambda: defaultdict(lambda: defaultdict(int)))

    def record(self, node: int, neighbour: int) -> None:
        self.exits[node][neighbour] += 1

    def total(self, node: int) -> int:
        return sum(self.exits[node].values()) if node in self.exits else 0

    def consistent_with(self, initial: RotorConfiguration, final: RotorConfiguration, tree: CoverTree) -> bool:
        """
        Exits toward neighbour k of a node visited N times from state s0 must be
        (N + (s0 - k) mod (d + 1)) // (d + 1), and the final state (s0 + N) mod (d + 1).
        """
        for node in range(tree.internal_count):
            period = tree.child_count[node] + 1
            s0 = initial.states[node]
            n = self.total(node)
            if final.states[node] != (s0 + n) % period:
                return False
            counts = self.exits.get(node, {})
            for k in range(period):
                if counts.get(k, 0) != (n + (s0 - k) % period) // period:
                    return False
        return True
