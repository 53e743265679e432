"""Rotor distributions and the good-children branching process"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.models.enums import NumericField

Number = Union[Fraction, float]


@dataclass(frozen=True)
class RotorDistributionFamily:
    """
    Per-type rotor laws: `probs[i - 1][k]` = P[rotor at a type-i vertex is k].

    Entries are all Fractions (exact field) or all floats.
    """
    probs: Tuple[Tuple[Number, ...], ...]

    @classmethod
    def uniform(cls, graph: BaseGraph) -> "RotorDistributionFamily":
        return cls(tuple(tuple(Fraction(1, d + 1) for _ in range(d + 1)) for d in graph.degrees))

    @classmethod
    def point_mass(cls, graph: BaseGraph, states: Sequence[int]) -> "RotorDistributionFamily":
        """Deterministic rotors: type i always in state `states[i - 1]`"""
        return cls(tuple(
            tuple(Fraction(1) if k == s else Fraction(0) for k in range(d + 1))
            for d, s in zip(graph.degrees, states)
        ))

    @classmethod
    def from_values(cls, rows: Sequence[Sequence[Union[str, float, int, Fraction]]]) -> "RotorDistributionFamily":
        """Build from "p/q" strings (exact) or numbers; any float makes the whole family float"""
        exact = all(not isinstance(v, float) for row in rows for v in row)
        if exact:
            return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))
        return cls(tuple(tuple(float(Fraction(v)) if isinstance(v, str) else float(v) for v in row) for row in rows))

    @property
    def field(self) -> NumericField:
        if all(isinstance(v, Fraction) for row in self.probs for v in row):
            return NumericField.EXACT
        return NumericField.FLOAT

    def of(self, type_id: int) -> Tuple[Number, ...]:
        """𝒟_i for the 1-based type `type_id`"""
        return self.probs[type_id - 1]

    def mean(self, type_id: int) -> Number:
        return sum((k * p for k, p in enumerate(self.of(type_id))), Fraction(0) if self.field is NumericField.EXACT else 0.0)


@dataclass(frozen=True)
class OffspringLaw:
    """
    Offspring distribution of the good-children process.

    `atoms[i - 1]` maps a child-count vector (s_1, ..., s_m) to its probability.
    """
    atoms: Tuple[Dict[Tuple[int, ...], Number], ...]

    @property
    def m(self) -> int:
        return len(self.atoms)

    def of(self, type_id: int) -> Dict[Tuple[int, ...], Number]:
        return self.atoms[type_id - 1]


@dataclass(frozen=True)
class MomentMatrix:
    """First-moment matrix M(𝒟): expected good children of type j of a type-i vertex"""
    entries: Tuple[Tuple[Number, ...], ...]
    field: NumericField

    @property
    def m(self) -> int:
        return len(self.entries)

    def as_floats(self) -> Tuple[Tuple[float, ...], ...]:
        return tuple(tuple(float(v) for v in row) for row in self.entries)

    def as_strings(self) -> Tuple[Tuple[str, ...], ...]:
        """Exact entries render as "p/q", floats with repr"""
        return tuple(tuple(str(v) if isinstance(v, Fraction) else repr(float(v)) for v in row) for row in self.entries)
