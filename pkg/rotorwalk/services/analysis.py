"""Good-children branching process, Perron root and recurrence classification"""
import logging
import math
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from rotorwalk.core.config import settings
from rotorwalk.core.exceptions import DistributionError, DomainError, NumericError
from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.models.branching import MomentMatrix, Number, OffspringLaw, RotorDistributionFamily
from rotorwalk.models.enums import NumericField, Verdict
from rotorwalk.schemas.analysis import ClassificationResult
from rotorwalk.services.base_graph import adjacency_matrix

log = logging.getLogger(__name__)


def validate_distributions(graph: BaseGraph, dists: RotorDistributionFamily, tol: Optional[float] = None) -> None:
    """Raise DistributionError unless `dists` is a valid family for `graph`"""
    tol = tol if tol is not None else settings.DISTRIBUTION_TOL
    if len(dists.probs) != graph.m:
        raise DistributionError(f"Expected {graph.m} rotor distributions, got {len(dists.probs)}")
    for i, (row, d) in enumerate(zip(dists.probs, graph.degrees), start=1):
        if len(row) != d + 1:
            raise DistributionError(f"Distribution of type {i} has {len(row)} entries, expected {d + 1}")
        if any(p < 0 for p in row):
            raise DistributionError(f"Distribution of type {i} has a negative entry")
        total = sum(row)
        if isinstance(total, Fraction) and dists.field is NumericField.EXACT:
            if total != 1:
                raise DistributionError(f"Distribution of type {i} sums to {total}, not 1")
        elif abs(float(total) - 1.0) > tol:
            raise DistributionError(f"Distribution of type {i} sums to {float(total)!r}, not 1")


def _check_state(graph: BaseGraph, i: int, k: int) -> None:
    if not 1 <= i <= graph.m:
        raise DomainError(f"Type {i} outside 1..{graph.m}")
    if not 0 <= k <= graph.degree(i):
        raise DomainError(f"Rotor state {k} outside 0..{graph.degree(i)} for type {i}")


def good_children_count(graph: BaseGraph, i: int, j: int, k: int) -> int:
    """Number of positions l in k+1..d_i with χ_i(l) = j"""
    _check_state(graph, i, k)
    if not 1 <= j <= graph.m:
        raise DomainError(f"Type {j} outside 1..{graph.m}")
    return sum(1 for child in graph.child_types(i)[k:] if child == j)


def good_children_vector(graph: BaseGraph, i: int, k: int) -> Tuple[int, ...]:
    """(𝔠_i^1(k), ..., 𝔠_i^m(k))"""
    _check_state(graph, i, k)
    counts = [0] * graph.m
    for child in graph.child_indices[i - 1][k:]:
        counts[child] += 1
    return tuple(counts)


def good_children_table(graph: BaseGraph) -> List[np.ndarray]:
    """Per type, a (d_i + 1) x m integer array whose row k is the good-children vector"""
    return [
        np.array([good_children_vector(graph, i, k) for k in range(d + 1)], dtype=np.int64)
        for i, d in enumerate(graph.degrees, start=1)
    ]


def _zero(field: NumericField) -> Number:
    return Fraction(0) if field is NumericField.EXACT else 0.0


def offspring_law(graph: BaseGraph, dists: RotorDistributionFamily) -> OffspringLaw:
    """Atoms of the good-children offspring law; coinciding count vectors are merged"""
    validate_distributions(graph, dists)
    atoms = []
    for i, d in enumerate(graph.degrees, start=1):
        law: Dict[Tuple[int, ...], Number] = defaultdict(lambda: _zero(dists.field))
        for k, p in enumerate(dists.of(i)):
            if p == 0:
                continue
            law[good_children_vector(graph, i, k)] += p
        atoms.append(dict(law))
    return OffspringLaw(tuple(atoms))


def pgf_eval(law: OffspringLaw, i: int, z: Sequence[Number]) -> Number:
    """f^i(z) = Σ_s p^i(s) Π_j z_j^{s_j} on [0, 1]^m"""
    if not 1 <= i <= law.m:
        raise DomainError(f"Type {i} outside 1..{law.m}")
    if len(z) != law.m:
        raise DomainError(f"Expected a point in [0,1]^{law.m}, got {len(z)} coordinates")
    for j, zj in enumerate(z, start=1):
        if not 0 <= zj <= 1:
            raise DomainError(f"Coordinate z_{j} = {zj} outside [0, 1]")
    total = 0
    for counts, p in law.of(i).items():
        term = p
        for zj, s in zip(z, counts):
            if s:
                term = term * zj ** s
        total = total + term
    return total


def moment_matrix(graph: BaseGraph, dists: RotorDistributionFamily) -> MomentMatrix:
    """m_ij = Σ_k 𝒟_i(k) 𝔠_i^j(k)"""
    validate_distributions(graph, dists)
    rows = []
    for i in range(1, graph.m + 1):
        row = [_zero(dists.field)] * graph.m
        for k, p in enumerate(dists.of(i)):
            for j, count in enumerate(good_children_vector(graph, i, k)):
                if count:
                    row[j] = row[j] + p * count
        rows.append(tuple(row))
    return MomentMatrix(tuple(rows), dists.field)


def spectral_radius(matrix: MomentMatrix, tol: Optional[float] = None, max_iters: Optional[int] = None) -> float:
    """
    Perron root of a nonnegative matrix.

    Closed form for m <= 2. Otherwise ρ is the largest radius over the
    irreducible diagonal blocks of M (strongly connected components of its
    support); each block of size >= 3 goes through power iteration on
    B + I, which is primitive, stopped when ||Ax - λx||_1 <= tol·λ.
    """
    if _exactly_critical(matrix):
        return 1.0
    entries = np.array(matrix.as_floats(), dtype=float)
    if matrix.m <= 2:
        return _small_radius(entries)
    tol = tol or settings.SPECTRAL_TOL
    max_iters = max_iters or settings.SPECTRAL_MAX_ITERS
    support = nx.from_numpy_array((entries > 0).astype(np.int64), create_using=nx.DiGraph)
    radii = []
    for component in nx.strongly_connected_components(support):
        block = entries[np.ix_(sorted(component), sorted(component))]
        if len(component) <= 2:
            radii.append(_small_radius(block))
        else:
            radii.append(_power_iteration(block, tol, max_iters))
    return max(radii)


def _small_radius(entries: np.ndarray) -> float:
    if entries.shape[0] == 1:
        return float(entries[0, 0])
    (a, b), (c, d) = entries.tolist()
    return (a + d) / 2 + math.sqrt(((a - d) / 2) ** 2 + b * c)


def _power_iteration(m: np.ndarray, tol: float, max_iters: int) -> float:
    shifted = m + np.eye(m.shape[0])
    x = np.full(m.shape[0], 1.0 / m.shape[0])
    lam = 1.0
    for iteration in range(max_iters):
        y = shifted @ x
        lam = float(y.sum())
        x = y / lam
        residual = float(np.abs(shifted @ x - lam * x).sum())
        if residual <= tol * lam:
            log.debug("Power iteration converged after %d iterations", iteration + 1)
            return max(lam - 1.0, 0.0)
    raise NumericError(f"Power iteration did not converge in {max_iters} iterations", last_iterate=x)


def _exactly_critical(matrix: MomentMatrix) -> bool:
    """ρ(M) = 1 decided in rational arithmetic; only for exact matrices with m <= 2"""
    if matrix.field is not NumericField.EXACT or matrix.m > 2:
        return False
    if matrix.m == 1:
        return matrix.entries[0][0] == 1
    (a, b), (c, d) = matrix.entries
    # 1 is a root of the characteristic polynomial and the larger one
    return 1 - (a + d) + (a * d - b * c) == 0 and a + d <= 2


def positive_regularity(matrix: MomentMatrix) -> bool:
    """Some power M^n with n <= m^2 - 2m + 2 is entrywise positive"""
    pattern = (np.array(matrix.as_floats()) > 0).astype(np.int64)
    power = pattern.copy()
    for _ in range(matrix.m ** 2 - 2 * matrix.m + 2):
        if power.all():
            return True
        power = ((power @ pattern) > 0).astype(np.int64)
    return False


def singularity(law: OffspringLaw) -> bool:
    """Every individual has exactly one child with probability one"""
    return all(sum(counts) == 1 for atoms in law.atoms for counts, p in atoms.items() if p > 0)


def classify(graph: BaseGraph, dists: RotorDistributionFamily, tol: Optional[float] = None) -> ClassificationResult:
    """Recurrent iff ρ(M(𝒟)) <= 1 (within tolerance); flags the branching-process hypotheses"""
    tol = tol if tol is not None else settings.CRITICALITY_TOL
    matrix = moment_matrix(graph, dists)
    law = offspring_law(graph, dists)
    exact_critical = _exactly_critical(matrix)
    rho = spectral_radius(matrix)
    critical = exact_critical or abs(rho - 1.0) <= tol
    transient = not critical and rho > 1.0 + tol
    result = ClassificationResult(
        spectral_radius=rho,
        verdict=Verdict.TRANSIENT if transient else Verdict.RECURRENT,
        critical=critical,
        positive_regular=positive_regularity(matrix),
        singular=singularity(law),
        field=matrix.field,
        exact_critical=exact_critical,
    )
    if not result.positive_regular or result.singular:
        log.warning("Branching process is %s; the classification theorem's hypotheses fail",
                    "singular" if result.singular else "not positive regular")
    log.info("Classified %s: rho=%.12g verdict=%s", graph.children, rho, result.verdict.value)
    return result


def homogeneous_verdict(b: int, dist: Sequence[Number], tol: Optional[float] = None) -> ClassificationResult:
    """
    Homogeneous tree with b children per vertex: M is the scalar b - E[ρ], so
    the walk is transient iff E[ρ] < b - 1.
    """
    if b < 1 or len(dist) != b + 1:
        raise DistributionError(f"Homogeneous tree with b={b} needs a distribution on 0..{b}")
    tol = tol if tol is not None else settings.CRITICALITY_TOL
    exact = all(isinstance(p, Fraction) for p in dist)
    mean = sum((k * p for k, p in enumerate(dist)), Fraction(0) if exact else 0.0)
    scalar = b - mean
    rho = float(scalar)
    exact_critical = exact and scalar == 1
    critical = exact_critical or abs(rho - 1.0) <= tol
    transient = not critical and rho > 1.0 + tol
    return ClassificationResult(
        spectral_radius=rho,
        verdict=Verdict.TRANSIENT if transient else Verdict.RECURRENT,
        critical=critical,
        positive_regular=rho > 0,
        singular=all(p == 0 for k, p in enumerate(dist) if k != b - 1),
        field=NumericField.EXACT if exact else NumericField.FLOAT,
        exact_critical=exact_critical,
    )


def escape_probabilities(graph: BaseGraph, tol: Optional[float] = None, max_iters: Optional[int] = None) -> np.ndarray:
    """
    Probability ℰ_i that a simple random walk from a type-i root never reaches
    the root's ancestor: the maximal fixed point of a ↦ 1 - 1/(1 + D a),
    reached by monotone iteration from a = 1.
    """
    tol = tol or settings.ESCAPE_TOL
    max_iters = max_iters or settings.ESCAPE_MAX_ITERS
    if all(d == 1 for d in graph.degrees):
        # the cover is a ray, on which the walk is recurrent
        return np.zeros(graph.m)
    d = adjacency_matrix(graph).astype(float)
    a = np.ones(graph.m)
    for iteration in range(max_iters):
        updated = 1.0 - 1.0 / (1.0 + d @ a)
        change = float(np.max(np.abs(updated - a)))
        a = updated
        if change < tol:
            log.debug("Escape fixed point converged after %d iterations", iteration + 1)
            return a
    raise NumericError(f"Escape iteration did not converge in {max_iters} iterations", last_iterate=a)


def level_counts(graph: BaseGraph, n: int) -> List[List[int]]:
    """w(n) = D^n with exact integers; w_ij(n) counts type-j vertices at depth n of 𝒯_i"""
    if n < 0:
        raise DomainError(f"Level {n} must be non-negative")
    base = adjacency_matrix(graph).astype(object)
    result = np.identity(graph.m, dtype=np.int64).astype(object)
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return [[int(v) for v in row] for row in result]


def level_totals(graph: BaseGraph, root_type: int, n: int) -> int:
    """w_i(n): total population at depth n of 𝒯_i"""
    return sum(level_counts(graph, n)[root_type - 1])


def expected_population(graph: BaseGraph, dists: RotorDistributionFamily, root_type: int, depth: int) -> Number:
    """(M^depth 1)_root; bounds P[Z_depth ≠ 0] from above"""
    matrix = moment_matrix(graph, dists).entries
    vector: List[Number] = [Fraction(1) if matrix and isinstance(matrix[0][0], Fraction) else 1.0] * graph.m
    for _ in range(depth):
        vector = [sum((mij * vj for mij, vj in zip(row, vector)), 0) for row in matrix]
    return vector[root_type - 1]
