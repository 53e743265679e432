"""Print moment matrices, verdicts and escape rates for the standard example covers"""
import sys
from pathlib import Path

# Add parent directory to path
sys.path.append(str(Path(__file__).resolve().parents[1]))

from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.models.branching import RotorDistributionFamily
from rotorwalk.services.analysis import classify, escape_probabilities, moment_matrix
from rotorwalk.services.base_graph import enumerate_embeddings
from rotorwalk.services.rotor import run_transfinite, sample_config
from rotorwalk.services.tree import build_cover


def show_classification(graph: BaseGraph):
    """One line per graph: children, M(uniform), ρ and verdict"""
    dists = RotorDistributionFamily.uniform(graph)
    matrix = moment_matrix(graph, dists).as_strings()
    result = classify(graph, dists)
    print(f"  {graph.children}  M={matrix}  rho={result.spectral_radius:.6f}  "
          f"{result.verdict.value}{' (critical)' if result.critical else ''}")


def embeddings_example():
    """The verdict depends on the planar embedding, not only on D"""
    print("Embeddings of D = [[0, 1], [2, 1]] under uniform rotors:")
    for graph in enumerate_embeddings(BaseGraph(((2,), (2, 1, 1)))):
        show_classification(graph)
    escape = escape_probabilities(BaseGraph(((2,), (2, 1, 1))))
    print(f"  simple random walk escape: {[round(float(e), 3) for e in escape]}")


def fibonacci_family():
    """χ_1 = (2, ..., 2) alpha times, χ_2 = (2, 1)"""
    print("Generalised Fibonacci trees:")
    for alpha in range(1, 6):
        show_classification(BaseGraph(((2,) * alpha, (2, 1))))


def escape_rates(height: int = 12, particles: int = 500, seeds: int = 5):
    """E_n / n on the transient embedding next to the simple-random-walk prediction"""
    graph = BaseGraph(((2,), (1, 1, 2)))
    dists = RotorDistributionFamily.uniform(graph)
    tree = build_cover(graph, 2, height)
    target = float(escape_probabilities(graph)[1])
    print(f"Escape rates at height {height} with {particles} particles (prediction {target:.3f}):")
    for seed in range(seeds):
        report = run_transfinite(tree, sample_config(tree, dists, seed), particles, seed=seed)
        print(f"  seed {seed}: E_n = {report.escaped}, E_n/n = {report.ratio:.3f}")


if __name__ == "__main__":
    embeddings_example()
    fibonacci_family()
    escape_rates()
