"""Experiment configuration and command orchestration"""
import logging
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError

from rotorwalk.core.config import settings
from rotorwalk.core.exceptions import ConfigError
from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.models.branching import RotorDistributionFamily
from rotorwalk.models.enums import Schedule
from rotorwalk.models.rotor import RotorConfiguration
from rotorwalk.models.tree import CoverTree
from rotorwalk.schemas.experiment import ExperimentConfig
from rotorwalk.schemas.report import (
    ClassifyReport,
    EmbeddingRow,
    EmbeddingsReport,
    EscapeReport,
    LevelRow,
    LevelsReport,
    MbpReport,
    OracleReport,
    SimulateReport,
    SimulationRow,
    SrwReport,
    TreeReport,
    ValidateReport,
)
from rotorwalk.schemas.simulation import HeightSweep, OracleCheck, OracleSummary, SimulationReport
from rotorwalk.services import analysis, base_graph, branching, oracle, rotor, srw, tree as cover

log = logging.getLogger(__name__)

ORACLE_SCHEDULES = (Schedule.ROUND_ROBIN, Schedule.RANDOM, Schedule.DEPTH_PRIORITY)


def _location(loc: Sequence[Any]) -> str:
    """("children", 1, 0) -> "children[1][0]" """
    path = ""
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}" if path else str(part)
    return path or "<root>"


def _schema_errors(exc: ValidationError) -> List[str]:
    return [f"{_location(error['loc'])}: {error['msg']}" for error in exc.errors()]


def parse_config(text: str) -> ExperimentConfig:
    """Parse JSON text and check it against the schema and every structural invariant"""
    try:
        config = ExperimentConfig.model_validate_json(text)
    except ValidationError as exc:
        raise ConfigError(_schema_errors(exc)) from exc
    check_config(config)
    return config


def apply_overrides(config: ExperimentConfig, **overrides: Any) -> ExperimentConfig:
    """Command-line values replace file values; None means not given"""
    updates = {key: value for key, value in overrides.items() if value is not None}
    if not updates:
        return config
    try:
        return ExperimentConfig.model_validate({**config.model_dump(), **updates})
    except ValidationError as exc:
        raise ConfigError(_schema_errors(exc)) from exc


def _distribution_errors(config: ExperimentConfig, degrees: Sequence[int]) -> List[str]:
    if config.dists == "uniform":
        return []
    errors = []
    if len(config.dists) != config.m:
        return [f"dists has {len(config.dists)} rows but m = {config.m}"]
    for i, (row, d) in enumerate(zip(config.dists, degrees)):
        if len(row) != d + 1:
            errors.append(f"dists[{i}]: type {i + 1} has {d} children and needs {d + 1} probabilities, got {len(row)}")
            continue
        try:
            values = [Fraction(v) if isinstance(v, str) else v for v in row]
        except (ValueError, ZeroDivisionError) as exc:
            errors.append(f"dists[{i}]: type {i + 1} has an unparseable probability ({exc})")
            continue
        if any(v < 0 for v in values):
            errors.append(f"dists[{i}]: type {i + 1} has a negative probability")
        total = sum(values)
        exact = not any(isinstance(v, float) for v in values)
        if (exact and total != 1) or (not exact and abs(float(total) - 1.0) > settings.DISTRIBUTION_TOL):
            errors.append(f"dists[{i}]: probabilities of type {i + 1} sum to {float(total)!r}, not 1")
    return errors


def check_config(config: ExperimentConfig) -> None:
    """Semantic checks the schema cannot express; raises ConfigError listing all of them"""
    errors = []
    if len(config.children) != config.m:
        errors.append(f"children has {len(config.children)} rows but m = {config.m}")
    for i, row in enumerate(config.children):
        for k, t in enumerate(row):
            if not 1 <= t <= config.m:
                errors.append(f"type out of range at children[{i}][{k}]: {t} not in 1..{config.m}")
    if not 1 <= config.root <= config.m:
        errors.append(f"root: type {config.root} out of range 1..{config.m}")
    for index, h in enumerate(config.heights):
        if h < 1:
            errors.append(f"heights[{index}]: height {h} must be at least 1")
    errors.extend(_distribution_errors(config, [len(row) for row in config.children]))
    if not errors:
        errors.extend(base_graph.validate(resolve_graph(config)).violations)
    if errors:
        raise ConfigError(errors)


def resolve_graph(config: ExperimentConfig) -> BaseGraph:
    return BaseGraph.from_child_lists(config.children)


def resolve_distributions(config: ExperimentConfig, graph: BaseGraph) -> RotorDistributionFamily:
    """"uniform" expands to 𝒟_i uniform on 0..d_i"""
    if config.dists == "uniform":
        return RotorDistributionFamily.uniform(graph)
    return RotorDistributionFamily.from_values(config.dists)


def escape_height_sweep(graph: BaseGraph, dists: RotorDistributionFamily, root_type: int,
                        heights: Sequence[int], n: int, seed: int) -> Tuple[List[SimulationReport], HeightSweep]:
    """
    E_n over increasing heights for one seed. Each height samples its own
    configuration, which is the restriction of the tallest one because draws
    are consumed in node-id order.
    """
    heights = sorted(set(heights))
    runs = []
    for h in heights:
        tree = cover.build_cover(graph, root_type, h)
        config = rotor.sample_config(tree, dists, seed)
        runs.append(rotor.run_transfinite(tree, config, n, seed=seed))
    escaped = [run.escaped for run in runs]
    monotone = all(later <= earlier for earlier, later in zip(escaped, escaped[1:]))
    if not monotone:
        log.warning("E_%d is not nonincreasing in the height for seed %d: %s", n, seed, escaped)
    stabilized = next((heights[k] for k in range(1, len(heights)) if escaped[k] == escaped[k - 1]), None)
    sweep = HeightSweep(seed=seed, n=n, heights=heights, escaped=escaped, monotone=monotone,
                        stabilized_height=stabilized)
    return runs, sweep


class ExperimentService:
    """Builds every command report from one resolved configuration"""

    def __init__(self, config: ExperimentConfig):
        check_config(config)
        self.config = config
        self.graph = resolve_graph(config)
        self.dists = resolve_distributions(config, self.graph)

    def _require_seed(self, command: str) -> int:
        if self.config.seed is None:
            raise ConfigError([f"seed: the {command} command is stochastic and needs a seed (--seed or \"seed\")"])
        return self.config.seed

    def validate(self) -> ValidateReport:
        """Validate the configured base graph"""
        return ValidateReport(command="validate", config=self.config, validation=base_graph.validate(self.graph))

    def classify(self) -> ClassifyReport:
        """Moment matrix and recurrence verdict"""
        matrix = analysis.moment_matrix(self.graph, self.dists)
        result = analysis.classify(self.graph, self.dists, self.config.tol)
        return ClassifyReport(command="classify", config=self.config,
                              moment_matrix=[list(row) for row in matrix.as_strings()], classification=result)

    def escape(self) -> EscapeReport:
        """Simple-random-walk escape probabilities"""
        values = analysis.escape_probabilities(self.graph)
        d = base_graph.adjacency_matrix(self.graph).astype(float)
        residual = float(np.max(np.abs(values - (1.0 - 1.0 / (1.0 + d @ values)))))
        return EscapeReport(command="escape", config=self.config,
                            escape_probabilities=values.tolist(), residual=residual)

    def levels(self) -> LevelsReport:
        """w(n) for every configured height"""
        rows = []
        for n in self.config.heights:
            counts = analysis.level_counts(self.graph, n)
            rows.append(LevelRow(n=n, counts=counts, totals=[sum(row) for row in counts]))
        return LevelsReport(command="levels", config=self.config, levels=rows)

    def simulate(self) -> SimulateReport:
        """Transfinite runs over the configured heights next to the analytic prediction"""
        seed = self._require_seed("simulate")
        classification = analysis.classify(self.graph, self.dists, self.config.tol)
        escape_prob = float(analysis.escape_probabilities(self.graph)[self.config.root - 1])
        runs, sweep = escape_height_sweep(self.graph, self.dists, self.config.root, self.config.heights,
                                          self.config.particles, seed)
        rows = [
            SimulationRow(h=run.height, n=run.n, E_n=run.escaped, ratio=run.ratio, escape_prob=escape_prob,
                          verdict=classification.verdict, seed=seed)
            for run in runs
        ]
        return SimulateReport(command="simulate", config=self.config, rows=rows, runs=runs, sweep=sweep,
                              classification=classification)

    def mbp(self) -> MbpReport:
        """Survival frequencies of the good-children process at the largest configured height"""
        seed = self._require_seed("mbp")
        depth = max(self.config.heights)
        survival = branching.mbp_survival_estimate(self.graph, self.dists, depth, self.config.samples, seed)
        bounds = [float(analysis.expected_population(self.graph, self.dists, i, depth))
                  for i in range(1, self.graph.m + 1)]
        return MbpReport(command="mbp", config=self.config, survival=survival, expected_population=bounds)

    def _oracle_configs(self, tree: CoverTree, seed: Optional[int]) -> Iterator[RotorConfiguration]:
        if oracle.configuration_count(tree) <= settings.ORACLE_EXHAUSTIVE_LIMIT:
            return oracle.enumerate_configs(tree)
        if seed is None:
            self._require_seed("oracle")
        return (rotor.sample_config(tree, self.dists, seed + index) for index in range(self.config.samples))

    def oracle(self) -> OracleReport:
        """First-particle, abelian, n-bound and escape lower-bound oracles on the first configured height"""
        height = self.config.heights[0]
        seed = self.config.seed
        tree = cover.build_cover(self.graph, self.config.root, height)
        checks: List[OracleCheck] = [
            oracle.first_particle_oracle(tree, self._oracle_configs(tree, seed)),
            oracle.abelian_oracle(tree, self._oracle_configs(tree, seed), self.config.particles,
                                  ORACLE_SCHEDULES, seed or 0),
        ]
        for h in sorted({1, min(height, 2)}):
            small = cover.build_cover(self.graph, self.config.root, h)
            if oracle.configuration_count(small) <= settings.ORACLE_EXHAUSTIVE_LIMIT:
                checks.append(oracle.n_bound_oracle(small))
        if height >= 2:
            level = min(2, height - 1)
            checks.append(oracle.escape_lower_bound_oracle(tree, self._oracle_configs(tree, seed), level))
        summary = OracleSummary(root_type=self.config.root, height=height, checks=checks)
        return OracleReport(command="oracle", config=self.config, summary=summary)

    def srw(self) -> SrwReport:
        """Monte Carlo simple random walk at every configured height"""
        seed = self._require_seed("srw")
        estimates = [
            srw.srw_escape_estimate(cover.build_cover(self.graph, self.config.root, h), self.config.samples, seed)
            for h in self.config.heights
        ]
        escape_prob = float(analysis.escape_probabilities(self.graph)[self.config.root - 1])
        return SrwReport(command="srw", config=self.config, estimates=estimates, escape_probability=escape_prob)

    def embeddings(self) -> EmbeddingsReport:
        """Classify every planar embedding of the configured adjacency matrix"""
        rows = []
        for embedding in base_graph.enumerate_embeddings(self.graph):
            matrix = analysis.moment_matrix(embedding, self.dists)
            rows.append(EmbeddingRow(
                children=[list(row) for row in embedding.children],
                moment_matrix=[list(row) for row in matrix.as_strings()],
                classification=analysis.classify(embedding, self.dists, self.config.tol),
            ))
        return EmbeddingsReport(command="embeddings", config=self.config, embeddings=rows)

    def tree(self) -> Tuple[TreeReport, CoverTree]:
        """Build the cover at the first configured height"""
        built = cover.build_cover(self.graph, self.config.root, self.config.heights[0])
        report = TreeReport(command="tree", config=self.config, height=built.height,
                            node_count=built.node_count, leaf_count=built.leaf_count)
        return report, built

    def run(self, command: str) -> Any:
        handlers: Dict[str, Any] = {
            "validate": self.validate,
            "classify": self.classify,
            "escape": self.escape,
            "levels": self.levels,
            "simulate": self.simulate,
            "mbp": self.mbp,
            "oracle": self.oracle,
            "srw": self.srw,
            "embeddings": self.embeddings,
        }
        return handlers[command]()
