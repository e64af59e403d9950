# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""
Randomized oracle suites: the implicit tensor against the dense one, spectral
existence and support against peeling, closed-form radii and cycle counts.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from Corespec.commandclass import SuiteCommand
from Corespec.core import peel
from Corespec.crosscheck import analyze_agreement
from Corespec.dense import build_dense, dense_apply, verify_eigenpair
from Corespec.generators import complete_graph, cycle_graph, gnp_random_graph, path_graph
from Corespec.metrics import cycle_counts, triangle_oracle
from Corespec.tensor import EXISTENCE_TOLERANCE, SpectralConfig, apply_k, spectral_radius_k

logger = logging.getLogger(__name__)

DENSE_GRAPHS = 200
DENSE_VECTORS = 5
DENSE_TOLERANCE = 1e-12


@dataclass
class Suite:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            logger.warning("%s: %s", self.name, what)
            self.failures.append(what)


def implicit_vs_dense(rng: np.random.Generator, graphs: int) -> Suite:
    suite = Suite("implicit-vs-dense")
    for _ in range(min(graphs, DENSE_GRAPHS)):
        n = int(rng.integers(1, 11))
        k = int(rng.integers(1, 4))
        g = gnp_random_graph(n, float(rng.uniform(0.2, 0.9)), rng)
        tensor = build_dense(g, k)
        for _ in range(DENSE_VECTORS):
            x = rng.random(n)
            gap = float(np.max(np.abs(apply_k(g, k, x) - dense_apply(tensor, x))))
            suite.check(gap <= DENSE_TOLERANCE, f"n={n} k={k} edges={g.edges()} gap={gap:.3g}")
    return suite


def peeling_agreement(rng: np.random.Generator, graphs: int) -> Suite:
    suite = Suite("spectral-vs-peeling")
    for _ in range(graphs):
        n = int(rng.integers(1, 61))
        p = float(rng.uniform(0.05, 0.5))
        k = int(rng.integers(2, 5))
        g = gnp_random_graph(n, p, rng)
        result = spectral_radius_k(g, SpectralConfig(k=k))
        errors, warnings, _ = analyze_agreement(result, peel(g, k), graph=g)
        suite.check(not errors and not warnings, f"n={n} p={p:.3f} k={k} rho={result.rho:.12g}")
    return suite


def closed_forms() -> Suite:
    suite = Suite("closed-forms")

    def radius(g, k):
        return spectral_radius_k(g, SpectralConfig(k=k)).rho

    for k in range(1, 6):
        rho = radius(complete_graph(k + 1), k)
        suite.check(abs(rho - 1.0) <= 1e-9, f"K_{k + 1} k={k} rho={rho:.12g}")
    for n in range(4, 13):
        expected = math.comb(n - 1, 2)
        rho = radius(complete_graph(n), 2)
        suite.check(abs(rho - expected) <= 1e-8 * expected, f"K_{n} k=2 rho={rho:.12g}")
        if n <= 8:
            uniform = np.ones(n)
            dense = build_dense(complete_graph(n), 2)
            suite.check(verify_eigenpair(dense, expected, uniform, 1e-9), f"K_{n} eigenpair")
    for n in range(3, 51):
        rho = radius(cycle_graph(n), 2)
        suite.check(abs(rho - 1.0) <= 1e-9, f"C_{n} k=2 rho={rho:.12g}")
    for n in (1, 2, 5, 20):
        rho = radius(path_graph(n), 2)
        suite.check(rho < 1.0 - EXISTENCE_TOLERANCE and rho == 0.0, f"P_{n} k=2 rho={rho:.12g}")
    rho = radius(path_graph(3), 1)
    suite.check(abs(rho - math.sqrt(2)) <= 1e-9, f"P_3 k=1 rho={rho:.12g}")
    return suite


def cycle_oracle(rng: np.random.Generator, graphs: int) -> Suite:
    suite = Suite("cycles-vs-triangles")
    for _ in range(graphs):
        n = int(rng.integers(1, 31))
        g = gnp_random_graph(n, float(rng.uniform(0.05, 0.5)), rng)
        counted = cycle_counts(g, 3).cumulative(3)
        suite.check(bool(np.array_equal(counted, triangle_oracle(g))), f"n={n} edges={g.edges()}")
    return suite


class command(SuiteCommand):
    name = "self-check"
    description = "Run the randomized oracle suites"
    hidden = True

    def analyze(self, config):
        rng = np.random.default_rng(config.seed)
        suites = [
            implicit_vs_dense(rng, config.graphs),
            peeling_agreement(rng, config.graphs),
            closed_forms(),
            cycle_oracle(rng, config.graphs),
        ]
        self.payload = {
            "seed": config.seed,
            "graphs": config.graphs,
            "suites": [{"name": s.name, "checks": s.checks, "failures": s.failures} for s in suites],
            "passed": not any(s.failures for s in suites),
        }
        self.rows = [["suite", "checks", "failures"]]
        self.rows.extend([s.name, s.checks, len(s.failures)] for s in suites)
        for s in suites:
            if s.failures:
                self.errors.append(("self-check-failed %s %d %d", (s.name, len(s.failures), s.checks)))
