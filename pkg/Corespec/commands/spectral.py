# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Spectral radius and Perron vector of the k-adjacency tensor."""

from dataclasses import replace

from Corespec.commandclass import GraphCommand
from Corespec.core import peel
from Corespec.crosscheck import analyze_agreement
from Corespec.tensor import EXISTENCE_TOLERANCE, Mode, spectral_radius_k

# naive and per-component radii closer than this are considered equal
MODE_AGREEMENT = 1e-6


class command(GraphCommand):
    name = "spectral"
    description = "Decide k-core existence and membership from the tensor spectrum"

    def analyze(self, graph, config):
        cfg = config.spectral()
        result = spectral_radius_k(graph, cfg)
        self.payload = {
            "k": cfg.k,
            "mode": cfg.mode.value,
            "norm": cfg.norm.value,
            "rho": result.rho,
            "exists": result.rho >= 1.0 - EXISTENCE_TOLERANCE,
            "converged": result.converged,
            "iterations": result.iterations,
            "lower": result.lower,
            "upper": result.upper,
            "components": [
                {
                    "vertices": self.labels(graph, c.vertices),
                    "rho": c.rho,
                    "converged": c.converged,
                    "iterations": c.iterations,
                    "vector": dict(zip((graph.label(v) for v in c.vertices), c.vector.tolist())),
                }
                for c in result.components
            ],
            "vector": self.by_label(graph, result.vector.tolist()),
        }
        self.rows = [["vertex", "score"]] + [[graph.label(i), result.vector[i]] for i in range(graph.n)]

        if not result.converged:
            self.not_converged(cfg.k, result.iterations, result.bracket)

        errors, warnings, infos = analyze_agreement(result, peel(graph, cfg.k), graph=graph)
        self.errors.extend(errors)
        self.warnings.extend(warnings)
        self.infos.extend(infos)

        if cfg.mode == Mode.NAIVE:
            reference = spectral_radius_k(graph, replace(cfg, mode=Mode.PER_COMPONENT))
            self.payload["per_component_rho"] = reference.rho
            if result.converged and abs(result.rho - reference.rho) > MODE_AGREEMENT:
                self.warnings.append(
                    ("naive-per-component-disagreement k=%d %.12g %.12g", (cfg.k, result.rho, reference.rho))
                )
