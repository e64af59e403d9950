# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""
This module defines the base classes from which corespec subcommands are derived
and how they are meant to be used.
"""

from abc import ABC, abstractmethod
from typing import Any

from .config import RunConfig
from .graph import Graph
from .types import Diagnostic


class AbstractCommand(ABC):
    "The parent class of all subcommands"

    name: str
    description: str
    hidden: bool = False

    def __init__(self):
        self.errors: list[Diagnostic] = []
        self.warnings: list[Diagnostic] = []
        self.infos: list[Diagnostic] = []
        # JSON payload of the report
        self.payload: dict[str, Any] = {}
        # header row followed by data rows, for csv and table output
        self.rows: list[list[Any]] = []


class GraphCommand(AbstractCommand):
    "The parent class of subcommands that analyze one input graph"

    @abstractmethod
    def analyze(self, graph: Graph, config: RunConfig) -> None: ...

    def not_converged(self, k: int, iterations: int, bracket: tuple[float, float]) -> None:
        "Report an iteration that stopped at max_iters with the bracket it reached"
        low, high = bracket
        self.warnings.append(("spectral-not-converged k=%d %d %.12g %.12g", (k, iterations, low, high)))

    @staticmethod
    def by_label(graph: Graph, values) -> dict[str, Any]:
        "Per-vertex values keyed by original vertex label, in vertex order"
        return {graph.label(i): values[i] for i in range(graph.n)}

    @staticmethod
    def labels(graph: Graph, vertices) -> list[str]:
        return [graph.label(v) for v in sorted(vertices)]


class SuiteCommand(AbstractCommand):
    "The parent class of subcommands that generate their own graphs"

    @abstractmethod
    def analyze(self, config: RunConfig) -> None: ...
