# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

import os
import re
from dataclasses import asdict, dataclass

from .errors import ConfigError
from .loaders import BUNDLED_DATASETS
from .metrics import CYCLE_LENGTHS
from .tensor import Mode, SpectralConfig
from .util import Norm

FORMATS = ("auto", "edgelist", "mtx")
INDEXINGS = ("auto", "zero", "one")
OUTPUTS = ("table", "csv", "json")
MEASURES = ("dc", "cc", "ec", "kec", "c3", "c4", "c5")
WALK_MEASURE = re.compile(r"walk(\d+)$")
MODES = {"per-component": Mode.PER_COMPONENT, "naive": Mode.NAIVE}


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input: str | None = None
    format: str = "auto"
    indexing: str = "auto"
    output: str = "table"
    k: int = 2
    orders: tuple[int, ...] = (1, 2, 3)
    tol: float = 1e-10
    max_iters: int = 10000
    norm: str = "l2"
    mode: str = "per-component"
    max_len: int = 5
    measures: tuple[str, ...] = ("dc", "cc", "ec", "kec")
    scatter: bool = False
    seed: int = 0
    graphs: int = 500

    def spectral(self, k: int | None = None) -> SpectralConfig:
        return SpectralConfig(
            k=self.k if k is None else k,
            tol=self.tol,
            max_iters=self.max_iters,
            norm=Norm(self.norm),
            mode=MODES[self.mode],
        )

    def echo(self) -> dict:
        "The configuration as it appears in reports"
        return {key: list(value) if isinstance(value, tuple) else value for key, value in asdict(self).items()}

    def validate(self, needs_graph: bool = True) -> None:
        "Raise ConfigError before any work is done"
        if needs_graph:
            if not self.input:
                raise ConfigError("an --input file or bundled dataset name is required")
            if not os.path.exists(self.input) and self.input not in BUNDLED_DATASETS:
                raise ConfigError(f"{self.input} does not exist and is not a bundled dataset")
            if os.path.exists(self.input) and not os.access(self.input, os.R_OK):
                raise ConfigError(f"problem reading {self.input}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format '{self.format}'")
        if self.indexing not in INDEXINGS:
            raise ConfigError(f"unknown indexing '{self.indexing}'")
        if self.output not in OUTPUTS:
            raise ConfigError(f"unknown output encoding '{self.output}'")
        if self.k < 1 or any(k < 1 for k in self.orders):
            raise ConfigError("k must be at least 1")
        if not self.tol > 0:
            raise ConfigError("--tol must be positive")
        if self.max_iters < 1:
            raise ConfigError("--max-iters must be at least 1")
        if self.norm not in {n.value for n in Norm}:
            raise ConfigError(f"unknown norm '{self.norm}'")
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode '{self.mode}'")
        if self.max_len not in CYCLE_LENGTHS:
            raise ConfigError(f"--max-len must be one of {', '.join(map(str, CYCLE_LENGTHS))}")
        for measure in self.measures:
            walk = WALK_MEASURE.match(measure)
            if measure not in MEASURES and not (walk and int(walk.group(1)) >= 1):
                raise ConfigError(f"unknown measure '{measure}'")
        if len(set(self.measures)) < 2:
            raise ConfigError("--measures needs at least two distinct measures")
        if self.graphs < 1:
            raise ConfigError("--graphs must be at least 1")
