# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""
Spectra of the k-adjacency tensor of a graph.

The order-(k+1) tensor has entry 1/k! at (i, j_1, ..., j_k) whenever the j's are k
distinct neighbours of i. It is never stored: contracting it with x k times gives,
at vertex i, the elementary symmetric polynomial e_k of the values x_j over the
neighbours j of i, which a short dynamic program evaluates in O(deg(i) * k).
"""

import enum
import logging
from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np
import numpy.typing as npt

from .core import peel
from .errors import ContractViolation
from .graph import Graph, connected_components, induced_subgraph
from .types import Vector, VertexSet
from .util import Norm, normalize

logger = logging.getLogger(__name__)

# a graph has a k-core iff its spectral radius is at least 1; leave room for rounding
EXISTENCE_TOLERANCE = 1e-6


class Mode(str, enum.Enum):
    PER_COMPONENT = "per_component"
    NAIVE = "naive_whole_graph"


@dataclass(frozen=True)
class SpectralConfig:
    k: int
    tol: float = 1e-10
    max_iters: int = 10000
    norm: Norm = Norm.L2
    mode: Mode = Mode.PER_COMPONENT

    def __post_init__(self):
        if self.k < 1:
            raise ContractViolation(f"k must be at least 1, got {self.k}")
        if not self.tol > 0:
            raise ContractViolation(f"tol must be positive, got {self.tol}")
        if self.max_iters < 1:
            raise ContractViolation(f"max_iters must be at least 1, got {self.max_iters}")


@dataclass(frozen=True)
class ComponentSpectrum:
    vertices: tuple[int, ...]
    rho: float
    # normalized per SpectralConfig.norm, indexed like `vertices`
    vector: Vector
    iterations: int
    converged: bool


@dataclass(frozen=True)
class SpectralResult:
    k: int
    rho: float
    vector: Vector
    # final bounds on the spectral radius of the shifted tensor; rho == lower - 1
    lower: float
    upper: float
    iterations: int
    converged: bool
    components: tuple[ComponentSpectrum, ...] = ()
    history: tuple[tuple[float, float], ...] = field(default=(), repr=False)

    @property
    def bracket(self) -> tuple[float, float]:
        return (self.lower - 1.0, self.upper - 1.0)

    @property
    def component_rhos(self) -> list[float]:
        return [c.rho for c in self.components]


class KAdjacency:
    """
    Matrix-free k-adjacency tensor of a graph.

    Vertices are held in order of decreasing degree so that the vertices owning an
    adjacency list entry at position p form a prefix of that order. The e_k dynamic
    program then runs position by position over contiguous slices, and each vertex
    still accumulates its neighbours in sorted adjacency order.
    """

    def __init__(self, g: Graph, k: int):
        if k < 1:
            raise ContractViolation(f"k must be at least 1, got {k}")
        self.graph = g
        self.k = k

    @cached_property
    def _layout(self) -> tuple[npt.NDArray[np.int64], list[npt.NDArray[np.int64]]]:
        g = self.graph
        order = np.argsort(-g.degrees, kind="stable")
        sorted_adjacency = [g.adjacency[v] for v in order]
        columns = []
        for p in range(g.max_degree):
            width = int(np.count_nonzero(g.degrees > p))
            columns.append(np.fromiter((sorted_adjacency[r][p] for r in range(width)), np.int64, count=width))
        return order, columns

    def _check(self, x: Vector) -> Vector:
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.graph.n,):
            raise ContractViolation(f"vector of length {x.shape} for a graph with {self.graph.n} vertices")
        if np.any(x < 0):
            raise ContractViolation("the k-adjacency tensor is only applied to nonnegative vectors")
        return x

    def apply(self, x: Vector) -> Vector:
        "(A x^k)_i = e_k of the neighbour values of i; zero when deg(i) < k"
        x = self._check(x)
        k = self.k
        order, columns = self._layout
        esp = np.zeros((self.graph.n, k + 1))
        esp[:, 0] = 1.0
        for p, column in enumerate(columns):
            width = column.size
            values = x[column]
            for j in range(min(k, p + 1), 0, -1):
                esp[:width, j] += values * esp[:width, j - 1]
        out = np.empty(self.graph.n)
        out[order] = esp[:, k]
        return out

    def apply_shifted(self, x: Vector) -> Vector:
        "(A + I) x^k; the identity tensor adds x_i^k at coordinate i"
        x = self._check(x)
        return self.apply(x) + x**self.k


def apply_k(g: Graph, k: int, x: Vector) -> Vector:
    return KAdjacency(g, k).apply(x)


def shifted_apply(g: Graph, k: int, x: Vector) -> Vector:
    return KAdjacency(g, k).apply_shifted(x)


def nqz_iterate(g: Graph, cfg: SpectralConfig) -> SpectralResult:
    """
    Shifted power iteration for the nonnegative tensor A + I.

    Starting from all-ones, each step takes the entrywise k-th root of
    y = (A + I) x^k and rescales it to max entry 1. The ratios y_i / x_i^k over
    positive x_i bracket the spectral radius of A + I; the iteration stops once
    the bracket is within tol (relative) or after max_iters steps.
    """
    if g.n == 0:
        raise ContractViolation("spectral iteration needs a nonempty graph")
    k = cfg.k
    tensor = KAdjacency(g, k)
    x = np.ones(g.n)
    y = tensor.apply_shifted(x)
    lower = upper = float("nan")
    history = []
    converged = False
    iterations = 0
    for iterations in range(1, cfg.max_iters + 1):
        x = y ** (1.0 / k)
        x /= x.max()
        y = tensor.apply_shifted(x)
        xk = x**k
        # entries whose k-th power underflows carry no ratio information
        positive = xk > 0
        ratios = y[positive] / xk[positive]
        lower = float(ratios.min())
        upper = float(ratios.max())
        history.append((lower, upper))
        if upper - lower <= cfg.tol * max(1.0, upper):
            converged = True
            break
    logger.debug(
        "k=%d n=%d: %d iterations, bracket [%.12g, %.12g], converged=%s",
        k,
        g.n,
        iterations,
        lower - 1.0,
        upper - 1.0,
        converged,
    )
    return SpectralResult(
        k=k,
        rho=lower - 1.0,
        vector=normalize(x, cfg.norm),
        lower=lower,
        upper=upper,
        iterations=iterations,
        converged=converged,
        history=tuple(history),
    )


def _no_core(g: Graph, k: int) -> SpectralResult:
    # every coordinate of A x^k vanishes, so every eigenvalue of A is 0
    return SpectralResult(k=k, rho=0.0, vector=np.zeros(g.n), lower=1.0, upper=1.0, iterations=0, converged=True)


def spectral_radius_k(g: Graph, cfg: SpectralConfig) -> SpectralResult:
    """
    Spectral radius and Perron vector of the k-adjacency tensor of g.

    In per-component mode the graph is first peeled to its k-core, which has the
    same spectral radius. Each connected component of the core has a weakly
    irreducible tensor and is iterated on its own. The reported vector lives on
    the components attaining the largest radius, every other vertex scores 0.
    """
    if cfg.mode == Mode.NAIVE:
        if g.n == 0:
            return _no_core(g, cfg.k)
        return nqz_iterate(g, cfg)

    core = peel(g, cfg.k).core
    if not core:
        return _no_core(g, cfg.k)

    # iterate with max-entry scaling so that tied components combine on equal terms
    inner = replace(cfg, norm=Norm.LINF)
    subgraph, mapping = induced_subgraph(g, core)
    components = []
    results = []
    for members in connected_components(subgraph):
        piece, local = induced_subgraph(subgraph, members)
        result = nqz_iterate(piece, inner)
        vertices = tuple(mapping[v] for v in local)
        results.append(result)
        components.append(
            ComponentSpectrum(
                vertices=vertices,
                rho=result.rho,
                vector=normalize(result.vector, cfg.norm),
                iterations=result.iterations,
                converged=result.converged,
            )
        )

    rho = max(c.rho for c in components)
    vector = np.zeros(g.n)
    winners = []
    for component, result in zip(components, results):
        if rho - component.rho <= cfg.tol * max(1.0, rho):
            vector[list(component.vertices)] = result.vector
            winners.append(result)
    best = winners[0]
    return SpectralResult(
        k=cfg.k,
        rho=rho,
        vector=normalize(vector, cfg.norm),
        lower=best.lower,
        upper=best.upper,
        iterations=max(r.iterations for r in results),
        converged=all(r.converged for r in results),
        components=tuple(components),
        history=best.history,
    )


def core_exists_spectral(g: Graph, k: int, cfg: SpectralConfig) -> tuple[bool, float]:
    "A graph has a k-core iff the spectral radius of its k-adjacency tensor is at least 1"
    result = spectral_radius_k(g, replace(cfg, k=k))
    return result.rho >= 1.0 - EXISTENCE_TOLERANCE, result.rho


def spectral_support(res: SpectralResult, threshold: float = 1e-12) -> VertexSet:
    "Vertices whose score exceeds threshold times the largest score"
    if threshold < 0:
        raise ContractViolation("support threshold must be nonnegative")
    if res.vector.size == 0:
        return frozenset()
    peak = float(res.vector.max())
    if peak <= 0:
        return frozenset()
    return frozenset(int(i) for i in np.flatnonzero(res.vector > threshold * peak))
