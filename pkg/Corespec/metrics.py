# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Centrality measures, bounded cycle counts and rank correlation."""

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, replace

import numpy as np
import numpy.typing as npt
import scipy.sparse.linalg
import scipy.stats

from .core import coreness
from .errors import ContractViolation, ResourceLimitExceeded, UndefinedCorrelation
from .graph import Graph
from .tensor import EXISTENCE_TOLERANCE, SpectralConfig, spectral_radius_k
from .types import Vector
from .util import Norm, normalize

CYCLE_LENGTHS = (3, 4, 5)
CYCLE_LIMIT = 10**9
# dense symmetric eigensolver below this size, ARPACK above
DENSE_EIGEN_LIMIT = 1000


@dataclass(frozen=True)
class CentralityTable:
    measure: str
    scores: Vector
    no_core: bool = False
    rho: float | None = None
    # iteration state of the tensor measures; the others are exact
    converged: bool = True
    iterations: int = 0
    bracket: tuple[float, float] | None = None


@dataclass(frozen=True)
class CycleCounts:
    max_len: int
    # exact[L][i] = number of simple cycles of length exactly L through i
    exact: dict[int, npt.NDArray[np.int64]]

    def cumulative(self, length: int) -> npt.NDArray[np.int64]:
        "C_L(i): cycles of length at most L through i"
        if length not in self.exact:
            raise ContractViolation(f"cycles of length {length} were not counted")
        return sum((self.exact[L] for L in range(3, length + 1)), np.zeros_like(self.exact[3]))

    @property
    def counts(self) -> npt.NDArray[np.int64]:
        return self.cumulative(self.max_len)


@dataclass(frozen=True)
class CorrelationPair:
    a: str
    b: str
    r_s: float | None
    n_vertices: int


@dataclass(frozen=True)
class CorrelationReport:
    pairs: tuple[CorrelationPair, ...]

    def get(self, a: str, b: str) -> float | None:
        for pair in self.pairs:
            if {pair.a, pair.b} == {a, b}:
                return pair.r_s
        raise KeyError((a, b))


def degree_centrality(g: Graph) -> CentralityTable:
    return CentralityTable("DC", g.degrees.astype(np.float64))


def coreness_centrality(g: Graph) -> CentralityTable:
    return CentralityTable("CC", coreness(g).coreness.astype(np.float64))


def eigenvector_centrality(g: Graph, norm: Norm = Norm.L2) -> CentralityTable:
    """
    Classical eigenvector centrality from the adjacency matrix.

    Computed with a symmetric eigensolver, independently of the tensor iteration.
    """
    if g.n == 0:
        return CentralityTable("EC", np.zeros(0), rho=0.0)
    if g.n <= DENSE_EIGEN_LIMIT:
        values, vectors = np.linalg.eigh(g.csr.toarray())
        rho, vector = values[-1], vectors[:, -1]
    else:
        values, vectors = scipy.sparse.linalg.eigsh(g.csr, k=1, which="LA")
        rho, vector = values[0], vectors[:, 0]
    return CentralityTable("EC", normalize(np.abs(vector), norm), rho=float(rho))


def k_order_eigenvector_centrality(g: Graph, k: int, cfg: SpectralConfig) -> CentralityTable:
    "The Perron vector of the k-adjacency tensor; positive exactly on the k-core"
    if k < 1:
        raise ContractViolation(f"k must be at least 1, got {k}")
    if cfg.k != k:
        cfg = replace(cfg, k=k)
    result = spectral_radius_k(g, cfg)
    no_core = result.rho < 1.0 - EXISTENCE_TOLERANCE
    scores = np.zeros(g.n) if no_core else result.vector
    return CentralityTable(
        f"KEC({k})",
        scores,
        no_core=no_core,
        rho=result.rho,
        converged=result.converged,
        iterations=result.iterations,
        bracket=result.bracket,
    )


def walk_centrality(g: Graph, length: int) -> CentralityTable:
    """
    Share of all walks of the given length that start at each vertex.

    On a connected non-bipartite graph this tends to eigenvector centrality
    (L1 scaled) as the length grows.
    """
    if length < 1:
        raise ContractViolation(f"walk length must be at least 1, got {length}")
    walks = np.ones(g.n)
    for _ in range(length):
        walks = g.csr @ walks
        total = walks.sum()
        if total == 0:
            break
        walks /= total
    return CentralityTable(f"WALK({length})", walks)


def cycle_counts(g: Graph, max_len: int, limit: int = CYCLE_LIMIT) -> CycleCounts:
    """
    Count simple cycles of length 3..max_len through every vertex.

    Each cycle is found once: from its smallest vertex, using only larger
    vertices, and in the direction whose second vertex is smaller than its last.
    """
    if max_len not in CYCLE_LENGTHS:
        raise ContractViolation(f"cycle length bound must be one of {CYCLE_LENGTHS}, got {max_len}")
    n = g.n
    exact = {L: np.zeros(n, dtype=np.int64) for L in range(3, max_len + 1)}
    found = 0
    on_path = [False] * n
    for s in range(n):
        path = [s]
        on_path[s] = True
        stack = [iter(g.adjacency[s])]
        while stack:
            for u in stack[-1]:
                if u == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        counts = exact[len(path)]
                        for v in path:
                            counts[v] += 1
                        found += 1
                        if found > limit:
                            raise ResourceLimitExceeded(f"more than {limit} cycles of length <= {max_len}")
                    continue
                if u < s or on_path[u] or len(path) >= max_len:
                    continue
                path.append(u)
                on_path[u] = True
                stack.append(iter(g.adjacency[u]))
                break
            else:
                stack.pop()
                on_path[path.pop()] = False
    return CycleCounts(max_len=max_len, exact=exact)


def triangle_oracle(g: Graph) -> npt.NDArray[np.int64]:
    "Triangles through each vertex, from neighbourhood intersections"
    neighbors = [set(a) for a in g.adjacency]
    counts = [sum(len(neighbors[i] & neighbors[j]) for j in g.adjacency[i]) // 2 for i in range(g.n)]
    return np.asarray(counts, dtype=np.int64)


def spearman(a: Sequence[float] | Vector, b: Sequence[float] | Vector) -> float:
    """
    Spearman rank correlation: Pearson correlation of the average ranks.
    """
    x = np.asarray(a, dtype=np.float64)
    y = np.asarray(b, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ContractViolation("rank correlation needs two vectors of equal length")
    if x.size < 2:
        raise ContractViolation("rank correlation needs at least 2 observations")
    da = scipy.stats.rankdata(x, method="average")
    db = scipy.stats.rankdata(y, method="average")
    da -= da.mean()
    db -= db.mean()
    saa = float(np.dot(da, da))
    sbb = float(np.dot(db, db))
    if saa == 0.0 or sbb == 0.0:
        raise UndefinedCorrelation("all values tied on one side")
    r = float(np.dot(da, db)) / float(np.sqrt(saa * sbb))
    return max(-1.0, min(1.0, r))


def correlate(tables: Sequence[CentralityTable]) -> CorrelationReport:
    "Spearman coefficient for every pair of tables, over all vertices"
    pairs = []
    for x, y in itertools.combinations(tables, 2):
        r_s: float | None = None
        if x.scores.size >= 2:
            try:
                r_s = spearman(x.scores, y.scores)
            except UndefinedCorrelation:
                pass
        pairs.append(CorrelationPair(x.measure, y.measure, r_s, int(x.scores.size)))
    return CorrelationReport(tuple(pairs))
