# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Combinatorial k-core machinery: synchronous peeling and core numbers."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .errors import ContractViolation
from .graph import Graph, is_connected
from .types import VertexSet


@dataclass(frozen=True)
class PeelResult:
    k: int
    # waves[i] holds the vertices removed together in round i
    waves: tuple[VertexSet, ...]
    core: VertexSet
    core_is_connected: bool

    @property
    def exists(self) -> bool:
        return len(self.core) > 0

    @property
    def wave_sizes(self) -> list[int]:
        return [len(w) for w in self.waves]


@dataclass(frozen=True)
class CorenessTable:
    coreness: npt.NDArray[np.int64]

    @property
    def degeneracy(self) -> int:
        return int(self.coreness.max()) if self.coreness.size else 0

    def core(self, k: int) -> VertexSet:
        return frozenset(int(v) for v in np.flatnonzero(self.coreness >= k))


def peel(g: Graph, k: int) -> PeelResult:
    """
    Remove every vertex of degree < k at once, repeat on what is left.

    The first wave may be empty; later waves never are. Runs in O(n + m).
    """
    if k < 1:
        raise ContractViolation(f"k must be at least 1, got {k}")
    degree = [len(a) for a in g.adjacency]
    removed = [d < k for d in degree]
    wave = [v for v in range(g.n) if removed[v]]
    waves = [frozenset(wave)]
    while wave:
        following = []
        for v in wave:
            for u in g.adjacency[v]:
                if removed[u]:
                    continue
                degree[u] -= 1
                if degree[u] < k:
                    removed[u] = True
                    following.append(u)
        if following:
            waves.append(frozenset(following))
        wave = following

    core = frozenset(v for v in range(g.n) if not removed[v])
    return PeelResult(
        k=k,
        waves=tuple(waves),
        core=core,
        core_is_connected=bool(core) and is_connected(g, core),
    )


def coreness(g: Graph) -> CorenessTable:
    """
    Core number of every vertex by repeatedly removing a vertex of minimum degree.

    Vertices are kept in an array sorted by current degree with bucket start
    offsets, so each removal and degree update is O(1).
    """
    n = g.n
    degree = [len(a) for a in g.adjacency]
    max_degree = max(degree, default=0)

    # bucket sort vertices by degree
    bin_start = [0] * (max_degree + 2)
    for d in degree:
        bin_start[d + 1] += 1
    for d in range(1, max_degree + 2):
        bin_start[d] += bin_start[d - 1]
    order = [0] * n
    position = [0] * n
    fill = bin_start[:]
    for v in range(n):
        position[v] = fill[degree[v]]
        order[position[v]] = v
        fill[degree[v]] += 1

    for i in range(n):
        v = order[i]
        for u in g.adjacency[v]:
            if degree[u] > degree[v]:
                du = degree[u]
                pu = position[u]
                # swap u with the first vertex of its bucket, then shrink the bucket
                pw = bin_start[du]
                w = order[pw]
                if u != w:
                    order[pu], order[pw] = w, u
                    position[u], position[w] = pw, pu
                bin_start[du] += 1
                degree[u] -= 1

    return CorenessTable(coreness=np.asarray(degree, dtype=np.int64))
