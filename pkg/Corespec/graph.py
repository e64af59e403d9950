# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""
Simple undirected graphs with dense 0-based vertex ids.

A Graph is immutable after construction. Original vertex labels from the input file
are kept for reporting only; all algorithms work on the internal ids.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import numpy.typing as npt
import scipy.sparse
import scipy.sparse.csgraph

from .errors import ContractViolation
from .types import VertexSet


@dataclass(frozen=True)
class Graph:
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    # load statistics, not part of the graph's identity
    duplicates_dropped: int = field(default=0, compare=False)
    self_loops_dropped: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != len(self.adjacency):
            raise ContractViolation("labels must have one entry per vertex")
        # labels equal to the internal ids are not stored
        if self.labels is not None and all(label == str(i) for i, label in enumerate(self.labels)):
            object.__setattr__(self, "labels", None)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        """
        Build a graph on n vertices from (u, v) pairs.

        Self-loops and repeated edges are dropped and counted.
        """
        neighbors: list[set[int]] = [set() for _ in range(n)]
        duplicates = 0
        loops = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractViolation(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                loops += 1
                continue
            if v in neighbors[u]:
                duplicates += 1
                continue
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(
            adjacency=tuple(tuple(sorted(s)) for s in neighbors),
            labels=tuple(labels) if labels is not None else None,
            duplicates_dropped=duplicates,
            self_loops_dropped=loops,
        )

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    @cached_property
    def degrees(self) -> npt.NDArray[np.int64]:
        return np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.n)

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def label(self, i: int) -> str:
        if self.labels is None:
            return str(i)
        return self.labels[i]

    def edges(self) -> list[tuple[int, int]]:
        "Each undirected edge once, as (u, v) with u < v, in sorted order"
        return [(u, v) for u, adj in enumerate(self.adjacency) for v in adj if u < v]

    @cached_property
    def csr(self) -> scipy.sparse.csr_matrix:
        "Symmetric 0/1 adjacency matrix; column indices follow the sorted adjacency lists"
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=indptr[1:])
        indices = np.fromiter(
            (v for adj in self.adjacency for v in adj), dtype=np.int64, count=int(indptr[-1])
        )
        data = np.ones(indices.size, dtype=np.float64)
        return scipy.sparse.csr_matrix((data, indices, indptr), shape=(self.n, self.n))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


def check_vertex_set(g: Graph, s: Iterable[int]) -> VertexSet:
    members = frozenset(s)
    for v in members:
        if not 0 <= v < g.n:
            raise ContractViolation(f"vertex {v} outside [0, {g.n})")
    return members


def connected_components(g: Graph) -> list[VertexSet]:
    """
    Partition the vertices into maximal connected sets, ordered by smallest member.
    """
    if g.n == 0:
        return []
    count, labels = scipy.sparse.csgraph.connected_components(g.csr, directed=False)
    groups: list[list[int]] = [[] for _ in range(count)]
    for v, c in enumerate(labels):
        groups[c].append(v)
    # vertices are appended in increasing order, so group[0] is the smallest member
    groups.sort(key=lambda group: group[0])
    return [frozenset(group) for group in groups]


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """
    Restrict g to the vertex set s, relabelled compactly in increasing id order.

    Returns the subgraph and the mapping new id -> original id.
    """
    members = check_vertex_set(g, s)
    mapping = tuple(sorted(members))
    new_id = {old: new for new, old in enumerate(mapping)}
    adjacency = tuple(tuple(new_id[v] for v in g.adjacency[old] if v in new_id) for old in mapping)
    labels = tuple(g.label(old) for old in mapping) if g.labels is not None else None
    return Graph(adjacency=adjacency, labels=labels), mapping


def is_connected(g: Graph, s: Iterable[int] | None = None) -> bool:
    "True if g (or its subgraph induced by s) is nonempty and connected"
    if s is not None:
        g, _ = induced_subgraph(g, s)
    return g.n > 0 and len(connected_components(g)) == 1
