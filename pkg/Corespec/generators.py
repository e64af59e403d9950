# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Small named graphs and Erdos-Renyi G(n, p) graphs."""

import itertools

import numpy as np

from .errors import ContractViolation
from .graph import Graph


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractViolation("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    "K_{1,leaves} with the centre at vertex 0"
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def with_pendants(g: Graph, attach: list[int]) -> Graph:
    "Add one new degree-1 vertex per entry of attach, hanging off that vertex"
    edges = g.edges() + [(v, g.n + i) for i, v in enumerate(attach)]
    return Graph.from_edges(g.n + len(attach), edges)


def gnp_random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    "Erdos-Renyi graph: each of the n(n-1)/2 pairs is an edge with probability p"
    if not 0.0 <= p <= 1.0:
        raise ContractViolation("p must be between 0 and 1")
    if n < 0:
        raise ContractViolation("n must be nonnegative")
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < p
    return Graph.from_edges(n, zip(rows[keep].tolist(), cols[keep].tolist()))
