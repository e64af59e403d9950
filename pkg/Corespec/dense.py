# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""
Explicit k-adjacency tensors for tiny graphs.

Everything here is deliberately literal; it only exists to check the matrix-free
code in Corespec.tensor.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .errors import ContractViolation
from .graph import Graph
from .types import Vector

MAX_ENTRIES = 10**7


@dataclass(frozen=True)
class DenseTensor:
    order: int
    dim: int
    entries: npt.NDArray[np.float64]


def build_dense(g: Graph, k: int) -> DenseTensor:
    if k < 1:
        raise ContractViolation(f"k must be at least 1, got {k}")
    if g.n ** (k + 1) > MAX_ENTRIES:
        raise ContractViolation(f"dense tensor of dimension {g.n} and order {k + 1} is too large")
    entries = np.zeros((g.n,) * (k + 1))
    value = 1.0 / math.factorial(k)
    for i in range(g.n):
        for tail in itertools.permutations(g.adjacency[i], k):
            entries[(i,) + tail] = value
    return DenseTensor(order=k + 1, dim=g.n, entries=entries)


def dense_apply(t: DenseTensor, x: Vector) -> Vector:
    "(A x^k)_i = sum over all trailing indices of a_{i j_1 ... j_k} x_{j_1} ... x_{j_k}"
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (t.dim,):
        raise ContractViolation(f"vector of length {x.shape} for a tensor of dimension {t.dim}")
    # contract the last index with x until only the first one is left
    out = t.entries
    for _ in range(t.order - 1):
        out = out @ x
    return np.asarray(out, dtype=np.float64)


def verify_eigenpair(t: DenseTensor, lam: float, x: Vector, tol: float) -> bool:
    "Check A x^k = lam x^[k] to within tol in every coordinate"
    x = np.asarray(x, dtype=np.float64)
    if not np.any(x):
        raise ContractViolation("an eigenvector must be nonzero")
    residual = dense_apply(t, x) - lam * x ** (t.order - 1)
    return bool(np.max(np.abs(residual)) <= tol)
