# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

import enum

import numpy as np

from .types import Vector

MTX_MAGIC = b"%%MatrixMarket"


class Norm(str, enum.Enum):
    L1 = "l1"
    L2 = "l2"
    LINF = "linf"


def _file_has_magic(fileobj, magic_bytes):
    length = len(magic_bytes)
    magic = fileobj.read(length)
    fileobj.seek(0)
    return magic == magic_bytes


def is_matrix_market(fileobj):
    "Take binary file object, peek at the banner to check if Matrix Market file."
    return _file_has_magic(fileobj, MTX_MAGIC)


def detect_format(path):
    "Guess 'mtx' or 'edgelist' from the extension, then from the banner."
    if path.lower().endswith(".mtx"):
        return "mtx"
    with open(path, "rb") as f:
        if is_matrix_market(f):
            return "mtx"
    return "edgelist"


def vector_norm(x: Vector, norm: Norm) -> float:
    match Norm(norm):
        case Norm.L1:
            return float(np.sum(np.abs(x)))
        case Norm.L2:
            return float(np.linalg.norm(x))
        case Norm.LINF:
            return float(np.max(np.abs(x))) if x.size else 0.0


def normalize(x: Vector, norm: Norm) -> Vector:
    "Scale x to unit norm; the zero vector is returned unchanged."
    size = vector_norm(x, norm)
    if size == 0.0:
        return x.copy()
    return x / size
