# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

FormatArgs: TypeAlias = tuple[Any, ...]

Diagnostic: TypeAlias = tuple[str, FormatArgs]

Vector: TypeAlias = npt.NDArray[np.float64]

VertexSet: TypeAlias = frozenset[int]
