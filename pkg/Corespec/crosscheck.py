# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Checks the spectral answer against the peeled core."""

from .core import PeelResult
from .graph import Graph
from .tensor import EXISTENCE_TOLERANCE, SpectralResult, spectral_support
from .types import Diagnostic


def analyze_agreement(
    spectral: SpectralResult, peeled: PeelResult, threshold: float = 1e-12, graph: Graph | None = None
) -> tuple[list[Diagnostic], list[Diagnostic], list[Diagnostic]]:
    """
    Compare existence and support of a spectral result with combinatorial peeling.

    Existence must match (rho >= 1 iff the core is nonempty). The Perron support
    must lie inside the core, and equal it when the core is connected. Vertices are
    named by their labels in graph when it is given.
    """
    errors: list[Diagnostic] = []
    warnings: list[Diagnostic] = []
    infos: list[Diagnostic] = []
    k = peeled.k

    exists = spectral.rho >= 1.0 - EXISTENCE_TOLERANCE
    if exists != peeled.exists:
        warnings.append(
            ("theorem-existence-disagreement k=%d rho=%.12g core-size=%d", (k, spectral.rho, len(peeled.core)))
        )
    if not peeled.exists:
        infos.append(("no-k-core k=%d", (k,)))
        return errors, warnings, infos

    support = spectral_support(spectral, threshold)
    outside = support - peeled.core
    if outside:
        names = [graph.label(v) if graph is not None else str(v) for v in sorted(outside)]
        errors.append(("support-outside-core k=%d %s", (k, ", ".join(names))))
    elif peeled.core_is_connected and support != peeled.core:
        warnings.append(("support-differs-from-core k=%d %d %d", (k, len(support), len(peeled.core))))
    elif not peeled.core_is_connected:
        infos.append(("core-disconnected k=%d %d", (k, len(spectral.components))))
    if not warnings and not errors:
        infos.append(("spectral-core-confirmed k=%d %d", (k, len(peeled.core))))
    return errors, warnings, infos
