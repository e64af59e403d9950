# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Combinatorial k-core by synchronous peeling."""

from Corespec.commandclass import GraphCommand
from Corespec.core import coreness, peel


class command(GraphCommand):
    name = "core"
    description = "Peel the graph to its k-core and list the removal waves"

    def analyze(self, graph, config):
        result = peel(graph, config.k)
        wave_of = {v: i for i, wave in enumerate(result.waves) for v in wave}
        self.payload = {
            "k": result.k,
            "exists": result.exists,
            "core_size": len(result.core),
            "core_is_connected": result.core_is_connected,
            "degeneracy": coreness(graph).degeneracy,
            "wave_sizes": result.wave_sizes,
            "waves": [self.labels(graph, wave) for wave in result.waves],
            "core": self.labels(graph, result.core),
        }
        self.rows = [["vertex", "in_core", "wave"]]
        for v in range(graph.n):
            self.rows.append([graph.label(v), int(v in result.core), wave_of.get(v)])
        if not result.exists:
            self.infos.append(("no-k-core k=%d", (config.k,)))
