# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

from Corespec.commandclass import GraphCommand
from Corespec.metrics import cycle_counts


class command(GraphCommand):
    name = "cycles"
    description = "Count short simple cycles through every vertex"

    def analyze(self, graph, config):
        counts = cycle_counts(graph, config.max_len)
        lengths = range(3, config.max_len + 1)
        cumulative = {L: counts.cumulative(L) for L in lengths}
        self.payload = {
            "max_len": config.max_len,
            # each cycle of length L is counted once at each of its L vertices
            "cycles": {f"length{L}": int(counts.exact[L].sum()) // L for L in lengths},
            "counts": {f"c{L}": self.by_label(graph, cumulative[L].tolist()) for L in lengths},
        }
        self.rows = [["vertex"] + [f"c{L}" for L in lengths]]
        for i in range(graph.n):
            self.rows.append([graph.label(i)] + [int(cumulative[L][i]) for L in lengths])
