# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Degree, coreness and k-th order eigenvector centrality side by side."""

from Corespec.commandclass import GraphCommand
from Corespec.metrics import coreness_centrality, degree_centrality, k_order_eigenvector_centrality


class command(GraphCommand):
    name = "centrality"
    description = "Per-vertex degree, coreness and k-th order eigenvector centrality"

    def analyze(self, graph, config):
        tables = [degree_centrality(graph), coreness_centrality(graph)]
        for k in config.orders:
            table = k_order_eigenvector_centrality(graph, k, config.spectral(k))
            tables.append(table)
            if not table.converged:
                assert table.bracket is not None
                self.not_converged(k, table.iterations, table.bracket)
            if table.no_core:
                self.infos.append(("no-k-core k=%d", (k,)))

        self.payload = {
            "orders": list(config.orders),
            "rho": {str(k): t.rho for k, t in zip(config.orders, tables[2:])},
            "no_core": [k for k, t in zip(config.orders, tables[2:]) if t.no_core],
            "scores": {t.measure: self.by_label(graph, t.scores.tolist()) for t in tables},
        }
        self.rows = [["vertex"] + [t.measure for t in tables]]
        for i in range(graph.n):
            self.rows.append([graph.label(i)] + [t.scores[i] for t in tables])
