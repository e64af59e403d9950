# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Spearman correlation between centrality measures and cycle counts."""

import numpy as np

from Corespec.commandclass import GraphCommand
from Corespec.config import WALK_MEASURE
from Corespec.metrics import (
    CentralityTable,
    correlate,
    coreness_centrality,
    cycle_counts,
    degree_centrality,
    eigenvector_centrality,
    k_order_eigenvector_centrality,
    walk_centrality,
)
from Corespec.util import Norm


def _ranked(table: CentralityTable) -> bool:
    return table.scores.size >= 2 and bool(np.ptp(table.scores) > 0)


class command(GraphCommand):
    name = "compare"
    description = "Rank-correlate centrality measures and cycle counts over all vertices"

    def tables(self, graph, config) -> list[CentralityTable]:
        tables = []
        measures = list(dict.fromkeys(config.measures))
        lengths = [int(m[1]) for m in measures if m in ("c3", "c4", "c5")]
        cycles = cycle_counts(graph, max(lengths)) if lengths else None
        for measure in measures:
            match measure:
                case "dc":
                    tables.append(degree_centrality(graph))
                case "cc":
                    tables.append(coreness_centrality(graph))
                case "ec":
                    tables.append(eigenvector_centrality(graph, Norm(config.norm)))
                case "kec":
                    table = k_order_eigenvector_centrality(graph, config.k, config.spectral())
                    if not table.converged:
                        assert table.bracket is not None
                        self.not_converged(config.k, table.iterations, table.bracket)
                    if table.no_core:
                        self.infos.append(("no-k-core k=%d", (config.k,)))
                    tables.append(table)
                case "c3" | "c4" | "c5":
                    assert cycles is not None
                    tables.append(CentralityTable(measure.upper(), cycles.cumulative(int(measure[1])).astype(float)))
                case _:
                    walk = WALK_MEASURE.match(measure)
                    assert walk is not None
                    tables.append(walk_centrality(graph, int(walk.group(1))))
        return tables

    def analyze(self, graph, config):
        tables = self.tables(graph, config)
        report = correlate(tables)
        for pair in report.pairs:
            if pair.r_s is None:
                self.warnings.append(("correlation-undefined %s %s", (pair.a, pair.b)))

        # a constant measure has no rank variance, not even against itself
        matrix = {
            t.measure: {u.measure: (1.0 if t is u and _ranked(t) else None) for u in tables} for t in tables
        }
        for pair in report.pairs:
            matrix[pair.a][pair.b] = matrix[pair.b][pair.a] = pair.r_s
        self.payload = {
            "k": config.k,
            "measures": [t.measure for t in tables],
            "pairs": [{"a": p.a, "b": p.b, "r_s": p.r_s, "n_vertices": p.n_vertices} for p in report.pairs],
            "matrix": matrix,
        }
        if config.scatter:
            self.payload["scores"] = {t.measure: self.by_label(graph, t.scores.tolist()) for t in tables}
            self.rows = [["vertex"] + [t.measure for t in tables]]
            for i in range(graph.n):
                self.rows.append([graph.label(i)] + [t.scores[i] for t in tables])
        else:
            names = [t.measure for t in tables]
            self.rows = [["measure"] + names]
            self.rows.extend([a] + [matrix[a][b] for b in names] for a in names)
