# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""The analysis report and its json, csv and table encodings."""

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

import Corespec.tags
from .types import Diagnostic

SCHEMA = 1


def _jsonable(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def render_diagnostics(messages: list[Diagnostic]) -> list[dict[str, str]]:
    return [{"tag": Corespec.tags.tag_name(msg), "message": Corespec.tags.format_message(msg)} for msg in messages]


@dataclass
class AnalysisReport:
    subcommand: str
    version: str
    config: dict[str, Any]
    graph: dict[str, Any] | None
    payload: dict[str, Any]
    rows: list[list[Any]] = field(default_factory=list)
    errors: list[Diagnostic] = field(default_factory=list)
    warnings: list[Diagnostic] = field(default_factory=list)
    infos: list[Diagnostic] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "tool": "corespec",
            "version": self.version,
            "subcommand": self.subcommand,
            "config": self.config,
            "graph": self.graph,
            "result": self.payload,
            "errors": render_diagnostics(self.errors),
            "warnings": render_diagnostics(self.warnings),
            "infos": render_diagnostics(self.infos),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=_jsonable) + "\n"

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerows(_plain(row) for row in self.rows)
        return out.getvalue()

    def to_table(self) -> str:
        lines = []
        if self.graph is not None:
            lines.append("graph: n=%(n)d m=%(m)d components=%(components)d" % self.graph)
        for key, value in self.payload.items():
            if isinstance(value, (str, int, float, bool, np.generic)) or value is None:
                lines.append("%-20s: %s" % (key, _format_cell(value)))
        if self.rows:
            cells = [[_format_cell(c) for c in row] for row in self.rows]
            widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
            for row in cells:
                lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"

    def render(self, output: str) -> str:
        match output:
            case "json":
                return self.to_json()
            case "csv":
                return self.to_csv()
            case _:
                return self.to_table()


def _plain(row: list[Any]) -> list[Any]:
    return [c.item() if isinstance(c, np.generic) else ("" if c is None else c) for c in row]


def _format_cell(value: Any) -> str:
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float):
        return "%.10g" % value
    if value is None:
        return "-"
    return str(value)
