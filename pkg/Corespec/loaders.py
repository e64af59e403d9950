# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Reading graphs from edge lists, Matrix Market files and the bundled datasets."""

import io
import logging
import os
from collections.abc import Iterable, Iterator
from typing import Literal, TextIO, TypeAlias

from .errors import ConfigError, ContractViolation, FormatError, ParseError
from .graph import Graph
from .util import detect_format

logger = logging.getLogger(__name__)

Indexing: TypeAlias = Literal["zero", "one", "auto"]

DATADIR = os.path.join(os.path.dirname(__file__), "data")
BUNDLED_DATASETS = {
    "karate": "karate.edges",
}

MTX_FIELDS = ("pattern", "real", "integer")
MTX_SYMMETRIES = ("symmetric", "general")


def _lines(text: str | TextIO) -> Iterator[tuple[int, str]]:
    if isinstance(text, str):
        text = io.StringIO(text)
    for lineno, line in enumerate(text, start=1):
        yield lineno, line.strip()


def _is_comment(line: str) -> bool:
    return line == "" or line.startswith("#") or line.startswith("%")


def _int_token(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"'{token}' is not an integer vertex id", lineno) from None


def parse_edge_list(text: str | TextIO, indexing: Indexing = "auto") -> Graph:
    """
    Parse whitespace separated 'u v' pairs, one per line.

    Lines starting with '#' or '%' are comments. With indexing 'auto' the ids are
    taken as 1-based unless some id equals 0. The vertex count is the largest id
    plus one (after shifting to 0-based).
    """
    pairs: list[tuple[int, int]] = []
    for lineno, line in _lines(text):
        if _is_comment(line):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 vertex ids, found {len(tokens)}", lineno)
        u, v = (_int_token(t, lineno) for t in tokens)
        if u < 0 or v < 0:
            raise ParseError("negative vertex id", lineno)
        pairs.append((u, v))

    match indexing:
        case "zero":
            offset = 0
        case "one":
            offset = 1
        case "auto":
            offset = 0 if any(u == 0 or v == 0 for u, v in pairs) else 1
        case _:
            raise ConfigError(f"unknown indexing '{indexing}'")
    if offset == 1 and any(u == 0 or v == 0 for u, v in pairs):
        raise ParseError("vertex id 0 in a 1-based edge list")

    n = max((max(u, v) for u, v in pairs), default=offset - 1) + 1 - offset
    edges = [(u - offset, v - offset) for u, v in pairs]
    labels = [str(i + offset) for i in range(n)]
    g = Graph.from_edges(n, edges, labels)
    logger.info(
        "edge list: n=%d m=%d (%d duplicates, %d self-loops dropped)",
        g.n,
        g.m,
        g.duplicates_dropped,
        g.self_loops_dropped,
    )
    return g


def _parse_banner(line: str) -> tuple[str, str]:
    words = line.lower().split()
    if len(words) != 5 or words[0] != "%%matrixmarket":
        raise FormatError(f"not a Matrix Market banner: '{line}'")
    _, obj, fmt, field, symmetry = words
    if obj != "matrix" or fmt != "coordinate":
        raise FormatError(f"unsupported Matrix Market layout '{obj} {fmt}', need 'matrix coordinate'")
    if field not in MTX_FIELDS:
        raise FormatError(f"unsupported Matrix Market field '{field}'")
    if symmetry not in MTX_SYMMETRIES:
        raise FormatError(f"unsupported Matrix Market symmetry '{symmetry}'")
    return field, symmetry


def parse_matrix_market(text: str | TextIO) -> Graph:
    """
    Parse a Matrix Market coordinate file as an unweighted graph.

    Numeric values are ignored, general matrices are symmetrized and diagonal
    entries are dropped. The declared dimension fixes n, so isolated vertices
    survive.
    """
    lines = _lines(text)
    try:
        _, banner = next(lines)
    except StopIteration:
        raise FormatError("empty Matrix Market file") from None
    field, symmetry = _parse_banner(banner)

    size: tuple[int, int, int] | None = None
    entries: list[tuple[int, int]] = []
    for lineno, line in lines:
        if _is_comment(line):
            continue
        tokens = line.split()
        if size is None:
            if len(tokens) != 3:
                raise ParseError("expected 'rows cols entries' size line", lineno)
            rows, cols, nnz = (_int_token(t, lineno) for t in tokens)
            if rows != cols:
                raise FormatError(f"adjacency matrix must be square, got {rows}x{cols}")
            size = (rows, cols, nnz)
            continue
        arity = 2 if field == "pattern" else 3
        if len(tokens) != arity:
            raise ParseError(f"expected {arity} tokens for a {field} entry, found {len(tokens)}", lineno)
        i, j = (_int_token(t, lineno) for t in tokens[:2])
        if not (1 <= i <= size[0] and 1 <= j <= size[1]):
            raise ParseError(f"entry ({i}, {j}) outside the declared {size[0]}x{size[1]} matrix", lineno)
        entries.append((i - 1, j - 1))

    if size is None:
        raise ParseError("missing size line")
    if len(entries) != size[2]:
        raise ParseError(f"declared {size[2]} entries, found {len(entries)}")

    n = size[0]
    if symmetry == "general":
        # a general matrix stores both (i, j) and (j, i); only exact repeats are duplicates
        ordered: set[tuple[int, int]] = set()
        repeated = 0
        for e in entries:
            if e in ordered:
                repeated += 1
            ordered.add(e)
        g = _from_entries(n, sorted(ordered))
        g = _with_counts(g, repeated, g.self_loops_dropped)
    else:
        g = _from_entries(n, entries)
    logger.info(
        "matrix market: n=%d m=%d (%d duplicates, %d self-loops dropped)",
        g.n,
        g.m,
        g.duplicates_dropped,
        g.self_loops_dropped,
    )
    return g


def _from_entries(n: int, entries: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, entries, [str(i + 1) for i in range(n)])


def _with_counts(g: Graph, duplicates: int, loops: int) -> Graph:
    return Graph(g.adjacency, g.labels, duplicates_dropped=duplicates, self_loops_dropped=loops)


def edge_list_indexing(g: Graph) -> Indexing:
    "The vertex numbering to_edge_list writes g in"
    if g.labels is None:
        return "zero"
    if all(label == str(i + 1) for i, label in enumerate(g.labels)):
        return "one"
    raise ContractViolation("only graphs labelled 0..n-1 or 1..n can be written as an edge list")


def to_edge_list(g: Graph) -> str:
    """
    Serialize g as an edge list in its own labels, each edge once.

    Parsing the text with edge_list_indexing(g) gives back g, provided the
    highest numbered vertex has an edge.
    """
    offset = 1 if edge_list_indexing(g) == "one" else 0
    return "".join("%d %d\n" % (u + offset, v + offset) for u, v in g.edges())


def bundled_dataset(name: str) -> Graph:
    try:
        filename = BUNDLED_DATASETS[name]
    except KeyError:
        raise ConfigError(f"unknown bundled dataset '{name}'") from None
    with open(os.path.join(DATADIR, filename)) as f:
        return parse_edge_list(f, indexing="one")


def load_graph(source: str, fmt: str = "auto", indexing: Indexing = "auto") -> Graph:
    """
    Load a graph from a file path or a bundled dataset name.

    A path that exists always wins over a dataset of the same name.
    """
    if not os.path.exists(source):
        if source in BUNDLED_DATASETS:
            return bundled_dataset(source)
        raise ConfigError(f"{source} does not exist and is not a bundled dataset")
    if fmt == "auto":
        fmt = detect_format(source)
    with open(source, errors="replace") as f:
        match fmt:
            case "mtx":
                return parse_matrix_market(f)
            case "edgelist":
                return parse_edge_list(f, indexing)
            case _:
                raise ConfigError(f"unknown format '{fmt}'")
