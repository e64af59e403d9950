# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

import functools
import itertools
import os
import shutil
import tempfile
import unittest

import networkx as nx
from hypothesis import strategies as st

import Corespec.commandclass
from Corespec.config import RunConfig
from Corespec.graph import Graph
from Corespec.loaders import bundled_dataset


class GraphTest(unittest.TestCase):
    """
    This class is the template for unit tests concerning subcommands.
    The setUp() method should set self.command to a class derived from
    GraphCommand.

    The usual way to do that is by defining

    def preSetUp(self):
            self.command = Corespec.commands.core.command
    """

    command: type[Corespec.commandclass.AbstractCommand]

    def preSetUp(self):
        pass

    def setUp(self):
        self.preSetUp()
        self.tmpdir = tempfile.mkdtemp()

    def write_file(self, name, text):
        path = os.path.join(self.tmpdir, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def run_on_graph(self, g, **options):
        config = RunConfig(subcommand=self.command.name, **options)
        c = self.command()
        assert isinstance(c, Corespec.commandclass.GraphCommand)
        c.analyze(g, config)
        return c

    def tearDown(self):
        shutil.rmtree(self.tmpdir)


@functools.cache
def karate() -> Graph:
    return bundled_dataset("karate")


def from_networkx(g: nx.Graph) -> Graph:
    "Convert a networkx graph whose nodes are 0..n-1"
    return Graph.from_edges(g.number_of_nodes(), g.edges())


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n=0, max_n=10):
    "Arbitrary simple graphs on up to max_n vertices"
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, present) if keep])


def nonnegative_vectors(n):
    return st.lists(st.floats(0.0, 4.0, allow_nan=False), min_size=n, max_size=n)
