# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from Corespec.dense import build_dense, dense_apply, verify_eigenpair
from Corespec.errors import ContractViolation
from Corespec.generators import complete_graph, cycle_graph, empty_graph, path_graph
from Corespec.tensor import apply_k
from Corespec.tests.graph_test import graphs


class DenseTests(unittest.TestCase):
    def test_triangle_entries(self):
        t = build_dense(complete_graph(3), 2)
        self.assertEqual((t.order, t.dim, t.entries.size), (3, 3, 27))
        self.assertEqual(t.entries[0, 1, 2], 0.5)
        self.assertEqual(t.entries[0, 2, 1], 0.5)
        self.assertEqual(t.entries[1, 0, 2], 0.5)
        self.assertEqual(t.entries[0, 1, 1], 0.0)
        self.assertEqual(np.count_nonzero(t.entries), 6)

    def test_path_entries(self):
        t = build_dense(path_graph(3), 2)
        nonzero = [tuple(int(i) for i in idx) for idx in np.argwhere(t.entries)]
        self.assertEqual(nonzero, [(1, 0, 2), (1, 2, 0)])

    def test_edgeless(self):
        self.assertFalse(np.any(build_dense(empty_graph(3), 2).entries))

    def test_apply(self):
        self.assertTrue(np.allclose(dense_apply(build_dense(complete_graph(3), 2), np.ones(3)), 1.0))
        t = build_dense(path_graph(3), 2)
        self.assertEqual(dense_apply(t, np.array([2.0, 5.0, 3.0])).tolist(), [0.0, 6.0, 0.0])
        self.assertEqual(dense_apply(t, np.zeros(3)).tolist(), [0.0] * 3)

    def test_apply_length(self):
        with self.assertRaises(ContractViolation):
            dense_apply(build_dense(path_graph(3), 2), np.ones(4))

    def test_eigenpairs(self):
        k4 = build_dense(complete_graph(4), 2)
        uniform = np.full(4, 0.5)
        self.assertTrue(verify_eigenpair(k4, 3.0, uniform, 1e-12))
        self.assertFalse(verify_eigenpair(k4, 2.0, uniform, 1e-12))
        self.assertTrue(verify_eigenpair(build_dense(cycle_graph(5), 2), 1.0, np.ones(5), 1e-12))
        with self.assertRaises(ContractViolation):
            verify_eigenpair(k4, 3.0, np.zeros(4), 1e-12)

    def test_size_guard(self):
        with self.assertRaises(ContractViolation):
            build_dense(empty_graph(40), 4)
        with self.assertRaises(ContractViolation):
            build_dense(empty_graph(3), 0)


@settings(max_examples=80)
@given(graphs(max_n=8), st.integers(1, 3), st.data())
def test_implicit_matches_dense(g, k, data):
    x = np.array(data.draw(st.lists(st.floats(0.0, 1.0), min_size=g.n, max_size=g.n)), dtype=float)
    assert np.allclose(apply_k(g, k, x), dense_apply(build_dense(g, k), x), rtol=0, atol=1e-12)
