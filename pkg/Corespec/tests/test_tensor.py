# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

import math
import unittest
from dataclasses import replace

import numpy as np
from hypothesis import assume, given, settings, strategies as st

from Corespec.core import peel
from Corespec.errors import ContractViolation
from Corespec.generators import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
    with_pendants,
)
from Corespec.graph import Graph, induced_subgraph
from Corespec.tensor import (
    KAdjacency,
    Mode,
    SpectralConfig,
    apply_k,
    core_exists_spectral,
    nqz_iterate,
    shifted_apply,
    spectral_radius_k,
    spectral_support,
)
from Corespec.tests.graph_test import graphs, karate, nonnegative_vectors
from Corespec.util import Norm


class ApplyTests(unittest.TestCase):
    def test_all_ones_binomial(self):
        y = apply_k(star_graph(3), 2, np.ones(4))
        self.assertEqual(y.tolist(), [3.0, 0.0, 0.0, 0.0])

    def test_mixed_values(self):
        x = np.array([0.0, 0.5, 2.0, 1.0])
        self.assertAlmostEqual(apply_k(star_graph(3), 2, x)[0], 3.5, places=14)

    def test_star(self):
        y = apply_k(star_graph(5), 2, np.ones(6))
        self.assertEqual(y.tolist(), [10.0] + [0.0] * 5)

    def test_order_one_is_adjacency(self):
        g = karate()
        x = np.linspace(0.1, 3.4, g.n)
        self.assertTrue(np.allclose(apply_k(g, 1, x), g.csr @ x, rtol=0, atol=1e-12))

    def test_shifted(self):
        self.assertEqual(shifted_apply(complete_graph(3), 2, np.ones(3)).tolist(), [2.0, 2.0, 2.0])
        self.assertEqual(shifted_apply(empty_graph(2), 3, np.array([2.0, 0.5])).tolist(), [8.0, 0.125])
        self.assertEqual(shifted_apply(karate(), 2, np.zeros(34)).tolist(), [0.0] * 34)

    def test_contract(self):
        with self.assertRaises(ContractViolation):
            apply_k(path_graph(3), 2, np.ones(2))
        with self.assertRaises(ContractViolation):
            apply_k(path_graph(3), 2, np.array([1.0, -1.0, 1.0]))
        with self.assertRaises(ContractViolation):
            KAdjacency(path_graph(3), 0)

    def test_k_above_degree(self):
        self.assertEqual(apply_k(complete_graph(4), 5, np.ones(4)).tolist(), [0.0] * 4)


@settings(max_examples=60)
@given(graphs(max_n=9), st.integers(1, 4), st.data())
def test_apply_matches_subset_sum(g, k, data):
    x = np.array(data.draw(st.lists(st.floats(0.0, 3.0), min_size=g.n, max_size=g.n)), dtype=float)
    y = apply_k(g, k, x)
    for i in range(g.n):
        # e_k as the coefficient of t^k in prod(1 + x_j t)
        poly = np.array([1.0])
        for j in g.adjacency[i]:
            poly = np.convolve(poly, [1.0, x[j]])
        expected = poly[k] if k < poly.size else 0.0
        assert math.isclose(y[i], expected, rel_tol=1e-10, abs_tol=1e-10)


class SpectralConfigTests(unittest.TestCase):
    def test_defaults(self):
        cfg = SpectralConfig(k=2)
        self.assertEqual((cfg.tol, cfg.max_iters, cfg.norm, cfg.mode), (1e-10, 10000, Norm.L2, Mode.PER_COMPONENT))

    def test_invalid(self):
        for bad in ({"k": 0}, {"k": 2, "tol": 0.0}, {"k": 2, "max_iters": 0}):
            with self.assertRaises(ContractViolation):
                SpectralConfig(**bad)


class IterationTests(unittest.TestCase):
    def assertUniform(self, vector):
        self.assertTrue(np.allclose(vector, vector[0], rtol=0, atol=1e-9))
        self.assertGreater(vector[0], 0)

    def test_clique_boundary(self):
        for k in range(1, 6):
            result = spectral_radius_k(complete_graph(k + 1), SpectralConfig(k=k))
            self.assertAlmostEqual(result.rho, 1.0, delta=1e-9)
            self.assertTrue(result.converged)
            self.assertUniform(result.vector)

    def test_k4(self):
        result = nqz_iterate(complete_graph(4), SpectralConfig(k=2))
        self.assertAlmostEqual(result.rho, 3.0, delta=1e-9)
        self.assertUniform(result.vector)
        self.assertAlmostEqual(float(np.linalg.norm(result.vector)), 1.0, places=12)

    def test_complete_binomial(self):
        for n in range(4, 13):
            expected = math.comb(n - 1, 2)
            rho = spectral_radius_k(complete_graph(n), SpectralConfig(k=2)).rho
            self.assertLessEqual(abs(rho - expected), 1e-8 * expected)

    def test_cycles(self):
        for n in (3, 4, 5, 17, 50):
            result = spectral_radius_k(cycle_graph(n), SpectralConfig(k=2))
            self.assertAlmostEqual(result.rho, 1.0, delta=1e-9)
            self.assertUniform(result.vector)

    def test_no_core(self):
        for g in (star_graph(6), path_graph(7), empty_graph(3)):
            result = spectral_radius_k(g, SpectralConfig(k=2))
            self.assertEqual(result.rho, 0.0)
            self.assertTrue(result.converged)
            self.assertEqual(result.vector.tolist(), [0.0] * g.n)
            self.assertEqual(spectral_support(result), frozenset())

    def test_path_order_one(self):
        result = spectral_radius_k(path_graph(3), SpectralConfig(k=1))
        self.assertAlmostEqual(result.rho, math.sqrt(2), delta=1e-9)
        expected = np.array([0.5, math.sqrt(0.5), 0.5])
        self.assertTrue(np.allclose(result.vector, expected, atol=1e-8))

    def test_order_one_matches_eigh(self):
        g = karate()
        values, vectors = np.linalg.eigh(g.csr.toarray())
        result = spectral_radius_k(g, SpectralConfig(k=1))
        self.assertAlmostEqual(result.rho, values[-1], delta=1e-9)
        self.assertTrue(np.allclose(result.vector, np.abs(vectors[:, -1]), atol=1e-8))

    def test_largest_component_wins(self):
        g = disjoint_union(complete_graph(3), complete_graph(4))
        result = spectral_radius_k(g, SpectralConfig(k=2))
        self.assertAlmostEqual(result.rho, 3.0, delta=1e-9)
        self.assertEqual(spectral_support(result), frozenset({3, 4, 5, 6}))
        self.assertEqual(sorted(result.component_rhos), [1.0, 3.0])

    def test_tied_components_combine(self):
        g = disjoint_union(complete_graph(4), cycle_graph(5), complete_graph(4))
        result = spectral_radius_k(g, SpectralConfig(k=3))
        self.assertAlmostEqual(result.rho, 1.0, delta=1e-9)
        self.assertEqual(spectral_support(result), frozenset(range(4)) | frozenset(range(9, 13)))
        self.assertTrue(np.allclose(result.vector[:4], result.vector[9:], atol=1e-12))

    def test_pendant_support(self):
        g = with_pendants(complete_graph(4), [1])
        result = spectral_radius_k(g, SpectralConfig(k=3))
        self.assertEqual(spectral_support(result), frozenset(range(4)))
        self.assertEqual(result.vector[4], 0.0)

    def test_norms(self):
        g = with_pendants(complete_graph(5), [0, 0])
        for norm, expected in ((Norm.L1, 1.0), (Norm.LINF, 1.0)):
            vector = spectral_radius_k(g, SpectralConfig(k=2, norm=norm)).vector
            size = vector.sum() if norm == Norm.L1 else vector.max()
            self.assertAlmostEqual(float(size), expected, places=12)

    def test_not_converged(self):
        result = nqz_iterate(karate(), SpectralConfig(k=2, max_iters=2))
        self.assertFalse(result.converged)
        self.assertEqual(result.iterations, 2)
        low, high = result.bracket
        self.assertLessEqual(low, high)
        self.assertEqual(len(result.history), 2)

    def test_bracket_monotone(self):
        history = nqz_iterate(karate(), SpectralConfig(k=2)).history
        lows = [low for low, _ in history]
        highs = [high for _, high in history]
        self.assertTrue(all(a <= b + 1e-12 for a, b in zip(lows, lows[1:])))
        self.assertTrue(all(a >= b - 1e-12 for a, b in zip(highs, highs[1:])))

    def test_naive_with_pendant(self):
        g = with_pendants(complete_graph(4), [0])
        cfg = SpectralConfig(k=2, max_iters=50, mode=Mode.NAIVE)
        naive = spectral_radius_k(g, cfg)
        self.assertFalse(naive.converged)
        per_component = spectral_radius_k(g, replace(cfg, mode=Mode.PER_COMPONENT))
        self.assertAlmostEqual(per_component.rho, 3.0, delta=1e-9)

    def test_naive_agrees_when_irreducible(self):
        cfg = SpectralConfig(k=2, mode=Mode.NAIVE)
        self.assertAlmostEqual(spectral_radius_k(cycle_graph(6), cfg).rho, 1.0, delta=1e-9)

    def test_empty_graph(self):
        with self.assertRaises(ContractViolation):
            nqz_iterate(Graph(adjacency=()), SpectralConfig(k=1))
        self.assertEqual(spectral_radius_k(Graph(adjacency=()), SpectralConfig(k=1)).rho, 0.0)


class ExistenceTests(unittest.TestCase):
    def test_cycle_boundary(self):
        exists, rho = core_exists_spectral(cycle_graph(5), 2, SpectralConfig(k=1))
        self.assertTrue(exists)
        self.assertAlmostEqual(rho, 1.0, delta=1e-9)

    def test_path(self):
        self.assertEqual(core_exists_spectral(path_graph(3), 2, SpectralConfig(k=2)), (False, 0.0))

    def test_karate_orders(self):
        g = karate()
        for k in range(1, 7):
            exists, _ = core_exists_spectral(g, k, SpectralConfig(k=k))
            self.assertEqual(exists, peel(g, k).exists)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=14), st.integers(2, 4))
def test_existence_and_support_match_peeling(g, k):
    result = spectral_radius_k(g, SpectralConfig(k=k))
    peeled = peel(g, k)
    assert (result.rho >= 1.0 - 1e-6) == peeled.exists
    support = spectral_support(result)
    assert support <= peeled.core
    if peeled.core_is_connected:
        assert support == peeled.core


def relabel(g, perm):
    "The graph with vertex i renamed perm[i]"
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@settings(max_examples=60)
@given(graphs(max_n=9), st.integers(1, 4), st.floats(0.0, 4.0), st.data())
def test_apply_is_homogeneous(g, k, c, data):
    x = np.array(data.draw(nonnegative_vectors(g.n)), dtype=float)
    scaled = apply_k(g, k, c * x)
    expected = c**k * apply_k(g, k, x)
    assert np.allclose(scaled, expected, rtol=1e-10, atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=10), st.integers(1, 3), st.data())
def test_permutation_equivariance(g, k, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = relabel(g, perm)
    x = np.array(data.draw(nonnegative_vectors(g.n)), dtype=float)
    moved = np.empty(g.n)
    moved[perm] = x
    assert np.allclose(apply_k(h, k, moved)[perm], apply_k(g, k, x), rtol=1e-12, atol=1e-12)
    rho_g = spectral_radius_k(g, SpectralConfig(k=k)).rho
    rho_h = spectral_radius_k(h, SpectralConfig(k=k)).rho
    assert math.isclose(rho_g, rho_h, rel_tol=1e-8, abs_tol=1e-8)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=30), st.integers(1, 4), st.data())
def test_subgraph_does_not_raise_radius(g, k, data):
    edges = g.edges()
    keep = data.draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    h = Graph.from_edges(g.n, [e for e, kept in zip(edges, keep) if kept])
    whole = spectral_radius_k(g, SpectralConfig(k=k))
    part = spectral_radius_k(h, SpectralConfig(k=k))
    assume(whole.converged and part.converged)
    assert part.rho <= whole.rho + 1e-8


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=12), st.integers(1, 3))
def test_naive_agrees_with_peeled_core(g, k):
    peeled = peel(g, k)
    assume(peeled.exists and peeled.core_is_connected)
    naive = spectral_radius_k(g, SpectralConfig(k=k, max_iters=3000, mode=Mode.NAIVE))
    assume(naive.converged)
    core, _ = induced_subgraph(g, peeled.core)
    assert abs(naive.rho - spectral_radius_k(core, SpectralConfig(k=k)).rho) <= 1e-6


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=14), st.integers(1, 4))
def test_eigen_residual(g, k):
    cfg = SpectralConfig(k=k)
    result = spectral_radius_k(g, cfg)
    assume(result.converged)
    residual = apply_k(g, k, result.vector) - result.rho * result.vector**k
    assert float(np.abs(residual).max(initial=0.0)) <= 10 * cfg.tol * max(1.0, result.rho)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=14), st.integers(1, 3))
def test_final_radius_inside_every_bracket(g, k):
    cfg = SpectralConfig(k=k)
    result = spectral_radius_k(g, cfg)
    slack = 2 * cfg.tol * max(1.0, result.rho)
    for lower, upper in result.history:
        assert lower - 1.0 <= result.rho + slack
        assert result.rho <= upper - 1.0 + slack
