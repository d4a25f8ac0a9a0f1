# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

import itertools
import math
import random
import unittest

import networkx as nx
import numpy as np
from parameterized import parameterized

from DaisyHamming.errors import GraphError
from DaisyHamming.hamming import enumerate_vertices
from DaisyHamming.medians import (
    MedianTriple,
    has_small_pseudo_median,
    median_set,
    pseudo_medians,
    quasi_median_hamming,
    rooted_triangle_condition,
    smallest_pair_sizes,
    triangle_candidates,
    triangle_condition,
)
from DaisyHamming.metric import cycle_graph

# set deterministic seed
random.seed(15)
np.random.seed(15)

C6 = ("u", "x1", "x2", "r", "y1", "y2")

CONF_QUASI = [
    ((3, 3), (1, 1), (2, 1), (0, 0), ((1, 1), (2, 1), (0, 1)), 1),
    ((3, 3, 3), (1, 1, 0), (2, 2, 0), (0, 0, 0), ((1, 1, 0), (2, 2, 0), (0, 0, 0)), 2),
    ((2, 2), (1, 0), (1, 1), (0, 0), ((1, 0), (1, 0), (1, 0)), 0),
]
CONF_HAMMING_HOSTS = [(3,), (2, 2), (3, 2), (2, 2, 2)]
CONF_TRIANGLE_HOSTS = [(2,), (4,), (3, 3), (4, 2), (2, 2, 2), (3, 2, 2)]


def distinct_coordinates(u, v, w):
    return sum(1 for a, b, c in zip(u, v, w) if len({a, b, c}) == 3)


class TestPseudoMedians(unittest.TestCase):
    def test_degenerate(self):
        result = pseudo_medians((3, 3), (1, 2), (1, 2), (1, 2))
        self.assertEqual(result.size, 0)
        self.assertEqual(result.triples, (MedianTriple(0, (1, 2), (1, 2), (1, 2)),))

    def test_cycle_triple(self):
        c6 = cycle_graph(C6)
        result = pseudo_medians(c6, "x1", "y2", "r")
        self.assertEqual(result.size, 2)
        self.assertFalse(has_small_pseudo_median(c6, "x1", "y2", "r"))

    def test_cycle_median(self):
        # x1 and y1 are antipodal, and r lies on a geodesic between them
        c6 = cycle_graph(C6)
        self.assertEqual(pseudo_medians(c6, "x1", "y1", "r").size, 0)
        self.assertEqual(median_set(c6, "x1", "y1", "r"), {"r"})

    def test_hamming_example(self):
        result = pseudo_medians((3, 3), (1, 1), (2, 1), (0, 0))
        self.assertEqual(result.size, 1)
        self.assertIn(MedianTriple(1, (1, 1), (2, 1), (0, 1)), result.triples)

    def test_large_triple(self):
        self.assertFalse(has_small_pseudo_median((3, 3), (1, 1), (2, 2), (0, 0)))
        self.assertTrue(has_small_pseudo_median((3, 3), (0, 0), (2, 2), (0, 0)))

    def test_disconnected(self):
        g = nx.Graph()
        g.add_nodes_from([0, 1, 2])
        g.add_edge(0, 1)
        with self.assertRaises(GraphError):
            pseudo_medians(g, 0, 1, 2)

    def test_five_cycle_has_none(self):
        result = pseudo_medians(nx.cycle_graph(5), 0, 2, 3)
        self.assertEqual(result.size, math.inf)
        self.assertEqual(result.triples, ())
        self.assertFalse(has_small_pseudo_median(nx.cycle_graph(5), 2, 3, 0))


class TestQuasiMedians(unittest.TestCase):
    @parameterized.expand(CONF_QUASI)
    def test_coordinate_rule(self, shape, u, v, w, expected, size):
        found = quasi_median_hamming(shape, u, v, w)
        self.assertEqual((found.x, found.y, found.z), expected)
        self.assertEqual(found.size, size)

    @parameterized.expand(CONF_HAMMING_HOSTS)
    def test_unique_pseudo_median(self, *factors):
        vertices = enumerate_vertices(factors)
        for u, v, w in itertools.product(vertices, repeat=3):
            found = pseudo_medians(factors, u, v, w)
            expected = quasi_median_hamming(factors, u, v, w)
            self.assertEqual(found.triples, (expected,))
            self.assertEqual(found.size, distinct_coordinates(u, v, w))
            self.assertEqual(bool(median_set(factors, u, v, w)), found.size == 0)


class TestTriangleCondition(unittest.TestCase):
    @parameterized.expand(CONF_TRIANGLE_HOSTS)
    def test_hamming(self, *factors):
        self.assertTrue(triangle_condition(factors))
        self.assertTrue(rooted_triangle_condition(factors, (0,) * len(factors)))

    def test_even_cycle_is_vacuous(self):
        c6 = cycle_graph(C6)
        self.assertEqual(triangle_candidates(c6), [])
        self.assertTrue(triangle_condition(c6))
        for r in C6:
            self.assertTrue(rooted_triangle_condition(c6, r))

    def test_five_cycle(self):
        c5 = nx.cycle_graph(5)
        verdict = triangle_condition(c5)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, (0, 2, 3))
        for r in range(5):
            rooted = rooted_triangle_condition(c5, r)
            self.assertFalse(rooted)
        self.assertEqual(rooted_triangle_condition(c5, 0).witness, (2, 3))


class TestPairSizes(unittest.TestCase):
    def test_k3(self):
        sizes = {(u, v): s for u, v, s in smallest_pair_sizes((3,), (0,))}
        self.assertEqual(sizes[((1,), (2,))], 1)
        self.assertEqual(sizes[((0,), (2,))], 0)
        self.assertEqual(len(sizes), 6)

    def test_tree(self):
        sizes = smallest_pair_sizes(nx.balanced_tree(2, 2), 0)
        self.assertTrue(all(s == 0 for _, _, s in sizes))


if __name__ == "__main__":
    unittest.main()
