# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

import math
import random
import unittest

import networkx as nx
import numpy as np
from parameterized import parameterized

from DaisyHamming.errors import GraphError, ShapeError
from DaisyHamming.hamming import Shape, enumerate_vertices
from DaisyHamming.metric import (
    GraphHost,
    HammingHost,
    LabeledGraph,
    as_host,
    bfs_distances,
    cycle_graph,
    edges_share_clique,
    graph_interval,
    is_connected,
    is_isometric,
)

# set deterministic seed
random.seed(15)
np.random.seed(15)

C6 = ("u", "x1", "x2", "r", "y1", "y2")

CONF_FULL_HOSTS = [(2,), (3,), (2, 2), (3, 2), (2, 2, 2)]
CONF_ISOMETRIC = [
    ((2, 2), [(0, 0), (1, 1)], False),
    ((2, 2), [(1, 0), (0, 1), (1, 1)], True),
    ((2, 2, 2), [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)], True),
    ((3, 3), [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)], False),
]


class TestLabeledGraph(unittest.TestCase):
    def test_induced_edges(self):
        g = LabeledGraph(Shape((2, 2)), [(0, 0), (1, 0), (1, 1)])
        self.assertEqual(g.edges(), [((0, 0), (1, 0)), ((1, 0), (1, 1))])
        self.assertEqual(g.neighbours((1, 0)), [(0, 0), (1, 1)])
        self.assertEqual(g.root, (0, 0))
        self.assertIn((1, 1), g)
        self.assertNotIn((0, 1), g)

    def test_rejects_foreign_vertex(self):
        with self.assertRaises(ShapeError):
            LabeledGraph(Shape((2, 2)), [(0, 2)])

    def test_k3_is_complete(self):
        g = LabeledGraph(Shape((3,)), enumerate_vertices((3,)))
        self.assertEqual(g.graph.number_of_edges(), 3)


class TestDistances(unittest.TestCase):
    def test_single_vertex(self):
        g = nx.Graph()
        g.add_node("a")
        self.assertEqual(bfs_distances(g, "a"), {"a": 0})

    def test_path(self):
        g = nx.path_graph(["a", "b", "c"])
        self.assertEqual(bfs_distances(g, "a"), {"a": 0, "b": 1, "c": 2})
        self.assertEqual(graph_interval(g, "a", "c"), {"a", "b", "c"})
        self.assertEqual(graph_interval(g, "b", "b"), {"b"})

    def test_cycle(self):
        g = cycle_graph(C6)
        self.assertEqual(bfs_distances(g, "u")["r"], 3)
        self.assertEqual(graph_interval(g, "r", "u"), set(C6))

    def test_unreachable(self):
        g = nx.Graph()
        g.add_nodes_from([0, 1])
        self.assertEqual(bfs_distances(g, 0)[1], math.inf)
        with self.assertRaises(GraphError):
            graph_interval(g, 0, 1)
        with self.assertRaises(GraphError):
            bfs_distances(g, 2)

    def test_generic_host(self):
        host = as_host(cycle_graph(C6))
        self.assertIsInstance(host, GraphHost)
        self.assertEqual(host.distance("x1", "y1"), 3)
        self.assertEqual(host.interval("x1", "y2"), {"x1", "u", "y2"})
        with self.assertRaises(GraphError):
            host.check("z")

    def test_hamming_host(self):
        host = as_host((3, 2))
        self.assertIsInstance(host, HammingHost)
        self.assertEqual(host.default_root, (0, 0))
        self.assertEqual(host.order, 6)
        self.assertIn((2, 1), host)
        self.assertNotIn((2, 2), host)


class TestIsometry(unittest.TestCase):
    @parameterized.expand(CONF_FULL_HOSTS)
    def test_full_host(self, *factors):
        shape = Shape(factors)
        self.assertTrue(is_isometric(LabeledGraph(shape, enumerate_vertices(shape))))

    @parameterized.expand(CONF_ISOMETRIC)
    def test_examples(self, factors, vertices, expected):
        verdict = is_isometric(LabeledGraph(Shape(factors), vertices))
        self.assertEqual(bool(verdict), expected)
        if not expected:
            u, v = verdict.witness
            self.assertIn(u, vertices)
            self.assertIn(v, vertices)

    def test_disconnected_witness(self):
        verdict = is_isometric(LabeledGraph(Shape((2, 2)), [(0, 0), (1, 1)]))
        self.assertEqual(verdict.witness, ((0, 0), (1, 1)))

    def test_generic_host(self):
        c6 = cycle_graph(C6)
        self.assertTrue(is_isometric(["u", "x1", "x2"], host=c6))
        self.assertFalse(is_isometric(["x1", "x2", "r", "y1", "y2"], host=c6))

    def test_needs_host(self):
        with self.assertRaises(TypeError):
            is_isometric([(0, 0)])


class TestCliques(unittest.TestCase):
    def test_same_edge(self):
        g = nx.path_graph(3)
        self.assertTrue(edges_share_clique(g, (0, 1), (0, 1)))

    def test_triangle(self):
        g = nx.complete_graph(3)
        self.assertTrue(edges_share_clique(g, (0, 1), (1, 2)))

    def test_square(self):
        g = nx.cycle_graph(4)
        self.assertFalse(edges_share_clique(g, (0, 1), (2, 3)))
        self.assertFalse(edges_share_clique(g, (0, 1), (1, 2)))

    def test_non_edge(self):
        with self.assertRaises(GraphError):
            edges_share_clique(nx.cycle_graph(4), (0, 2), (0, 1))

    def test_connected(self):
        self.assertTrue(is_connected(cycle_graph(C6)))
        g = nx.Graph()
        g.add_nodes_from([0, 1])
        self.assertFalse(is_connected(g))


if __name__ == "__main__":
    unittest.main()
