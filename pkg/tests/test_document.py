# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

import json
import math
import random
import unittest

import networkx as nx
import numpy as np
import pydot
from parameterized import parameterized

from DaisyHamming.common import to_jsonable
from DaisyHamming.daisy import build_daisy
from DaisyHamming.document import (
    GraphDocument,
    export,
    parse,
    parse_coordinates,
    serialize,
    to_dot,
    to_gml,
)
from DaisyHamming.errors import CoverError, DocumentError
from DaisyHamming.hamming import Shape
from DaisyHamming.metric import LabeledGraph, cycle_graph
from DaisyHamming.relations import delta_classes

# set deterministic seed
random.seed(15)
np.random.seed(15)

C6 = ("u", "x1", "x2", "r", "y1", "y2")

CONF_BAD_DOCUMENTS = [
    ("not_json", "{", None),
    ("not_object", "[]", None),
    ("schema", '{"schema": 2, "kind": "labeled"}', "schema"),
    ("kind", '{"schema": 1, "kind": "weird", "vertices": ["0"]}', "kind"),
    ("empty", '{"schema": 1, "kind": "labeled", "vertices": [], "shape": "2", "root": "0"}', "vertices"),
    ("coordinates", '{"schema": 1, "kind": "labeled", "vertices": ["0,x"], "shape": "2", "root": "0"}', "vertices"),
    ("outside", '{"schema": 1, "kind": "labeled", "vertices": ["2"], "shape": "2", "root": "0"}', "vertices"),
    ("shape", '{"schema": 1, "kind": "labeled", "vertices": ["0"], "shape": "1", "root": "0"}', "shape"),
    ("edges", '{"schema": 1, "kind": "labeled", "vertices": ["0"], "shape": "2", "root": "0", "edges": []}', "edges"),
    ("loop", '{"schema": 1, "kind": "generic", "vertices": [1], "edges": [[1, 1]], "root": 1}', "edges"),
    ("root", '{"schema": 1, "kind": "generic", "vertices": [1, 2], "edges": [[1, 2]], "root": 3}', "root"),
    ("unhashable_ids", '{"schema": 1, "kind": "generic", "vertices": [[0, 1], 2], "edges": [], "root": 2}', "vertices"),
    ("mixed_ids", '{"schema": 1, "kind": "generic", "vertices": [1, "a"], "edges": [], "root": 1}', "vertices"),
    ("bool_ids", '{"schema": 1, "kind": "generic", "vertices": [true, false], "edges": [], "root": true}', "vertices"),
    ("edge_ids", '{"schema": 1, "kind": "generic", "vertices": [1, 2], "edges": [[1, [2]]], "root": 1}', "edges"),
    ("root_id", '{"schema": 1, "kind": "generic", "vertices": [1, 2], "edges": [[1, 2]], "root": [1]}', "root"),
]


class TestJsonValues(unittest.TestCase):
    def test_to_jsonable(self):
        self.assertEqual(to_jsonable((1, 0)), "1,0")
        self.assertEqual(to_jsonable(()), "")
        self.assertEqual(to_jsonable({(1,), (0,)}), ["0", "1"])
        self.assertEqual(to_jsonable(math.inf), "inf")
        self.assertEqual(to_jsonable({"pair": ("a", "b")}), {"pair": ["a", "b"]})
        self.assertEqual(to_jsonable(np.int64(3)), 3)

    def test_generic_ids_stay_lists(self):
        self.assertEqual(to_jsonable((1, 3), coordinates=False), [1, 3])
        self.assertEqual(to_jsonable({"pair": ((1, 3), (2, 4))}, False), {"pair": [[1, 3], [2, 4]]})
        self.assertEqual(to_jsonable({3, 1}, False), [1, 3])

    def test_parse_coordinates(self):
        self.assertEqual(parse_coordinates("1,0"), (1, 0))
        self.assertEqual(parse_coordinates(""), ())
        with self.assertRaises(DocumentError):
            parse_coordinates("1;0")
        with self.assertRaises(DocumentError):
            parse_coordinates(7)


class TestDocuments(unittest.TestCase):
    def test_labeled_round_trip(self):
        d = build_daisy((2, 2, 2), (0, 0, 0), [(1, 1, 0), (0, 1, 1)])
        doc = GraphDocument.from_daisy(d)
        text = serialize(doc)
        data = json.loads(text)
        self.assertEqual(data["shape"], "2,2,2")
        self.assertEqual(data["root"], "0,0,0")
        self.assertEqual(data["notes"]["generators"], ["0,1,1", "1,1,0"])
        self.assertNotIn("edges", data)
        again = parse(text)
        self.assertEqual(again, doc)
        self.assertEqual(serialize(again), text)
        self.assertEqual(again.labeled.vertices, d.vertices)

    def test_k1(self):
        doc = GraphDocument.from_labeled(LabeledGraph(Shape(()), [()]))
        data = json.loads(serialize(doc))
        self.assertEqual(data["vertices"], [""])
        self.assertEqual(data["shape"], "")
        self.assertEqual(parse(serialize(doc)).vertices, ((),))

    def test_generic_round_trip(self):
        doc = GraphDocument.from_graph(cycle_graph(C6), "r")
        again = parse(serialize(doc))
        self.assertEqual(again.kind, "generic")
        self.assertEqual(again.root, "r")
        self.assertTrue(nx.is_isomorphic(again.to_graph(), nx.cycle_graph(6)))
        with self.assertRaises(DocumentError):
            again.labeled

    def test_generic_ids_checked(self):
        with self.assertRaises(DocumentError) as ctx:
            GraphDocument.from_graph(nx.path_graph([(0, 1), (1, 1)]), (0, 1))
        self.assertEqual(ctx.exception.field, "vertices")
        with self.assertRaises(DocumentError) as ctx:
            GraphDocument.from_graph(nx.path_graph(3), 7)
        self.assertEqual(ctx.exception.field, "root")
        data = json.loads(serialize(GraphDocument.from_graph(nx.path_graph(3), 1)))
        self.assertEqual(data["edges"], [[0, 1], [1, 2]])
        self.assertEqual(data["root"], 1)

    @parameterized.expand(CONF_BAD_DOCUMENTS)
    def test_rejects(self, _, text, field):
        with self.assertRaises(DocumentError) as ctx:
            parse(text)
        self.assertEqual(ctx.exception.field, field)

    def test_error_line(self):
        with self.assertRaises(DocumentError) as ctx:
            parse('{\n  "schema": 1,\n  oops\n}')
        self.assertEqual(ctx.exception.line, 3)
        self.assertIn("line 3", str(ctx.exception))

    def test_errors_are_value_errors(self):
        self.assertTrue(issubclass(DocumentError, ValueError))
        self.assertTrue(issubclass(CoverError, ValueError))


class TestExport(unittest.TestCase):
    def setUp(self):
        self.square = LabeledGraph(Shape((2, 2)), [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.classes = [c.edges for c in delta_classes(self.square, root=(0, 0))]

    def dot_edges(self, text):
        (graph,) = pydot.graph_from_dot_data(text)
        return {
            (e.get_source().strip('"'), e.get_destination().strip('"')): e.get_attributes()
            for e in graph.get_edges()
        }

    @staticmethod
    def values(attributes):
        return tuple(str(attributes[k]).strip('"') for k in ("class", "color"))

    def test_dot(self):
        text = to_dot(self.square.graph, self.classes)
        self.assertIn('"0,0" -- "1,0"', text)
        self.assertIn("colorscheme", text)
        edges = self.dot_edges(text)
        self.assertEqual(len(edges), 4)
        first = edges[("0,0", "1,0")]
        self.assertEqual(self.values(first), ("0", "1"))
        second = edges[("0,0", "0,1")]
        self.assertEqual(self.values(second), ("1", "2"))

    def test_dot_without_classes(self):
        edges = self.dot_edges(to_dot(nx.path_graph(2)))
        self.assertEqual(edges, {("0", "1"): {}})

    def test_gml(self):
        text = to_gml(self.square.graph, self.classes)
        self.assertIn('label "1,1"', text)
        self.assertIn("delta_class 1", text)
        parsed = nx.parse_gml(text)
        self.assertEqual(parsed.number_of_edges(), 4)

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            export(self.square.graph, "svg")


if __name__ == "__main__":
    unittest.main()
