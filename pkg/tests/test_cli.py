# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

import contextlib
import io
import json
import os
import random
import tempfile
import unittest

import networkx as nx
import numpy as np
from parameterized import parameterized

from DaisyHamming.cli import main
from DaisyHamming.document import GraphDocument, read_document, write_document
from DaisyHamming.metric import cycle_graph

# set deterministic seed
random.seed(15)
np.random.seed(15)

C6 = ("u", "x1", "x2", "r", "y1", "y2")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestCommandLine(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.p3 = self.path("p3.json")
        code, _, _ = run("build", "--shape", "2,2", "--gen", "1,0", "--gen", "0,1", "--out", self.p3)
        self.assertEqual(code, 0)

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def test_build(self):
        target = self.path("g.json")
        code, out, _ = run(
            "build", "--shape", "2,2,2", "--gen", "1,1,0", "--gen", "0,1,1", "--out", target
        )
        self.assertEqual(code, 0)
        self.assertEqual(out, "vertices: 6\nedges: 7\ngenerators: 0,1,1 1,1,0\n")
        self.assertEqual(len(read_document(target).vertices), 6)

    def test_build_to_stdout(self):
        code, out, err = run("build", "--shape", "3", "--gen", "2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["vertices"], ["0", "2"])
        self.assertTrue(err.startswith("vertices: 2\n"))

    def test_build_generic(self):
        host = self.path("c6.json")
        write_document(GraphDocument.from_graph(cycle_graph(C6), "r"), host)
        code, out, _ = run("build", "--host", host, "--gen", "u", "--out", self.path("d.json"))
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("vertices: 6\n"))
        code, out, _ = run("check", self.path("d.json"), "--host", host)
        self.assertEqual((code, out), (0, "daisy: yes\nisometric: yes\n"))

    def test_check_generic_witness(self):
        host = self.path("c6.json")
        path = self.path("path.json")
        write_document(GraphDocument.from_graph(nx.cycle_graph(6), 0), host)
        write_document(GraphDocument.from_graph(nx.cycle_graph(6).subgraph([0, 1, 2, 4, 5]), 0), path)
        code, out, _ = run("check", path, "--host", host)
        self.assertEqual(code, 1)
        lines = out.splitlines()
        self.assertEqual(lines[0], "daisy: yes")
        self.assertTrue(lines[1].startswith("isometric: no (witness [2, 4]"))

    def test_check_mixed_ids(self):
        target = self.path("mixed.json")
        with open(target, "w") as fh:
            json.dump({"schema": 1, "kind": "generic", "vertices": [1, "a"], "edges": [], "root": 1}, fh)
        code, out, err = run("check", target, "--host", target)
        self.assertEqual((code, out), (2, ""))
        self.assertTrue(err.startswith("error: "))

    def test_check(self):
        code, out, _ = run("check", self.p3)
        self.assertEqual(code, 0)
        self.assertEqual(out, "daisy: yes\nisometric: yes\nminimal host: yes\n")

    def test_check_not_isometric(self):
        target = self.path("bad.json")
        run("build", "--shape", "3,3", "--gen", "1,1", "--gen", "2,2", "--out", target)
        code, out, _ = run("check", target)
        self.assertEqual(code, 1)
        lines = out.splitlines()
        self.assertEqual(lines[0], "daisy: yes")
        self.assertTrue(lines[1].startswith("isometric: no (witness "))

    def test_classes(self):
        code, out, _ = run("classes", self.p3)
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "2 delta classes")
        self.assertTrue(lines[1].startswith("class 1: anchor 0,0-1,0, 1 edges"))

    def test_contract(self):
        target = self.path("k2.json")
        code, _, err = run("contract", self.p3, "--coord", "1", "--out", target)
        self.assertEqual(code, 0)
        self.assertEqual(err, "X_0: 0 1\nX_1: 0\n")
        doc = read_document(target)
        self.assertEqual(doc.vertices, ((0,), (1,)))
        self.assertEqual(doc.notes["coordinate"], 1)

    def test_expand(self):
        k2 = self.path("k2.json")
        run("build", "--shape", "2", "--gen", "1", "--out", k2)
        code, out, _ = run("expand", k2, "--cover", "0")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["shape"], "2,2")
        self.assertEqual(data["vertices"], ["0,0", "0,1", "1,0"])

    def test_expand_rejects_family(self):
        code, _, err = run("expand", self.p3, "--cover", "0,0;1,1")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("error: "))

    def test_decompose_and_replay(self):
        script = self.path("script.json")
        rebuilt = self.path("rebuilt.json")
        code, _, err = run("decompose", self.p3, "--out", script)
        self.assertEqual(code, 0)
        self.assertEqual(len(err.splitlines()), 2)
        with open(script) as fh:
            self.assertEqual([s["coordinate"] for s in json.load(fh)["steps"]], [2, 1])
        code, _, _ = run("expand", "--script", script, "--out", rebuilt)
        self.assertEqual(code, 0)
        with open(self.p3) as original, open(rebuilt) as again:
            self.assertEqual(original.read(), again.read())

    @parameterized.expand([("dot", '"0,0" -- "1,0"'), ("gml", 'label "0,1"')])
    def test_export(self, fmt, expected):
        code, out, _ = run("export", self.p3, "--format", fmt)
        self.assertEqual(code, 0)
        self.assertIn(expected, out)

    def test_verify(self):
        target = self.path("report.json")
        code, _, _ = run("verify", "--suite", "quick", "--format", "json", "--out", target)
        self.assertEqual(code, 0)
        with open(target) as fh:
            document = json.load(fh)
        self.assertEqual(document["header"]["suite"], "quick")
        self.assertTrue(all(r["verdict"] != "fail" for r in document["reports"]))

    def test_missing_file(self):
        code, out, err = run("check", self.path("absent.json"))
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("error: "))

    def test_malformed_document(self):
        target = self.path("broken.json")
        with open(target, "w") as fh:
            fh.write('{\n  "schema": 1,\n')
        code, _, err = run("classes", target)
        self.assertEqual(code, 2)
        self.assertIn("line", err)


if __name__ == "__main__":
    unittest.main()
