# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

import itertools
import os
import random
import unittest
from unittest import mock

import numpy as np
from parameterized import parameterized

from DaisyHamming import config
from DaisyHamming.errors import BudgetExceededError, ShapeError
from DaisyHamming.hamming import (
    Shape,
    check_vertex,
    delete_coordinate,
    enumerate_vertices,
    hamming_distance,
    hamming_interval,
    hamming_matrix,
    insert_coordinate,
    is_adjacent,
    neighbours,
    unit_vertex,
)

# set deterministic seed
random.seed(15)
np.random.seed(15)


def brute_interval(shape, u, v):
    d = hamming_distance(u, v)
    return {
        w for w in enumerate_vertices(shape)
        if hamming_distance(u, w) + hamming_distance(w, v) == d
    }


CONF_DISTANCE = [
    ((0, 0), (0, 0), 0),
    ((1, 2), (1, 0), 1),
    ((1, 2, 1), (0, 1, 1), 2),
]
CONF_ADJACENT = [
    ((0, 0), (2, 0), True),
    ((0, 0), (1, 1), False),
    ((0, 0), (0, 0), False),
]
CONF_INTERVAL = [
    ((3, 3), (0, 0), (1, 2), {(0, 0), (1, 0), (0, 2), (1, 2)}),
    ((3, 3), (2, 1), (2, 1), {(2, 1)}),
    ((2, 2, 2), (0, 0, 0), (1, 0, 1), {(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 0, 1)}),
]
CONF_UNIT = [
    ((3, 3), 2, 2, (0, 2)),
    ((3, 3), 1, 0, (0, 0)),
    ((2, 3, 2), 2, 1, (0, 1, 0)),
]
CONF_SHAPES = [(2,), (3,), (2, 2), (3, 2), (2, 3, 2), (4, 3)]


class TestShape(unittest.TestCase):
    def test_k1(self):
        shape = Shape(())
        self.assertEqual(shape.n, 0)
        self.assertEqual(shape.order, 1)
        self.assertEqual(shape.root, ())
        self.assertEqual(str(shape), "")

    def test_factor_of_size_one_rejected(self):
        with self.assertRaises(ShapeError):
            Shape((3, 1))
        with self.assertRaises(ValueError):
            Shape((0,))

    def test_drop_and_insert(self):
        shape = Shape((2, 3, 4))
        self.assertEqual(shape.drop(2), Shape((2, 4)))
        self.assertEqual(shape.insert(0, 5), Shape((5, 2, 3, 4)))
        self.assertEqual(shape.insert(3, 5), Shape((2, 3, 4, 5)))
        self.assertEqual(str(shape), "2,3,4")
        self.assertEqual(shape.order, 24)

    def test_check_vertex(self):
        shape = Shape((3, 3))
        self.assertEqual(check_vertex(shape, [2, 1]), (2, 1))
        with self.assertRaises(ShapeError):
            check_vertex(shape, (3, 0))
        with self.assertRaises(ShapeError):
            check_vertex(shape, (0, 0, 0))


class TestHammingMetric(unittest.TestCase):
    @parameterized.expand(CONF_DISTANCE)
    def test_distance(self, u, v, expected):
        self.assertEqual(hamming_distance(u, v), expected)
        self.assertEqual(hamming_distance(v, u), expected)

    @parameterized.expand(CONF_ADJACENT)
    def test_adjacent(self, u, v, expected):
        self.assertEqual(is_adjacent(u, v), expected)

    def test_length_mismatch(self):
        with self.assertRaises(ShapeError):
            hamming_distance((0, 0), (0, 0, 0))
        with self.assertRaises(ShapeError):
            hamming_interval((0,), (0, 1))

    def test_range_checked_against_shape(self):
        self.assertEqual(hamming_distance((0, 1), (2, 1), shape=(3, 2)), 1)
        with self.assertRaises(ShapeError):
            hamming_distance((0, 3), (0, 0), shape=(2, 2))
        with self.assertRaises(ShapeError):
            is_adjacent((0, 0), (5, 0), shape=(2, 2))
        with self.assertRaises(ShapeError):
            hamming_interval((0, 0), (0, 2), shape=Shape((2, 2)))
        self.assertEqual(hamming_interval((0, 0), (1, 1), shape=(2, 2)), {(0, 0), (0, 1), (1, 0), (1, 1)})

    @parameterized.expand(CONF_INTERVAL)
    def test_interval(self, shape, u, v, expected):
        self.assertEqual(hamming_interval(u, v), expected)
        self.assertEqual(brute_interval(shape, u, v), expected)

    @parameterized.expand(CONF_SHAPES)
    def test_interval_product_rule(self, *factors):
        shape = Shape(factors)
        vertices = enumerate_vertices(shape)
        for u, v in itertools.combinations(vertices, 2):
            interval = hamming_interval(u, v)
            self.assertEqual(interval, brute_interval(shape, u, v))
            self.assertEqual(len(interval), 2 ** hamming_distance(u, v))

    @parameterized.expand(CONF_UNIT)
    def test_unit_vertex(self, shape, j, i, expected):
        self.assertEqual(unit_vertex(shape, j, i), expected)

    def test_unit_vertex_out_of_range(self):
        with self.assertRaises(ShapeError):
            unit_vertex((3, 3), 3, 1)
        with self.assertRaises(ShapeError):
            unit_vertex((3, 3), 1, 3)
        with self.assertRaises(ShapeError):
            unit_vertex((), 1, 0)


class TestEnumeration(unittest.TestCase):
    def test_small_shapes(self):
        self.assertEqual(enumerate_vertices((2, 2)), [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(enumerate_vertices(()), [()])
        self.assertEqual(enumerate_vertices((3,)), [(0,), (1,), (2,)])

    @parameterized.expand(CONF_SHAPES)
    def test_order_and_neighbours(self, *factors):
        shape = Shape(factors)
        vertices = enumerate_vertices(shape)
        self.assertEqual(len(vertices), shape.order)
        self.assertEqual(vertices, sorted(vertices))
        degree = sum(k - 1 for k in factors)
        table = hamming_matrix(vertices)
        for index, v in enumerate(vertices):
            found = neighbours(shape, v)
            self.assertEqual(len(found), degree)
            expected = [vertices[c] for c in np.flatnonzero(table[index] == 1)]
            self.assertEqual(found, expected)

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            enumerate_vertices((4, 4, 4), budget=63)
        self.assertEqual(len(enumerate_vertices((4, 4, 4), budget=64)), 64)

    def test_k1_matrix(self):
        np.testing.assert_array_equal(hamming_matrix([()]), np.zeros((1, 1)))

    def test_coordinate_surgery(self):
        v = (1, 2, 3)
        self.assertEqual(delete_coordinate(v, 2), (1, 3))
        self.assertEqual(insert_coordinate((1, 3), 1, 2), v)
        self.assertEqual(insert_coordinate((), 0, 4), (4,))


class TestSettings(unittest.TestCase):
    def test_defaults(self):
        settings = config.Settings()
        self.assertEqual(settings.seed, 15)
        self.assertEqual(settings.daisy_budget, 16)

    def test_replace_ignores_none(self):
        settings = config.Settings().replace(seed=None, jobs=3)
        self.assertEqual(settings.seed, 15)
        self.assertEqual(settings.jobs, 3)

    def test_environment(self):
        with mock.patch.dict(os.environ, {"DAISY_BUDGET": "27", "DAISY_SEED": "7"}):
            settings = config._from_environment()
        self.assertEqual(settings.daisy_budget, 27)
        self.assertEqual(settings.seed, 7)

    def test_environment_not_integer(self):
        with mock.patch.dict(os.environ, {"DAISY_JOBS": "many"}):
            with self.assertRaises(ValueError):
                config._from_environment()


if __name__ == "__main__":
    unittest.main()
