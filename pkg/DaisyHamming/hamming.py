# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Implicit arithmetic of Hamming graphs.

A Hamming graph ``K_{k_1} x ... x K_{k_n}`` is never stored as an edge list:
vertices are coordinate tuples and every metric notion is computed from the
coordinates directly.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Set, Tuple

import numpy as np

from .config import get_settings
from .errors import BudgetExceededError, ShapeError

logger = logging.getLogger(__name__)

Vertex = Tuple[int, ...]


@dataclass(frozen=True)
class Shape:
    """Factor sizes ``(k_1, ..., k_n)`` of a Hamming graph.

    ``Shape(())`` is the one-vertex graph K1. Factors of size one are rejected
    rather than silently dropped.

    Args:
        factors: sizes of the complete factors, each at least 2.
    """

    factors: Tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(k) for k in self.factors)
        for j, k in enumerate(factors, start=1):
            if k < 2:
                raise ShapeError(f"factor {j} has size {k}; every factor must be >= 2")
        object.__setattr__(self, "factors", factors)

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        """Number of vertices of the Hamming graph."""
        return int(np.prod(self.factors, dtype=np.int64)) if self.factors else 1

    @property
    def root(self) -> Vertex:
        return (0,) * self.n

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, index):
        return self.factors[index]

    def drop(self, j: int) -> "Shape":
        """Shape with the (1-based) coordinate ``j`` removed."""
        return Shape(self.factors[: j - 1] + self.factors[j:])

    def insert(self, position: int, k: int) -> "Shape":
        """Shape with a new factor of size ``k`` inserted before 0-based ``position``."""
        return Shape(self.factors[:position] + (k,) + self.factors[position:])

    def __str__(self):
        return ",".join(str(k) for k in self.factors)


def as_shape(shape) -> Shape:
    return shape if isinstance(shape, Shape) else Shape(tuple(shape))


def check_vertex(shape: Shape, vertex: Sequence[int]) -> Vertex:
    """Validate ``vertex`` against ``shape`` and return it as a tuple."""
    vertex = tuple(int(c) for c in vertex)
    if len(vertex) != shape.n:
        raise ShapeError(
            f"vertex {vertex} has {len(vertex)} coordinates, shape ({shape}) has {shape.n}"
        )
    for j, (c, k) in enumerate(zip(vertex, shape.factors), start=1):
        if not 0 <= c < k:
            raise ShapeError(f"coordinate {j} of {vertex} is outside [0, {k})")
    return vertex


def _same_length(u, v, shape=None):
    if shape is not None:
        shape = as_shape(shape)
        return check_vertex(shape, u), check_vertex(shape, v)
    if len(u) != len(v):
        raise ShapeError(f"vertices {tuple(u)} and {tuple(v)} have different lengths")
    return tuple(u), tuple(v)


def hamming_distance(u: Sequence[int], v: Sequence[int], shape=None) -> int:
    """Number of coordinates in which ``u`` and ``v`` differ.

    This is the graph distance of the Hamming graph. With ``shape`` given,
    both vertices are validated against it.
    """
    u, v = _same_length(u, v, shape)
    return sum(1 for a, b in zip(u, v) if a != b)


def is_adjacent(u: Sequence[int], v: Sequence[int], shape=None) -> bool:
    return hamming_distance(u, v, shape) == 1


def hamming_interval(u: Sequence[int], v: Sequence[int], shape=None) -> Set[Vertex]:
    """All vertices on shortest ``u, v``-paths, by the coordinate product rule.

    Coordinates where ``u`` and ``v`` agree are fixed; elsewhere each
    coordinate independently takes ``u_j`` or ``v_j``, so the interval has
    ``2 ** d(u, v)`` members.
    """
    u, v = _same_length(u, v, shape)
    choices = [(a,) if a == b else (a, b) for a, b in zip(u, v)]
    return set(itertools.product(*choices))


def unit_vertex(shape, j: int, i: int) -> Vertex:
    """The vertex ``e^j_i``: value ``i`` in (1-based) coordinate ``j``, zero elsewhere."""
    shape = as_shape(shape)
    if not 1 <= j <= shape.n:
        raise ShapeError(f"coordinate index {j} outside [1, {shape.n}]")
    if not 0 <= i < shape[j - 1]:
        raise ShapeError(f"value {i} outside [0, {shape[j - 1]}) for coordinate {j}")
    vertex = [0] * shape.n
    vertex[j - 1] = i
    return tuple(vertex)


def enumerate_vertices(shape, budget: int = None) -> List[Vertex]:
    """All vertices of the Hamming graph in lexicographic order.

    Args:
        shape: the host shape.
        budget: maximum number of vertices; defaults to ``Settings.vertex_budget``.

    Returns:
        list of coordinate tuples, ``[()]`` for K1.
    """
    shape = as_shape(shape)
    budget = get_settings().vertex_budget if budget is None else budget
    if shape.order > budget:
        raise BudgetExceededError(
            f"shape ({shape}) has {shape.order} vertices, budget is {budget}"
        )
    return list(itertools.product(*(range(k) for k in shape.factors)))


def hamming_matrix(vertices: Iterable[Sequence[int]]) -> np.ndarray:
    """Pairwise Hamming distances of ``vertices`` (in the given order)."""
    coords = np.asarray(list(vertices), dtype=np.int64)
    if coords.ndim == 1:
        coords = coords.reshape(len(coords), 0)
    return (coords[:, None, :] != coords[None, :, :]).sum(axis=-1)


def neighbours(shape: Shape, vertex: Vertex) -> List[Vertex]:
    """Neighbours of ``vertex`` in the full Hamming graph, lexicographically."""
    result = []
    for j, k in enumerate(shape.factors):
        for value in range(k):
            if value != vertex[j]:
                result.append(vertex[:j] + (value,) + vertex[j + 1:])
    return sorted(result)


def delete_coordinate(vertex: Vertex, j: int) -> Vertex:
    """Drop the (1-based) coordinate ``j``."""
    return vertex[: j - 1] + vertex[j:]


def insert_coordinate(vertex: Vertex, position: int, value: int) -> Vertex:
    """Insert ``value`` before the 0-based ``position``."""
    return vertex[:position] + (value,) + vertex[position:]
