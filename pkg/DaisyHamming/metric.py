# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Finite simple graphs, labeled Hamming subgraphs and their metric.

Two kinds of graphs are handled. A *generic* graph is a ``networkx.Graph``
with opaque, mutually comparable vertex ids. A ``LabeledGraph`` is the
subgraph of a Hamming graph induced by an explicit vertex set; its adjacency
is Hamming distance one inside the set.

Hosts (the graphs daisy graphs live in) are wrapped by ``HammingHost`` or
``GraphHost`` so the rest of the package can ask for distances, intervals
and neighbours without caring which kind it has.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Set

import networkx as nx
import numpy as np

from .common import Verdict, edge_key
from .errors import GraphError, ShapeError
from .hamming import (
    Shape,
    Vertex,
    as_shape,
    check_vertex,
    enumerate_vertices,
    hamming_distance,
    hamming_interval,
    hamming_matrix,
    neighbours,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledGraph:
    """Subgraph of the Hamming graph ``shape`` induced by ``vertices``.

    Args:
        shape: the host shape.
        vertices: the induced vertex set; every member is validated.
    """

    shape: Shape
    vertices: FrozenSet[Vertex]

    def __post_init__(self):
        shape = as_shape(self.shape)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(
            self, "vertices", frozenset(check_vertex(shape, v) for v in self.vertices)
        )

    @property
    def root(self) -> Vertex:
        return self.shape.root

    @cached_property
    def sorted_vertices(self) -> List[Vertex]:
        return sorted(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, vertex):
        return tuple(vertex) in self.vertices

    def __iter__(self):
        return iter(self.sorted_vertices)

    def neighbours(self, vertex: Vertex) -> List[Vertex]:
        return [w for w in neighbours(self.shape, vertex) if w in self.vertices]

    @cached_property
    def graph(self) -> nx.Graph:
        """The induced graph as a ``networkx.Graph`` (vertices are tuples)."""
        g = nx.Graph()
        g.add_nodes_from(self.sorted_vertices)
        for u in self.sorted_vertices:
            for w in self.neighbours(u):
                if u < w:
                    g.add_edge(u, w)
        return g

    def to_networkx(self) -> nx.Graph:
        return self.graph.copy()

    def edges(self) -> List[tuple]:
        return sorted(edge_key(u, v) for u, v in self.graph.edges())


class HammingHost:
    """A Hamming graph used as a host; the metric is computed from coordinates."""

    kind = "hamming"

    def __init__(self, shape):
        self.shape = as_shape(shape)

    @property
    def default_root(self) -> Vertex:
        return self.shape.root

    @cached_property
    def vertices(self) -> List[Vertex]:
        return enumerate_vertices(self.shape)

    @property
    def order(self) -> int:
        return self.shape.order

    def __contains__(self, vertex):
        try:
            check_vertex(self.shape, vertex)
        except (ShapeError, TypeError):
            return False
        return True

    def check(self, vertex) -> Vertex:
        return check_vertex(self.shape, vertex)

    def distance(self, u, v) -> int:
        return hamming_distance(u, v, self.shape)

    def interval(self, u, v) -> Set[Vertex]:
        return hamming_interval(u, v, self.shape)

    def neighbours(self, vertex) -> List[Vertex]:
        return neighbours(self.shape, vertex)

    @cached_property
    def graph(self) -> nx.Graph:
        return LabeledGraph(self.shape, self.vertices).graph

    def __repr__(self):
        return f"HammingHost({self.shape})"


class GraphHost:
    """A connected generic graph used as a host; distances come from BFS."""

    kind = "graph"

    def __init__(self, graph: nx.Graph):
        check_simple(graph)
        self.graph = graph
        self._distances = dict(nx.all_pairs_shortest_path_length(graph))

    @property
    def default_root(self):
        return self.vertices[0]

    @cached_property
    def vertices(self) -> List:
        return sorted(self.graph.nodes())

    @property
    def order(self) -> int:
        return self.graph.number_of_nodes()

    def __contains__(self, vertex):
        return vertex in self.graph

    def check(self, vertex):
        if vertex not in self.graph:
            raise GraphError(f"vertex {vertex!r} is not in the host graph")
        return vertex

    def distance(self, u, v):
        return self._distances[u].get(v, math.inf)

    def interval(self, u, v) -> Set:
        duv = self.distance(u, v)
        if duv == math.inf:
            raise GraphError(f"{u!r} and {v!r} lie in different components")
        return {
            x for x in self.vertices if self.distance(u, x) + self.distance(x, v) == duv
        }

    def neighbours(self, vertex) -> List:
        return sorted(self.graph.neighbors(vertex))

    def __repr__(self):
        return f"GraphHost({self.graph.number_of_nodes()} vertices)"


def as_host(host):
    """Wrap a ``Shape`` / factor sequence, ``networkx.Graph`` or ``LabeledGraph``."""
    if isinstance(host, (HammingHost, GraphHost)):
        return host
    if isinstance(host, LabeledGraph):
        return GraphHost(host.graph)
    if isinstance(host, nx.Graph):
        return GraphHost(host)
    return HammingHost(host)


def check_simple(graph: nx.Graph):
    if graph.is_directed() or graph.is_multigraph():
        raise GraphError("only undirected simple graphs are supported")
    loops = list(nx.selfloop_edges(graph))
    if loops:
        raise GraphError(f"self-loop at {loops[0][0]!r}")


def graph_of(g) -> nx.Graph:
    if isinstance(g, LabeledGraph):
        return g.graph
    if isinstance(g, (HammingHost, GraphHost)):
        return g.graph
    if isinstance(g, nx.Graph):
        return g
    raise TypeError(f"expected a graph, got {type(g).__name__}")


def bfs_distances(g, source) -> Dict:
    """Shortest-path distances from ``source`` measured inside ``g``.

    Args:
        g: ``networkx.Graph`` or ``LabeledGraph``.
        source: a vertex of ``g``.

    Returns:
        dict mapping every vertex of ``g`` to its distance, ``math.inf`` when
        unreachable.
    """
    graph = graph_of(g)
    if source not in graph:
        raise GraphError(f"source {source!r} is not a vertex of the graph")
    reached = nx.single_source_shortest_path_length(graph, source)
    return {x: reached.get(x, math.inf) for x in graph.nodes()}


def graph_interval(g, u, v) -> Set:
    """``I_g(u, v)``: vertices ``x`` with ``d(u, x) + d(x, v) = d(u, v)`` inside ``g``."""
    from_u = bfs_distances(g, u)
    if v not in from_u:
        raise GraphError(f"vertex {v!r} is not a vertex of the graph")
    if from_u[v] == math.inf:
        raise GraphError(f"{u!r} and {v!r} lie in different components")
    from_v = bfs_distances(g, v)
    return {x for x in from_u if from_u[x] + from_v[x] == from_u[v]}


def distance_matrix(g, order: List) -> np.ndarray:
    """BFS distances of ``g`` between the vertices of ``order``; ``inf`` if unreachable."""
    graph = graph_of(g)
    index = {x: i for i, x in enumerate(order)}
    matrix = np.full((len(order), len(order)), np.inf)
    for source, reached in nx.all_pairs_shortest_path_length(graph):
        if source not in index:
            continue
        row = index[source]
        for target, d in reached.items():
            if target in index:
                matrix[row, index[target]] = d
    return matrix


def is_isometric(sub, host=None) -> Verdict:
    """Decide whether a subgraph keeps the distances of its host.

    Args:
        sub: a ``LabeledGraph`` (host is its Hamming graph) or, with ``host``
            given, any collection of host vertices whose induced subgraph is
            tested.
        host: optional host (``Shape``, ``networkx.Graph`` or wrapped host).

    Returns:
        ``Verdict``; on failure the witness is the lexicographically first
        pair ``(u, v)`` whose subgraph distance differs from the host distance
        (``inf`` subgraph distance for a disconnected subgraph).
    """
    if host is None:
        if not isinstance(sub, LabeledGraph):
            raise TypeError("a host is required unless sub is a LabeledGraph")
        order = sub.sorted_vertices
        if not order:
            raise GraphError("isometry of an empty subgraph is undefined")
        expected = hamming_matrix(order)
        actual = distance_matrix(sub.graph, order)
    else:
        host = as_host(host)
        order = sorted({host.check(v) for v in sub})
        if not order:
            raise GraphError("isometry of an empty subgraph is undefined")
        expected = np.array([[host.distance(u, v) for v in order] for u in order])
        actual = distance_matrix(host.graph.subgraph(order), order)

    mismatch = np.triu(actual != expected, k=1)
    if not mismatch.any():
        return Verdict(True)
    i, j = np.argwhere(mismatch)[0]
    u, v = order[i], order[j]
    reason = f"subgraph distance {actual[i, j]} != host distance {expected[i, j]}"
    logger.debug("non-isometric pair %r, %r: %s", u, v, reason)
    return Verdict(False, witness=(u, v), reason=reason)


def _check_edge(graph, edge):
    u, v = edge
    if not graph.has_edge(u, v):
        raise GraphError(f"{edge!r} is not an edge of the graph")


def edges_share_clique(g, e1, e2) -> bool:
    """True iff some clique of ``g`` contains both edges.

    The endpoints of two edges number at most four, so this holds exactly when
    they are pairwise adjacent.
    """
    graph = graph_of(g)
    _check_edge(graph, e1)
    _check_edge(graph, e2)
    ends = sorted(set(e1) | set(e2))
    return all(graph.has_edge(a, b) for a, b in itertools.combinations(ends, 2))


def is_connected(g) -> bool:
    graph = graph_of(g)
    return graph.number_of_nodes() > 0 and nx.is_connected(graph)


def cycle_graph(labels: Iterable) -> nx.Graph:
    """Cycle through ``labels`` in the given order (C6 as ``u, x1, x2, r, y1, y2``)."""
    labels = list(labels)
    graph = nx.Graph()
    graph.add_nodes_from(labels)
    graph.add_edges_from(zip(labels, labels[1:] + labels[:1]))
    return graph
