# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Djokovic ``W``-sets, the relations ``~`` and ``Delta`` and the coordinate slices.

All distances are measured inside the graph under study, never in a host.
Edges are unordered and represented as sorted pairs.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from .common import Verdict, edge_key
from .errors import GraphError, ShapeError, TheoremViolation
from .hamming import unit_vertex
from .metric import LabeledGraph, edges_share_clique, graph_of

logger = logging.getLogger(__name__)

Edge = Tuple


@dataclass(frozen=True)
class EdgeClass:
    """A class of edges under ``~`` (``kind="tilde"``) or ``Delta`` (``kind="delta"``).

    ``anchor`` is an edge of the class incident to the root, when a root was
    supplied and such an edge exists.
    """

    edges: FrozenSet[Edge]
    kind: str
    anchor: Optional[Edge] = None

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge):
        return edge_key(*edge) in self.edges

    @property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class CoordinateSlice:
    """The sets ``W_i^j``, ``U_i^j``, ``U_{0i}^j`` and ``U_0^j`` of coordinate ``j``."""

    j: int
    levels: Dict[int, FrozenSet]
    contacts: Dict[int, FrozenSet]
    zero_contacts: Dict[int, FrozenSet]
    zero_contact_union: FrozenSet


class _EdgeMetric:
    """Distances of one connected graph plus memoised ``W``-sets."""

    def __init__(self, g):
        self.graph = graph_of(g)
        if self.graph.number_of_nodes() == 0 or not nx.is_connected(self.graph):
            raise GraphError("relations are only defined on connected graphs")
        self.distance = dict(nx.all_pairs_shortest_path_length(self.graph))
        self._w = {}

    def check_edge(self, edge) -> Edge:
        u, v = edge
        if not self.graph.has_edge(u, v):
            raise GraphError(f"{tuple(edge)!r} is not an edge of the graph")
        return u, v

    def w_set(self, u, v) -> FrozenSet:
        key = (u, v)
        if key not in self._w:
            du, dv = self.distance[u], self.distance[v]
            self._w[key] = frozenset(x for x in self.graph if du[x] < dv[x])
        return self._w[key]

    def tilde(self, e1, e2) -> bool:
        u, v = e1
        x, y = e2
        w_uv, w_vu = self.w_set(u, v), self.w_set(v, u)
        return (x in w_uv and y in w_vu) or (y in w_uv and x in w_vu)

    def edges(self) -> List[Edge]:
        return sorted(edge_key(u, v) for u, v in self.graph.edges())


def w_set(g, u, v) -> FrozenSet:
    """``W_uv``: vertices strictly closer to ``u`` than to ``v``."""
    metric = _EdgeMetric(g)
    metric.check_edge((u, v))
    return metric.w_set(u, v)


def tilde_related(g, e1, e2) -> bool:
    """Djokovic's relation on unordered edges.

    ``uv ~ xy`` when one endpoint of ``xy`` is in ``W_uv`` and the other in
    ``W_vu``; reflexive and symmetric.
    """
    metric = _EdgeMetric(g)
    return metric.tilde(metric.check_edge(e1), metric.check_edge(e2))


def _tilde_neighbourhood(metric, edge) -> List[Edge]:
    return [f for f in metric.edges() if metric.tilde(edge, f)]


def delta_related(g, e1, e2) -> bool:
    """The ``Delta`` predicate evaluated literally.

    ``e1 Delta e2`` when ``e1 ~ e2`` or some clique holds edges ``e, f`` with
    ``e2 ~ e`` and ``e1 ~ f``.
    """
    metric = _EdgeMetric(g)
    e1, e2 = metric.check_edge(e1), metric.check_edge(e2)
    if metric.tilde(e1, e2):
        return True
    near1 = _tilde_neighbourhood(metric, e1)
    near2 = _tilde_neighbourhood(metric, e2)
    return any(edges_share_clique(metric.graph, e, f) for e in near2 for f in near1)


def tilde_classes(g) -> List[EdgeClass]:
    """The distinct sets ``F_uv`` (edges related to ``uv``); they may overlap."""
    metric = _EdgeMetric(g)
    seen = set()
    for edge in metric.edges():
        seen.add(frozenset(_tilde_neighbourhood(metric, edge)))
    return [EdgeClass(edges, "tilde") for edges in sorted(seen, key=sorted)]


def _anchor_key(edge, root):
    other = edge[1] if edge[0] == root else edge[0]
    if isinstance(other, tuple):
        j = next((k for k, c in enumerate(other) if c != 0), len(other))
        return (j, other[j] if j < len(other) else 0)
    return (0, other)


def _anchor(edges, root):
    if root is None:
        return None
    incident = [e for e in edges if root in e]
    if not incident:
        return None
    return min(incident, key=lambda e: _anchor_key(e, root))


def _classes_from_components(components, root) -> List[EdgeClass]:
    classes = []
    for edges in components:
        edges = frozenset(edges)
        classes.append(EdgeClass(edges, "delta", _anchor(edges, root)))

    def order(c):
        if c.anchor is not None:
            return (0, _anchor_key(c.anchor, root), min(c.edges))
        return (1, (0, 0), min(c.edges))

    return sorted(classes, key=order)


def delta_classes(g, root=None) -> List[EdgeClass]:
    """Partition the edges into ``Delta``-classes.

    ``~``-related edges are merged, then the ``~``-classes of any two edges of
    a common triangle are merged, and the transitive closure of both is taken
    by a union-find over the edges.

    Args:
        g: connected ``networkx.Graph`` or ``LabeledGraph``.
        root: optional root; each class then records a root-incident anchor.

    Returns:
        list of ``EdgeClass``; root-anchored classes first, by anchor.
    """
    metric = _EdgeMetric(g)
    edges = metric.edges()
    parent = {e: e for e in edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for a, b in itertools.combinations(edges, 2):
        if metric.tilde(a, b):
            union(a, b)
    for u, v in edges:
        for c in nx.common_neighbors(metric.graph, u, v):
            union((u, v), edge_key(u, c))

    components = {}
    for e in edges:
        components.setdefault(find(e), []).append(e)
    classes = _classes_from_components(components.values(), root)
    logger.debug("%d edges fall into %d delta classes", len(edges), len(classes))
    return classes


def delta_classes_by_pairs(g, root=None) -> List[EdgeClass]:
    """Transitive closure of the pairwise ``Delta`` predicate (reference computation)."""
    graph = graph_of(g)
    edges = sorted(edge_key(u, v) for u, v in graph.edges())
    closure = nx.Graph()
    closure.add_nodes_from(edges)
    for a, b in itertools.combinations(edges, 2):
        if delta_related(graph, a, b):
            closure.add_edge(a, b)
    return _classes_from_components(nx.connected_components(closure), root)


def _check_coordinate(g: LabeledGraph, j: int):
    if not isinstance(g, LabeledGraph):
        raise TypeError("coordinate slices need a LabeledGraph")
    if g.shape.n == 0:
        raise ShapeError("the one-vertex graph has no coordinates")
    if not 1 <= j <= g.shape.n:
        raise ShapeError(f"coordinate index {j} outside [1, {g.shape.n}]")


def coordinate_slice(g: LabeledGraph, j: int) -> CoordinateSlice:
    """The level sets of coordinate ``j`` and their contact sets, computed literally."""
    _check_coordinate(g, j)
    k = g.shape[j - 1]
    levels = {i: frozenset(v for v in g.vertices if v[j - 1] == i) for i in range(k)}
    zero = levels[0]

    def touching(source, target):
        return frozenset(x for x in source if any(y in target for y in g.neighbours(x)))

    contacts = {i: touching(levels[i], zero) for i in range(k)}
    zero_contacts = {i: touching(zero, levels[i]) for i in range(1, k)}
    union = frozenset().union(*zero_contacts.values()) if zero_contacts else frozenset()
    return CoordinateSlice(j, levels, contacts, zero_contacts, union)


def verify_w_equals_wuv(g: LabeledGraph, j: int, i: int) -> bool:
    """Compare ``W_i^j`` with the ``W``-set of the root edge in coordinate ``j``.

    For ``i > 0`` the edge is ``e^j_i 0^n``; for ``i = 0`` it is ``0^n e^j_1``.
    """
    _check_coordinate(g, j)
    level = frozenset(v for v in g.vertices if v[j - 1] == i)
    if not level:
        raise GraphError(f"W_{i}^{j} is empty")
    root = g.root
    if i == 0:
        u, v = root, unit_vertex(g.shape, j, 1)
    else:
        u, v = unit_vertex(g.shape, j, i), root
    if u not in g or v not in g:
        return False
    return level == w_set(g, u, v)


def is_peripheral_class(g: LabeledGraph, j: int) -> Verdict:
    """Every non-zero level of coordinate ``j`` touches level zero (``U_i^j = W_i^j``).

    The witness is the first vertex without a neighbour in ``W_0^j``.
    """
    s = coordinate_slice(g, j)
    for i in range(1, g.shape[j - 1]):
        outside = sorted(s.levels[i] - s.contacts[i])
        if outside:
            return Verdict(False, witness=outside[0], reason=f"W_{i}^{j} != U_{i}^{j}")
    return Verdict(True)


def delta_class_edges_between_contacts(g: LabeledGraph, j: int) -> FrozenSet[Edge]:
    """Edges between ``U_k^j`` and ``U_l^j`` over ``0 <= k < l`` (with ``U_0^j`` the union)."""
    s = coordinate_slice(g, j)
    side = {x: 0 for x in s.zero_contact_union}
    for i in range(1, g.shape[j - 1]):
        side.update({x: i for x in s.contacts[i]})
    return frozenset(
        (u, v)
        for u, v in g.edges()
        if u in side and v in side and side[u] != side[v]
    )


def anchored_edge(g: LabeledGraph, delta_class: EdgeClass) -> Edge:
    """The edge ``0^n e^j_i`` of the class with the smallest ``(j, i)``.

    Raises:
        TheoremViolation: the class has no edge at the root.
    """
    root = g.root
    anchor = _anchor(delta_class.edges, root)
    if anchor is None:
        raise TheoremViolation(
            "delta class has no edge incident to the root", witness=min(delta_class.edges)
        )
    return anchor
