# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Daisy graphs of rooted graphs.

The daisy graph ``G_r(X)`` of a host ``G`` rooted at ``r`` is the subgraph
induced by the union of the intervals ``I(r, v)`` over ``v`` in ``X``. Its
vertex sets are exactly the sets that contain ``r`` and are closed under
taking intervals towards ``r``, so they are the order ideals of the interval
order ``u <= v  iff  u in I(r, v)``.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .common import Verdict
from .config import get_settings
from .errors import BudgetExceededError, GraphError, ShapeError
from .hamming import Shape, Vertex, as_shape, hamming_distance
from .metric import HammingHost, LabeledGraph, as_host, is_isometric

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DaisyGraph:
    """A daisy graph together with its host and root.

    Args:
        host: wrapped host (``HammingHost`` or ``GraphHost``).
        root: the root vertex.
        vertices: the union of the intervals from the root to the generators.
        generators: canonical generator set, the maximal vertices.
        requested: generator set as supplied by the caller (provenance only).
    """

    host: object
    root: object
    vertices: FrozenSet
    generators: FrozenSet
    requested: FrozenSet = field(default_factory=frozenset)

    @property
    def shape(self) -> Shape:
        if self.host.kind != "hamming":
            raise GraphError("the host of this daisy graph is not a Hamming graph")
        return self.host.shape

    @property
    def sorted_vertices(self) -> List:
        return sorted(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, vertex):
        return vertex in self.vertices

    def to_labeled(self) -> LabeledGraph:
        return LabeledGraph(self.shape, self.vertices)

    def subgraph(self):
        """The induced subgraph as a ``networkx.Graph``."""
        if self.host.kind == "hamming":
            return self.to_labeled().graph
        return self.host.graph.subgraph(self.sorted_vertices).copy()


def _maximal(host, root, vertices) -> FrozenSet:
    # u lies strictly below some member iff a neighbour inside the set is one
    # step further from the root.
    result = set()
    for u in vertices:
        level = host.distance(root, u)
        if not any(
            w in vertices and host.distance(root, w) == level + 1
            for w in host.neighbours(u)
        ):
            result.add(u)
    return frozenset(result)


def build_daisy(host, root, generators: Iterable) -> DaisyGraph:
    """Build ``G_r(X)``.

    Args:
        host: ``Shape`` / factor sequence, ``networkx.Graph`` or wrapped host.
        root: root vertex ``r``.
        generators: non-empty collection ``X`` of host vertices.

    Returns:
        ``DaisyGraph`` whose ``generators`` are the maximal members and whose
        ``requested`` field keeps ``X``.
    """
    host = as_host(host)
    root = host.check(root)
    requested = frozenset(host.check(v) for v in generators)
    if not requested:
        raise GraphError("a daisy graph needs at least one generator")
    vertices = set()
    for v in sorted(requested):
        vertices |= host.interval(root, v)
    vertices = frozenset(vertices)
    return DaisyGraph(host, root, vertices, _maximal(host, root, vertices), requested)


def is_daisy(vertices: Iterable, host, root) -> Verdict:
    """Decide whether ``vertices`` is the vertex set of a daisy graph rooted at ``root``.

    Returns:
        ``Verdict``; the witness is the root when it is missing, otherwise the
        lexicographically first member whose interval to the root leaves the set.
    """
    host = as_host(host)
    root = host.check(root)
    members = {host.check(v) for v in vertices}
    if root not in members:
        return Verdict(False, witness=root, reason="root is not a member")
    for u in sorted(members):
        missing = host.interval(root, u) - members
        if missing:
            return Verdict(False, witness=u, reason=f"interval to root misses {sorted(missing)}")
    return Verdict(True)


def minimal_generators(d: DaisyGraph) -> FrozenSet:
    """The antichain of maximal vertices, the unique smallest generator set of ``d``."""
    return _maximal(d.host, d.root, d.vertices)


def from_vertices(host, root, vertices: Iterable) -> DaisyGraph:
    """Wrap an already downward-closed vertex set as a ``DaisyGraph``."""
    host = as_host(host)
    root = host.check(root)
    vertices = frozenset(host.check(v) for v in vertices)
    verdict = is_daisy(vertices, host, root)
    if not verdict:
        raise GraphError(f"not a daisy graph: {verdict.reason} (at {verdict.witness!r})")
    generators = _maximal(host, root, vertices)
    return DaisyGraph(host, root, vertices, generators, generators)


def enumerate_downsets(host, root, within: Iterable = None) -> Iterator[FrozenSet]:
    """Every downward-closed vertex set containing ``root``, exactly once.

    Vertices are decided one at a time in order of distance from the root,
    so a vertex can only join once every neighbour one step closer to the
    root has joined; that is the interval order's covering relation.

    Args:
        host: wrapped or raw host.
        root: the root.
        within: optional vertex pool; only sets inside the pool are produced.
    """
    host = as_host(host)
    root = host.check(root)
    pool = set(host.vertices if within is None else within)
    pool = {x for x in pool if host.distance(root, x) != math.inf}
    if root not in pool:
        return
    order = sorted(pool - {root}, key=lambda x: (host.distance(root, x), x))
    below = {
        x: [
            w
            for w in host.neighbours(x)
            if host.distance(root, w) == host.distance(root, x) - 1
        ]
        for x in order
    }
    chosen = {root}

    def extend(index):
        if index == len(order):
            yield frozenset(chosen)
            return
        x = order[index]
        if all(w in chosen for w in below[x]):
            chosen.add(x)
            yield from extend(index + 1)
            chosen.remove(x)
        yield from extend(index + 1)

    yield from extend(0)


def enumerate_daisy_graphs(host, root=None, budget: int = None) -> Iterator[DaisyGraph]:
    """Stream every daisy graph of ``host`` rooted at ``root``.

    Args:
        host: host graph; ``root`` defaults to ``0^n`` (or the smallest id).
        root: the root.
        budget: maximum host order, ``Settings.daisy_budget`` by default.
    """
    host = as_host(host)
    budget = get_settings().daisy_budget if budget is None else budget
    if host.order > budget:
        raise BudgetExceededError(
            f"host has {host.order} vertices, daisy enumeration budget is {budget}"
        )
    root = host.default_root if root is None else host.check(root)
    count = 0
    for vertices in enumerate_downsets(host, root):
        count += 1
        generators = _maximal(host, root, vertices)
        yield DaisyGraph(host, root, vertices, generators, generators)
    logger.debug("enumerated %d daisy graphs of %r", count, host)


def enumerate_daisy_sets_by_filtering(host, root=None) -> List[FrozenSet]:
    """Reference enumeration: filter every vertex subset containing the root."""
    host = as_host(host)
    root = host.default_root if root is None else host.check(root)
    others = [x for x in host.vertices if x != root]
    found = []
    for size in range(len(others) + 1):
        for subset in itertools.combinations(others, size):
            candidate = frozenset(subset) | {root}
            if is_daisy(candidate, host, root):
                found.append(candidate)
    return found


def is_isometric_daisy(d: DaisyGraph) -> Verdict:
    if d.host.kind == "hamming":
        return is_isometric(d.to_labeled())
    return is_isometric(d.vertices, host=d.host)


@dataclass(frozen=True)
class Relabeling:
    """Coordinate relabeling produced by ``canonical_minimal_host``.

    Args:
        source: shape the vertices came from.
        kept: 1-based coordinates that survive, in order.
        values: for each kept coordinate, the used values in increasing order;
            the value at position ``p`` becomes ``p``.
    """

    source: Shape
    kept: Tuple[int, ...]
    values: Tuple[Tuple[int, ...], ...]

    @property
    def target(self) -> Shape:
        return Shape(tuple(len(v) for v in self.values))

    def apply(self, vertex: Vertex) -> Vertex:
        return tuple(
            used.index(vertex[j - 1]) for j, used in zip(self.kept, self.values)
        )

    def invert(self, vertex: Vertex) -> Vertex:
        result = [0] * self.source.n
        for j, used, c in zip(self.kept, self.values, vertex):
            result[j - 1] = used[c]
        return tuple(result)

    @property
    def is_identity(self) -> bool:
        return self.kept == tuple(range(1, self.source.n + 1)) and all(
            used == tuple(range(k)) for used, k in zip(self.values, self.source)
        )


def canonical_minimal_host(d):
    """Move a daisy graph to the smallest Hamming host that still contains it.

    Coordinates that are zero on every vertex are dropped, and in each remaining
    coordinate the used values are renumbered ``0, 1, ...`` keeping their order
    (zero is always used, so it stays zero).

    Args:
        d: ``DaisyGraph`` over a Hamming host rooted at ``0^n``, or a ``LabeledGraph``.

    Returns:
        tuple ``(graph, relabeling)`` where ``graph`` has the type of ``d``.
    """
    if isinstance(d, LabeledGraph):
        shape, vertices = d.shape, d.vertices
    else:
        shape, vertices = d.shape, d.vertices
        if d.root != shape.root:
            raise ShapeError("canonicalisation needs the root 0^n")
    kept, values = [], []
    for j in range(1, shape.n + 1):
        used = tuple(sorted({v[j - 1] for v in vertices}))
        if used != (0,):
            kept.append(j)
            values.append(used)
    relabeling = Relabeling(shape, tuple(kept), tuple(values))
    mapped = frozenset(relabeling.apply(v) for v in vertices)
    if isinstance(d, LabeledGraph):
        return LabeledGraph(relabeling.target, mapped), relabeling
    target = HammingHost(relabeling.target)
    generators = frozenset(relabeling.apply(v) for v in d.generators)
    requested = frozenset(relabeling.apply(v) for v in d.requested)
    return DaisyGraph(target, target.default_root, mapped, generators, requested), relabeling


def is_minimal_host(g: LabeledGraph) -> Verdict:
    """Every coordinate value of the shape is used by some vertex; witness ``(j, i)``."""
    for j, k in enumerate(g.shape.factors, start=1):
        used = {v[j - 1] for v in g.vertices}
        for i in range(k):
            if i not in used:
                return Verdict(False, witness=(j, i), reason=f"value {i} unused in coordinate {j}")
    return Verdict(True)


def daisy_cube_of_singleton(d: DaisyGraph) -> Tuple[int, ...]:
    """The 0/1 word ``y`` with ``y_i = min(x_i, 1)`` for the single generator ``x``.

    The daisy graph is isomorphic to the daisy cube ``Q_n({y})``.
    """
    generators = minimal_generators(d)
    if len(generators) != 1:
        raise GraphError(f"expected one generator, found {len(generators)}")
    (x,) = generators
    return tuple(min(c, 1) for c in x)


def _below(vertex: Sequence[int], top: Sequence[int]) -> bool:
    return all(c == 0 or c == t for c, t in zip(vertex, top))


def daisy_pair_geodesic(shape, x: Vertex, y: Vertex, u: Vertex, v: Vertex) -> List[Vertex]:
    """Shortest ``u, v``-path inside ``H_{0^n}({x, y})`` as built constructively.

    Two vertices of the same interval are joined by fixing the differing
    coordinates left to right. Otherwise the path first zeroes the coordinates
    where ``v`` is zero, then switches the (at most one) coordinate where both
    are non-zero, then fills in ``v``'s values where ``u`` was zero.
    When the triple ``(x, y, 0^n)`` has more than one all-distinct coordinate
    the path still has length ``d(u, v)`` but may leave the daisy graph.

    Returns:
        list of vertices from ``u`` to ``v``.
    """
    shape = as_shape(shape)
    x, y, u, v = (tuple(w) for w in (x, y, u, v))
    current = list(u)
    path = [u]

    def step(j, value):
        current[j] = value
        path.append(tuple(current))

    if (_below(u, x) and _below(v, x)) or (_below(u, y) and _below(v, y)):
        for j in range(shape.n):
            if current[j] != v[j]:
                step(j, v[j])
        return path

    differing = [j for j in range(shape.n) if u[j] != v[j]]
    for j in differing:
        if v[j] == 0:
            step(j, 0)
    for j in differing:
        if u[j] != 0 and v[j] != 0:
            step(j, v[j])
    for j in differing:
        if u[j] == 0:
            step(j, v[j])
    return path


def is_path_in(path: Sequence[Vertex], vertices) -> Verdict:
    """Check that ``path`` walks through ``vertices`` along Hamming edges."""
    for w in path:
        if w not in vertices:
            return Verdict(False, witness=w, reason="path leaves the vertex set")
    for a, b in zip(path, path[1:]):
        if hamming_distance(a, b) != 1:
            return Verdict(False, witness=(a, b), reason="consecutive vertices not adjacent")
    return Verdict(True)
