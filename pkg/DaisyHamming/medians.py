# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Pseudo-medians, quasi-medians and the (rooted) triangle condition."""

import logging
import math
from dataclasses import dataclass
from typing import Any, List, Set, Tuple

from .common import Verdict
from .errors import GraphError
from .hamming import Vertex, as_shape, check_vertex
from .metric import as_host

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class MedianTriple:
    """A triple ``(x, y, z)`` on the ``u``-, ``v``- and ``w``-side, with its size."""

    size: int
    x: Any
    y: Any
    z: Any


@dataclass(frozen=True)
class PseudoMedians:
    """All pseudo-medians of a triple; they share the minimal ``size`` (``inf`` if none)."""

    size: int
    triples: Tuple[MedianTriple, ...]


def _on_common_geodesic(host, a, b, s, t) -> bool:
    # Some shortest s,t-path passes through both a and b (in either order).
    dst = host.distance(s, t)
    dab = host.distance(a, b)
    return (
        host.distance(s, a) + dab + host.distance(b, t) == dst
        or host.distance(s, b) + dab + host.distance(a, t) == dst
    )


def _connected_triple(host, u, v, w):
    for a, b in ((u, v), (v, w), (u, w)):
        if host.distance(a, b) == math.inf:
            raise GraphError(f"{a!r} and {b!r} lie in different components")


def pseudo_medians(g, u, v, w) -> PseudoMedians:
    """Every pseudo-median of ``(u, v, w)`` of minimal size, by exhaustive search.

    Candidates are restricted to the interval intersections each role must lie
    in, then the common-geodesic and equal-distance conditions are checked
    literally.

    Args:
        g: host (``Shape``, ``networkx.Graph``, ``LabeledGraph`` or wrapped host).
        u, v, w: vertices of ``g``.

    Returns:
        ``PseudoMedians`` with the sorted triples of minimal size. Outside
        quasi-median graphs a triple may have none (e.g. three vertices of C5);
        the size is then ``math.inf`` and there are no triples.
    """
    host = as_host(g)
    u, v, w = host.check(u), host.check(v), host.check(w)
    _connected_triple(host, u, v, w)
    i_uv, i_vw, i_uw = host.interval(u, v), host.interval(v, w), host.interval(u, w)
    xs = sorted(i_uv & i_uw)
    ys = sorted(i_uv & i_vw)
    zs = sorted(i_vw & i_uw)

    best = math.inf
    found: Set[MedianTriple] = set()
    for x in xs:
        for y in ys:
            size = host.distance(x, y)
            if size > best or not _on_common_geodesic(host, x, y, u, v):
                continue
            for z in zs:
                if host.distance(y, z) != size or host.distance(x, z) != size:
                    continue
                if not _on_common_geodesic(host, y, z, v, w):
                    continue
                if not _on_common_geodesic(host, x, z, u, w):
                    continue
                if size < best:
                    best = size
                    found = set()
                found.add(MedianTriple(size, x, y, z))
    if not found:
        logger.debug("no pseudo-median for %r", (u, v, w))
        return PseudoMedians(math.inf, ())
    return PseudoMedians(int(best), tuple(sorted(found)))


def quasi_median_hamming(shape, u: Vertex, v: Vertex, w: Vertex) -> MedianTriple:
    """The quasi-median of a triple of a Hamming graph, coordinate by coordinate.

    Where ``u_j, v_j, w_j`` are pairwise distinct each vertex keeps its own
    value; elsewhere all three take the repeated value. The size is the number
    of all-distinct coordinates.
    """
    shape = as_shape(shape)
    u, v, w = (check_vertex(shape, t) for t in (u, v, w))
    x, y, z = [], [], []
    size = 0
    for a, b, c in zip(u, v, w):
        if a != b and b != c and a != c:
            size += 1
            x.append(a)
            y.append(b)
            z.append(c)
        else:
            p = a if a in (b, c) else b
            x.append(p)
            y.append(p)
            z.append(p)
    return MedianTriple(size, tuple(x), tuple(y), tuple(z))


def median_set(g, u, v, w) -> Set:
    """``I(u, v) & I(v, w) & I(u, w)``; non-empty iff a size-0 pseudo-median exists."""
    host = as_host(g)
    return host.interval(u, v) & host.interval(v, w) & host.interval(u, w)


def has_small_pseudo_median(g, u, v, r) -> bool:
    """True iff the triple ``(u, v, r)`` has a pseudo-median of size 0 or 1."""
    return pseudo_medians(g, u, v, r).size <= 1


def _triangle_witness(host, apex, v, w):
    level = host.distance(apex, v)
    for x in host.neighbours(v):
        if x != w and host.graph.has_edge(x, w) and host.distance(apex, x) == level - 1:
            return None
    return (apex, v, w)


def triangle_candidates(g, apexes=None) -> List[Tuple[Any, Any, Any]]:
    """Triples ``(u, v, w)`` with ``vw`` an edge and ``d(u, v) = d(u, w) >= 2``."""
    host = as_host(g)
    apexes = host.vertices if apexes is None else apexes
    edges = sorted(tuple(sorted(e)) for e in host.graph.edges())
    result = []
    for apex in apexes:
        for v, w in edges:
            dv = host.distance(apex, v)
            if dv >= 2 and dv != math.inf and dv == host.distance(apex, w):
                result.append((apex, v, w))
    return result


def triangle_condition(g) -> Verdict:
    """Check the triangle condition on every apex; witness ``(u, v, w)`` on failure."""
    host = as_host(g)
    for apex, v, w in triangle_candidates(host):
        witness = _triangle_witness(host, apex, v, w)
        if witness is not None:
            return Verdict(False, witness=witness, reason="no common neighbour closer to the apex")
    return Verdict(True)


def rooted_triangle_condition(g, r) -> Verdict:
    """The triangle condition with the apex fixed to the root; witness is the edge ``vw``."""
    host = as_host(g)
    r = host.check(r)
    for apex, v, w in triangle_candidates(host, apexes=[r]):
        if _triangle_witness(host, apex, v, w) is not None:
            return Verdict(False, witness=(v, w), reason="no common neighbour closer to the root")
    return Verdict(True)


def smallest_pair_sizes(g, r) -> List[Tuple[Any, Any, int]]:
    """Minimal pseudo-median size of ``(u, v, r)`` for every unordered pair ``u <= v``."""
    host = as_host(g)
    r = host.check(r)
    vertices = host.vertices
    result = []
    for a, u in enumerate(vertices):
        for v in vertices[a:]:
            result.append((u, v, pseudo_medians(host, u, v, r).size))
    return result
