# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Expansion of a graph along a cover family, and its inverse, contraction.

An expansion replaces every vertex ``x`` of a base graph by a clique with one
vertex ``(x, i)`` per cover set ``W_i`` containing ``x``. On labeled daisy
graphs the new clique index becomes a new coordinate (daisy peripheral
expansion) and contraction of a Delta-class is deletion of that coordinate.
A sequence of contractions takes every isometric daisy graph of a minimal
host down to K1; replaying the recorded covers from K1 rebuilds it.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import CoverError, GraphError, ShapeError, TheoremViolation
from .daisy import DaisyGraph, enumerate_downsets, from_vertices, is_daisy, is_minimal_host
from .hamming import Shape, delete_coordinate, insert_coordinate
from .metric import LabeledGraph, as_host, graph_of, is_isometric

logger = logging.getLogger(__name__)

CLAUSES = ("cover-1", "cover-2", "cover-3", "cover-4")


@dataclass(frozen=True)
class CoverFamily:
    """Cover sets ``W_0, W_1, ...`` of a base graph with the outcome of each clause.

    ``validity`` maps ``cover-1`` (pairwise intersecting), ``cover-2`` (covering),
    ``cover-3`` (no edges between the differences) and ``cover-4`` (single sets
    and pairwise unions isometric) to booleans; ``witnesses`` holds a witness
    for every clause that failed. Set positions in witnesses are 0-based.
    """

    sets: Tuple[FrozenSet, ...]
    validity: Dict[str, bool]
    witnesses: Dict[str, Any] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.validity.values())

    def first_violation(self) -> Optional[Tuple[str, Any]]:
        for clause in CLAUSES:
            if not self.validity[clause]:
                return clause, self.witnesses.get(clause)
        return None

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __getitem__(self, index):
        return self.sets[index]

    @property
    def is_peripheral(self) -> bool:
        """Some cover set is the whole vertex set."""
        union = frozenset().union(*self.sets)
        return any(s == union for s in self.sets)


@dataclass(frozen=True)
class ExpansionRecord:
    """Result of ``expand``.

    Args:
        base: the base graph.
        family: the (valid) cover family used.
        graph: the expanded graph; vertices are pairs ``(x, i)``.
        provenance: base vertex to the tuple of expanded vertices it became.
    """

    base: nx.Graph
    family: CoverFamily
    graph: nx.Graph
    provenance: Dict[Any, Tuple]


def _pair_witness(sets, test):
    for (a, wa), (b, wb) in itertools.combinations(enumerate(sets), 2):
        found = test(wa, wb)
        if found is not None:
            return (a, b) + found
    return None


def validate_cover(base, sets: Iterable[Iterable]) -> CoverFamily:
    """Evaluate the four cover clauses of a family of vertex sets.

    Args:
        base: ``networkx.Graph`` or ``LabeledGraph``.
        sets: vertex sets of the base graph.

    Returns:
        ``CoverFamily`` with per-clause flags and witnesses.
    """
    graph = graph_of(base)
    sets = tuple(frozenset(s) for s in sets)
    vertices = frozenset(graph.nodes())
    for position, s in enumerate(sets):
        stray = sorted(s - vertices)
        if stray:
            raise GraphError(f"cover set {position} holds {stray[0]!r}, not a vertex of the base")

    validity, witnesses = {}, {}

    disjoint = _pair_witness(sets, lambda a, b: None if a & b else ())
    validity["cover-1"] = disjoint is None
    if disjoint is not None:
        witnesses["cover-1"] = disjoint

    missing = sorted(vertices - frozenset().union(*sets)) if sets else sorted(vertices)
    validity["cover-2"] = bool(sets) and not missing
    if not validity["cover-2"]:
        witnesses["cover-2"] = missing[0] if missing else None

    def crossing(a, b):
        only_a, only_b = a - b, b - a
        for x in sorted(only_a):
            for y in sorted(graph.neighbors(x)):
                if y in only_b:
                    return ((x, y),)
        return None

    crossed = _pair_witness(sets, crossing)
    validity["cover-3"] = crossed is None
    if crossed is not None:
        witnesses["cover-3"] = crossed

    host = as_host(graph)
    candidates = [((a,), s) for a, s in enumerate(sets)]
    candidates += [((a, b), sets[a] | sets[b]) for a, b in itertools.combinations(range(len(sets)), 2)]
    validity["cover-4"] = True
    for positions, s in candidates:
        if not s:
            continue
        verdict = is_isometric(s, host=host)
        if not verdict:
            validity["cover-4"] = False
            witnesses["cover-4"] = positions + (verdict.witness,)
            break
    return CoverFamily(sets, validity, witnesses)


def _as_family(base, family) -> CoverFamily:
    if not isinstance(family, CoverFamily):
        family = validate_cover(base, family)
    violation = family.first_violation()
    if violation is not None:
        clause, witness = violation
        raise CoverError(clause, f"cover family violates {clause} at {witness!r}", witness)
    return family


def expand(base, family) -> ExpansionRecord:
    """Expand ``base`` relative to a valid cover family.

    Every ``x`` in ``W_i`` yields the vertex ``(x, i)``. The copies of one base
    vertex form a clique, and ``(x, i)(y, i)`` is an edge for every base edge
    ``xy`` inside ``W_i``.

    Raises:
        CoverError: the family fails a clause; ``clause`` names it.
    """
    graph = graph_of(base)
    family = _as_family(graph, family)
    expanded = nx.Graph()
    provenance = {}
    for x in sorted(graph.nodes()):
        copies = tuple((x, i) for i, s in enumerate(family.sets) if x in s)
        provenance[x] = copies
        expanded.add_nodes_from(copies)
        expanded.add_edges_from(itertools.combinations(copies, 2))
    for i, s in enumerate(family.sets):
        for x, y in graph.edges():
            if x in s and y in s:
                expanded.add_edge((x, i), (y, i))
    logger.debug(
        "expanded %d vertices into %d along %d cover sets",
        graph.number_of_nodes(), expanded.number_of_nodes(), len(family),
    )
    return ExpansionRecord(graph, family, expanded, provenance)


def _as_labeled(g) -> LabeledGraph:
    if isinstance(g, DaisyGraph):
        if g.root != g.shape.root:
            raise ShapeError("labeled daisy graphs must be rooted at 0^n")
        return g.to_labeled()
    if isinstance(g, LabeledGraph):
        return g
    raise TypeError(f"expected a LabeledGraph or DaisyGraph, got {type(g).__name__}")


def daisy_peripheral_expand(g, covers: Sequence[Iterable], position: int = 0) -> DaisyGraph:
    """Daisy peripheral expansion of an isometric daisy graph.

    Cover ``W_i`` is copied with value ``i`` in a new coordinate inserted before
    the 0-based ``position``; ``W_0`` must be the whole vertex set so the root
    keeps value 0.

    Args:
        g: isometric daisy graph (``LabeledGraph`` or ``DaisyGraph``) rooted at 0^n.
        covers: ``W_0, W_1, ..., W_k`` with ``k >= 1``.
        position: where the new coordinate goes, ``0 <= position <= n``.

    Returns:
        ``DaisyGraph`` over the shape with a factor of size ``k + 1`` inserted.

    Raises:
        CoverError: naming the failed clause, one of ``size``, ``daisy-base``,
            ``isometric-base``, ``subset``, ``peripheral``, ``daisy`` or a
            ``cover-*`` clause.
        TheoremViolation: the result is not an isometric daisy graph.
    """
    g = _as_labeled(g)
    covers = [frozenset(tuple(x) for x in w) for w in covers]
    if not 0 <= position <= g.shape.n:
        raise ShapeError(f"insert position {position} outside [0, {g.shape.n}]")
    if len(covers) < 2:
        raise CoverError("size", "a daisy peripheral expansion needs W_0 and at least W_1")
    base_daisy = is_daisy(g.vertices, g.shape, g.root)
    if not base_daisy:
        raise CoverError("daisy-base", "the base is not a daisy graph", base_daisy.witness)
    base_isometric = is_isometric(g)
    if not base_isometric:
        raise CoverError("isometric-base", "the base is not isometric", base_isometric.witness)
    for i, w in enumerate(covers):
        if not w <= g.vertices:
            raise CoverError("subset", f"W_{i} leaves the base", (i, sorted(w - g.vertices)[0]))
    if covers[0] != g.vertices:
        raise CoverError("peripheral", "W_0 must be the whole vertex set", 0)
    for i, w in enumerate(covers):
        verdict = is_daisy(w, g.shape, g.root)
        if not verdict:
            raise CoverError("daisy", f"W_{i} does not induce a daisy graph", (i, verdict.witness))
    _as_family(g, covers)

    shape = g.shape.insert(position, len(covers))
    vertices = frozenset(
        insert_coordinate(x, position, i) for i, w in enumerate(covers) for x in w
    )
    result = LabeledGraph(shape, vertices)
    for check in (is_daisy(vertices, shape, shape.root), is_isometric(result)):
        if not check:
            raise TheoremViolation(
                f"daisy peripheral expansion left the isometric daisy graphs: {check.reason}",
                witness=check.witness,
            )
    return from_vertices(shape, shape.root, vertices)


@dataclass(frozen=True)
class ContractionResult:
    """Contraction of the class of coordinate ``j`` (1-based) with factor ``k``.

    ``covers`` are the projections ``X_0, ..., X_{k-1}`` of the levels of
    coordinate ``j``; expanding ``graph`` along them gives back the input.
    """

    graph: LabeledGraph
    covers: Tuple[FrozenSet, ...]
    j: int
    k: int

    @property
    def family(self) -> CoverFamily:
        return validate_cover(self.graph, self.covers)

    def restore(self, vertex) -> tuple:
        """Label of an expanded vertex ``(x, i)`` in the uncontracted graph."""
        x, i = vertex
        return insert_coordinate(x, self.j - 1, i)


def contract(g, j: int) -> ContractionResult:
    """Contract the Delta-class of coordinate ``j`` by deleting the coordinate.

    Raises:
        ShapeError: ``j`` outside ``[1, n]``.
    """
    g = _as_labeled(g)
    if not 1 <= j <= g.shape.n:
        raise ShapeError(f"coordinate index {j} outside [1, {g.shape.n}]")
    k = g.shape[j - 1]
    graph = LabeledGraph(g.shape.drop(j), {delete_coordinate(x, j) for x in g.vertices})
    covers = tuple(
        frozenset(delete_coordinate(x, j) for x in g.vertices if x[j - 1] == i)
        for i in range(k)
    )
    return ContractionResult(graph, covers, j, k)


def relabel_expansion(record: ExpansionRecord, contraction: ContractionResult) -> nx.Graph:
    """The expanded graph with ``(x, i)`` renamed to its label before contraction."""
    mapping = {v: contraction.restore(v) for v in record.graph.nodes()}
    return nx.relabel_nodes(record.graph, mapping)


def contract_generic(graph, edges: Iterable) -> nx.Graph:
    """Contract every clique spanned by ``edges`` to one vertex.

    Works on any graph: the components of the edge set are collapsed, each to
    its smallest member.
    """
    graph = graph_of(graph)
    spanned = nx.Graph()
    spanned.add_nodes_from(graph.nodes())
    spanned.add_edges_from(edges)
    blocks = [frozenset(c) for c in nx.connected_components(spanned)]
    quotient = nx.quotient_graph(graph, blocks, relabel=False)
    return nx.relabel_nodes(quotient, {block: min(block) for block in quotient.nodes()})


@dataclass(frozen=True)
class DecompositionStep:
    """One recorded contraction: coordinate ``j`` of a graph over ``shape``."""

    j: int
    shape: Shape
    covers: Tuple[FrozenSet, ...]


def _check_isometric_daisy(g: LabeledGraph, error):
    for verdict in (is_daisy(g.vertices, g.shape, g.root), is_isometric(g), is_minimal_host(g)):
        if not verdict:
            raise error(f"{verdict.reason} at {verdict.witness!r}", verdict.witness)


def decompose_to_k1(g, verify: bool = True) -> List[DecompositionStep]:
    """Contract coordinates ``n, n-1, ..., 1`` until K1 remains.

    Every intermediate graph is checked to be an isometric daisy graph of its
    minimal host. With ``verify`` the recorded steps are replayed and must
    reproduce the input labels.

    Raises:
        GraphError: the input is not an isometric daisy graph of a minimal host.
        TheoremViolation: an intermediate graph or the replay is wrong.
    """
    g = _as_labeled(g)

    def bad_input(message, witness):
        return GraphError(f"cannot decompose: {message}")

    _check_isometric_daisy(g, bad_input)
    steps = []
    current = g
    for j in range(g.shape.n, 0, -1):
        result = contract(current, j)
        steps.append(DecompositionStep(j, current.shape, result.covers))
        current = result.graph
        _check_isometric_daisy(current, TheoremViolation)
        logger.debug("contracted coordinate %d, %d vertices remain", j, len(current))
    if verify:
        rebuilt = replay(steps)
        if rebuilt.vertices != g.vertices:
            diff = sorted(rebuilt.vertices ^ g.vertices)
            raise TheoremViolation("replay does not reproduce the input", witness=diff[0])
    return steps


def replay(steps: Sequence[DecompositionStep]) -> DaisyGraph:
    """Rebuild a daisy graph from K1 by undoing ``steps`` in reverse order."""
    current = from_vertices(Shape(()), (), [()])
    for step in reversed(steps):
        current = daisy_peripheral_expand(current, step.covers, position=step.j - 1)
    return current


def enumerate_daisy_cover_families(g, max_extra: int) -> List[Tuple[FrozenSet, ...]]:
    """Every valid daisy peripheral family ``(V, W_1, ..., W_k)`` with ``1 <= k <= max_extra``.

    ``W_1 ... W_k`` range over multisets of downward-closed subsets of ``g``.
    """
    g = _as_labeled(g)
    downsets = sorted(enumerate_downsets(g.shape, g.root, within=g.vertices), key=sorted)
    families = []
    for k in range(1, max_extra + 1):
        for extra in itertools.combinations_with_replacement(downsets, k):
            sets = (g.vertices,) + extra
            if validate_cover(g, sets).valid:
                families.append(sets)
    return families


def sample_daisy_cover_families(
    g, count: int, max_extra: int, rng: random.Random, attempts: int = None
) -> List[Tuple[FrozenSet, ...]]:
    """Draw ``count`` valid daisy peripheral families at random (repeats allowed).

    Stops early when ``attempts`` draws (default ``50 * count``) produced fewer.
    """
    g = _as_labeled(g)
    downsets = sorted(enumerate_downsets(g.shape, g.root, within=g.vertices), key=sorted)
    attempts = 50 * count if attempts is None else attempts
    families = []
    for _ in range(attempts):
        if len(families) == count:
            break
        k = rng.randint(1, max_extra)
        sets = (g.vertices,) + tuple(rng.choice(downsets) for _ in range(k))
        if validate_cover(g, sets).valid:
            families.append(sets)
    return families
