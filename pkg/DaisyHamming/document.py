# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Graph documents (versioned JSON) and export to DOT and GML.

A labeled document stores the shape and the induced vertex set; its edges
are implied by Hamming adjacency and are never written. A generic document
stores opaque vertex ids and an explicit edge list. Coordinate tuples are
written as comma separated integers, ``"1,0"``.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .common import edge_key, format_vertex, to_jsonable
from .daisy import DaisyGraph
from .errors import DocumentError, ShapeError
from .hamming import Shape, check_vertex
from .metric import LabeledGraph, check_simple

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
KINDS = ("labeled", "generic")


@dataclass(frozen=True)
class GraphDocument:
    """A graph with its root and provenance notes, as stored on disk.

    Args:
        kind: ``"labeled"`` or ``"generic"``.
        vertices: sorted vertex tuple (coordinate tuples or ids).
        root: the root vertex.
        shape: host shape of a labeled document.
        edges: sorted edge list of a generic document.
        notes: free JSON notes (generators, covers, command provenance).
    """

    kind: str
    vertices: Tuple
    root: Any
    shape: Optional[Shape] = None
    edges: Tuple = ()
    notes: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_labeled(cls, g: LabeledGraph, notes: Dict[str, Any] = None) -> "GraphDocument":
        return cls("labeled", tuple(g.sorted_vertices), g.root, g.shape, (), dict(notes or {}))

    @classmethod
    def from_graph(cls, graph: nx.Graph, root, notes: Dict[str, Any] = None) -> "GraphDocument":
        check_simple(graph)
        id_type = _id_type(graph.nodes(), "vertices")
        if not _is_id(root, id_type) or root not in graph:
            raise DocumentError(f"root {root!r} is not a vertex of the graph", field="root")
        edges = tuple(sorted(edge_key(u, v) for u, v in graph.edges()))
        return cls("generic", tuple(sorted(graph.nodes())), root, None, edges, dict(notes or {}))

    @classmethod
    def from_daisy(cls, d: DaisyGraph, notes: Dict[str, Any] = None) -> "GraphDocument":
        notes = dict(notes or {})
        notes.setdefault("generators", to_jsonable(sorted(d.generators), d.host.kind == "hamming"))
        if d.host.kind == "hamming":
            return cls.from_labeled(d.to_labeled(), notes)
        return cls.from_graph(d.subgraph(), d.root, notes)

    @property
    def labeled(self) -> LabeledGraph:
        if self.kind != "labeled":
            raise DocumentError("a generic document has no shape", field="kind")
        return LabeledGraph(self.shape, self.vertices)

    def to_graph(self) -> nx.Graph:
        if self.kind == "labeled":
            return self.labeled.to_networkx()
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        labeled = self.kind == "labeled"
        data = {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "root": to_jsonable(self.root, labeled),
            "vertices": [to_jsonable(v, labeled) for v in self.vertices],
            "notes": to_jsonable(self.notes, labeled),
        }
        if labeled:
            data["shape"] = str(self.shape)
        else:
            data["edges"] = [[to_jsonable(u), to_jsonable(v)] for u, v in self.edges]
        return data


def serialize(doc: GraphDocument) -> str:
    return json.dumps(doc.to_dict(), sort_keys=True, indent=2) + "\n"


def parse_coordinates(text: str, field_name: str = "vertices") -> Tuple[int, ...]:
    """``"1,0"`` to ``(1, 0)``; the empty string is the vertex of K1."""
    if not isinstance(text, str):
        raise DocumentError(f"expected a coordinate string, got {text!r}", field=field_name)
    if text.strip() == "":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise DocumentError(f"malformed coordinate tuple {text!r}", field=field_name)


def parse_shape(text: str) -> Shape:
    try:
        return Shape(parse_coordinates(text, "shape"))
    except ShapeError as exc:
        raise DocumentError(str(exc), field="shape")


def _require(data, name, kinds):
    if name not in data:
        raise DocumentError("missing", field=name)
    if not isinstance(data[name], kinds):
        raise DocumentError(f"unexpected type {type(data[name]).__name__}", field=name)
    return data[name]


def _labeled_vertex(shape, text, field_name):
    try:
        return check_vertex(shape, parse_coordinates(text, field_name))
    except ShapeError as exc:
        raise DocumentError(str(exc), field=field_name)


def _is_id(value, id_type) -> bool:
    return isinstance(value, id_type) and not isinstance(value, bool)


def _id_type(ids: Iterable, field_name: str):
    """Generic vertex ids are all ``int`` or all ``str``; return which."""
    ids = list(ids)
    for id_type in (int, str):
        if all(_is_id(v, id_type) for v in ids):
            return id_type
    raise DocumentError("vertex ids must be all integers or all strings", field=field_name)


def parse(text: str) -> GraphDocument:
    """Read a graph document.

    Raises:
        DocumentError: invalid JSON (with the line) or an invalid field.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, line=exc.lineno)
    if not isinstance(data, dict):
        raise DocumentError("a graph document is a JSON object", line=1)
    if _require(data, "schema", int) != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema {data['schema']}", field="schema")
    kind = _require(data, "kind", str)
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}", field="kind")
    raw_vertices = _require(data, "vertices", list)
    if not raw_vertices:
        raise DocumentError("empty vertex list", field="vertices")
    notes = data.get("notes", {})
    if not isinstance(notes, dict):
        raise DocumentError("notes must be an object", field="notes")

    if kind == "labeled":
        if "edges" in data:
            raise DocumentError("labeled documents carry no edge list", field="edges")
        shape = parse_shape(_require(data, "shape", str))
        vertices = {_labeled_vertex(shape, v, "vertices") for v in raw_vertices}
        root = _labeled_vertex(shape, _require(data, "root", str), "root")
        return GraphDocument(kind, tuple(sorted(vertices)), root, shape, (), notes)

    raw_edges = _require(data, "edges", list)
    id_type = _id_type(raw_vertices, "vertices")
    vertices = set(raw_vertices)
    edges = set()
    for item in raw_edges:
        if not isinstance(item, list) or len(item) != 2:
            raise DocumentError(f"an edge is a pair of ids, got {item!r}", field="edges")
        u, v = item
        if not (_is_id(u, id_type) and _is_id(v, id_type)):
            raise DocumentError(f"edge {item!r} does not join two vertex ids", field="edges")
        if u not in vertices or v not in vertices or u == v:
            raise DocumentError(f"edge {item!r} does not join two vertices", field="edges")
        edges.add(edge_key(u, v))
    root = data.get("root")
    if not _is_id(root, id_type) or root not in vertices:
        raise DocumentError("root must be one of the vertices", field="root")
    return GraphDocument(kind, tuple(sorted(vertices)), root, None, tuple(sorted(edges)), notes)


def read_document(path: str) -> GraphDocument:
    with open(path, "r") as fh:
        return parse(fh.read())


def write_document(doc: GraphDocument, path: str = None) -> str:
    """Serialise ``doc``; write it to ``path`` when given and return the text."""
    text = serialize(doc)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
        logger.debug("wrote %d vertices to %s", len(doc.vertices), path)
    return text


def _edge_classes(classes: Sequence[Iterable]) -> Dict[Tuple, int]:
    index = {}
    for number, edges in enumerate(classes):
        for u, v in edges:
            index[edge_key(u, v)] = number
    return index


def _labeled_copy(graph: nx.Graph, classes: Sequence[Iterable]) -> nx.Graph:
    """Copy of ``graph`` on string vertex labels, edges tagged with their class."""
    index = _edge_classes(classes)
    labeled = nx.Graph()
    for vertex in sorted(graph.nodes()):
        labeled.add_node(format_vertex(vertex))
    for u, v in sorted(edge_key(a, b) for a, b in graph.edges()):
        labeled.add_edge(format_vertex(u), format_vertex(v), delta_class=index.get((u, v), -1))
    return labeled


def to_dot(graph: nx.Graph, classes: Sequence[Iterable] = (), name: str = "daisy") -> str:
    """Graphviz text with coordinate labels; each Delta-class is one colour group.

    Args:
        graph: the graph to draw.
        classes: edge sets, one per class; edges outside every class stay black.
        name: graph name.
    """
    labeled = _labeled_copy(graph, classes)
    dot = nx.Graph(name=name, edge={"colorscheme": "set19"})
    dot.add_nodes_from(labeled.nodes())
    for u, v, number in labeled.edges(data="delta_class"):
        if number < 0:
            dot.add_edge(u, v)
        else:
            dot.add_edge(u, v, **{"class": number, "color": number % 9 + 1})
    return nx.nx_pydot.to_pydot(dot).to_string()


def to_gml(graph: nx.Graph, classes: Sequence[Iterable] = ()) -> str:
    """GML with string vertex labels and a ``delta_class`` attribute per edge."""
    return "\n".join(nx.generate_gml(_labeled_copy(graph, classes))) + "\n"


EXPORTERS = {"dot": to_dot, "gml": to_gml}


def export(graph: nx.Graph, fmt: str, classes: Sequence[Iterable] = ()) -> str:
    if fmt not in EXPORTERS:
        raise ValueError(f"unknown export format {fmt!r}; choose from {sorted(EXPORTERS)}")
    return EXPORTERS[fmt](graph, classes)


def vertex_list(vertices: Iterable) -> List[str]:
    return [format_vertex(v) for v in sorted(vertices)]
