#!/usr/bin/env python3
"""
JSON documents read and written by the levelable-kit CLI

Complex documents: {"vertices": [...], "facets": [[...], ...], "exponents": [...]?}
Graph documents:   {"vertices": [...], "edges": [[u, v], ...]}
"""

import json
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from errors import DocumentError
from simplicial_complex import (
    Graph,
    SimplicialComplex,
    VertexSet,
    graph_from_edges,
    new_from_faces,
)


def read_source(source: str) -> str:
    """Text of a file path, or of standard input for '-'; both must be UTF-8"""
    try:
        if source == "-":
            return sys.stdin.buffer.read().decode("utf-8")
        with open(source, "r", encoding="utf-8") as handle:
            return handle.read()
    except UnicodeDecodeError as e:
        raise DocumentError(f"{source} is not valid UTF-8: byte {e.start} cannot be decoded")
    except OSError as e:
        raise DocumentError(f"cannot read {source}: {e.strerror or e}")


def parse_json(text: str) -> Dict[str, Any]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg} (column {e.colno})", line=e.lineno)
    if not isinstance(obj, dict):
        raise DocumentError("the document must be a JSON object")
    return obj


def dump(payload: Dict[str, Any]) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline"""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _labels(obj: Dict[str, Any]) -> Tuple[str, ...]:
    vertices = obj.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise DocumentError("'vertices' must be a non-empty list of labels", field="vertices")
    for k, label in enumerate(vertices):
        if not isinstance(label, str) or not label:
            raise DocumentError("vertex labels must be non-empty strings", field=f"vertices[{k}]")
    return tuple(vertices)


def _declared(label: Any, declared: Sequence[str], where: str) -> str:
    if not isinstance(label, str):
        raise DocumentError("labels must be strings", field=where)
    if label not in declared:
        raise DocumentError(f"label {label!r} is not in 'vertices'", field=where)
    return label


@dataclass(frozen=True)
class ComplexDocument:
    vertices: Tuple[str, ...]
    facets: Tuple[Tuple[str, ...], ...]
    exponents: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "ComplexDocument":
        vertices = _labels(obj)
        raw_facets = obj.get("facets")
        if not isinstance(raw_facets, list):
            raise DocumentError("'facets' must be a list of label lists", field="facets")
        facets = []
        for k, facet in enumerate(raw_facets):
            if not isinstance(facet, list) or not facet:
                raise DocumentError("each facet must be a non-empty list of labels", field=f"facets[{k}]")
            facets.append(tuple(_declared(label, vertices, f"facets[{k}][{j}]") for j, label in enumerate(facet)))
        exponents = obj.get("exponents")
        if exponents is not None:
            if not isinstance(exponents, list) or len(exponents) != len(vertices):
                raise DocumentError(f"'exponents' must list {len(vertices)} integers, one per vertex", field="exponents")
            for k, value in enumerate(exponents):
                if isinstance(value, bool) or not isinstance(value, int):
                    raise DocumentError("exponents must be integers", field=f"exponents[{k}]")
            exponents = tuple(exponents)
        return cls(vertices, tuple(facets), exponents)

    @classmethod
    def from_complex(cls, c: SimplicialComplex, exponents: Optional[Sequence[int]] = None,
                     facets: Optional[Sequence[Sequence[int]]] = None) -> "ComplexDocument":
        """Document for c; facets may be given as index lists to keep a chosen order"""
        order = facets if facets is not None else [f.members for f in c.facets]
        labelled = tuple(tuple(c.vertices.label(i) for i in facet) for facet in order)
        return cls(c.vertices.names, labelled, tuple(exponents) if exponents is not None else None)

    def to_complex(self) -> SimplicialComplex:
        vertices = VertexSet(self.vertices)
        return new_from_faces(vertices, [[vertices.index(label) for label in facet] for facet in self.facets])

    def require_exponents(self) -> Tuple[int, ...]:
        if self.exponents is None:
            raise DocumentError("this command needs 'exponents'", field="exponents")
        return self.exponents

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "vertices": list(self.vertices),
            "facets": [list(facet) for facet in self.facets],
        }
        if self.exponents is not None:
            payload["exponents"] = list(self.exponents)
        return payload


@dataclass(frozen=True)
class GraphDocument:
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "GraphDocument":
        vertices = _labels(obj)
        raw_edges = obj.get("edges", [])
        if not isinstance(raw_edges, list):
            raise DocumentError("'edges' must be a list of label pairs", field="edges")
        edges: List[Tuple[str, str]] = []
        for k, edge in enumerate(raw_edges):
            if not isinstance(edge, list) or len(edge) != 2:
                raise DocumentError("each edge must be a list of two labels", field=f"edges[{k}]")
            u = _declared(edge[0], vertices, f"edges[{k}][0]")
            v = _declared(edge[1], vertices, f"edges[{k}][1]")
            if u == v:
                raise DocumentError(f"loop at {u!r}", field=f"edges[{k}]")
            edges.append((u, v))
        return cls(vertices, tuple(edges))

    def to_graph(self) -> Graph:
        vertices = VertexSet(self.vertices)
        return graph_from_edges(vertices, [(vertices.index(u), vertices.index(v)) for u, v in self.edges])


def load_complex_document(source: str) -> ComplexDocument:
    return ComplexDocument.from_json(parse_json(read_source(source)))


def load_graph_document(source: str) -> GraphDocument:
    return GraphDocument.from_json(parse_json(read_source(source)))
