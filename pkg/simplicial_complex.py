#!/usr/bin/env python3
"""
Simplicial complexes stored by their facets, plus graphs and independence complexes

Facets are bitsets over 1-based vertex indices (bit i <-> vertex x_i) and are
always kept in canonical order: lexicographic by sorted member indices.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from config import Config
from errors import (
    DocumentError,
    EmptyComplex,
    FaceLimitExceeded,
    NotAFacet,
    TooManyFacets,
    UncoveredVertex,
    UnknownVertex,
)

_log = logging.getLogger("levelable_kit.complex")


def to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def to_members(mask: int) -> Tuple[int, ...]:
    members = []
    i = 0
    while mask:
        if mask & 1:
            members.append(i)
        mask >>= 1
        i += 1
    return tuple(members)


def _submasks(mask: int):
    """All submasks of mask, including 0 and mask itself"""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class VertexSet:
    """Ordered vertex labels; label k of the tuple is vertex index k + 1"""

    names: Tuple[str, ...]

    def __post_init__(self):
        if len(self.names) == 0:
            raise EmptyComplex("a vertex set needs at least one vertex")
        if len(set(self.names)) != len(self.names):
            dupes = sorted(name for name, count in Counter(self.names).items() if count > 1)
            raise DocumentError(f"duplicate vertex labels: {', '.join(dupes)}", field="vertices")

    @classmethod
    def standard(cls, n: int) -> "VertexSet":
        """x1, ..., xn"""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return to_mask(range(1, self.n + 1))

    def label(self, index: int) -> str:
        return self.names[index - 1]

    def index(self, label: str) -> int:
        try:
            return self.names.index(label) + 1
        except ValueError:
            raise UnknownVertex(f"unknown vertex label {label!r}")

    def check_indices(self, indices: Iterable[int]) -> None:
        for i in indices:
            if not 1 <= i <= self.n:
                raise UnknownVertex(f"vertex index {i} outside 1..{self.n}")


@dataclass(frozen=True)
class Facet:
    """A facet as a bitset of vertex indices"""

    mask: int

    def __post_init__(self):
        if self.mask <= 0 or self.mask & 1:
            raise ValueError("a facet is a non-empty set of indices >= 1")

    @classmethod
    def of(cls, indices: Iterable[int]) -> "Facet":
        return cls(to_mask(indices))

    @property
    def members(self) -> Tuple[int, ...]:
        return to_members(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __iter__(self):
        return iter(self.members)


def canonical_key(mask: int) -> Tuple[int, ...]:
    return to_members(mask)


def maximal_masks(masks: Iterable[int]) -> List[int]:
    """Inclusion-maximal, deduplicated, canonically ordered"""
    unique = sorted(set(m for m in masks if m), key=lambda m: (-bin(m).count("1"), canonical_key(m)))
    kept: List[int] = []
    for m in unique:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return sorted(kept, key=canonical_key)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its vertex set and canonically ordered facets"""

    vertices: VertexSet
    facets: Tuple[Facet, ...]

    @property
    def n(self) -> int:
        return self.vertices.n

    @property
    def t(self) -> int:
        return len(self.facets)

    @property
    def masks(self) -> Tuple[int, ...]:
        return tuple(f.mask for f in self.facets)

    def facet_labels(self) -> List[List[str]]:
        return [[self.vertices.label(i) for i in f.members] for f in self.facets]

    def facet_position(self, f: Facet) -> int:
        try:
            return self.facets.index(f)
        except ValueError:
            raise NotAFacet(f"{list(f.members)} is not a facet of this complex")

    @classmethod
    def from_labels(cls, vertex_labels: Sequence[str], facet_labels: Sequence[Sequence[str]]) -> "SimplicialComplex":
        """Build from label lists, e.g. (['a','b','c'], [['a','b'], ['b','c']])"""
        vertices = VertexSet(tuple(vertex_labels))
        faces = [[vertices.index(label) for label in face] for face in facet_labels]
        return new_from_faces(vertices, faces)


def new_from_faces(vertices: VertexSet, faces: Sequence[Iterable[int]]) -> SimplicialComplex:
    """
    Build a complex from any generating faces

    Args:
        vertices: the vertex set
        faces: index subsets; non-maximal and repeated faces are absorbed

    Returns:
        SimplicialComplex with inclusion-maximal facets in canonical order

    Raises:
        EmptyComplex: no faces given
        UnknownVertex: an index outside 1..n
        UncoveredVertex: a vertex lies in no face
    """
    if len(faces) == 0:
        raise EmptyComplex("the empty complex has no artinian algebra of this form")
    masks = []
    for face in faces:
        face = list(face)
        vertices.check_indices(face)
        masks.append(to_mask(face))
    covered = 0
    for m in masks:
        covered |= m
    missing = to_members(vertices.full_mask & ~covered)
    if missing:
        labels = ", ".join(vertices.label(i) for i in missing)
        raise UncoveredVertex(f"vertices in no face: {labels} (add them as singleton faces)")
    facets = tuple(Facet(m) for m in maximal_masks(masks))
    return SimplicialComplex(vertices, facets)


def is_face(c: SimplicialComplex, w: Iterable[int]) -> bool:
    w = list(w)
    c.vertices.check_indices(w)
    mask = to_mask(w)
    return any(mask & f == mask for f in c.masks)


def faces(c: SimplicialComplex) -> List[Tuple[int, ...]]:
    """
    Every face of c once, ordered by size and then lexicographically

    Raises:
        FaceLimitExceeded: some facet is larger than Config.FACE_CAP
    """
    biggest = max(len(f) for f in c.facets)
    if biggest > Config.FACE_CAP:
        raise FaceLimitExceeded(f"facet of size {biggest} exceeds face enumeration cap {Config.FACE_CAP}")
    seen = set()
    for m in c.masks:
        seen.update(_submasks(m))
    return sorted((to_members(m) for m in seen), key=lambda w: (len(w), w))


def face_masks(c: SimplicialComplex) -> List[int]:
    return [to_mask(w) for w in faces(c)]


def facet_sizes(c: SimplicialComplex) -> List[int]:
    return [len(f) for f in c.facets]


def dimension(c: SimplicialComplex) -> int:
    return max(facet_sizes(c)) - 1


def is_pure(c: SimplicialComplex) -> bool:
    return len(set(facet_sizes(c))) == 1


def _witness_mask(masks: Sequence[int], k: int) -> Tuple[bool, Optional[int]]:
    f = masks[k]
    others = [m for j, m in enumerate(masks) if j != k]
    if not others:
        return True, None
    for g in others:
        inside = g & f
        if all((o & f) & ~inside == 0 for o in others):
            return True, g
    return False, None


def leaf_witness(c: SimplicialComplex, f: Facet) -> Optional[Facet]:
    """Canonically first facet G witnessing that f is a leaf, None if f is not a leaf or is alone"""
    ok, g = _witness_mask(c.masks, c.facet_position(f))
    return Facet(g) if ok and g is not None else None


def is_leaf(c: SimplicialComplex, f: Facet) -> bool:
    ok, _ = _witness_mask(c.masks, c.facet_position(f))
    return ok


def free_vertices(c: SimplicialComplex, f: Facet) -> Tuple[int, ...]:
    """Vertices of f that lie in no other facet"""
    k = c.facet_position(f)
    elsewhere = 0
    for j, m in enumerate(c.masks):
        if j != k:
            elsewhere |= m
    return to_members(f.mask & ~elsewhere)


def masks_have_leaf(masks: Sequence[int]) -> bool:
    return any(_witness_mask(masks, k)[0] for k in range(len(masks)))


def last_leaf(masks: Sequence[int]) -> Tuple[int, Optional[int]]:
    """Position of the canonically last leaf among masks and its witness mask"""
    for k in reversed(range(len(masks))):
        ok, g = _witness_mask(masks, k)
        if ok:
            return k, g
    return -1, None


def is_forest(c: SimplicialComplex) -> bool:
    """
    Every sub-collection of facets has a leaf (checked over all 2^t - 1 of them)

    Raises:
        TooManyFacets: t above Config.FOREST_FACET_CAP
    """
    masks = c.masks
    t = len(masks)
    if t > Config.FOREST_FACET_CAP:
        raise TooManyFacets(f"{t} facets exceeds the forest check cap {Config.FOREST_FACET_CAP}")
    if t > 12:
        _log.warning("forest check over %d sub-collections", (1 << t) - 1)
    for size in range(2, t + 1):
        for chosen in itertools.combinations(masks, size):
            if not masks_have_leaf(chosen):
                _log.debug("leafless sub-collection %s", [to_members(m) for m in chosen])
                return False
    return True


def facet_graph(c: SimplicialComplex) -> nx.Graph:
    """Facets as nodes (canonical positions), joined when they share a vertex"""
    graph = nx.Graph()
    graph.add_nodes_from(range(c.t))
    for i, j in itertools.combinations(range(c.t), 2):
        if c.masks[i] & c.masks[j]:
            graph.add_edge(i, j)
    return graph


def is_connected(c: SimplicialComplex) -> bool:
    return nx.is_connected(facet_graph(c))


def is_tree(c: SimplicialComplex) -> bool:
    return is_connected(c) and is_forest(c)


def _reindexed(c: SimplicialComplex, keep_mask: int, masks: Iterable[int]) -> SimplicialComplex:
    kept = to_members(keep_mask)
    vertices = VertexSet(tuple(c.vertices.label(i) for i in kept))
    position = {old: new for new, old in enumerate(kept, start=1)}
    faces_ = [[position[i] for i in to_members(m & keep_mask)] for m in masks]
    faces_ = [face for face in faces_ if face]
    return new_from_faces(vertices, faces_)


def restrict(c: SimplicialComplex, keep: Iterable[int]) -> SimplicialComplex:
    """
    Induced subcomplex on the vertices in keep, re-indexed in their original order

    Args:
        c: the complex
        keep: vertex indices of c to keep

    Returns:
        SimplicialComplex whose faces are the faces of c inside keep

    Raises:
        EmptyComplex: keep is empty
    """
    keep = list(keep)
    if not keep:
        raise EmptyComplex("cannot restrict to an empty vertex set")
    c.vertices.check_indices(keep)
    return _reindexed(c, to_mask(keep), c.masks)


def subcomplex(c: SimplicialComplex, facet_positions: Iterable[int]) -> SimplicialComplex:
    """Complex generated by some of the facets, on the union of their vertices"""
    chosen = [c.masks[k] for k in facet_positions]
    if not chosen:
        raise EmptyComplex("cannot generate a complex from no facets")
    union = 0
    for m in chosen:
        union |= m
    return _reindexed(c, union, chosen)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph; edges are (i, j) with i < j"""

    vertices: VertexSet
    edges: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return self.vertices.n

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def neighbours(self) -> Dict[int, FrozenSet[int]]:
        adjacent: Dict[int, set] = {i: set() for i in range(1, self.n + 1)}
        for i, j in self.edges:
            adjacent[i].add(j)
            adjacent[j].add(i)
        return {i: frozenset(s) for i, s in adjacent.items()}


def graph_from_edges(vertices: VertexSet, edges: Iterable[Tuple[int, int]]) -> Graph:
    normalized = set()
    for k, (i, j) in enumerate(edges):
        vertices.check_indices((i, j))
        if i == j:
            raise DocumentError(f"loop at vertex {vertices.label(i)}", field=f"edges[{k}]")
        edge = (min(i, j), max(i, j))
        if edge in normalized:
            raise DocumentError(f"duplicate edge {vertices.label(edge[0])}-{vertices.label(edge[1])}", field=f"edges[{k}]")
        normalized.add(edge)
    return Graph(vertices, frozenset(normalized))


def maximal_independent_sets(g: Graph) -> List[Tuple[int, ...]]:
    """Maximal independent sets of g, as maximal cliques of its complement, canonically ordered"""
    complement = nx.complement(g.to_networkx())
    found = [tuple(sorted(clique)) for clique in nx.find_cliques(complement)]
    return sorted(found)


def independence_complex(g: Graph) -> SimplicialComplex:
    """The complex of independent sets of g; its facets are the maximal independent sets"""
    sets = maximal_independent_sets(g)
    _log.debug("graph on %d vertices has %d maximal independent sets", g.n, len(sets))
    return new_from_faces(g.vertices, sets)


def main():
    """Example usage of the complex helpers"""
    print("=== Simplicial complex example ===")
    c = SimplicialComplex.from_labels(["x1", "x2", "x3", "x4", "x5"], [["x1", "x3", "x5"], ["x2", "x4"], ["x1", "x4"], ["x2", "x5"]])
    print(f"Facets: {c.facet_labels()}")
    print(f"Faces: {len(faces(c))}")
    print(f"Pure: {is_pure(c)}  Forest: {is_forest(c)}")
    path = graph_from_edges(VertexSet.standard(3), [(1, 2), (2, 3)])
    print(f"Independence complex of a path: {independence_complex(path).facet_labels()}")


if __name__ == "__main__":
    main()
