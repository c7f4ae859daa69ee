#!/usr/bin/env python3
"""
Seeded random complexes and graphs for property checks and the census command
"""

import itertools
import random
from typing import Iterator, List, Optional

from simplicial_complex import (
    Graph,
    SimplicialComplex,
    VertexSet,
    graph_from_edges,
    is_forest,
    new_from_faces,
)


def random_complex(rng: random.Random, n: int, max_facets: int = 4, allow_singletons: bool = False) -> SimplicialComplex:
    """Random faces on x1..xn, widened until every vertex is covered"""
    smallest = 1 if allow_singletons else 2
    size_cap = max(smallest, n)
    faces = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(min(smallest, n), size_cap)
        faces.append(set(rng.sample(range(1, n + 1), size)))
    for v in range(1, n + 1):
        if not any(v in face for face in faces):
            rng.choice(faces).add(v)
    c = new_from_faces(VertexSet.standard(n), faces)
    if not allow_singletons and any(len(f) == 1 for f in c.facets):
        return random_complex(rng, n, max_facets, allow_singletons)
    return c


def random_pure_complex(rng: random.Random, n: int, d: int, max_facets: int = 4) -> SimplicialComplex:
    """Random d-subsets of x1..xn, with more d-subsets added until every vertex is covered"""
    faces: List[set] = [set(rng.sample(range(1, n + 1), d)) for _ in range(rng.randint(1, max_facets))]
    for v in range(1, n + 1):
        if not any(v in face for face in faces):
            others = rng.sample([u for u in range(1, n + 1) if u != v], d - 1)
            faces.append({v, *others})
    return new_from_faces(VertexSet.standard(n), faces)


def random_disjoint_complex(rng: random.Random, n: int) -> SimplicialComplex:
    """A random partition of x1..xn into blocks of size at least 2 (n >= 2)"""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    blocks: List[List[int]] = []
    remaining = order
    while remaining:
        if len(remaining) <= 3:
            blocks.append(remaining)
            break
        size = rng.randint(2, len(remaining) - 2)
        blocks.append(remaining[:size])
        remaining = remaining[size:]
    return new_from_faces(VertexSet.standard(n), blocks)


def random_forest(rng: random.Random, t: int, max_new: int = 3, attempts: int = 50) -> SimplicialComplex:
    """
    Attach facets one by one, each meeting one earlier facet G in a proper subset of G

    Attachment alone does not always give a forest (three leaves glued around
    one facet can pairwise meet), so candidates are kept only if is_forest holds.
    """
    for _ in range(attempts):
        facets = [set(range(1, rng.randint(2, 1 + max_new) + 1))]
        next_vertex = max(facets[0]) + 1
        for _ in range(t - 1):
            host = sorted(rng.choice(facets))
            glued = set(rng.sample(host, rng.randint(0, len(host) - 1)))
            fresh = set(range(next_vertex, next_vertex + rng.randint(max(1, 2 - len(glued)), max_new)))
            next_vertex += len(fresh)
            facets.append(glued | fresh)
        c = new_from_faces(VertexSet.standard(next_vertex - 1), facets)
        if is_forest(c):
            return c
    raise RuntimeError(f"no forest with {t} facets found in {attempts} attempts")


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(i, j) for i, j in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
    return graph_from_edges(VertexSet.standard(n), edges)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on x1..xn"""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield graph_from_edges(VertexSet.standard(n), [pair for k, pair in enumerate(pairs) if bits >> k & 1])


def seeded(seed: Optional[int]) -> random.Random:
    return random.Random(seed)
