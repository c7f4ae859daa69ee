#!/usr/bin/env python3
"""
Monomial ideals, h-vectors and socles of A(Delta, a) = R / (I_Delta, x_1^a_1, ..., x_n^a_n)

The socle is read off the facets through the inverse system generators
prod_{i in F} y_i^(a_i - 1); box-enumeration oracles recompute both the
socle and the h-vector straight from the definitions.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
from sympy import Poly, ZZ, symbols

from config import Config
from errors import BadExponent, BoxTooLarge, CollapsedToEmpty
from simplicial_complex import (
    Graph,
    SimplicialComplex,
    face_masks,
    independence_complex,
    restrict,
    to_mask,
    to_members,
)

_log = logging.getLogger("levelable_kit.algebra")

_T = symbols("t")


@dataclass(frozen=True)
class Monomial:
    """Exponent vector over x_1..x_n, or over the dual y_1..y_n when dual is set"""

    exponents: Tuple[int, ...]
    dual: bool = False

    @classmethod
    def squarefree(cls, n: int, indices: Iterable[int], dual: bool = False) -> "Monomial":
        chosen = set(indices)
        return cls(tuple(1 if i in chosen else 0 for i in range(1, n + 1)), dual)

    @classmethod
    def pure_power(cls, n: int, index: int, power: int) -> "Monomial":
        return cls(tuple(power if i == index else 0 for i in range(1, n + 1)))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents, start=1) if e > 0)

    @property
    def support_mask(self) -> int:
        return to_mask(self.support)

    def divides(self, other: "Monomial") -> bool:
        return all(e <= f for e, f in zip(self.exponents, other.exponents))

    def multiply_variable(self, index: int) -> "Monomial":
        bumped = list(self.exponents)
        bumped[index - 1] += 1
        return Monomial(tuple(bumped), self.dual)

    def renamed(self, dual: bool) -> "Monomial":
        """Same exponents read in x's (dual=False) or y's (dual=True)"""
        return Monomial(self.exponents, dual)

    def render(self, labels: Sequence[str]) -> Dict[str, int]:
        return {labels[i - 1]: self.exponents[i - 1] for i in self.support}

    def to_string(self, labels: Optional[Sequence[str]] = None) -> str:
        prefix = "y" if self.dual else "x"
        names = labels or [f"{prefix}{i}" for i in range(1, len(self.exponents) + 1)]
        parts = []
        for i in self.support:
            e = self.exponents[i - 1]
            parts.append(names[i - 1] if e == 1 else f"{names[i - 1]}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.to_string()


def _monomial_key(m: Monomial):
    return (to_members(m.support_mask), m.exponents)


@dataclass(frozen=True)
class ExponentTuple:
    """(a_1, ..., a_n); entries >= 2 unless the tuple is headed for normalize"""

    a: Tuple[int, ...]

    def __post_init__(self):
        for i, value in enumerate(self.a, start=1):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
                raise BadExponent(f"a_{i} = {value!r} is not a positive integer")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def shifted(self) -> Tuple[int, ...]:
        """b_i = a_i - 1"""
        return tuple(value - 1 for value in self.a)

    def require_admissible(self, n: int) -> "ExponentTuple":
        if len(self.a) != n:
            raise BadExponent(f"expected {n} exponents, got {len(self.a)}")
        low = [i for i, value in enumerate(self.a, start=1) if value < 2]
        if low:
            raise BadExponent(f"exponents must be >= 2; a_{low[0]} = {self.a[low[0] - 1]}")
        return self

    def __iter__(self):
        return iter(self.a)

    def __len__(self) -> int:
        return len(self.a)


def _as_tuple(a) -> ExponentTuple:
    return a if isinstance(a, ExponentTuple) else ExponentTuple(tuple(a))


def _admissible(c: SimplicialComplex, a) -> ExponentTuple:
    return _as_tuple(a).require_admissible(c.n)


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generating set; membership by divisibility"""

    generators: Tuple[Monomial, ...]
    n: int

    @classmethod
    def minimal(cls, n: int, generators: Iterable[Monomial]) -> "MonomialIdeal":
        """Drop generators divisible by another, keeping the first occurrence order"""
        candidates = list(dict.fromkeys(generators))
        kept = [
            m for m in candidates
            if not any(other != m and other.divides(m) for other in candidates)
        ]
        return cls(tuple(kept), n)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def to_strings(self, labels: Optional[Sequence[str]] = None) -> List[str]:
        return [g.to_string(labels) for g in self.generators]


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return ideal.contains(m)


@dataclass(frozen=True)
class HVector:
    h: Tuple[int, ...]

    @property
    def socle_degree(self) -> int:
        return len(self.h) - 1

    @property
    def length(self) -> int:
        """Vector space dimension of A"""
        return sum(self.h)


@dataclass(frozen=True)
class SocleVector:
    s: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.s) - 1

    @property
    def type(self) -> int:
        return sum(self.s)

    @property
    def is_level(self) -> bool:
        return all(value == 0 for value in self.s[:-1])


@dataclass(frozen=True)
class BettiTail:
    """(shift, multiplicity) pairs of the last free module, shifts increasing"""

    pairs: Tuple[Tuple[int, int], ...]

    @property
    def total(self) -> int:
        return sum(d for _, d in self.pairs)


def stanley_reisner_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """
    Squarefree ideal generated by the minimal non-faces of c

    Candidates of size k are grown from faces of size k - 1, so every proper
    subset of a reported generator is a face.
    """
    face_set = set(face_masks(c))
    by_size: Dict[int, List[int]] = {}
    for m in face_set:
        by_size.setdefault(bin(m).count("1"), []).append(m)
    generators: List[int] = []
    k = 2
    while k <= c.n and by_size.get(k - 1):
        candidates = set()
        for base in by_size[k - 1]:
            for v in range(1, c.n + 1):
                bit = 1 << v
                if not base & bit:
                    candidates.add(base | bit)
        for m in sorted(candidates, key=to_members):
            if m in face_set or any(g & m == g for g in generators):
                continue
            if all((m & ~(1 << v)) in face_set for v in to_members(m)):
                generators.append(m)
        k += 1
    _log.debug("Stanley-Reisner ideal has %d generators", len(generators))
    ordered = sorted(generators, key=lambda m: (bin(m).count("1"), to_members(m)))
    return MonomialIdeal(tuple(Monomial.squarefree(c.n, to_members(m)) for m in ordered), c.n)


def edge_ideal(g: Graph) -> MonomialIdeal:
    gens = [Monomial.squarefree(g.n, edge) for edge in sorted(g.edges)]
    return MonomialIdeal(tuple(gens), g.n)


def artinian_ideal(c: SimplicialComplex, a) -> MonomialIdeal:
    """(I_Delta, x_1^a_1, ..., x_n^a_n), minimally generated"""
    a = _admissible(c, a)
    powers = [Monomial.pure_power(c.n, i, value) for i, value in enumerate(a, start=1)]
    return MonomialIdeal.minimal(c.n, list(stanley_reisner_ideal(c).generators) + powers)


def normalize(c: SimplicialComplex, a) -> Tuple[SimplicialComplex, ExponentTuple]:
    """
    Remove every vertex with a_i = 1 (A is unchanged up to isomorphism)

    Args:
        c: the complex
        a: exponents with a_i >= 1

    Returns:
        (restricted complex, remaining exponents), all exponents >= 2

    Raises:
        CollapsedToEmpty: every exponent is 1
    """
    a = _as_tuple(a)
    if len(a) != c.n:
        raise BadExponent(f"expected {c.n} exponents, got {len(a)}")
    keep = [i for i, value in enumerate(a, start=1) if value != 1]
    if not keep:
        raise CollapsedToEmpty("every exponent is 1, so A is the field itself")
    if len(keep) == c.n:
        return c, a
    for i in range(1, c.n + 1):
        if i not in keep:
            _log.info("dropping vertex %s (exponent 1)", c.vertices.label(i))
    return restrict(c, keep), ExponentTuple(tuple(a.a[i - 1] for i in keep))


def hilbert_vector(c: SimplicialComplex, a) -> HVector:
    """
    h-vector as the coefficient list of sum over faces F of prod_{i in F} (t + ... + t^(a_i - 1))

    Raises:
        BadExponent: some a_i < 2
    """
    a = _admissible(c, a)
    blocks = [None] + [Poly.from_list([1] * (value - 1) + [0], _T, domain=ZZ) for value in a]
    series = Poly(0, _T, domain=ZZ)
    for mask in face_masks(c):
        term = Poly(1, _T, domain=ZZ)
        for i in to_members(mask):
            term = term * blocks[i]
        series = series + term
    coefficients = [int(value) for value in reversed(series.all_coeffs())]
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()
    return HVector(tuple(coefficients))


def _box_size(a: ExponentTuple) -> int:
    size = 1
    for value in a:
        size *= value
    return size


def _check_box(a: ExponentTuple, max_box: Optional[int]) -> None:
    cap = max_box if max_box is not None else Config.MAX_BOX
    size = _box_size(a)
    if size > cap:
        raise BoxTooLarge(f"box has {size} lattice points, cap is {cap}")


def _standard_monomials(a: ExponentTuple, face_set: Set[int]):
    """Exponent vectors in the box prod [0, a_i - 1] whose support is a face"""
    for point in np.ndindex(*a.a):
        support = to_mask(i for i, e in enumerate(point, start=1) if e)
        if support in face_set:
            yield tuple(int(e) for e in point), support


def hilbert_vector_bruteforce(c: SimplicialComplex, a, max_box: Optional[int] = None) -> HVector:
    """Count monomials outside I degree by degree over the whole box"""
    a = _admissible(c, a)
    _check_box(a, max_box)
    counts = Counter(sum(point) for point, _ in _standard_monomials(a, set(face_masks(c))))
    top = max(counts)
    return HVector(tuple(counts.get(j, 0) for j in range(top + 1)))


def inverse_system_generators(c: SimplicialComplex, a) -> List[Monomial]:
    """prod_{i in F} y_i^(a_i - 1) for each facet F, in canonical facet order"""
    a = _admissible(c, a)
    gens = []
    for f in c.facets:
        exponents = tuple(a.a[i - 1] - 1 if i in f else 0 for i in range(1, c.n + 1))
        gens.append(Monomial(exponents, dual=True))
    return gens


def hilbert_vector_from_inverse_system(c: SimplicialComplex, a, max_box: Optional[int] = None) -> HVector:
    """
    h-vector as the number of distinct derivatives of the inverse system per degree

    For monomial generators the derivatives are, up to scalars, the divisors.
    """
    a = _admissible(c, a)
    _check_box(a, max_box)
    derivatives: Set[Tuple[int, ...]] = set()
    for gen in inverse_system_generators(c, a):
        shape = tuple(e + 1 for e in gen.exponents)
        derivatives.update(tuple(int(e) for e in point) for point in np.ndindex(*shape))
    counts = Counter(sum(point) for point in derivatives)
    return HVector(tuple(counts.get(j, 0) for j in range(max(counts) + 1)))


def facet_weight(f, b: Sequence[int]) -> int:
    return sum(b[i - 1] for i in f)


def socle_vector(c: SimplicialComplex, a) -> SocleVector:
    """s_j = number of facets F with sum_{i in F} (a_i - 1) = j"""
    a = _admissible(c, a)
    weights = Counter(facet_weight(f, a.shifted) for f in c.facets)
    e = max(weights)
    return SocleVector(tuple(weights.get(j, 0) for j in range(e + 1)))


def socle_bruteforce(c: SimplicialComplex, a, max_box: Optional[int] = None) -> List[Monomial]:
    """
    Monomials m outside I with m * x_i in I for every i, by walking the box

    Raises:
        BoxTooLarge: prod a_i exceeds the cap (Config.MAX_BOX unless max_box is given)
    """
    a = _admissible(c, a)
    _check_box(a, max_box)
    face_set = set(face_masks(c))
    socle = []
    for point, support in _standard_monomials(a, face_set):
        annihilated = True
        for i in range(1, c.n + 1):
            if point[i - 1] + 1 < a.a[i - 1] and (support | 1 << i) in face_set:
                annihilated = False
                break
        if annihilated:
            socle.append(Monomial(point))
    return sorted(socle, key=_monomial_key)


def socle_degree(c: SimplicialComplex, a) -> int:
    return socle_vector(c, a).degree


def cm_type(c: SimplicialComplex) -> int:
    return c.t


def is_gorenstein(c: SimplicialComplex) -> bool:
    return c.t == 1


def is_level(c: SimplicialComplex, a) -> bool:
    return socle_vector(c, a).is_level


def betti_tail(g: Graph) -> BettiTail:
    """Last module of the resolution of R / (I(G), x_1^2, ..., x_n^2): shifts j + n with multiplicity s_j"""
    delta = independence_complex(g)
    s = socle_vector(delta, (2,) * g.n)
    return BettiTail(tuple((j + g.n, count) for j, count in enumerate(s.s) if count > 0))


@dataclass(frozen=True)
class AlgebraReport:
    h_vector: HVector
    socle_vector: SocleVector
    generators: Tuple[Monomial, ...]
    is_gorenstein: bool

    @property
    def type(self) -> int:
        return self.socle_vector.type

    @property
    def is_level(self) -> bool:
        return self.socle_vector.is_level


def describe(c: SimplicialComplex, a) -> AlgebraReport:
    a = _admissible(c, a)
    return AlgebraReport(
        h_vector=hilbert_vector(c, a),
        socle_vector=socle_vector(c, a),
        generators=tuple(inverse_system_generators(c, a)),
        is_gorenstein=is_gorenstein(c),
    )


def main():
    """Example usage of the algebra helpers"""
    print("=== A(Delta, a) example ===")
    c = SimplicialComplex.from_labels(["x1", "x2", "x3", "x4"], [["x1", "x2", "x3"], ["x3", "x4"]])
    for a in [(2, 2, 2, 2), (2, 2, 2, 3)]:
        report = describe(c, a)
        print(f"a = {a}")
        print(f"  h-vector: {report.h_vector.h}")
        print(f"  socle-vector: {report.socle_vector.s}  level: {report.is_level}")
        print(f"  inverse system: {[str(g) for g in report.generators]}")
        print(f"  brute-force socle: {[str(m) for m in socle_bruteforce(c, a)]}")


if __name__ == "__main__":
    main()
