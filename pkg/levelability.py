#!/usr/bin/env python3
"""
Levelability of simplicial complexes

A(Delta, a) is level exactly when every facet has the same weight
sum_{i in F} (a_i - 1). In the shifted variables b_i = a_i - 1 that is a
homogeneous system, so a rational solution with b >= 1 scales to an integral
certificate; the exact simplex in rational_simplex decides it.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix

from errors import (
    BadExponent,
    NotDisjoint,
    NotForest,
    NotPure,
    SingleFacet,
    SingletonFacet,
    StrategyInapplicable,
    TooManyFacets,
    TooSmall,
)
from monomial_algebra import ExponentTuple, socle_vector
from rational_simplex import find_feasible_point
from simplicial_complex import (
    SimplicialComplex,
    VertexSet,
    is_forest,
    is_pure,
    last_leaf,
    new_from_faces,
    to_members,
)

_log = logging.getLogger("levelable_kit.levelability")


class Verdict(str, Enum):
    LEVELABLE = "LEVELABLE"
    NOT_LEVELABLE = "NOT_LEVELABLE"
    TRIVIALLY_GORENSTEIN = "TRIVIALLY_GORENSTEIN"


@dataclass(frozen=True)
class LinearSystem:
    """
    t - 1 rows comparing consecutive facets F_k and F_{k+1}

    Row k has +1 on F_k \\ F_{k+1}, -1 on F_{k+1} \\ F_k and rhs d_k - d_{k+1}.
    """

    rows: Tuple[Tuple[Tuple[int, ...], int], ...]
    n: int

    @property
    def coefficients(self) -> List[List[int]]:
        return [list(coeffs) for coeffs, _ in self.rows]

    @property
    def rhs(self) -> List[int]:
        return [value for _, value in self.rows]

    def telescoped(self) -> Tuple[Tuple[int, ...], int]:
        """Sum of all rows: the single equation comparing F_1 with F_t"""
        total = [0] * self.n
        for coeffs, _ in self.rows:
            total = [x + y for x, y in zip(total, coeffs)]
        return tuple(total), sum(self.rhs)

    def satisfied_by(self, a: Sequence[int]) -> bool:
        return all(sum(c * x for c, x in zip(coeffs, a)) == value for coeffs, value in self.rows)


@dataclass(frozen=True)
class ShiftedVariables:
    """b_i = a_i - 1, possibly rational before denominators are cleared"""

    b: Tuple[Fraction, ...]

    def to_certificate(self) -> ExponentTuple:
        """Scale to the smallest positive integer multiple and shift back to a = b + 1"""
        common = lcm(*(value.denominator for value in self.b))
        integral = [int(value * common) for value in self.b]
        divisor = 0
        for value in integral:
            divisor = gcd(divisor, value)
        return ExponentTuple(tuple(value // divisor + 1 for value in integral))


@dataclass(frozen=True)
class InfeasibilityReport:
    """Row-reduced weight system plus the variables every solution sends to b_i = 0"""

    reduced_rows: Tuple[str, ...]
    forced_zero: Tuple[int, ...]
    labels: Tuple[str, ...]

    @property
    def forced_labels(self) -> List[str]:
        return [self.labels[i - 1] for i in self.forced_zero]

    def summary(self) -> str:
        lines = ["facet weights sum_{i in F} b_i cannot all agree with every b_i >= 1"]
        lines.append("row-reduced weight system (b_i = a_i - 1):")
        lines.extend(f"  {row}" for row in self.reduced_rows)
        if self.forced_zero:
            forced = ", ".join(f"b_{i} = 0 (a_{i} = 1)" for i in self.forced_zero)
            lines.append(f"forced by every non-negative solution: {forced}")
        return "\n".join(lines)


@dataclass(frozen=True)
class LevelDecision:
    verdict: Verdict
    certificate: Optional[ExponentTuple] = None
    report: Optional[InfeasibilityReport] = None
    system: Optional[LinearSystem] = None

    @property
    def levelable(self) -> bool:
        return self.verdict != Verdict.NOT_LEVELABLE


def _require_no_singletons(c: SimplicialComplex) -> None:
    singles = [f for f in c.facets if len(f) == 1]
    if singles:
        labels = ", ".join(c.vertices.label(f.members[0]) for f in singles)
        raise SingletonFacet(f"facets of cardinality one are not allowed here: {labels}")


def facet_weights(c: SimplicialComplex, a: Sequence[int]) -> List[int]:
    return [sum(a[i - 1] - 1 for i in f) for f in c.facets]


def build_system(c: SimplicialComplex) -> LinearSystem:
    """
    The t - 1 equations for level tuples over the canonically ordered facets

    Raises:
        SingleFacet: t = 1, where A is Gorenstein for every a
        SingletonFacet: a facet of cardinality one
    """
    if c.t == 1:
        raise SingleFacet("a single facet gives a Gorenstein algebra for every tuple")
    _require_no_singletons(c)
    rows = []
    for upper, lower in zip(c.facets, c.facets[1:]):
        coeffs = tuple((1 if i in upper else 0) - (1 if i in lower else 0) for i in range(1, c.n + 1))
        rows.append((coeffs, len(upper) - len(lower)))
    return LinearSystem(tuple(rows), c.n)


def _weight_differences(system: LinearSystem) -> List[List[int]]:
    # in b = a - 1 the rows lose their right-hand sides
    return system.coefficients


def _format_row(row) -> str:
    terms = []
    for i, value in enumerate(row, start=1):
        if value == 0:
            continue
        value = Fraction(str(value))
        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        coefficient = "" if magnitude == 1 else f"{magnitude}*"
        terms.append(f"{sign} {coefficient}b_{i}")
    if not terms:
        return "0 = 0"
    text = " ".join(terms)
    return (text[2:] if text.startswith("+ ") else "-" + text[2:]) + " = 0"


def forced_zero_variables(system: LinearSystem) -> List[int]:
    """
    Indices i with b_i = 0 in every solution of the weight system with b >= 0

    b_i can be positive iff {W b = 0, b >= 0, b_i >= 1} is feasible (the
    system is homogeneous); substitute b_i = 1 + z_i and ask the simplex.
    """
    W = _weight_differences(system)
    forced = []
    for i in range(1, system.n + 1):
        rhs = [-row[i - 1] for row in W]
        if not find_feasible_point(W, rhs, system.n).feasible:
            forced.append(i)
    return forced


def infeasibility_report(c: SimplicialComplex, system: LinearSystem) -> InfeasibilityReport:
    reduced, _ = Matrix(_weight_differences(system)).rref()
    rows = [
        _format_row(reduced.row(k))
        for k in range(reduced.rows)
        if any(value != 0 for value in reduced.row(k))
    ]
    return InfeasibilityReport(tuple(rows), tuple(forced_zero_variables(system)), c.vertices.names)


def verify_certificate(c: SimplicialComplex, a) -> bool:
    """True iff A(c, a) is level, i.e. all facet weights coincide"""
    return socle_vector(c, a).is_level


def decide_levelable(c: SimplicialComplex) -> LevelDecision:
    """
    Decide whether some a with every a_i >= 2 makes A(c, a) level

    Returns:
        LevelDecision with a verified certificate, or an infeasibility report

    Raises:
        SingletonFacet: a facet of cardinality one
    """
    _require_no_singletons(c)
    if c.t == 1:
        return LevelDecision(Verdict.TRIVIALLY_GORENSTEIN, ExponentTuple((2,) * c.n))
    system = build_system(c)
    # a_i = z_i + 2 with z_i >= 0, i.e. b_i = z_i + 1 >= 1
    shifted_rhs = [value - 2 * sum(coeffs) for coeffs, value in system.rows]
    result = find_feasible_point(system.coefficients, shifted_rhs, c.n)
    if not result.feasible:
        report = infeasibility_report(c, system)
        _log.info("not levelable; forced zero: %s", report.forced_labels)
        return LevelDecision(Verdict.NOT_LEVELABLE, None, report, system)
    b = ShiftedVariables(tuple(z + 1 for z in result.solution))
    certificate = b.to_certificate()
    if not verify_certificate(c, certificate) or not system.satisfied_by(certificate.a):
        raise RuntimeError(f"solver certificate {certificate.a} failed verification")
    _log.debug("certificate %s after %d pivots", certificate.a, result.pivots)
    return LevelDecision(Verdict.LEVELABLE, certificate, None, system)


def scale_tuple(a, cfactor: int) -> ExponentTuple:
    """(c(a_1 - 1) + 1, ..., c(a_n - 1) + 1)"""
    a = a if isinstance(a, ExponentTuple) else ExponentTuple(tuple(a))
    a.require_admissible(len(a))
    if cfactor < 1:
        raise BadExponent(f"scaling factor must be >= 1, got {cfactor}")
    return ExponentTuple(tuple(cfactor * (value - 1) + 1 for value in a))


def level_tuple_pure(c: SimplicialComplex, d: int = 2) -> ExponentTuple:
    if not is_pure(c):
        raise NotPure(f"facet sizes {sorted(set(len(f) for f in c.facets))} differ")
    if d < 2:
        raise BadExponent(f"d must be >= 2, got {d}")
    return ExponentTuple((d,) * c.n)


def _smallest_scale(needed: int, weight: int) -> int:
    """Smallest c >= 1 with c * weight >= needed (weight >= 1)"""
    return max(1, -(-needed // weight))


def _as_certificate(c: SimplicialComplex, b: Dict[int, int]) -> ExponentTuple:
    return ExponentTuple(tuple(b[i] + 1 for i in range(1, c.n + 1)))


def level_tuple_disjoint(c: SimplicialComplex) -> ExponentTuple:
    """
    Certificate for pairwise disjoint facets by induction on t

    t = 2 puts the slack on the first vertex of each facet with the smallest
    admissible value; each further facet gets a's of 2 except its last vertex,
    after scaling the earlier certificate by the smallest workable c.

    Raises:
        NotDisjoint: two facets share a vertex
    """
    masks = c.masks
    for (i, f), (j, g) in itertools.combinations(enumerate(masks), 2):
        if f & g:
            raise NotDisjoint(f"facets {i + 1} and {j + 1} share {list(to_members(f & g))}")
    b = {i: 1 for i in range(1, c.n + 1)}
    if c.t == 1:
        return _as_certificate(c, b)
    first, second = to_members(masks[0]), to_members(masks[1])
    d1, d2 = len(first), len(second)
    slack = max(2, d1 - d2 + 2)
    b[first[0]] = d2 - d1 + slack - 1
    b[second[0]] = slack - 1
    for k in range(2, c.t):
        previous, new = to_members(masks[k - 1]), to_members(masks[k])
        weight = sum(b[i] for i in previous)
        scale = _smallest_scale(len(new), weight)
        for mask in masks[:k]:
            for i in to_members(mask):
                b[i] *= scale
        b[new[-1]] = scale * weight - (len(new) - 1)
        _log.debug("disjoint step %d: scale %d, slack b_%d = %d", k + 1, scale, new[-1], b[new[-1]])
    return _as_certificate(c, b)


def _forest_shifted(masks: List[int]) -> Dict[int, int]:
    """b-values (a - 1) making every facet weight equal, following the leaf induction"""
    if len(masks) == 1:
        return {i: 1 for i in to_members(masks[0])}
    if len(masks) == 2:
        first, second = masks
        private_first = to_members(first & ~second)
        private_second = to_members(second & ~first)
        b = {i: 1 for i in to_members(first | second)}
        e = len(private_second) - len(private_first)
        if e >= 0:
            b[private_first[0]] = e + 1
        else:
            b[private_second[-1]] = 1 - e
        return b
    k, witness = last_leaf(masks)
    if k < 0:
        raise NotForest("a sub-collection of facets has no leaf")
    leaf = masks[k]
    rest = masks[:k] + masks[k + 1:]
    b = _forest_shifted(rest)
    union = 0
    for mask in rest:
        union |= mask
    free = to_members(leaf & ~union)
    outside_leaf = sum(b[i] for i in to_members(witness & ~leaf))
    scale = _smallest_scale(len(free), outside_leaf)
    b = {i: scale * value for i, value in b.items()}
    for i in free:
        b[i] = 1
    b[free[-1]] = scale * outside_leaf - (len(free) - 1)
    _log.debug("leaf %s (witness %s): scale %d", to_members(leaf), to_members(witness), scale)
    return b


def level_tuple_forest(c: SimplicialComplex) -> ExponentTuple:
    """
    Certificate for a simplicial forest

    The canonically last leaf plays F_t and its first witness F_{t-1}; the
    other facets are levelled recursively, scaled by the smallest c that
    keeps the slack exponent on the leaf's last free vertex at least 2.

    Raises:
        SingletonFacet: a facet of cardinality one
        NotForest: c is not a forest
    """
    _require_no_singletons(c)
    if not is_forest(c):
        raise NotForest("some sub-collection of facets has no leaf")
    return _as_certificate(c, _forest_shifted(list(c.masks)))


def nonlevelable_family_facets(n: int) -> List[List[int]]:
    """Facets of the non-levelable complex on n >= 5 vertices, in their displayed order"""
    if n < 5:
        raise TooSmall(f"every complex on {n} <= 4 vertices is levelable")
    if n % 2:
        return [
            list(range(1, n + 1, 2)),
            list(range(2, n, 2)),
            [1] + list(range(4, n, 2)),
            [2] + list(range(5, n + 1, 2)),
        ]
    return [
        [1, 3] + list(range(5, n + 1)),
        [2] + list(range(5, n + 1)),
        [1, 4],
        [2, 4],
    ]


def nonlevelable_family(n: int) -> SimplicialComplex:
    return new_from_faces(VertexSet.standard(n), nonlevelable_family_facets(n))


def search_level_tuples(c: SimplicialComplex, bound: int) -> Optional[ExponentTuple]:
    """First a in {2, ..., bound}^n (lexicographically) with equal facet weights"""
    for a in itertools.product(range(2, bound + 1), repeat=c.n):
        weights = facet_weights(c, a)
        if all(w == weights[0] for w in weights):
            return ExponentTuple(a)
    return None


STRATEGIES = ("pure", "disjoint", "forest", "auto")


@dataclass(frozen=True)
class Construction:
    strategy: str
    certificate: Optional[ExponentTuple]
    verified: bool
    decision: Optional[LevelDecision] = None
    skipped: Tuple[str, ...] = field(default_factory=tuple)


def construct(c: SimplicialComplex, strategy: str = "auto", d: int = 2) -> Construction:
    """
    Build a level tuple with one of the constructive strategies

    Args:
        c: the complex
        strategy: pure, disjoint, forest or auto (pure, disjoint, forest, then the solver)
        d: the repeated exponent for the pure strategy

    Raises:
        StrategyInapplicable: an explicit strategy's precondition fails
    """
    builders = {
        "pure": lambda: level_tuple_pure(c, d),
        "disjoint": lambda: level_tuple_disjoint(c),
        "forest": lambda: level_tuple_forest(c),
    }
    if strategy not in STRATEGIES:
        raise StrategyInapplicable(f"unknown strategy {strategy!r}; choose one of {', '.join(STRATEGIES)}")
    order = [strategy] if strategy != "auto" else ["pure", "disjoint", "forest"]
    skipped = []
    for name in order:
        try:
            certificate = builders[name]()
        except (NotPure, NotDisjoint, NotForest, SingletonFacet, TooManyFacets) as exc:
            if strategy != "auto":
                raise StrategyInapplicable(f"{name} strategy needs its precondition: {exc}")
            skipped.append(f"{name}: {exc}")
            _log.info("auto: %s strategy inapplicable (%s)", name, exc)
            continue
        return Construction(name, certificate, verify_certificate(c, certificate), None, tuple(skipped))
    decision = decide_levelable(c)
    return Construction("solver", decision.certificate, decision.certificate is not None, decision, tuple(skipped))


def main():
    """Example usage of the levelability helpers"""
    print("=== Levelability example ===")
    for n in (5, 6):
        delta = nonlevelable_family(n)
        decision = decide_levelable(delta)
        print(f"Delta_{n}: {delta.facet_labels()} -> {decision.verdict.value}")
        print(decision.report.summary())
    forest = SimplicialComplex.from_labels(["x1", "x2", "x3", "x4"], [["x1", "x2", "x3"], ["x3", "x4"]])
    print(f"forest certificate: {level_tuple_forest(forest).a}")
    print(f"solver certificate: {decide_levelable(forest).certificate.a}")


if __name__ == "__main__":
    main()
