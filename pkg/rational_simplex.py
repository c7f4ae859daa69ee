#!/usr/bin/env python3
"""
Exact phase-1 simplex over the rationals

Finds z >= 0 with A z = r, or proves there is none, using Fraction
arithmetic and Bland's smallest-index rule for both the entering and the
leaving variable so the pivot sequence (and the returned point) is fixed.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

_log = logging.getLogger("levelable_kit.simplex")


@dataclass
class FeasibilityResult:
    """Outcome of a phase-1 run"""

    feasible: bool
    solution: Optional[List[Fraction]] = None
    pivots: int = 0
    residual: Fraction = Fraction(0)


@dataclass
class SimplexTableau:
    """
    Phase-1 tableau for A z = r, z >= 0

    Columns 0..n-1 are the structural variables, n..n+m-1 the artificials,
    and the last column holds the right-hand side.
    """

    rows: List[List[Fraction]]
    basis: List[int]
    n: int
    m: int
    pivots: int = 0
    trace: List[str] = field(default_factory=list)

    @classmethod
    def from_system(cls, A: Sequence[Sequence[int]], r: Sequence[int]) -> "SimplexTableau":
        m = len(A)
        n = len(A[0]) if m else 0
        rows = []
        for i, (coefficients, rhs) in enumerate(zip(A, r)):
            sign = -1 if rhs < 0 else 1
            row = [Fraction(sign * value) for value in coefficients]
            row += [Fraction(1 if k == i else 0) for k in range(m)]
            row.append(Fraction(sign * rhs))
            rows.append(row)
        return cls(rows=rows, basis=[n + i for i in range(m)], n=n, m=m)

    def cost(self, j: int) -> int:
        return 1 if j >= self.n else 0

    def objective(self) -> Fraction:
        return sum((row[-1] for row, b in zip(self.rows, self.basis) if b >= self.n), Fraction(0))

    def reduced_cost(self, j: int) -> Fraction:
        return self.cost(j) - sum((self.cost(b) * row[j] for row, b in zip(self.rows, self.basis)), Fraction(0))

    def entering(self) -> Optional[int]:
        """Smallest column index with negative reduced cost"""
        for j in range(self.n + self.m):
            if j in self.basis:
                continue
            if self.reduced_cost(j) < 0:
                return j
        return None

    def leaving(self, j: int) -> Optional[int]:
        """Row of the minimum ratio, ties broken by the smallest basic index"""
        best = None
        for i, row in enumerate(self.rows):
            if row[j] > 0:
                key = (row[-1] / row[j], self.basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        return None if best is None else best[1]

    def pivot(self, i: int, j: int) -> None:
        pivot_row = self.rows[i]
        scale = pivot_row[j]
        self.rows[i] = pivot_row = [value / scale for value in pivot_row]
        for k, row in enumerate(self.rows):
            if k != i and row[j] != 0:
                factor = row[j]
                self.rows[k] = [value - factor * p for value, p in zip(row, pivot_row)]
        _log.debug("pivot: column %d enters, column %d leaves (row %d)", j, self.basis[i], i)
        self.trace.append(f"{j}<-{self.basis[i]}")
        self.basis[i] = j
        self.pivots += 1

    def point(self) -> List[Fraction]:
        z = [Fraction(0)] * self.n
        for row, b in zip(self.rows, self.basis):
            if b < self.n:
                z[b] = row[-1]
        return z

    def run(self) -> FeasibilityResult:
        while self.objective() != 0:
            j = self.entering()
            if j is None:
                break
            i = self.leaving(j)
            if i is None:
                # phase 1 is bounded below by 0, so an entering column always has a positive entry
                raise RuntimeError("phase-1 objective reported unbounded")
            self.pivot(i, j)
        residual = self.objective()
        if residual != 0:
            return FeasibilityResult(False, None, self.pivots, residual)
        return FeasibilityResult(True, self.point(), self.pivots, residual)


def find_feasible_point(A: Sequence[Sequence[int]], r: Sequence[int], n: int) -> FeasibilityResult:
    """
    Decide whether A z = r has a solution with z >= 0

    Args:
        A: integer coefficient rows of length n
        r: integer right-hand sides, one per row
        n: number of variables

    Returns:
        FeasibilityResult with an exact basic solution when feasible
    """
    if len(A) != len(r):
        raise ValueError("one right-hand side per row is required")
    if any(len(row) != n for row in A):
        raise ValueError(f"every row needs {n} coefficients")
    if not A:
        return FeasibilityResult(True, [Fraction(0)] * n, 0)
    tableau = SimplexTableau.from_system(A, r)
    result = tableau.run()
    _log.debug("phase 1 finished after %d pivots, feasible=%s", result.pivots, result.feasible)
    return result
