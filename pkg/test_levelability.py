#!/usr/bin/env python3
"""
Tests for the levelability decision, the constructive strategies and the
non-levelable family
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import random_complex, random_disjoint_complex, random_forest, random_pure_complex, seeded
from errors import (
    BadExponent,
    NotDisjoint,
    NotForest,
    NotPure,
    SingleFacet,
    SingletonFacet,
    StrategyInapplicable,
    TooSmall,
)
from levelability import (
    ShiftedVariables,
    Verdict,
    build_system,
    construct,
    decide_levelable,
    facet_weights,
    forced_zero_variables,
    infeasibility_report,
    level_tuple_disjoint,
    level_tuple_forest,
    level_tuple_pure,
    nonlevelable_family,
    nonlevelable_family_facets,
    scale_tuple,
    search_level_tuples,
    verify_certificate,
)
from monomial_algebra import is_level
from simplicial_complex import VertexSet, maximal_masks, new_from_faces, to_members


def std(n, facets):
    return new_from_faces(VertexSet.standard(n), facets)


FOREST = [[1, 2, 3], [3, 4]]
DISJOINT = [[1, 2], [3, 4, 5]]
PATH = [[1, 2], [2, 3], [3, 4]]


class TestLinearSystem:
    def test_delta5_rows(self):
        system = build_system(nonlevelable_family(5))
        assert system.coefficients == [[0, 0, 1, -1, 1], [1, -1, 0, 0, 0], [0, 0, 0, 1, -1]]
        assert system.rhs == [1, 0, 0]

    def test_forest_row(self):
        system = build_system(std(4, FOREST))
        assert system.coefficients == [[1, 1, 0, -1]]
        assert system.rhs == [1]
        assert system.satisfied_by((2, 2, 2, 3))
        assert not system.satisfied_by((2, 2, 2, 2))

    def test_telescoped_row_compares_first_and_last(self):
        coeffs, rhs = build_system(std(4, PATH)).telescoped()
        assert coeffs == (1, 1, -1, -1)
        assert rhs == 0

    def test_single_facet(self):
        with pytest.raises(SingleFacet):
            build_system(std(3, [[1, 2, 3]]))

    def test_singleton_facet(self):
        with pytest.raises(SingletonFacet) as info:
            build_system(std(3, [[1, 2], [3]]))
        assert "--normalize" in info.value.to_dict()["hint"]

    @pytest.mark.property_based
    @given(st.integers(0, 10 ** 6), st.integers(2, 6))
    @settings(max_examples=60, deadline=None)
    def test_system_agrees_with_socle(self, seed, n):
        rng = seeded(seed)
        c = random_complex(rng, n)
        if c.t == 1:
            return
        a = tuple(rng.randint(2, 5) for _ in range(n))
        assert build_system(c).satisfied_by(a) == is_level(c, a)


class TestDecision:
    def test_delta5_not_levelable(self):
        decision = decide_levelable(nonlevelable_family(5))
        assert decision.verdict == Verdict.NOT_LEVELABLE
        assert decision.certificate is None
        assert decision.report.forced_zero == (3,)
        assert decision.report.forced_labels == ["x3"]
        assert "b_3 = 0" in decision.report.summary()

    def test_delta6_not_levelable(self):
        decision = decide_levelable(nonlevelable_family(6))
        assert decision.verdict == Verdict.NOT_LEVELABLE
        assert 3 in decision.report.forced_zero

    def test_forest_certificate(self):
        decision = decide_levelable(std(4, FOREST))
        assert decision.verdict == Verdict.LEVELABLE
        assert decision.certificate.a == (2, 2, 2, 3)

    def test_pure_certificate_is_all_twos(self):
        decision = decide_levelable(std(4, [[1, 2], [2, 3], [1, 4]]))
        assert decision.certificate.a == (2, 2, 2, 2)

    def test_single_facet_is_gorenstein(self):
        decision = decide_levelable(std(3, [[1, 2, 3]]))
        assert decision.verdict == Verdict.TRIVIALLY_GORENSTEIN
        assert decision.levelable

    def test_singleton_facet_rejected(self):
        with pytest.raises(SingletonFacet):
            decide_levelable(std(3, [[1, 2], [3]]))

    def test_certificate_is_primitive(self):
        from fractions import Fraction
        b = ShiftedVariables((Fraction(2, 3), Fraction(4, 3), Fraction(2, 3)))
        assert b.to_certificate().a == (2, 3, 2)

    def test_report_rows_are_reduced(self):
        system = build_system(nonlevelable_family(5))
        report = infeasibility_report(nonlevelable_family(5), system)
        assert "b_3 = 0" in report.reduced_rows
        assert forced_zero_variables(system) == [3]

    @pytest.mark.property_based
    @given(st.integers(0, 10 ** 6), st.integers(2, 6))
    @settings(max_examples=100, deadline=None)
    def test_certificates_are_level_and_scale(self, seed, n):
        c = random_complex(seeded(seed), n)
        decision = decide_levelable(c)
        if decision.certificate is None:
            return
        assert all(value >= 2 for value in decision.certificate.a)
        assert verify_certificate(c, decision.certificate)
        for factor in range(1, 6):
            assert verify_certificate(c, scale_tuple(decision.certificate, factor))

    @pytest.mark.slow
    @pytest.mark.property_based
    @given(st.integers(0, 10 ** 6), st.integers(2, 6))
    @settings(max_examples=100, deadline=None)
    def test_search_agrees_with_solver(self, seed, n):
        c = random_complex(seeded(seed), n, max_facets=4)
        found = search_level_tuples(c, 6)
        decision = decide_levelable(c)
        if found is not None:
            assert decision.levelable
            assert verify_certificate(c, found)
        if decision.verdict == Verdict.NOT_LEVELABLE:
            assert found is None

    @pytest.mark.parametrize("n", range(5, 13))
    def test_family_is_not_levelable(self, n):
        assert decide_levelable(nonlevelable_family(n)).verdict == Verdict.NOT_LEVELABLE

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_family_has_no_small_level_tuple(self, n):
        assert search_level_tuples(nonlevelable_family(n), 6) is None

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_every_small_complex_is_levelable(self, n):
        candidates = [m for m in range(2, 1 << (n + 1), 2) if bin(m).count("1") >= 2]
        full = sum(1 << i for i in range(1, n + 1))
        seen = set()
        for k in range(1, len(candidates) + 1):
            for chosen in itertools.combinations(candidates, k):
                masks = tuple(maximal_masks(chosen))
                covered = 0
                for m in masks:
                    covered |= m
                if covered != full or masks in seen:
                    continue
                seen.add(masks)
                c = std(n, [to_members(m) for m in masks])
                assert decide_levelable(c).levelable, c.facet_labels()


class TestConstructions:
    def test_pure(self):
        assert level_tuple_pure(std(4, PATH)).a == (2, 2, 2, 2)
        assert level_tuple_pure(std(4, PATH), d=3).a == (3, 3, 3, 3)

    def test_pure_rejects_mixed_sizes(self):
        with pytest.raises(NotPure):
            level_tuple_pure(std(4, FOREST))

    def test_pure_rejects_small_d(self):
        with pytest.raises(BadExponent):
            level_tuple_pure(std(4, PATH), d=1)

    def test_disjoint(self):
        assert level_tuple_disjoint(std(5, DISJOINT)).a == (3, 2, 2, 2, 2)

    def test_disjoint_rejects_overlap(self):
        with pytest.raises(NotDisjoint):
            level_tuple_disjoint(std(4, FOREST))

    def test_forest(self):
        assert level_tuple_forest(std(4, FOREST)).a == (2, 2, 2, 3)
        assert level_tuple_forest(std(4, PATH)).a == (2, 2, 2, 2)

    def test_forest_rejects_cycle(self):
        with pytest.raises(NotForest):
            level_tuple_forest(nonlevelable_family(5))

    def test_scale(self):
        assert scale_tuple((2, 2, 2, 3), 3).a == (4, 4, 4, 7)
        with pytest.raises(BadExponent):
            scale_tuple((2, 2), 0)

    @pytest.mark.property_based
    @given(st.integers(0, 10 ** 6), st.integers(4, 6), st.integers(2, 3))
    @settings(max_examples=100, deadline=None)
    def test_pure_complexes_level_with_constant_tuples(self, seed, n, size):
        c = random_pure_complex(seeded(seed), n, size)
        assert decide_levelable(c).certificate.a == (2,) * n
        for d in (2, 3, 4):
            assert level_tuple_pure(c, d=d).a == (d,) * n
            assert verify_certificate(c, level_tuple_pure(c, d=d))

    @pytest.mark.property_based
    @given(st.integers(0, 10 ** 6), st.integers(1, 5))
    @settings(max_examples=50, deadline=None)
    def test_scaling_keeps_level(self, seed, factor):
        c = random_pure_complex(seeded(seed), 5, 3)
        assert verify_certificate(c, scale_tuple(level_tuple_pure(c), factor))

    @pytest.mark.property_based
    @given(st.integers(0, 10 ** 6), st.integers(2, 8))
    @settings(max_examples=100, deadline=None)
    def test_disjoint_certificates_verify(self, seed, n):
        c = random_disjoint_complex(seeded(seed), n)
        a = level_tuple_disjoint(c)
        assert all(value >= 2 for value in a.a)
        assert verify_certificate(c, a)
        assert decide_levelable(c).levelable

    @pytest.mark.property_based
    @given(st.integers(0, 10 ** 6), st.integers(1, 5))
    @settings(max_examples=100, deadline=None)
    def test_forest_certificates_verify(self, seed, t):
        c = random_forest(seeded(seed), t)
        a = level_tuple_forest(c)
        assert all(value >= 2 for value in a.a)
        assert len(set(facet_weights(c, a.a))) == 1
        assert verify_certificate(c, a)
        assert decide_levelable(c).levelable


class TestConstructDispatch:
    def test_auto_prefers_pure(self):
        built = construct(std(4, PATH))
        assert built.strategy == "pure"
        assert built.verified

    def test_auto_falls_back_to_forest(self):
        built = construct(std(4, FOREST))
        assert built.strategy == "forest"
        assert built.certificate.a == (2, 2, 2, 3)
        assert len(built.skipped) == 2

    def test_auto_on_delta5_reaches_solver(self):
        built = construct(nonlevelable_family(5))
        assert built.strategy == "solver"
        assert built.certificate is None
        assert not built.verified
        assert built.decision.verdict == Verdict.NOT_LEVELABLE
        assert [s.split(":")[0] for s in built.skipped] == ["pure", "disjoint", "forest"]

    def test_explicit_strategy_failure(self):
        with pytest.raises(StrategyInapplicable):
            construct(nonlevelable_family(5), "forest")

    def test_unknown_strategy(self):
        with pytest.raises(StrategyInapplicable):
            construct(std(4, PATH), "magic")


class TestFamily:
    def test_odd_display_order(self):
        assert nonlevelable_family_facets(5) == [[1, 3, 5], [2, 4], [1, 4], [2, 5]]
        assert nonlevelable_family_facets(7) == [[1, 3, 5, 7], [2, 4, 6], [1, 4, 6], [2, 5, 7]]

    def test_even_display_order(self):
        assert nonlevelable_family_facets(6) == [[1, 3, 5, 6], [2, 5, 6], [1, 4], [2, 4]]

    def test_too_small(self):
        with pytest.raises(TooSmall):
            nonlevelable_family_facets(4)

    def test_complex_is_canonical(self):
        c = nonlevelable_family(6)
        assert [f.members for f in c.facets] == [(1, 3, 5, 6), (1, 4), (2, 4), (2, 5, 6)]


def main():
    """Run the levelability tests"""
    return pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
