from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fstopo.algebra import (
    CapExceededError,
    ContextMismatchError,
    FuzzySet,
    GradeLattice,
    Universe,
)
from fstopo.softsets import (
    FuzzySoftSet,
    ParameterSet,
    count_lattice_sets,
    disjoint,
    enumerate_lattice_sets,
    parse_fss_literal,
)

U = Universe.of("x", "y")
E = ParameterSet.of("e1", "e2")
DESK = GradeLattice.close(["1/2"])


def fss(assignment):
    return FuzzySoftSet.build(U, E, assignment)


def desk_sets():
    """All 81 fuzzy soft sets over the shared context, as a strategy."""
    pool = enumerate_lattice_sets(U, E, DESK)
    return st.sampled_from(pool)


class TestConstruction:
    def test_build_fills_missing_parameters_with_null(self):
        g = fss({"e1": {"x": "1/2"}})
        assert g.value_for("e1").grade_of("x") == Fraction(1, 2)
        assert g.value_for("e2").is_null()

    def test_build_rejects_unknown_parameter(self):
        with pytest.raises(KeyError):
            fss({"e9": {"x": 1}})

    def test_value_count_must_match(self):
        one = FuzzySet.constant(U, 1)
        with pytest.raises(ValueError):
            FuzzySoftSet(U, E, (one,))

    def test_null_and_full(self):
        assert FuzzySoftSet.null(U, E).is_null()
        assert FuzzySoftSet.full(U, E).is_full()

    def test_support(self):
        assert fss({"e2": {"y": 1}}).support() == ("e2",)
        assert FuzzySoftSet.null(U, E).support() == ()


class TestLatticeOps:
    def test_union_intersection_are_pointwise(self):
        g = fss({"e1": {"x": "1/2", "y": 1}})
        h = fss({"e1": {"x": 1}, "e2": {"y": "1/2"}})
        assert g.union(h) == fss({"e1": {"x": 1, "y": 1}, "e2": {"y": "1/2"}})
        assert g.intersection(h) == fss({"e1": {"x": "1/2"}})

    def test_complement_is_one_minus(self):
        g = fss({"e1": {"x": "1/2", "y": 1}})
        c = g.complement()
        assert c.grade_of("e1", "x") == Fraction(1, 2)
        assert c.grade_of("e1", "y") == 0
        assert c.grade_of("e2", "x") == 1

    def test_leq_and_proper_subset(self):
        small = fss({"e1": {"x": "1/2"}})
        big = fss({"e1": {"x": "1/2", "y": "1/2"}})
        assert small.leq(big) and small.is_proper_subset_of(big)
        assert not big.leq(small)
        assert not big.is_proper_subset_of(big)

    def test_context_mismatch_refused(self):
        other = FuzzySoftSet.build(U, ParameterSet.of("a"), {})
        with pytest.raises(ContextMismatchError):
            fss({}).union(other)

    @given(desk_sets(), desk_sets())
    def test_de_morgan(self, g, h):
        assert g.union(h).complement() == g.complement().intersection(h.complement())

    @given(desk_sets(), desk_sets(), desk_sets())
    def test_distributivity(self, g, h, k):
        left = g.intersection(h.union(k))
        right = g.intersection(h).union(g.intersection(k))
        assert left == right

    @given(desk_sets())
    def test_involution(self, g):
        assert g.complement().complement() == g


class TestDisjointness:
    def test_pointwise_reads_per_parameter(self):
        g = fss({"e1": {"x": "1/2"}})
        h = fss({"e2": {"x": "1/2"}})
        assert disjoint(g, h)  # same parameter minima are all zero

    def test_cross_parameter_is_stronger(self):
        g = fss({"e1": {"x": "1/2"}})
        h = fss({"e2": {"x": "1/2"}})
        assert not disjoint(g, h, mode="cross_parameter")
        k = fss({"e2": {"y": "1/2"}})
        assert disjoint(g, k, mode="cross_parameter")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            disjoint(fss({}), fss({}), mode="fancy")


class TestEnumeration:
    def test_count_and_enumerate_agree(self):
        assert count_lattice_sets(U, E, DESK) == 81
        pool = enumerate_lattice_sets(U, E, DESK)
        assert len(pool) == len(set(pool)) == 81

    def test_canonical_order(self):
        pool = enumerate_lattice_sets(U, E, DESK)
        keys = [g.sort_key() for g in pool]
        assert keys == sorted(keys)
        assert pool[0].is_null() and pool[-1].is_full()

    def test_bounded_enumeration(self):
        bound = fss({"e1": {"x": "1/2"}})
        below = enumerate_lattice_sets(U, E, DESK, bound=bound)
        assert all(g.leq(bound) for g in below)
        assert len(below) == count_lattice_sets(U, E, DESK, bound=bound) == 2

    def test_cap_refusal_names_the_count(self):
        with pytest.raises(CapExceededError) as err:
            enumerate_lattice_sets(U, E, DESK, cap=10)
        assert err.value.required == 81


class TestLiteral:
    @given(desk_sets())
    def test_render_parse_round_trip(self, g):
        assert parse_fss_literal(g.render(), U, E) == g

    def test_partial_literal_defaults_to_zero(self):
        g = parse_fss_literal("{e2: {y: 1}}", U, E)
        assert g == fss({"e2": {"y": 1}})

    def test_bad_literals(self):
        with pytest.raises(ValueError):
            parse_fss_literal("e1: {x: 1}", U, E)
        with pytest.raises(KeyError):
            parse_fss_literal("{zz: {x: 1}}", U, E)
        with pytest.raises(KeyError):
            parse_fss_literal("{e1: {zz: 1}}", U, E)
        with pytest.raises(ValueError):
            parse_fss_literal("{e1: {x: 1} junk}", U, E)
