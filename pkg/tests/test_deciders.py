"""Decider behavior on small handmade spaces.

The crisp spaces here mirror classical point-set facts: the discrete
space on two elements is T4, the indiscrete space separates nothing,
and the split topology {null, {x}, {y}, carrier} is disconnected.
"""

import pytest

from fstopo.algebra import GradeLattice, Universe
from fstopo.deciders import (
    DeciderConfig,
    DeciderPreconditionError,
    clopen_witness,
    find_separation,
    is_connected,
    is_normal,
    is_regular,
    is_t0,
    is_t1,
    is_t2,
    is_t3,
    is_t4,
    points_all_closed,
    subspace_separation,
)
from fstopo.softsets import FuzzySoftSet, ParameterSet
from fstopo.topology import validate_topology

U = Universe.of("x", "y")
E = ParameterSet.of("e1")
CRISP = GradeLattice.close([])


def fss(assignment):
    return FuzzySoftSet.build(U, E, assignment)


NULL = FuzzySoftSet.null(U, E)
FULL = FuzzySoftSet.full(U, E)
OX = fss({"e1": {"x": 1}})
OY = fss({"e1": {"y": 1}})


@pytest.fixture
def discrete():
    return validate_topology(FULL, [NULL, OX, OY, FULL])


@pytest.fixture
def indiscrete():
    return validate_topology(FULL, [NULL, FULL])


@pytest.fixture
def sierpinski():
    return validate_topology(FULL, [NULL, OX, FULL])


def crisp_cfg(**overrides):
    return DeciderConfig(lattice=CRISP, **overrides)


class TestSeparationOnCrispSpaces:
    def test_discrete_two_element_verdicts(self, discrete):
        # not the classical picture: the full point {x:1, y:1} lies above
        # {x:1}, and comparable point pairs can never be separated
        cfg = crisp_cfg()
        assert is_t0(discrete, cfg).holds
        assert not is_t1(discrete, cfg).holds
        assert not is_t2(discrete, cfg).holds
        assert not is_regular(discrete, cfg).holds
        assert is_normal(discrete, cfg).holds
        assert points_all_closed(discrete, cfg).holds

    def test_singleton_space_satisfies_the_whole_chain(self):
        u1 = Universe.of("x")
        null = FuzzySoftSet.null(u1, E)
        full = FuzzySoftSet.full(u1, E)
        space = validate_topology(full, [null, full])
        cfg = crisp_cfg()
        for decide in (is_t0, is_t1, is_t2, is_regular, is_t3,
                       is_normal, is_t4, points_all_closed):
            assert decide(space, cfg).holds, decide.__name__

    def test_indiscrete_fails_t1(self, indiscrete):
        cfg = crisp_cfg()
        assert not is_t1(indiscrete, cfg).holds
        assert not is_t2(indiscrete, cfg).holds

    def test_indiscrete_is_vacuously_regular_and_normal(self, indiscrete):
        cfg = crisp_cfg()
        assert is_regular(indiscrete, cfg).holds
        assert is_normal(indiscrete, cfg).holds

    def test_sierpinski_is_t0_but_not_t1(self, sierpinski):
        cfg = crisp_cfg()
        assert is_t0(sierpinski, cfg).holds
        verdict = is_t1(sierpinski, cfg)
        assert not verdict.holds
        assert verdict.witness is not None
        assert verdict.witness.kind == "point-pair"

    def test_t3_t4_are_conjunctions(self, discrete, sierpinski):
        cfg = crisp_cfg()
        # T1 fails on both, so the conjunctions fail and name the part
        assert not is_t3(sierpinski, cfg).holds
        assert not is_t4(sierpinski, cfg).holds
        verdict = is_t4(discrete, cfg)
        assert not verdict.holds and verdict.detail == "T1 fails"

    def test_points_closed_on_discrete_only(self, discrete, sierpinski):
        cfg = crisp_cfg()
        assert points_all_closed(discrete, cfg).holds
        assert not points_all_closed(sierpinski, cfg).holds


class TestConfigSensitivity:
    def test_verdict_depends_on_the_lattice(self):
        # same space, different grade set, different T1 answer
        u1 = Universe.of("x")
        null = FuzzySoftSet.null(u1, E)
        full = FuzzySoftSet.full(u1, E)
        half = FuzzySoftSet.build(u1, E, {"e1": {"x": "1/2"}})
        space = validate_topology(full, [null, half, full])
        assert is_t1(space, crisp_cfg()).holds  # single crisp point
        rich = DeciderConfig(lattice=GradeLattice.close(["1/2"]))
        assert not is_t1(space, rich).holds  # {x:1/2} below {x:1}

    def test_pair_relation_override(self, discrete):
        # restricting T2 to disjoint pairs sidesteps comparable ones
        relaxed = crisp_cfg(point_pair_relation="disjoint")
        assert is_t2(discrete, relaxed).holds
        assert not is_t2(discrete, crisp_cfg()).holds

    def test_config_validation(self):
        with pytest.raises(ValueError):
            DeciderConfig(lattice=CRISP, disjointness_mode="sideways")
        with pytest.raises(ValueError):
            DeciderConfig(lattice=CRISP, point_pair_relation="same")
        with pytest.raises(ValueError):
            DeciderConfig(lattice=CRISP, regular_reading="loose")

    def test_auto_config_closes_occurring_grades(self, discrete):
        half = fss({"e1": {"x": "1/3"}})
        space = validate_topology(FULL, [NULL, half, FULL])
        cfg = DeciderConfig.auto_for(space)
        assert sorted(cfg.lattice) == sorted(GradeLattice.close(["1/3"]))

    def test_relation_defaults(self):
        cfg = crisp_cfg()
        assert cfg.relation_for("T0") == "disjoint"
        assert cfg.relation_for("T1") == "distinct"
        assert cfg.relation_for("T2") == "distinct"

    def test_payload_uses_exact_strings(self):
        payload = DeciderConfig(lattice=GradeLattice.close(["1/2"])).to_payload()
        assert payload["lattice"] == ["0", "1/2", "1"]


class TestConnectedness:
    def test_split_space_is_disconnected(self, discrete):
        cfg = crisp_cfg()
        verdict = is_connected(discrete, cfg)
        assert not verdict.holds
        # canonical order sorts by grade vector, so OY comes first
        assert find_separation(discrete, cfg) == (OY, OX)
        assert clopen_witness(discrete) == OY

    def test_indiscrete_is_connected(self, indiscrete):
        cfg = crisp_cfg()
        assert is_connected(indiscrete, cfg).holds
        assert clopen_witness(indiscrete) is None

    def test_sierpinski_is_connected(self, sierpinski):
        assert is_connected(sierpinski, crisp_cfg()).holds
        assert clopen_witness(sierpinski) is None

    def test_cross_parameter_mode_changes_the_answer(self):
        e2 = ParameterSet.of("e1", "e2")
        null = FuzzySoftSet.null(U, e2)
        full = FuzzySoftSet.full(U, e2)
        a = FuzzySoftSet.build(U, e2, {"e1": {"x": 1, "y": 1}})
        b = FuzzySoftSet.build(U, e2, {"e2": {"x": 1, "y": 1}})
        space = validate_topology(full, [null, a, b, full])
        assert not is_connected(space, crisp_cfg()).holds
        strict = crisp_cfg(disjointness_mode="cross_parameter")
        assert is_connected(space, strict).holds


class TestSubspaceSeparation:
    def test_closure_sense_split(self, discrete):
        view = discrete.subspace(FULL)
        assert subspace_separation(view, OX, OY, crisp_cfg())

    def test_rejects_null_parts_and_wrong_unions(self, discrete):
        view = discrete.subspace(FULL)
        with pytest.raises(DeciderPreconditionError):
            subspace_separation(view, NULL, FULL, crisp_cfg())
        with pytest.raises(DeciderPreconditionError):
            subspace_separation(view, OX, OX, crisp_cfg())

    def test_overlapping_closures_are_not_a_split(self, sierpinski):
        view = sierpinski.subspace(FULL)
        # cl({x}) is the carrier, which meets {y}
        assert not subspace_separation(view, OX, OY, crisp_cfg())


class TestVerdictShape:
    def test_failed_verdict_requires_witness(self, discrete):
        from fstopo.deciders import AxiomVerdict
        with pytest.raises(ValueError):
            AxiomVerdict("T0", False, crisp_cfg())

    def test_witness_payload_and_render(self, sierpinski):
        verdict = is_t1(sierpinski, crisp_cfg())
        payload = verdict.to_payload()
        assert payload["axiom"] == "T1"
        assert payload["holds"] is False
        assert payload["witness"]["kind"] == "point-pair"
        assert "@" in verdict.witness.render()
