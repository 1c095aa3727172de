import pytest

from fstopo.algebra import CapExceededError, GradeLattice, Universe
from fstopo.corpus import (
    CorpusSpec,
    SpaceCorpus,
    close_family,
    named_spaces,
    random_space_ids,
)
from fstopo.points import point_in
from fstopo.softsets import ParameterSet
from fstopo.topology import validate_topology


class TestSetPool:
    def test_size_and_bounds(self, desk_pool):
        assert desk_pool.size == 81
        assert desk_pool.null_id == 0
        assert desk_pool.full_id == 80
        assert desk_pool.decode(0).is_null()
        assert desk_pool.decode(80).is_full()

    def test_encode_decode_round_trip(self, desk_pool):
        for i in range(desk_pool.size):
            assert desk_pool.encode(desk_pool.decode(i)) == i

    def test_id_order_extends_the_set_order(self, desk_pool):
        # cellwise comparable sets compare the same way as their ids
        for i in range(desk_pool.size):
            gi = desk_pool.decode(i)
            for j in range(desk_pool.size):
                if desk_pool.leq(i, j):
                    assert gi.leq(desk_pool.decode(j))
                    assert i <= j

    def test_tables_match_object_operations(self, desk_pool):
        sample = range(0, desk_pool.size, 7)
        for i in sample:
            gi = desk_pool.decode(i)
            assert desk_pool.decode(desk_pool.comp[i]) == gi.complement()
            for j in sample:
                gj = desk_pool.decode(j)
                assert desk_pool.decode(desk_pool.meet[i][j]) == gi.intersection(gj)
                assert desk_pool.decode(desk_pool.join[i][j]) == gi.union(gj)

    def test_disjointness_mask(self, desk_pool):
        for i in range(desk_pool.size):
            for j in range(desk_pool.size):
                bit = (desk_pool.disj_mask[i] >> j) & 1
                assert bit == (desk_pool.meet[i][j] == 0)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            SetPool_small()

    def test_point_membership_masks(self, desk_pool):
        desk_pool.build_points()
        assert len(desk_pool.points) == 2 * 8
        for idx in range(len(desk_pool.points)):
            p = desk_pool.decode_point(idx)
            mask = desk_pool.pt_in_mask[idx]
            for s in range(desk_pool.size):
                assert bool((mask >> s) & 1) == point_in(p, desk_pool.decode(s))

    def test_point_form_ids(self, desk_pool):
        desk_pool.build_points()
        for idx in range(len(desk_pool.points)):
            p = desk_pool.decode_point(idx)
            form = desk_pool.decode(desk_pool.pt_form_id[idx])
            assert form == p.as_fss()


def SetPool_small():
    from fstopo.corpus import SetPool

    return SetPool(
        Universe.of("x", "y"),
        ParameterSet.of("e1", "e2"),
        GradeLattice.close(["1/2"]),
        cap=10,
    )


class TestCloseFamily:
    def test_always_contains_null_and_full(self, desk_pool):
        fam = close_family(desk_pool, (17, 53), 64)
        assert fam is not None
        assert desk_pool.null_id in fam and desk_pool.full_id in fam

    def test_closure_is_min_max_closed(self, desk_pool):
        fam = sorted(close_family(desk_pool, (17, 53, 29), 64))
        for a in fam:
            for b in fam:
                assert desk_pool.meet[a][b] in fam
                assert desk_pool.join[a][b] in fam

    def test_opens_bound_refusal(self, desk_pool):
        assert close_family(desk_pool, (17, 53, 29), 4) is None


@pytest.fixture(scope="module")
def tiny():
    # one parameter keeps the pool at 9 sets, enumeration instant
    return SpaceCorpus(CorpusSpec(
        universe=Universe.of("x", "y"),
        parameters=ParameterSet.of("e1"),
        lattice=GradeLattice.close(["1/2"]),
    ))


class TestEnumeration:
    def test_spaces_are_distinct_and_sorted(self, tiny):
        assert len(set(tiny.spaces)) == len(tiny.spaces) == tiny.stats.distinct
        assert tiny.spaces == sorted(tiny.spaces, key=lambda t: (len(t), t))

    def test_every_space_validates(self, tiny):
        for ids in tiny.spaces:
            space = tiny.materialize(ids)
            revalidated = validate_topology(space.carrier, space.opens)
            assert revalidated.opens == space.opens

    def test_family_accounting(self, tiny):
        expected = tiny.spec.family_count(tiny.pool.size)
        assert tiny.stats.families_scanned == expected
        assert tiny.stats.skipped_over_max_opens == 0

    def test_labels(self, tiny):
        assert tiny.label(7) == "enum-00007"

    def test_desk_spec_shape(self):
        spec = CorpusSpec.desk()
        assert list(spec.universe) == ["x", "y"]
        assert list(spec.parameters) == ["e1", "e2"]
        assert len(spec.lattice) == 3


class TestRandomSpaces:
    def test_deterministic_in_seed(self, desk_pool):
        spec = CorpusSpec.desk()
        a = random_space_ids(123, spec, desk_pool)
        b = random_space_ids(123, spec, desk_pool)
        assert a == b

    def test_draws_are_valid_topologies(self, desk_pool):
        spec = CorpusSpec.desk()
        for seed in range(10):
            ids = random_space_ids(seed, spec, desk_pool)
            for a in ids:
                for b in ids:
                    assert desk_pool.meet[a][b] in set(ids)
                    assert desk_pool.join[a][b] in set(ids)
            assert ids[0] == desk_pool.null_id
            assert ids[-1] == desk_pool.full_id


class TestNamedCatalogue:
    def test_unique_labels_and_valid_spaces(self):
        catalogue = named_spaces()
        labels = [n.label for n in catalogue]
        assert len(labels) == len(set(labels)) == 9
        for named in catalogue:
            space = named.materialize()
            assert validate_topology(space.carrier, space.opens)
            assert named.carrier_id == max(named.ids)

    def test_catalogue_reaches_what_enumeration_cannot(self):
        # a genuinely disconnected space and a sub-carrier space exist
        by_label = {n.label: n for n in named_spaces()}
        assert "named-split-half" in by_label
        assert "named-subcarrier-indiscrete" in by_label
