"""Claim registry structure plus the two-path cross-check.

The claim evaluators run on integer-encoded spaces for speed.  The
cross-check here re-decides closure, interior, the separation axioms and
connectedness through the object-level engine on a sample of enumerated
spaces and on the whole named catalogue; any drift between the two paths
is a soundness bug, not a modeling choice.
"""

import pytest

from fstopo.claims import (
    ASSERTED,
    AUDITED,
    CLAIM_INDEX,
    CLAIMS,
    REPRODUCED,
    SpaceCase,
    evaluate_fixed_claims,
    evaluate_pool_claims,
    evaluate_space_case,
    registry_selfcheck,
    select_claims,
)
from fstopo.corpus import CorpusSpec, SpaceCorpus, named_spaces
from fstopo.deciders import (
    DeciderConfig,
    find_separation,
    is_normal,
    is_regular,
    is_t0,
    is_t1,
    is_t2,
    points_all_closed,
)


@pytest.fixture(scope="module")
def corpus():
    return SpaceCorpus(CorpusSpec.desk())


def make_cases(corpus, stride=977):
    cases = [
        SpaceCase(corpus.label(i), corpus.pool, corpus.spaces[i])
        for i in range(0, len(corpus.spaces), stride)
    ]
    for named in named_spaces():
        cases.append(SpaceCase(named.label, named.pool, named.ids))
    return cases


class TestRegistry:
    def test_selfcheck(self):
        registry_selfcheck()

    def test_size_and_unique_idents(self):
        assert len(CLAIMS) == 67
        assert len(CLAIM_INDEX) == len(CLAIMS)

    def test_classifications(self):
        kinds = {c.classification for c in CLAIMS}
        assert kinds == {ASSERTED, AUDITED, REPRODUCED}

    def test_scopes(self):
        assert {c.scope for c in CLAIMS} == {"space", "pool", "fixed"}

    def test_select_all(self):
        assert select_claims(None) == CLAIMS
        assert select_claims("all") == CLAIMS

    def test_select_exact_and_family(self):
        assert [c.ident for c in select_claims("CL.1")] == ["CL.1"]
        family = [c.ident for c in select_claims("CON.CLOPEN")]
        assert family == ["CON.CLOPEN-fwd", "CON.CLOPEN-rev"]

    def test_select_unknown_is_empty(self):
        assert select_claims("CL.99") == ()

    def test_statements_are_self_contained(self):
        for c in CLAIMS:
            assert c.statement and c.coverage
            assert c.ident == c.ident.strip()


class TestCrossCheck:
    """Integer path against object path on the same spaces."""

    def test_closure_and_interior_rows(self, corpus):
        for case in make_cases(corpus, stride=1901):
            space = case_space(case)
            cl, it = case.cl(), case.interior()
            pool = case.pool
            for g in range(0, pool.size, 5):
                gset = pool.decode(g)
                assert pool.decode(cl[g]) == space.closure(gset)
                assert pool.decode(it[g]) == space.interior(gset)

    def test_axioms_agree_with_deciders(self, corpus):
        deciders = (
            ("t0", is_t0), ("t1", is_t1), ("t2", is_t2),
            ("regular", is_regular), ("normal", is_normal),
        )
        for case in make_cases(corpus):
            space = case_space(case)
            cfg = DeciderConfig(lattice=case.pool.lattice)
            for name, decide in deciders:
                assert getattr(case, name)() == decide(space, cfg).holds, (
                    case.label, name)
            assert case.points_closed() == points_all_closed(space, cfg).holds

    def test_connectedness_agrees(self, corpus):
        for case in make_cases(corpus):
            space = case_space(case)
            cfg = DeciderConfig(lattice=case.pool.lattice)
            connected, sep = case.conn(case.carrier)
            assert connected == (find_separation(space, cfg) is None), case.label
            if sep is not None:
                a, b = sep
                pool = case.pool
                assert pool.meet[a][b] == pool.null_id
                assert pool.join[a][b] == case.carrier

    def test_traces_match_subspace_opens(self, corpus):
        case = make_cases(corpus, stride=2500)[0]
        space = case_space(case)
        pool = case.pool
        for g in case.opens:
            view = space.subspace(pool.decode(g))
            traced = [pool.decode(t) for t in case.traces(g)]
            assert tuple(traced) == view.opens


def case_space(case):
    pool = case.pool
    from fstopo.topology import FuzzySoftTopology

    return FuzzySoftTopology(
        carrier=pool.decode(case.carrier),
        opens=tuple(pool.decode(i) for i in case.ids),
    )


class TestEvaluation:
    def test_space_claims_pass_on_an_enumerated_case(self, corpus):
        case = SpaceCase(corpus.label(0), corpus.pool, corpus.spaces[0])
        results = evaluate_space_case(case)
        for ident, (checked, hits, fails) in results.items():
            claim = CLAIM_INDEX[ident]
            if claim.classification == ASSERTED:
                assert fails == [], ident

    def test_exhaustive_flag_widens_the_scan(self, corpus):
        ids = corpus.spaces[min(40, len(corpus.spaces) - 1)]
        probed = evaluate_space_case(
            SpaceCase("a", corpus.pool, ids), idents=["CL.3"])
        widened = evaluate_space_case(
            SpaceCase("a", corpus.pool, ids, exhaustive=True), idents=["CL.3"])
        assert widened["CL.3"][0] >= probed["CL.3"][0]

    def test_pool_claims_on_desk(self, desk_pool):
        results = evaluate_pool_claims(desk_pool)
        # PT.1 and PT.5-converse are counterexample records by design
        assert results["PT.1"][2]
        assert results["PT.5-converse"][2]
        for ident in ("ALG.INVOLUTION", "ALG.DEMORGAN-UNION",
                      "ALG.DEMORGAN-INTERSECTION", "PT.3", "PT.4",
                      "PT.5-sound", "PT.6"):
            checked, hits, fails = results[ident]
            assert checked > 0 and fails == [], ident

    def test_fixed_claims_replay(self):
        for ident, (checked, hits, fails) in evaluate_fixed_claims().items():
            assert (checked, hits, fails) == (1, 1, []), ident

    def test_filtering_by_ident(self, corpus):
        case = SpaceCase(corpus.label(0), corpus.pool, corpus.spaces[0])
        only = evaluate_space_case(case, idents=["CL.1", "CL.2"])
        assert set(only) == {"CL.1", "CL.2"}
