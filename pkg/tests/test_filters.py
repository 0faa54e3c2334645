"""Filter enumeration, the lifted preorder, and the downset bijection."""

import itertools

import pytest

from conftest import F, G, H, K, M

from diffrest import (
    Filter,
    ImproperFilterError,
    domain_quotient,
    domhat_pair,
    enumerate_filters,
    extend_to_maximal,
    filter_down,
    filter_meet,
    filter_up_check,
    is_maximal,
    maximal_filters,
    principal_filter,
    project_filter,
    ultrafilter_bijection,
)


def members(alg, *ids):
    return Filter(alg, frozenset(ids))


def brute_force_filters(alg):
    """All nonempty, upward-closed, meet-closed subsets, by subset scan."""
    out = set()
    elems = range(alg.size)
    for r in range(1, alg.size + 1):
        for combo in itertools.combinations(elems, r):
            s = frozenset(combo)
            if all(b in s for a in s for b in elems if alg.leq(a, b)) and all(
                alg.meet(a, b) in s for a in s for b in s
            ):
                out.add(s)
    return out


def test_enumeration_is_exhaustive(f0, f1, f2, f3, f4):
    for alg in (f0, f1.abstract, f2.abstract, f3.abstract, f4.abstract):
        family = enumerate_filters(alg)
        assert {f.members for f in family.all_filters} == brute_force_filters(alg)


def test_f2_filters(f2):
    alg = f2.abstract
    family = enumerate_filters(alg)
    assert {f.members for f in family.all_filters} == {
        frozenset({H}),
        frozenset({K, H}),
        frozenset({M, H}),
        frozenset(range(4)),
    }
    assert {f.members for f in family.maximal} == {
        frozenset({K, H}),
        frozenset({M, H}),
    }


def test_f4_filters_share_a_class(f4):
    alg = f4.abstract
    family = enumerate_filters(alg)
    i = family.index_of(members(alg, F))
    j = family.index_of(members(alg, G))
    assert family.approx_class[i] == family.approx_class[j]
    assert members(alg, F).members != members(alg, G).members


def test_f0_has_only_the_full_filter(f0):
    family = enumerate_filters(f0)
    assert len(family.all_filters) == 1
    assert family.maximal == ()


def test_filter_meet_examples(f2, f4):
    alg = f2.abstract
    full = frozenset(range(4))
    assert filter_meet(members(alg, K, H), members(alg, M, H)).members == full
    alg4 = f4.abstract
    assert filter_meet(members(alg4, F), members(alg4, G)).members == frozenset({F})
    for f in enumerate_filters(alg).all_filters:
        assert filter_meet(f, f).members == f.members


def test_is_maximal_criterion(f2, f1):
    alg = f2.abstract
    assert not is_maximal(members(alg, H))
    assert is_maximal(members(alg, K, H))
    assert maximal_filters(f1.abstract)[0].members == frozenset({K})


def test_filter_validation(f2):
    alg = f2.abstract
    with pytest.raises(Exception, match="upward closed"):
        Filter(alg, frozenset({K}))
    with pytest.raises(Exception, match="nonempty"):
        Filter(alg, frozenset())


def test_ultrafilter_bijection_f2(f2):
    alg = f2.abstract
    forward, backward = ultrafilter_bijection(alg, H)
    assert len(forward) == len(backward) == 2
    assert set(forward.values()) == {frozenset({K, H}), frozenset({M, H})}

    forward, backward = ultrafilter_bijection(alg, K)
    assert len(forward) == 1
    mu, nu = next(iter(forward.items()))
    assert mu.members == frozenset({K, H})
    assert nu == frozenset({K})


def test_ultrafilter_bijection_at_bottom(f2):
    assert ultrafilter_bijection(f2.abstract, f2.abstract.zero) == ({}, {})


def test_ultrafilter_bijection_at_atom(f4):
    alg = f4.abstract
    forward, backward = ultrafilter_bijection(alg, F)
    assert list(forward.values()) == [frozenset({F})]


def test_extend_to_maximal(f2, f4):
    alg = f2.abstract
    assert extend_to_maximal(members(alg, H)).members == frozenset({K, H})
    for mu in maximal_filters(alg):
        assert extend_to_maximal(mu).members == mu.members
    alg4 = f4.abstract
    assert extend_to_maximal(members(alg4, F)).members == frozenset({F})


def test_extend_rejects_improper(f2):
    full = Filter(f2.abstract, frozenset(range(4)))
    with pytest.raises(ImproperFilterError):
        extend_to_maximal(full)


def test_project_filter_f4(f4):
    alg = f4.abstract
    assert project_filter(members(alg, F)) == project_filter(members(alg, G))


def test_filter_down_lands_on_quotient_maximal(f2):
    alg = f2.abstract
    quot = domain_quotient(alg)
    for mu in maximal_filters(alg):
        image = filter_down(mu)
        assert quot.zero_class not in image


def test_filter_up_check(f2, f4):
    alg = f2.abstract
    assert filter_up_check(members(alg, K, H), members(alg, M, H)) == "improper"
    for mu in maximal_filters(alg):
        assert filter_up_check(mu, mu) == "proper-and-maximal"
    alg4 = f4.abstract
    assert (
        filter_up_check(members(alg4, F), members(alg4, G)) == "proper-and-maximal"
    )


def test_principal_embedding(f2, f3, f4):
    for conc in (f2, f3, f4):
        alg = conc.abstract
        for a in range(alg.size):
            for b in range(alg.size):
                assert alg.domleq(a, b) == domhat_pair(
                    alg, principal_filter(alg, a), principal_filter(alg, b)
                )


def test_preorder_collapses_on_shared_upsets(f2, f3, f4):
    # filters with a common element compare by inclusion only
    for conc in (f2, f3, f4):
        alg = conc.abstract
        family = enumerate_filters(alg)
        for f in family.all_filters:
            for g in family.all_filters:
                if f.members & g.members:
                    assert domhat_pair(alg, f, g) == (g.members <= f.members)


def test_below_full_filter_means_full(f2, f4):
    for conc in (f2, f4):
        alg = conc.abstract
        full = Filter(alg, frozenset(range(alg.size)))
        for f in enumerate_filters(alg).all_filters:
            if domhat_pair(alg, f, full):
                assert f.members == full.members


def test_maximal_matches_poset_maxima(f1, f2, f3, f4):
    for conc in (f1, f2, f3, f4):
        maximal_filters(conc.abstract)
