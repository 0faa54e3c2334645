"""Pointwise operations, closures, and the identity-function interpretation."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import F, G, H, K, M

from diffrest import (
    AlgebraError,
    BaseMismatchError,
    FunctionalityError,
    PartialFunction,
    SizeCapError,
    boolean_as_diffrest,
    canonical_form,
    check_axioms,
    check_derived_laws,
    close_generators,
    close_relations,
    empty_pf,
    format_pf_literal,
    is_injective_pf,
    pf_minus,
    pf_restrict,
    random_generators,
)

BASE = frozenset({1, 2})


def pf(pairs, base=BASE):
    return PartialFunction(base, pairs)


def test_pf_minus_examples(f2):
    h, k, m = f2.elements[H], f2.elements[K], f2.elements[M]
    assert pf_minus(h, k).graph == m.graph
    assert pf_minus(k, k).graph == frozenset()
    assert pf_minus(k, empty_pf(BASE)).graph == k.graph


def test_pf_restrict_examples(f2, f4):
    h, k = f2.elements[H], f2.elements[K]
    assert pf_restrict(k, h).graph == k.graph
    assert pf_restrict(empty_pf(BASE), h).graph == frozenset()
    f, g = f4.elements[F], f4.elements[G]
    assert pf_restrict(f, g).graph == g.graph


def test_base_mismatch():
    with pytest.raises(BaseMismatchError):
        pf_minus(pf([(1, 1)]), pf([(1, 1)], base=frozenset({1})))


def test_functionality_rejected():
    with pytest.raises(FunctionalityError) as err:
        pf([(1, 1), (1, 2)])
    assert err.value.offending == ((1, 1), (1, 2))


def test_pair_outside_base_rejected():
    with pytest.raises(AlgebraError, match="outside the base"):
        pf([(1, 3)])


def test_close_generators_f3(f3):
    assert f3.abstract.size == 3
    assert f3.elements[2].graph == frozenset()


def test_close_generators_f2_order(f2):
    # generators in the given order, then the lexicographically least product
    assert [sorted(e.graph) for e in f2.elements] == [
        [(1, 1)],
        [(2, 2)],
        [(1, 1), (2, 2)],
        [],
    ]


def test_close_generators_requires_a_generator():
    with pytest.raises(AlgebraError, match="at least one generator"):
        close_generators(BASE, [])


def test_close_generators_cap():
    base = range(1, 8)
    full = PartialFunction(base, [(x, x) for x in base])
    co = [
        PartialFunction(base, [(x, x) for x in base if x != i]) for i in range(1, 7)
    ]
    with pytest.raises(SizeCapError):
        close_generators(base, [full, *co])


def test_close_relations_n1(n1):
    alg, graphs = n1
    assert alg.size == 4
    assert [sorted(g) for g in graphs] == [
        [(1, 1), (1, 2)],
        [(1, 1)],
        [],
        [(1, 2)],
    ]


def test_concrete_dictionary_coherence(f2):
    alg = f2.abstract
    for i, fi in f2.dictionary.items():
        for j, fj in f2.dictionary.items():
            assert f2.elements[alg.minus[i][j]].graph == pf_minus(fi, fj).graph
            assert f2.elements[alg.restrict[i][j]].graph == pf_restrict(fi, fj).graph


def test_boolean_as_diffrest_counts():
    for u, expected in ((0, 1), (1, 2), (2, 4), (3, 8)):
        conc = boolean_as_diffrest(u)
        assert conc.abstract.size == expected
        assert check_axioms(conc.abstract).passed


def test_boolean_as_diffrest_matches_f2(f2):
    conc = boolean_as_diffrest(2)
    assert canonical_form(conc.abstract) == canonical_form(f2.abstract)


def test_boolean_as_diffrest_rejects_non_field():
    with pytest.raises(AlgebraError, match="universe is missing"):
        boolean_as_diffrest([{1}, {2}])
    with pytest.raises(AlgebraError, match="complement"):
        boolean_as_diffrest([{1, 2}, {1}, set()])


def test_is_injective_pf():
    assert is_injective_pf(empty_pf(BASE))
    assert is_injective_pf(pf([(1, 1)]))
    assert not is_injective_pf(pf([(1, 1), (2, 1)]))


def test_literal_format():
    assert format_pf_literal(pf([(2, 2), (1, 1)])) == "{1->1, 2->2}"
    assert format_pf_literal(empty_pf(BASE)) == "{}"


def test_random_generators_deterministic():
    a = random_generators(random.Random(5), range(1, 5), 3)
    b = random_generators(random.Random(5), range(1, 5), 3)
    assert [g.graph for g in a] == [g.graph for g in b]


def test_random_closures_sound():
    rng = random.Random(11)
    for _ in range(40):
        base = range(1, rng.randint(1, 4) + 1)
        conc = close_generators(base, random_generators(rng, base, rng.randint(1, 3)))
        assert check_axioms(conc.abstract).passed
        assert check_derived_laws(conc.abstract).passed


points = st.sampled_from((1, 2, 3))
functional_graphs = st.dictionaries(points, points, max_size=3).map(
    lambda d: PartialFunction({1, 2, 3}, d.items())
)


@given(functional_graphs, functional_graphs)
def test_restriction_domain_is_intersection(f, g):
    assert pf_restrict(f, g).domain == f.domain & g.domain


@given(functional_graphs, functional_graphs)
def test_restriction_shrinks_second_argument(f, g):
    assert pf_restrict(f, g).graph <= g.graph


@given(functional_graphs, functional_graphs)
def test_double_minus_is_graph_intersection(f, g):
    assert pf_minus(f, pf_minus(f, g)).graph == f.graph & g.graph


@given(functional_graphs, functional_graphs, functional_graphs)
def test_minus_arguments_commute(f, g, h):
    lhs = pf_minus(pf_minus(f, g), h)
    rhs = pf_minus(pf_minus(f, h), g)
    assert lhs.graph == rhs.graph


@given(functional_graphs, functional_graphs, functional_graphs)
def test_restrict_associative(f, g, h):
    assert (
        pf_restrict(f, pf_restrict(g, h)).graph
        == pf_restrict(pf_restrict(f, g), h).graph
    )


@settings(max_examples=30)
@given(st.lists(functional_graphs, min_size=1, max_size=3))
def test_closures_of_arbitrary_generators_satisfy_axioms(gens):
    conc = close_generators({1, 2, 3}, gens)
    assert check_axioms(conc.abstract).passed
