"""Filters of a finite algebra and the lifted domain preorder.

A filter is a nonempty, upward-closed, meet-closed subset of the
elements.  In a finite meet-semilattice every filter contains the meet
of its members and hence is the principal upset of that meet, so there
are exactly as many filters as elements; enumeration builds them
directly and the tests cross-check exhaustiveness against a subset
scan.

The domain preorder lifts to filters: F sits below G when restricting
the members of F by the members of G never leaves F (the product set
{g |> f : g in G, f in F} is contained in F).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    AlgebraError,
    FiniteAlgebra,
    InconsistencyError,
    boolean_downset,
    domain_quotient,
    mask_iter,
    mask_of,
)


class ImproperFilterError(AlgebraError):
    """An operation needing a proper filter was given the full filter."""


@dataclass(frozen=True)
class Filter:
    """An upward-closed, meet-closed, nonempty element subset."""

    parent: FiniteAlgebra
    members: frozenset[int]

    def __post_init__(self):
        alg = self.parent
        if not self.members:
            raise InconsistencyError("filters are nonempty")
        mask = mask_of(self.members)
        if alg.up_closure(mask) != mask:
            raise InconsistencyError(f"{sorted(self.members)} is not upward closed")
        for a in self.members:
            for b in self.members:
                if alg.meet(a, b) not in self.members:
                    raise InconsistencyError(
                        f"{sorted(self.members)} is not meet-closed at ({a}, {b})"
                    )

    @property
    def proper(self) -> bool:
        return self.parent.zero not in self.members

    def sort_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def generator(self) -> int:
        """The least element of the filter in the element order."""
        g = None
        for a in self.members:
            if g is None or self.parent.leq(a, g):
                g = a
        return g

    def render(self) -> str:
        inner = ", ".join(self.parent.element_name(a) for a in self.sort_key())
        return "{" + inner + "}"


def principal_filter(alg: FiniteAlgebra, a: int) -> Filter:
    return Filter(alg, frozenset(mask_iter(alg.up_masks[a])))


def _product_upset(alg: FiniteAlgebra, left: frozenset[int], right: frozenset[int]) -> frozenset[int]:
    """Upward closure of all restrictions of ``right`` members by ``left`` members."""
    products = mask_of(alg.restrict[s][t] for s in left for t in right)
    return frozenset(mask_iter(alg.up_closure(products)))


def domhat_pair(alg: FiniteAlgebra, f: Filter, g: Filter) -> bool:
    """Lifted domain preorder: F below G iff restricting F by G stays in F."""
    return _product_upset(alg, g.members, f.members) <= f.members


@dataclass(frozen=True)
class FilterFamily:
    """All filters of an algebra with the lifted preorder precomputed.

    ``domhat`` holds index pairs (i, j) meaning filter i is below filter
    j; ``approx_class`` assigns each filter its equivalence class id,
    numbered by least filter index.
    """

    parent: FiniteAlgebra
    all_filters: tuple[Filter, ...]
    maximal: tuple[Filter, ...]
    domhat: frozenset[tuple[int, int]]
    approx_class: tuple[int, ...]

    def index_of(self, f: Filter) -> int:
        return self._index[f.members]

    @property
    def _index(self) -> dict[frozenset[int], int]:
        return {g.members: i for i, g in enumerate(self.all_filters)}

    @property
    def n_classes(self) -> int:
        return max(self.approx_class) + 1 if self.approx_class else 0

    def class_members(self, c: int) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.approx_class) if x == c)


@lru_cache(maxsize=None)
def enumerate_filters(alg: FiniteAlgebra) -> FilterFamily:
    """Enumerate every filter, the lifted preorder, and its classes."""
    n = alg.size
    filters = tuple(principal_filter(alg, a) for a in range(n))
    if len({f.members for f in filters}) != n:
        raise InconsistencyError("principal upsets are not distinct")

    domhat = set()
    for i, f in enumerate(filters):
        for j, g in enumerate(filters):
            if domhat_pair(alg, f, g):
                domhat.add((i, j))

    # The lifted preorder must contain reverse inclusion.
    for i, f in enumerate(filters):
        for j, g in enumerate(filters):
            if g.members <= f.members and (i, j) not in domhat:
                raise InconsistencyError(
                    f"lifted preorder misses inclusion at ({i}, {j})"
                )

    approx = [-1] * n
    next_class = 0
    for i in range(n):
        if approx[i] != -1:
            continue
        approx[i] = next_class
        for j in range(i + 1, n):
            if (i, j) in domhat and (j, i) in domhat:
                approx[j] = next_class
        next_class += 1

    maximal = tuple(f for f in filters if f.proper and is_maximal(f))
    return FilterFamily(alg, filters, maximal, frozenset(domhat), tuple(approx))


def is_maximal(f: Filter) -> bool:
    """Maximality test by the single-witness criterion.

    With ``a`` the least member, the filter is maximal precisely when
    for every ``b`` exactly one of ``a meet b`` and ``a - b`` belongs to
    the filter.
    """
    if not f.proper:
        return False
    alg = f.parent
    a = f.generator()
    for b in range(alg.size):
        in_meet = alg.meet(a, b) in f.members
        in_minus = alg.minus[a][b] in f.members
        if in_meet == in_minus:
            return False
    return True


def maximal_filters(alg: FiniteAlgebra) -> tuple[Filter, ...]:
    """Maximal proper filters, cross-checked against the inclusion poset."""
    family = enumerate_filters(alg)
    proper = [f for f in family.all_filters if f.proper]
    poset_maxima = {
        f.members
        for f in proper
        if not any(f.members < g.members for g in proper)
    }
    criterion = {f.members for f in family.maximal}
    if criterion != poset_maxima:
        raise InconsistencyError(
            "maximality criterion disagrees with the inclusion poset: "
            f"{sorted(map(sorted, criterion))} vs {sorted(map(sorted, poset_maxima))}"
        )
    return family.maximal


def filter_meet(f: Filter, g: Filter) -> Filter:
    """Greatest lower bound of two filters modulo the lifted equivalence."""
    if f.parent is not g.parent and f.parent != g.parent:
        raise AlgebraError("filters live in different algebras")
    alg = f.parent
    h = Filter(alg, _product_upset(alg, g.members, f.members))
    if not (domhat_pair(alg, h, f) and domhat_pair(alg, h, g)):
        raise InconsistencyError("filter meet is not a lower bound")
    for k in enumerate_filters(alg).all_filters:
        if domhat_pair(alg, k, f) and domhat_pair(alg, k, g) and not domhat_pair(alg, k, h):
            raise InconsistencyError(
                f"filter meet is not greatest below {k.render()}"
            )
    return h


def ultrafilter_bijection(
    alg: FiniteAlgebra, a: int
) -> tuple[dict[Filter, frozenset[int]], dict[frozenset[int], Filter]]:
    """Match maximal filters containing ``a`` with ultrafilters of its downset.

    Forward: intersect with the downset.  Backward: upward closure.
    Both composites are checked to be identities.  For ``a`` equal to
    bottom there is nothing to match and both maps are empty.
    """
    if a == alg.zero:
        return {}, {}
    downset = boolean_downset(alg, a)
    ufs = set(downset.ultrafilters())
    containing = [f for f in maximal_filters(alg) if a in f.members]

    forward: dict[Filter, frozenset[int]] = {}
    for mu in containing:
        nu = frozenset(mu.members) & frozenset(downset.members)
        if nu not in ufs:
            raise InconsistencyError(
                f"{mu.render()} does not cut the downset of {alg.element_name(a)} "
                "to an ultrafilter"
            )
        forward[mu] = nu
    backward: dict[frozenset[int], Filter] = {}
    for nu in sorted(ufs, key=sorted):
        mu = Filter(alg, frozenset(mask_iter(alg.up_closure(mask_of(nu)))))
        if not is_maximal(mu):
            raise InconsistencyError("upward closure of an ultrafilter is not maximal")
        backward[nu] = mu

    for mu, nu in forward.items():
        if backward[nu].members != mu.members:
            raise InconsistencyError("round trip through the downset moved a filter")
    for nu, mu in backward.items():
        if forward[mu] != nu:
            raise InconsistencyError("round trip through the algebra moved an ultrafilter")
    return forward, backward


def extend_to_maximal(f: Filter) -> Filter:
    """Deterministically extend a proper filter to a maximal one.

    Policy: take the least member id as witness, then the
    lexicographically least ultrafilter of its downset extending the
    trace of the filter there.
    """
    if not f.proper:
        raise ImproperFilterError("the full filter has no maximal extension")
    alg = f.parent
    a = min(f.members)
    downset = boolean_downset(alg, a)
    trace = f.members & frozenset(downset.members)
    candidates = [
        nu for nu in downset.ultrafilters() if trace <= nu
    ]
    if not candidates:
        raise InconsistencyError(
            f"no ultrafilter of the downset of {alg.element_name(a)} extends the filter"
        )
    nu = min(candidates, key=sorted)
    result = Filter(alg, frozenset(mask_iter(alg.up_closure(mask_of(nu)))))
    if not is_maximal(result) or not f.members <= result.members:
        raise InconsistencyError("extension policy produced a non-extension")
    return result


def _quotient_upset(quot, class_ids) -> frozenset[int]:
    out = set()
    for c in class_ids:
        for d in range(quot.n_classes):
            if quot.qleq(c, d):
                out.add(d)
    return frozenset(out)


def project_filter(f: Filter) -> frozenset[int]:
    """Image of a filter in the domain quotient, upward closed there.

    Checks the characterization of the lifted preorder: F is below G
    exactly when the projected upset of G is contained in that of F.
    """
    alg = f.parent
    quot = domain_quotient(alg)
    image = _quotient_upset(quot, {quot.class_of[a] for a in f.members})
    for g in enumerate_filters(alg).all_filters:
        g_image = _quotient_upset(quot, {quot.class_of[a] for a in g.members})
        if domhat_pair(alg, f, g) != (g_image <= image):
            raise InconsistencyError(
                f"projection mischaracterizes the lifted preorder against {g.render()}"
            )
    return image


def _quotient_filter_is_maximal(quot, image: frozenset[int]) -> bool:
    if quot.zero_class in image:
        return False
    w = None
    for c in image:
        if w is None or quot.qleq(c, w):
            w = c
    for d in range(quot.n_classes):
        in_meet = quot.meet[w][d] in image
        in_minus = quot.qminus[w][d] in image
        if in_meet == in_minus:
            return False
    return True


def filter_down(mu: Filter) -> frozenset[int]:
    """Project a maximal filter to the quotient; the image must be maximal."""
    if not is_maximal(mu):
        raise AlgebraError("filter_down expects a maximal filter")
    quot = domain_quotient(mu.parent)
    image = _quotient_upset(quot, {quot.class_of[a] for a in mu.members})
    if not _quotient_filter_is_maximal(quot, image):
        raise InconsistencyError("projected maximal filter is not maximal in the quotient")
    return image


def filter_up_check(mu: Filter, f: Filter) -> str:
    """Restrict a filter by a maximal one and classify the outcome.

    Returns ``"proper-and-maximal"`` or ``"improper"``.  Properness is
    checked to be equivalent to the maximal filter being domain-below
    the other filter, and in the proper case the result is checked to
    be maximal and equivalent to the maximal filter.
    """
    if not is_maximal(mu):
        raise AlgebraError("filter_up_check expects a maximal filter first")
    alg = mu.parent
    members = _product_upset(alg, mu.members, f.members)
    below = domhat_pair(alg, mu, f)
    if alg.zero in members:
        if below:
            raise InconsistencyError(
                "improper restriction although the maximal filter is domain-below"
            )
        return "improper"
    result = Filter(alg, members)
    if not below:
        raise InconsistencyError(
            "proper restriction although the maximal filter is not domain-below"
        )
    if not is_maximal(result):
        raise InconsistencyError("proper restriction of a maximal filter is not maximal")
    if not (domhat_pair(alg, mu, result) and domhat_pair(alg, result, mu)):
        raise InconsistencyError("proper restriction is not equivalent to the maximal filter")
    return "proper-and-maximal"
