"""Representations of finite algebras by concrete partial functions.

Four constructions are provided: the canonical one over maximal
filters, its injective refinement over equivalence classes of maximal
filters, and the two atom-based complete versions.  A verifier checks
any representation-shaped object independently, and a completeness
report decides whether existing meets and joins are turned into
intersections and unions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    AlgebraError,
    AxiomFailure,
    FiniteAlgebra,
    InconsistencyError,
    boolean_downset,
    check_axioms,
    domain_quotient,
    mask_iter,
    mask_of,
)
from .filters import enumerate_filters
from .pfun import ConcreteAlgebra, PartialFunction, is_injective_pf


class NotAtomicError(AlgebraError):
    """The atom-based constructions require an atomic algebra."""


class NonHomomorphismError(AlgebraError):
    """A mapping offered as a homomorphism fails to preserve an operation."""


@dataclass(frozen=True)
class Representation:
    """A state set plus one partial function on it per algebra element.

    ``states`` holds descriptors (filter member tuples, class tags,
    atom ids, or bare points for external representations); the
    functions themselves live over the state indices 0..len(states)-1.
    """

    source: FiniteAlgebra
    kind: str
    states: tuple
    assignment: tuple[PartialFunction, ...]

    def graph_of(self, a: int) -> frozenset[tuple[int, int]]:
        return self.assignment[a].graph


@dataclass(frozen=True)
class VerificationFailure:
    check: str
    witness: tuple

    def render(self, alg: FiniteAlgebra) -> str:
        names = tuple(
            alg.element_name(w) if isinstance(w, int) else str(w) for w in self.witness
        )
        return f"FAIL {self.check} witness {' '.join(names)}"


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    failures: tuple[VerificationFailure, ...]
    image: ConcreteAlgebra | None


@dataclass(frozen=True)
class CompletenessReport:
    meet_complete: bool
    meet_witness: frozenset[int] | None
    join_complete: bool
    join_witness: frozenset[int] | None
    atomic: bool
    atomic_witness: tuple | None
    subsets_checked: int
    exhaustive: bool

    @property
    def fully_complete(self) -> bool:
        return self.meet_complete and self.join_complete and self.atomic


# ---------------------------------------------------------------------------
# Order helpers
# ---------------------------------------------------------------------------


def _glb(alg: FiniteAlgebra, subset_mask: int) -> int | None:
    """Greatest lower bound of a nonempty subset, decided order-theoretically."""
    lower = alg.all_mask
    for s in mask_iter(subset_mask):
        lower &= alg.down_masks[s]
    for g in mask_iter(lower):
        if lower & ~alg.down_masks[g] == 0:
            return g
    return None


def _lub(alg: FiniteAlgebra, subset_mask: int) -> int | None:
    """Least upper bound of a subset; the empty subset yields the bottom."""
    upper = alg.all_mask
    for s in mask_iter(subset_mask):
        upper &= alg.up_masks[s]
    for u in mask_iter(upper):
        if upper & ~alg.up_masks[u] == 0:
            return u
    return None


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------


def atoms(alg: FiniteAlgebra) -> tuple[int, ...]:
    """Minimal nonzero elements.

    Also certifies the restriction behaviour of atoms: restricting by an
    atom yields bottom or another atom, the latter exactly when the atom
    is domain-below the restricted element.
    """
    ats = alg.order_atoms()
    atom_set = set(ats)
    for x in ats:
        for a in range(alg.size):
            t = alg.restrict[x][a]
            if t != alg.zero and t not in atom_set:
                raise InconsistencyError(
                    f"atom {alg.element_name(x)} restricts {alg.element_name(a)} "
                    f"to the non-atom {alg.element_name(t)}"
                )
            if (t in atom_set) != alg.domleq(x, a):
                raise InconsistencyError(
                    f"atom restriction disagrees with the domain preorder at "
                    f"({alg.element_name(x)}, {alg.element_name(a)})"
                )
    return ats


def is_atomic(alg: FiniteAlgebra) -> bool:
    """Every nonzero element bounds an atom (always true at finite sizes)."""
    atom_mask = mask_of(alg.order_atoms())
    return all(
        alg.down_masks[e] & atom_mask
        for e in range(alg.size)
        if e != alg.zero
    )


def is_atomistic(alg: FiniteAlgebra) -> bool:
    """Every element is the least upper bound of the atoms below it."""
    atom_mask = mask_of(alg.order_atoms())
    for a in range(alg.size):
        below = alg.down_masks[a] & atom_mask
        if _lub(alg, below) != a:
            return False
    return True


# ---------------------------------------------------------------------------
# The representation constructions
# ---------------------------------------------------------------------------


def _gate_axioms(alg: FiniteAlgebra) -> None:
    report = check_axioms(alg)
    if not report.passed:
        raise AxiomFailure(report)


def canonical_theta(alg: FiniteAlgebra) -> Representation:
    """States are maximal filters; an element acts on equivalent filters
    containing it."""
    _gate_axioms(alg)
    family = enumerate_filters(alg)
    index = {f.members: i for i, f in enumerate(family.all_filters)}
    mf = sorted(family.maximal, key=lambda f: f.sort_key())
    cls = [family.approx_class[index[f.members]] for f in mf]

    # Functionality certificate: equivalent maximal filters sharing any
    # element coincide.
    for i, f in enumerate(mf):
        for j, g in enumerate(mf):
            if cls[i] == cls[j] and f.members & g.members and f.members != g.members:
                raise InconsistencyError(
                    f"equivalent maximal filters {f.render()} and {g.render()} "
                    "share an element but differ"
                )

    states = tuple(f.sort_key() for f in mf)
    base = frozenset(range(len(mf)))
    assignment = []
    for a in range(alg.size):
        graph = {
            (i, j)
            for i in range(len(mf))
            for j in range(len(mf))
            if cls[i] == cls[j] and a in mf[j].members
        }
        assignment.append(PartialFunction(base, graph))
    return Representation(alg, "canonical-theta", states, tuple(assignment))


def injective_eta(alg: FiniteAlgebra) -> Representation:
    """States are class tags plus maximal filters; values are injective.

    The construction is checked coherent with the canonical one: a
    filter pair lies in an element's canonical graph exactly when the
    corresponding class/filter pair lies in its injective graph.
    """
    _gate_axioms(alg)
    family = enumerate_filters(alg)
    index = {f.members: i for i, f in enumerate(family.all_filters)}
    mf = sorted(family.maximal, key=lambda f: f.sort_key())
    cls = [family.approx_class[index[f.members]] for f in mf]
    class_ids = sorted(set(cls))
    cpos = {c: i for i, c in enumerate(class_ids)}
    nc = len(class_ids)

    states = tuple(("class", c) for c in class_ids) + tuple(
        ("filter", f.sort_key()) for f in mf
    )
    base = frozenset(range(len(states)))
    assignment = []
    for a in range(alg.size):
        graph = {
            (cpos[cls[j]], nc + j)
            for j in range(len(mf))
            if a in mf[j].members
        }
        assignment.append(PartialFunction(base, graph))
    rep = Representation(alg, "injective-eta", states, tuple(assignment))

    for a in range(alg.size):
        f = rep.assignment[a]
        if not is_injective_pf(f):
            raise InconsistencyError(
                f"injective construction produced a non-injective value for "
                f"{alg.element_name(a)}"
            )
        for i in range(len(mf)):
            for j in range(len(mf)):
                canonical = cls[i] == cls[j] and a in mf[j].members
                injective = (cpos[cls[i]], nc + j) in f.graph
                if canonical != injective:
                    raise InconsistencyError(
                        f"canonical/injective coherence fails at element "
                        f"{alg.element_name(a)}, states ({i}, {j})"
                    )
    return rep


def atomic_theta(alg: FiniteAlgebra) -> Representation:
    """States are atoms; an element acts on equivalent-domain atoms below it."""
    _gate_axioms(alg)
    if not is_atomic(alg):
        raise NotAtomicError("the atom-based construction needs an atomic algebra")
    ats = atoms(alg)
    base = frozenset(range(len(ats)))
    assignment = []
    for a in range(alg.size):
        graph = {
            (i, j)
            for i, x in enumerate(ats)
            for j, y in enumerate(ats)
            if alg.domeq(x, y) and alg.leq(y, a)
        }
        assignment.append(PartialFunction(base, graph))
    return Representation(alg, "atomic-theta", tuple(ats), tuple(assignment))


def atomic_eta(alg: FiniteAlgebra) -> Representation:
    """States are atom classes plus atoms; values are injective."""
    _gate_axioms(alg)
    if not is_atomic(alg):
        raise NotAtomicError("the atom-based construction needs an atomic algebra")
    ats = atoms(alg)
    quot = domain_quotient(alg)
    class_ids = sorted({quot.class_of[x] for x in ats})
    cpos = {c: i for i, c in enumerate(class_ids)}
    nc = len(class_ids)
    states = tuple(("class", c) for c in class_ids) + tuple(("atom", x) for x in ats)
    base = frozenset(range(len(states)))
    assignment = []
    for a in range(alg.size):
        graph = {
            (cpos[quot.class_of[x]], nc + i)
            for i, x in enumerate(ats)
            if alg.leq(x, a)
        }
        assignment.append(PartialFunction(base, graph))
    rep = Representation(alg, "atomic-eta", states, tuple(assignment))
    for a in range(alg.size):
        if not is_injective_pf(rep.assignment[a]):
            raise InconsistencyError(
                f"atom-based injective value for {alg.element_name(a)} is not injective"
            )
    return rep


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def verify_representation(rep: Representation) -> VerificationReport:
    """Independently check a representation-shaped object.

    Verifies functionality of every value, injectivity of the
    assignment, and preservation of both operations on all pairs.  On a
    pass the report carries the concrete image algebra as a certificate.
    """
    alg = rep.source
    failures: list[VerificationFailure] = []
    if len(rep.assignment) != alg.size:
        failures.append(
            VerificationFailure("assignment-size", (len(rep.assignment), alg.size))
        )
        return VerificationReport(False, tuple(failures), None)

    for a in range(alg.size):
        seen: dict[int, int] = {}
        for x, y in sorted(rep.assignment[a].graph):
            if x in seen and seen[x] != y:
                failures.append(
                    VerificationFailure("functionality", (a, (x, seen[x]), (x, y)))
                )
                break
            seen[x] = y

    graphs = {}
    for a in range(alg.size):
        g = rep.assignment[a].graph
        if g in graphs:
            failures.append(VerificationFailure("injectivity", (graphs[g], a)))
        else:
            graphs[g] = a

    for a in range(alg.size):
        for b in range(alg.size):
            want = rep.assignment[alg.minus[a][b]].graph
            got = rep.assignment[a].graph - rep.assignment[b].graph
            if want != got:
                failures.append(VerificationFailure("minus-preserved", (a, b)))
            dom = rep.assignment[a].domain
            want_r = rep.assignment[alg.restrict[a][b]].graph
            got_r = frozenset(p for p in rep.assignment[b].graph if p[0] in dom)
            if want_r != got_r:
                failures.append(VerificationFailure("restrict-preserved", (a, b)))

    if failures:
        return VerificationReport(False, tuple(failures), None)
    image = ConcreteAlgebra(rep.assignment[0].base, rep.assignment, alg)
    return VerificationReport(True, (), image)


# ---------------------------------------------------------------------------
# Completeness
# ---------------------------------------------------------------------------

SUBSET_CAP_DEFAULT = 20
SAMPLE_COUNT_DEFAULT = 10_000


def _subset_masks(n: int, cap: int, samples: int, seed: int) -> tuple[list[int], bool]:
    if n <= cap:
        return list(range(1 << n)), True
    picked = {0, (1 << n) - 1}
    for i in range(n):
        picked.add(1 << i)
        for j in range(i + 1, n):
            picked.add((1 << i) | (1 << j))
    rng = random.Random(seed)
    for _ in range(samples):
        picked.add(rng.getrandbits(n))
    return sorted(picked), False


def completeness_report(
    rep: Representation,
    subset_cap: int = SUBSET_CAP_DEFAULT,
    samples: int = SAMPLE_COUNT_DEFAULT,
    seed: int = 0,
) -> CompletenessReport:
    """Check meet completeness, join completeness, and atomicity.

    Existing meets and joins are found order-theoretically.  Below the
    subset cap every subset is scanned; above it, all singletons and
    pairs plus seeded random subsets are used and the report says so.
    """
    alg = rep.source
    n = alg.size
    masks, exhaustive = _subset_masks(n, subset_cap, samples, seed)
    checked = 0

    meet_ok, meet_witness = True, None
    join_ok, join_witness = True, None
    for mask in masks:
        subset = frozenset(mask_iter(mask))
        if mask:
            w = _glb(alg, mask)
            if w is not None:
                checked += 1
                expected = rep.assignment[w].graph
                inter = None
                for s in subset:
                    g = rep.assignment[s].graph
                    inter = g if inter is None else inter & g
                if inter != expected and meet_ok:
                    meet_ok, meet_witness = False, subset
        w = _lub(alg, mask)
        if w is not None:
            checked += 1
            expected = rep.assignment[w].graph
            union = frozenset()
            for s in subset:
                union |= rep.assignment[s].graph
            if union != expected and join_ok:
                join_ok, join_witness = False, subset

    atom_list = alg.order_atoms()
    covered = frozenset()
    for x in atom_list:
        covered |= rep.assignment[x].graph
    atomic_ok, atomic_witness = True, None
    for a in range(n):
        for pair in sorted(rep.assignment[a].graph):
            if pair not in covered:
                atomic_ok, atomic_witness = False, (a, pair)
                break
        if not atomic_ok:
            break

    return CompletenessReport(
        meet_ok,
        meet_witness,
        join_ok,
        join_witness,
        atomic_ok,
        atomic_witness,
        checked,
        exhaustive,
    )


# ---------------------------------------------------------------------------
# Homomorphism restriction to downsets
# ---------------------------------------------------------------------------


def _map_is_meet_complete(
    source: FiniteAlgebra, target: FiniteAlgebra, h: Sequence[int], masks: list[int]
) -> bool:
    for mask in masks:
        if not mask:
            continue
        w = _glb(source, mask)
        if w is None:
            continue
        image = mask_of(h[s] for s in mask_iter(mask))
        tw = _glb(target, image)
        if tw is None or tw != h[w]:
            return False
    return True


def _map_is_join_complete(
    source: FiniteAlgebra, target: FiniteAlgebra, h: Sequence[int], masks: list[int]
) -> bool:
    for mask in masks:
        w = _lub(source, mask)
        if w is None:
            continue
        image = mask_of(h[s] for s in mask_iter(mask))
        tw = _lub(target, image)
        if tw is None or tw != h[w]:
            return False
    return True


def verify_hom_restriction(
    source: FiniteAlgebra,
    target: FiniteAlgebra,
    h: Sequence[int],
    a: int,
    subset_cap: int = SUBSET_CAP_DEFAULT,
) -> bool:
    """Check that a homomorphism restricts to a Boolean homomorphism
    of downsets, completely so whenever the map itself is complete.

    Raises if ``h`` is not a homomorphism; otherwise returns whether all
    restriction checks succeed.  Completeness of the map is decided by a
    full subset scan and therefore only attempted up to the subset cap.
    """
    if len(h) != source.size:
        raise NonHomomorphismError(f"mapping has {len(h)} entries, expected {source.size}")
    for v in h:
        if not 0 <= v < target.size:
            raise NonHomomorphismError(f"mapping value {v} is not a target element")
    for x in range(source.size):
        for y in range(source.size):
            if h[source.minus[x][y]] != target.minus[h[x]][h[y]]:
                raise NonHomomorphismError(
                    f"complement not preserved at ({x}, {y})"
                )
            if h[source.restrict[x][y]] != target.restrict[h[x]][h[y]]:
                raise NonHomomorphismError(
                    f"restriction not preserved at ({x}, {y})"
                )

    b1 = boolean_downset(source, a)
    b2 = boolean_downset(target, h[a])
    members2 = set(b2.members)
    for b in b1.members:
        if h[b] not in members2:
            return False
        if h[b1.complement_of(b)] != b2.complement_of(h[b]):
            return False
        for c in b1.members:
            if h[source.meet(b, c)] != target.meet(h[b], h[c]):
                return False
            if h[b1.join(b, c)] != b2.join(h[b], h[c]):
                return False
    if h[source.zero] != target.zero:
        return False

    if source.size > subset_cap:
        return True
    masks = list(range(1 << source.size))
    complete = _map_is_meet_complete(source, target, h, masks) or _map_is_join_complete(
        source, target, h, masks
    )
    if not complete:
        return True

    member_mask = mask_of(b1.members)
    member2_mask = mask_of(b2.members)
    sub_members = sorted(b1.members)
    if len(sub_members) > subset_cap:
        return True
    for mask in range(1, 1 << len(sub_members)):
        subset = [sub_members[i] for i in range(len(sub_members)) if mask >> i & 1]
        smask = mask_of(subset)
        # glb within the downset
        lower = member_mask
        for s in subset:
            lower &= source.down_masks[s]
        m1 = None
        for g in mask_iter(lower):
            if lower & ~source.down_masks[g] == 0:
                m1 = g
                break
        if m1 is None:
            continue
        image = [h[s] for s in subset]
        lower2 = member2_mask
        for s in image:
            lower2 &= target.down_masks[s]
        m2 = None
        for g in mask_iter(lower2):
            if lower2 & ~target.down_masks[g] == 0:
                m2 = g
                break
        if m2 is None or h[m1] != m2:
            return False
        # lub within the downset
        upper = member_mask
        for s in subset:
            upper &= source.up_masks[s]
        j1 = None
        for u in mask_iter(upper):
            if upper & ~source.up_masks[u] == 0:
                j1 = u
                break
        if j1 is None:
            continue
        upper2 = member2_mask
        for s in image:
            upper2 &= target.up_masks[s]
        j2 = None
        for u in mask_iter(upper2):
            if upper2 & ~target.up_masks[u] == 0:
                j2 = u
                break
        if j2 is None or h[j1] != j2:
            return False
    return True
