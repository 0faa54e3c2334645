"""Finite algebras of relative complement and domain restriction.

An algebra is given by two n-by-n operation tables over element ids
0..n-1: ``minus`` interprets relative complement and ``restrict``
interprets domain restriction (first argument supplies the domain, the
second the values).  Everything derived from the tables lives here: the
meet semilattice, the element order, the domain preorder and its
quotient, Boolean downsets, and exhaustive checkers for the defining
laws with deterministic first-counterexample witnesses.

Element subsets are handled as machine-word bitmasks, which is why the
library caps algebra size at ``SIZE_CAP`` (64).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import cached_property, lru_cache
from typing import Callable, Iterator, NamedTuple, Sequence

SIZE_CAP = 64

Table = tuple[tuple[int, ...], ...]


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class TableError(AlgebraError):
    """An operation table is malformed (shape, range, or ill-defined bottom)."""


class SizeCapError(AlgebraError):
    """An algebra or closure exceeds the bitmask size cap."""


class InconsistencyError(AlgebraError):
    """A derived-structure check failed; the input violates the laws."""


class AxiomFailure(AlgebraError):
    """An operation requiring a law-abiding algebra was given one that is not."""

    def __init__(self, report: "AxiomReport"):
        self.report = report
        failed = ", ".join(v.law for v in report.failures())
        super().__init__(f"axioms do not hold (failing: {failed})")


def _freeze_table(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(row) for row in table)


def mask_iter(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements) -> int:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


@dataclass(frozen=True)
class FiniteAlgebra:
    """Immutable finite algebra of the two-operation signature.

    ``zero`` is the common value of ``a - a``; construction rejects
    tables where that value depends on ``a``.
    """

    size: int
    minus: Table
    restrict: Table
    zero: int
    names: tuple[str, ...] | None = None

    @classmethod
    def from_tables(
        cls,
        minus: Sequence[Sequence[int]],
        restrict: Sequence[Sequence[int]],
        names: Sequence[str] | None = None,
    ) -> "FiniteAlgebra":
        minus_t = _freeze_table(minus)
        restrict_t = _freeze_table(restrict)
        n = len(minus_t)
        if n == 0:
            raise TableError("algebras are nonempty: need at least one element")
        if n > SIZE_CAP:
            raise SizeCapError(f"size {n} exceeds the cap of {SIZE_CAP} elements")
        for label, table in (("minus", minus_t), ("restrict", restrict_t)):
            if len(table) != n:
                raise TableError(f"{label} table has {len(table)} rows, expected {n}")
            for i, row in enumerate(table):
                if len(row) != n:
                    raise TableError(
                        f"{label} row {i} has {len(row)} entries, expected {n}"
                    )
                for j, v in enumerate(row):
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise TableError(f"{label}[{i}][{j}] = {v!r} is not an element id")
        zero = minus_t[0][0]
        for a in range(n):
            if minus_t[a][a] != zero:
                raise TableError(
                    f"bottom is not well defined: minus[{a}][{a}] = {minus_t[a][a]} "
                    f"but minus[0][0] = {zero}"
                )
        names_t: tuple[str, ...] | None = None
        if names is not None:
            names_t = tuple(str(s) for s in names)
            if len(names_t) != n:
                raise TableError(f"got {len(names_t)} element names, expected {n}")
        return cls(n, minus_t, restrict_t, zero, names_t)

    def with_names(self, names: Sequence[str]) -> "FiniteAlgebra":
        names_t = tuple(str(s) for s in names)
        if len(names_t) != self.size:
            raise TableError(f"got {len(names_t)} element names, expected {self.size}")
        return replace(self, names=names_t)

    def element_name(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a)

    # Derived operations and relations.

    def meet(self, a: int, b: int) -> int:
        m = self.minus
        return m[a][m[a][b]]

    def leq(self, a: int, b: int) -> bool:
        return self.meet(a, b) == a

    def domleq(self, a: int, b: int) -> bool:
        """Domain preorder: the domain of ``a`` is contained in that of ``b``."""
        return self.restrict[b][a] == a

    def domeq(self, a: int, b: int) -> bool:
        return self.domleq(a, b) and self.domleq(b, a)

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """down_masks[a] = bitmask of all b with b <= a."""
        return tuple(
            mask_of(b for b in range(self.size) if self.leq(b, a))
            for a in range(self.size)
        )

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """up_masks[a] = bitmask of all b with a <= b."""
        return tuple(
            mask_of(b for b in range(self.size) if self.leq(a, b))
            for a in range(self.size)
        )

    @cached_property
    def all_mask(self) -> int:
        return (1 << self.size) - 1

    def up_closure(self, mask: int) -> int:
        out = 0
        for a in mask_iter(mask):
            out |= self.up_masks[a]
        return out

    def order_atoms(self) -> tuple[int, ...]:
        """Minimal nonzero elements of the element order (no law checks)."""
        out = []
        for a in range(self.size):
            if a == self.zero:
                continue
            if self.down_masks[a] == (1 << a) | (1 << self.zero):
                out.append(a)
        return tuple(out)

    def __repr__(self) -> str:  # keep test failure output readable
        return f"FiniteAlgebra(size={self.size}, zero={self.zero})"


# ---------------------------------------------------------------------------
# Law checking
# ---------------------------------------------------------------------------


class Law(NamedTuple):
    name: str
    varnames: tuple[str, ...]
    holds: Callable[..., bool]  # holds(minus, restrict, zero, *assignment)
    scan: Callable[[FiniteAlgebra], tuple[int, ...] | None] | None = None


def _mt(m: Table, a: int, b: int) -> int:
    return m[a][m[a][b]]


def _le(m: Table, a: int, b: int) -> bool:
    return _mt(m, a, b) == a


def _scan_monotone(alg: FiniteAlgebra) -> tuple[int, ...] | None:
    # Quantifies over comparable pairs only; iteration order is still the
    # lexicographic order on (a, b, c, d) restricted to the antecedent.
    m, r = alg.minus, alg.restrict
    n = alg.size
    pairs = [(a, b) for a in range(n) for b in range(n) if _le(m, a, b)]
    for a, b in pairs:
        for c, d in pairs:
            if not _le(m, r[a][c], r[b][d]):
                return (a, b, c, d)
    return None


AXIOM_LAWS: tuple[Law, ...] = (
    Law("Ax.1", ("a", "b"), lambda m, r, z, a, b: m[a][m[b][a]] == a),
    Law("Ax.2", ("a", "b"), lambda m, r, z, a, b: _mt(m, a, b) == _mt(m, b, a)),
    Law("Ax.3", ("a", "b", "c"), lambda m, r, z, a, b, c: m[m[a][b]][c] == m[m[a][c]][b]),
    Law(
        "Ax.4",
        ("a", "b", "c"),
        lambda m, r, z, a, b, c: _mt(m, r[a][c], r[b][c]) == r[r[a][b]][c],
    ),
    Law("Ax.5", ("a", "b"), lambda m, r, z, a, b: r[_mt(m, a, b)][a] == _mt(m, a, b)),
)

SUBTRACTION_LAWS: tuple[Law, ...] = AXIOM_LAWS[:3]

DERIVED_LAWS: tuple[Law, ...] = (
    Law(
        "meet-minus-disjoint",
        ("a", "b"),
        lambda m, r, z, a, b: _mt(m, b, m[a][b]) == z,
    ),
    Law(
        "minus-absorbs-meet",
        ("a", "b"),
        lambda m, r, z, a, b: m[a][_mt(m, a, b)] == m[a][b],
    ),
    Law(
        "meet-minus-assoc",
        ("a", "b", "c"),
        lambda m, r, z, a, b, c: _mt(m, a, m[b][c]) == m[_mt(m, a, b)][c],
    ),
    Law("restrict-below", ("a", "b"), lambda m, r, z, a, b: _le(m, r[b][a], a)),
    Law(
        "restrict-assoc",
        ("a", "b", "c"),
        lambda m, r, z, a, b, c: r[a][r[b][c]] == r[r[a][b]][c],
    ),
    Law(
        "restrict-meet-absorb",
        ("a", "b"),
        lambda m, r, z, a, b: r[r[a][b]][_mt(m, a, b)] == _mt(m, a, b),
    ),
    Law(
        "restrict-over-meet",
        ("a", "b", "c"),
        lambda m, r, z, a, b, c: r[a][_mt(m, b, c)] == _mt(m, r[a][b], c),
    ),
    Law(
        "restrict-over-minus",
        ("a", "b", "c"),
        lambda m, r, z, a, b, c: m[r[a][b]][c] == r[a][m[b][c]],
    ),
    Law(
        "restrict-monotone",
        ("a", "b", "c", "d"),
        lambda m, r, z, a, b, c, d: not (_le(m, a, b) and _le(m, c, d))
        or _le(m, r[a][c], r[b][d]),
        scan=_scan_monotone,
    ),
)

LAW_TABLE: dict[str, Law] = {law.name: law for law in AXIOM_LAWS + DERIVED_LAWS}


@dataclass(frozen=True)
class LawVerdict:
    law: str
    passed: bool
    witness: tuple[int, ...] | None

    def render(self, alg: FiniteAlgebra | None = None) -> str:
        if self.passed:
            return f"PASS {self.law}"
        law = LAW_TABLE[self.law]
        parts = []
        for var, value in zip(law.varnames, self.witness):
            name = alg.element_name(value) if alg is not None else str(value)
            parts.append(f"{var}={name}")
        return f"FAIL {self.law} witness {' '.join(parts)}"


@dataclass(frozen=True)
class AxiomReport:
    verdicts: tuple[LawVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failures(self) -> tuple[LawVerdict, ...]:
        return tuple(v for v in self.verdicts if not v.passed)

    def verdict(self, law: str) -> LawVerdict:
        for v in self.verdicts:
            if v.law == law:
                return v
        raise KeyError(law)


def evaluate_law(alg: FiniteAlgebra, law: str, assignment: Sequence[int]) -> bool:
    """Re-evaluate a single law instance against the tables."""
    entry = LAW_TABLE[law]
    return entry.holds(alg.minus, alg.restrict, alg.zero, *assignment)


def _scan_laws(alg: FiniteAlgebra, laws: Sequence[Law]) -> AxiomReport:
    m, r, z = alg.minus, alg.restrict, alg.zero
    verdicts = []
    for law in laws:
        if law.scan is not None:
            witness = law.scan(alg)
        else:
            witness = None
            for assignment in itertools.product(range(alg.size), repeat=len(law.varnames)):
                if not law.holds(m, r, z, *assignment):
                    witness = assignment
                    break
        verdicts.append(LawVerdict(law.name, witness is None, witness))
    return AxiomReport(tuple(verdicts))


def check_axioms(alg: FiniteAlgebra) -> AxiomReport:
    """Exhaustively evaluate the five defining laws.

    Each law is scanned over all variable assignments in lexicographic
    order; the first counterexample is recorded as the witness.
    """
    return _scan_laws(alg, AXIOM_LAWS)


def check_derived_laws(alg: FiniteAlgebra) -> AxiomReport:
    """Exhaustively evaluate the consequences of the defining laws.

    Intended for algebras that already pass ``check_axioms``; running it
    there is a self-test of table construction.
    """
    return _scan_laws(alg, DERIVED_LAWS)


def check_subtraction_axioms(minus: Sequence[Sequence[int]]) -> AxiomReport:
    """Evaluate the three complement-only laws on a bare minus table."""
    minus_t = _freeze_table(minus)
    n = len(minus_t)
    restrict_identityish = tuple(tuple(b for b in range(n)) for _ in range(n))
    probe = FiniteAlgebra(n, minus_t, restrict_identityish, minus_t[0][0])
    return _scan_laws(probe, SUBTRACTION_LAWS)


# ---------------------------------------------------------------------------
# Derived relations
# ---------------------------------------------------------------------------


class DerivedRelations(NamedTuple):
    leq: frozenset[tuple[int, int]]
    domleq: frozenset[tuple[int, int]]
    domeq: frozenset[tuple[int, int]]


def derived_relations(alg: FiniteAlgebra) -> DerivedRelations:
    """Compute the element order, the domain preorder, and its equivalence.

    The returned relations are checked to form a preorder containing the
    element order, with bottom behaving as expected, and to satisfy
    "below and domain-above implies equal".
    """
    n = alg.size
    leq = frozenset((a, b) for a in range(n) for b in range(n) if alg.leq(a, b))
    domleq = frozenset((a, b) for a in range(n) for b in range(n) if alg.domleq(a, b))
    domeq = frozenset((a, b) for (a, b) in domleq if (b, a) in domleq)

    for a in range(n):
        if (a, a) not in domleq:
            raise InconsistencyError(f"domain preorder is not reflexive at {a}")
        if (alg.zero, a) not in domleq:
            raise InconsistencyError(f"bottom is not domain-least below {a}")
        if (a, alg.zero) in domleq and a != alg.zero:
            raise InconsistencyError(f"{a} is domain-below bottom but nonzero")
    for a, b in domleq:
        for c in range(n):
            if (b, c) in domleq and (a, c) not in domleq:
                raise InconsistencyError(
                    f"domain preorder is not transitive at ({a}, {b}, {c})"
                )
    for a, b in leq:
        if (a, b) not in domleq:
            raise InconsistencyError(f"element order not contained in domain preorder at ({a}, {b})")
        if (b, a) in domleq and a != b:
            raise InconsistencyError(f"({a}, {b}) are below/domain-above yet distinct")
    return DerivedRelations(leq, domleq, domeq)


# ---------------------------------------------------------------------------
# Domain quotient
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DomainQuotient:
    """Quotient of an algebra by equality of domains.

    Classes are numbered by their least-index member.  ``meet`` is the
    class semilattice operation and ``qminus`` the induced complement
    structure; both are total tables over class ids.
    """

    parent: FiniteAlgebra
    class_of: tuple[int, ...]
    class_rep: tuple[int, ...]
    meet: Table
    qminus: Table

    @property
    def n_classes(self) -> int:
        return len(self.class_rep)

    def class_members(self, c: int) -> tuple[int, ...]:
        return tuple(a for a in range(self.parent.size) if self.class_of[a] == c)

    def qleq(self, c: int, d: int) -> bool:
        return self.meet[c][d] == c

    @property
    def zero_class(self) -> int:
        return self.class_of[self.parent.zero]


@lru_cache(maxsize=None)
def domain_quotient(alg: FiniteAlgebra) -> DomainQuotient:
    """Partition elements by domain equality and build the class tables.

    Verifies that the class meet is induced by restriction, that the
    class complement is induced by ``a - (b |> a)``, that the quotient
    satisfies the complement-only laws, and that inside every downset the
    element order and the domain preorder agree.
    """
    n = alg.size
    rels = derived_relations(alg)
    class_of_list: list[int] = [-1] * n
    reps: list[int] = []
    for a in range(n):
        if class_of_list[a] != -1:
            continue
        cid = len(reps)
        reps.append(a)
        for b in range(a, n):
            if (a, b) in rels.domeq:
                class_of_list[b] = cid
    class_of = tuple(class_of_list)
    class_rep = tuple(reps)
    k = len(reps)

    meet_t = tuple(
        tuple(class_of[alg.restrict[class_rep[i]][class_rep[j]]] for j in range(k))
        for i in range(k)
    )
    qminus_t = tuple(
        tuple(
            class_of[
                alg.minus[class_rep[i]][alg.restrict[class_rep[j]][class_rep[i]]]
            ]
            for j in range(k)
        )
        for i in range(k)
    )

    # Well-definedness: the tables must not depend on the representatives.
    for a in range(n):
        for b in range(n):
            if class_of[alg.restrict[a][b]] != meet_t[class_of[a]][class_of[b]]:
                raise InconsistencyError(
                    f"class meet not well defined at elements ({a}, {b})"
                )
            expect = class_of[alg.minus[a][alg.restrict[b][a]]]
            if expect != qminus_t[class_of[a]][class_of[b]]:
                raise InconsistencyError(
                    f"class complement not well defined at elements ({a}, {b})"
                )

    sub_report = check_subtraction_axioms(qminus_t)
    if not sub_report.passed:
        raise InconsistencyError(
            f"quotient violates complement laws: {sub_report.failures()[0].law}"
        )
    for i in range(k):
        for j in range(k):
            if qminus_t[i][qminus_t[i][j]] != meet_t[i][j]:
                raise InconsistencyError(
                    f"quotient meet disagrees with double complement at ({i}, {j})"
                )

    # Inside each downset the element order and the domain preorder agree.
    for a in range(n):
        below = list(mask_iter(alg.down_masks[a]))
        for b in below:
            for c in below:
                if alg.domleq(b, c) != alg.leq(b, c):
                    raise InconsistencyError(
                        f"orders disagree inside the downset of {a} at ({b}, {c})"
                    )

    return DomainQuotient(alg, class_of, class_rep, meet_t, qminus_t)


# ---------------------------------------------------------------------------
# Boolean downsets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BooleanDownset:
    """The downset of an element, as a Boolean algebra.

    ``members`` lists the elements below ``top`` in increasing id order;
    ``complement`` is parallel to ``members`` and holds ``top - b``.
    Construction verifies the full set of Boolean laws exhaustively.
    """

    parent: FiniteAlgebra
    top: int
    members: tuple[int, ...]
    complement: tuple[int, ...]

    def complement_of(self, b: int) -> int:
        return self.complement[self.members.index(b)]

    def join(self, b: int, c: int) -> int:
        alg = self.parent
        return alg.minus[self.top][
            alg.meet(alg.minus[self.top][b], alg.minus[self.top][c])
        ]

    def atoms(self) -> tuple[int, ...]:
        member_mask = mask_of(self.members)
        out = []
        for b in self.members:
            if b == self.parent.zero:
                continue
            below = self.parent.down_masks[b] & member_mask
            if below == (1 << b) | (1 << self.parent.zero):
                out.append(b)
        return tuple(out)

    def ultrafilters(self) -> tuple[frozenset[int], ...]:
        """Maximal proper filters of the downset, one per atom."""
        return tuple(
            frozenset(b for b in self.members if self.parent.leq(x, b))
            for x in self.atoms()
        )


@lru_cache(maxsize=None)
def boolean_downset(alg: FiniteAlgebra, a: int) -> BooleanDownset:
    """Carve out the downset of ``a`` and certify it is a Boolean algebra."""
    if not 0 <= a < alg.size:
        raise TableError(f"no element {a}")
    members = tuple(b for b in range(alg.size) if alg.leq(b, a))
    complement = tuple(alg.minus[a][b] for b in members)
    ds = BooleanDownset(alg, a, members, complement)

    def fail(law: str, *witness: int):
        raise InconsistencyError(
            f"downset of {alg.element_name(a)} violates Boolean law {law} "
            f"at {tuple(alg.element_name(w) for w in witness)}"
        )

    z = alg.zero
    if z not in members:
        fail("bottom-member", a)
    mt = alg.meet
    member_set = set(members)
    for b in members:
        if ds.complement_of(b) not in member_set:
            fail("complement-closure", b)
        for c in members:
            if mt(b, c) not in member_set:
                fail("meet-closure", b, c)
            if ds.join(b, c) not in member_set:
                fail("join-closure", b, c)
    for b in members:
        if mt(b, b) != b:
            fail("meet-idempotent", b)
        if ds.join(b, b) != b:
            fail("join-idempotent", b)
        if mt(b, a) != b:
            fail("top-identity", b)
        if ds.join(b, z) != b:
            fail("bottom-identity", b)
        if mt(b, ds.complement_of(b)) != z:
            fail("complement-meet", b)
        if ds.join(b, ds.complement_of(b)) != a:
            fail("complement-join", b)
        for c in members:
            if mt(b, c) != mt(c, b):
                fail("meet-commutative", b, c)
            if ds.join(b, c) != ds.join(c, b):
                fail("join-commutative", b, c)
            if mt(b, ds.join(b, c)) != b:
                fail("absorption-meet", b, c)
            if ds.join(b, mt(b, c)) != b:
                fail("absorption-join", b, c)
            for d in members:
                if mt(mt(b, c), d) != mt(b, mt(c, d)):
                    fail("meet-associative", b, c, d)
                if ds.join(ds.join(b, c), d) != ds.join(b, ds.join(c, d)):
                    fail("join-associative", b, c, d)
                if mt(b, ds.join(c, d)) != ds.join(mt(b, c), mt(b, d)):
                    fail("distributive", b, c, d)
    return ds


# ---------------------------------------------------------------------------
# Rebuilding complement structure from a complemented semilattice
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplementedSemilattice:
    """A meet table plus, for every element, a complement on its downset.

    ``complement[a][b]`` is consulted only when ``b`` lies below ``a`` in
    the meet order; other entries are ignored.
    """

    size: int
    meet: Table
    complement: Table

    @classmethod
    def from_tables(
        cls, meet: Sequence[Sequence[int]], complement: Sequence[Sequence[int]]
    ) -> "ComplementedSemilattice":
        meet_t = _freeze_table(meet)
        comp_t = _freeze_table(complement)
        n = len(meet_t)
        if n == 0:
            raise TableError("semilattice must be nonempty")
        for label, table in (("meet", meet_t), ("complement", comp_t)):
            if len(table) != n or any(len(row) != n for row in table):
                raise TableError(f"{label} table is not {n}-by-{n}")
            for i, row in enumerate(table):
                for j, v in enumerate(row):
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise TableError(f"{label}[{i}][{j}] = {v!r} is not an element id")
        return cls(n, meet_t, comp_t)


def complemented_semilattice_of(alg: FiniteAlgebra) -> ComplementedSemilattice:
    """Extract the meet table and per-downset complements of an algebra."""
    n = alg.size
    meet_t = tuple(tuple(alg.meet(a, b) for b in range(n)) for a in range(n))
    comp_t = tuple(tuple(alg.minus[a][b] for b in range(n)) for a in range(n))
    return ComplementedSemilattice(n, meet_t, comp_t)


def subtraction_from_boolean_downsets(sl: ComplementedSemilattice) -> Table:
    """Recover a complement operation from downset complements.

    Checks that ``meet`` really is a semilattice whose every downset is
    Boolean under the supplied complements, then returns the table
    ``a - b := complement_a(a meet b)``.  The result is verified to
    satisfy the complement-only laws and to recover the meet by double
    complement.
    """
    n = sl.size
    mt = sl.meet
    for a in range(n):
        if mt[a][a] != a:
            raise InconsistencyError(f"meet not idempotent at {a}")
        for b in range(n):
            if mt[a][b] != mt[b][a]:
                raise InconsistencyError(f"meet not commutative at ({a}, {b})")
            for c in range(n):
                if mt[mt[a][b]][c] != mt[a][mt[b][c]]:
                    raise InconsistencyError(f"meet not associative at ({a}, {b}, {c})")

    bottoms = [z for z in range(n) if all(mt[z][a] == z for a in range(n))]
    if len(bottoms) != 1:
        raise InconsistencyError(f"expected a unique bottom, found {bottoms}")
    bottom = bottoms[0]

    def sl_leq(x: int, y: int) -> bool:
        return mt[x][y] == x

    for a in range(n):
        members = [b for b in range(n) if sl_leq(b, a)]
        member_set = set(members)
        comp = {b: sl.complement[a][b] for b in members}

        def fail(law: str, *witness: int):
            raise InconsistencyError(
                f"downset of {a} is not Boolean: law {law} fails at {witness}"
            )

        for b in members:
            if comp[b] not in member_set:
                fail("complement-closure", b)
            if mt[b][comp[b]] != bottom:
                fail("complement-meet", b)

        def join(x: int, y: int) -> int:
            return comp[mt[comp[x]][comp[y]]]

        for b in members:
            if join(b, comp[b]) != a:
                fail("complement-join", b)
            if join(b, bottom) != b:
                fail("bottom-identity", b)
            for c in members:
                if join(b, c) not in member_set:
                    fail("join-closure", b, c)
                if mt[b][join(b, c)] != b:
                    fail("absorption-meet", b, c)
                if join(b, mt[b][c]) != b:
                    fail("absorption-join", b, c)
                for d in members:
                    if mt[b][join(c, d)] != join(mt[b][c], mt[b][d]):
                        fail("distributive", b, c, d)

    minus_t = tuple(
        tuple(sl.complement[a][mt[a][b]] for b in range(n)) for a in range(n)
    )
    report = check_subtraction_axioms(minus_t)
    if not report.passed:
        bad = report.failures()[0]
        raise InconsistencyError(
            f"reconstructed complement violates {bad.law} at {bad.witness}"
        )
    for a in range(n):
        for b in range(n):
            if minus_t[a][minus_t[a][b]] != mt[a][b]:
                raise InconsistencyError(
                    f"double complement fails to recover meet at ({a}, {b})"
                )
    return minus_t
