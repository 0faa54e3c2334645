"""Concrete partial functions on a finite base and their algebras.

A partial function is a functional set of pairs over a base set of
integer points.  The two pointwise operations are set difference of
graphs and restriction of the second argument to the domain of the
first.  Generator sets are closed into concrete algebras whose
operation tables are handed to :mod:`diffrest.algebra`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import (
    SIZE_CAP,
    AlgebraError,
    FiniteAlgebra,
    InconsistencyError,
    SizeCapError,
    Table,
    check_axioms,
)

Pair = tuple[int, int]
Graph = frozenset[Pair]


class PfunError(AlgebraError):
    """Base class for partial-function construction errors."""


class FunctionalityError(PfunError):
    """A graph maps some point to two different values."""

    def __init__(self, offending: tuple[Pair, Pair]):
        self.offending = offending
        super().__init__(f"not functional: {offending[0]} and {offending[1]}")


class BaseMismatchError(PfunError):
    """Two operands live over different base sets."""


@dataclass(frozen=True)
class PartialFunction:
    """An immutable partial function on a finite base set."""

    base: frozenset[int]
    graph: Graph

    def __init__(self, base: Iterable[int], graph: Iterable[Pair]):
        base_f = frozenset(base)
        graph_f = frozenset((int(x), int(y)) for x, y in graph)
        seen: dict[int, int] = {}
        for x, y in sorted(graph_f):
            if x not in base_f or y not in base_f:
                raise PfunError(f"pair ({x}, {y}) is outside the base {sorted(base_f)}")
            if x in seen and seen[x] != y:
                raise FunctionalityError(((x, seen[x]), (x, y)))
            seen[x] = y
        object.__setattr__(self, "base", base_f)
        object.__setattr__(self, "graph", graph_f)

    @cached_property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, _ in self.graph)

    def sort_key(self) -> tuple[Pair, ...]:
        return tuple(sorted(self.graph))

    def __call__(self, x: int) -> int:
        for px, py in self.graph:
            if px == x:
                return py
        raise KeyError(x)

    def __len__(self) -> int:
        return len(self.graph)

    def __repr__(self) -> str:
        return f"PartialFunction({format_pf_literal(self)})"


def empty_pf(base: Iterable[int]) -> PartialFunction:
    return PartialFunction(base, ())


def format_pf_literal(f: PartialFunction) -> str:
    """Render a graph in the literal syntax, e.g. ``{1->1, 2->2}``."""
    inner = ", ".join(f"{x}->{y}" for x, y in sorted(f.graph))
    return "{" + inner + "}"


def pf_minus(f: PartialFunction, g: PartialFunction) -> PartialFunction:
    """Relative complement: the pairs of ``f`` not in ``g``."""
    if f.base != g.base:
        raise BaseMismatchError(f"bases differ: {sorted(f.base)} vs {sorted(g.base)}")
    return PartialFunction(f.base, f.graph - g.graph)


def pf_restrict(f: PartialFunction, g: PartialFunction) -> PartialFunction:
    """Domain restriction: ``g`` cut down to the domain of ``f``."""
    if f.base != g.base:
        raise BaseMismatchError(f"bases differ: {sorted(f.base)} vs {sorted(g.base)}")
    dom = f.domain
    return PartialFunction(f.base, frozenset(p for p in g.graph if p[0] in dom))


def is_injective_pf(f: PartialFunction) -> bool:
    return len({y for _, y in f.graph}) == len(f.graph)


# ---------------------------------------------------------------------------
# Closure of generator sets
# ---------------------------------------------------------------------------


def _graph_minus(g: Graph, h: Graph) -> Graph:
    return g - h

def _graph_restrict(g: Graph, h: Graph) -> Graph:
    dom = {x for x, _ in g}
    return frozenset(p for p in h if p[0] in dom)


def _close_graphs(seeds: Sequence[Graph], cap: int = SIZE_CAP) -> list[Graph]:
    """Close graphs under the two set-theoretic operations.

    Discovery order: seeds first (duplicates dropped), then products in
    breadth-first waves with ties broken by lexicographic graph.  The
    operations never assume functionality, so relations close fine too.
    """
    elems: list[Graph] = []
    index: set[Graph] = set()
    for g in seeds:
        if g not in index:
            index.add(g)
            elems.append(g)
    while True:
        fresh: set[Graph] = set()
        for g in elems:
            for h in elems:
                for product in (_graph_minus(g, h), _graph_restrict(g, h)):
                    if product not in index and product not in fresh:
                        fresh.add(product)
        if not fresh:
            return elems
        for g in sorted(fresh, key=sorted):
            if len(elems) >= cap:
                raise SizeCapError(
                    f"closure exceeds the cap of {cap} elements"
                )
            index.add(g)
            elems.append(g)


def _tables_for(graphs: Sequence[Graph]) -> tuple[Table, Table]:
    index = {g: i for i, g in enumerate(graphs)}
    minus_t = tuple(
        tuple(index[_graph_minus(g, h)] for h in graphs) for g in graphs
    )
    restrict_t = tuple(
        tuple(index[_graph_restrict(g, h)] for h in graphs) for g in graphs
    )
    return minus_t, restrict_t


@dataclass(frozen=True)
class ConcreteAlgebra:
    """A closed list of partial functions plus its abstract tables.

    Construction re-derives both tables pointwise, so a value of this
    type is a certificate that ``abstract`` really is the algebra of its
    ``elements``.
    """

    base: frozenset[int]
    elements: tuple[PartialFunction, ...]
    abstract: FiniteAlgebra

    def __post_init__(self):
        graphs = [f.graph for f in self.elements]
        if len(set(graphs)) != len(graphs):
            raise InconsistencyError("concrete elements are not distinct")
        for f in self.elements:
            if f.base != self.base:
                raise BaseMismatchError("element base differs from algebra base")
        if self.abstract.size != len(self.elements):
            raise InconsistencyError(
                f"abstract size {self.abstract.size} != {len(self.elements)} elements"
            )
        minus_t, restrict_t = _tables_for(graphs)
        if minus_t != self.abstract.minus or restrict_t != self.abstract.restrict:
            raise InconsistencyError(
                "abstract tables disagree with pointwise evaluation"
            )

    @property
    def dictionary(self) -> dict[int, PartialFunction]:
        return dict(enumerate(self.elements))

    def index_of(self, f: PartialFunction) -> int:
        for i, g in enumerate(self.elements):
            if g.graph == f.graph:
                return i
        raise KeyError(format_pf_literal(f))


def close_generators(
    base: Iterable[int], generators: Sequence[PartialFunction]
) -> ConcreteAlgebra:
    """Close a nonempty generator list under the two operations.

    The resulting element numbering is deterministic: generators first,
    then products in breadth-first waves, ties by lexicographic graph.
    """
    base_f = frozenset(base)
    if not generators:
        raise AlgebraError(
            "at least one generator is required: the closure of nothing is empty"
        )
    for g in generators:
        if g.base != base_f:
            raise BaseMismatchError(
                f"generator base {sorted(g.base)} differs from {sorted(base_f)}"
            )
    graphs = _close_graphs([g.graph for g in generators])
    minus_t, restrict_t = _tables_for(graphs)
    abstract = FiniteAlgebra.from_tables(minus_t, restrict_t)
    elements = tuple(PartialFunction(base_f, g) for g in graphs)
    return ConcreteAlgebra(base_f, elements, abstract)


def close_relations(
    base: Iterable[int], graphs: Sequence[Iterable[Pair]]
) -> tuple[FiniteAlgebra, tuple[Graph, ...]]:
    """Close arbitrary relations set-theoretically and tabulate them.

    Functionality is never assumed: this is how non-functional inputs
    are turned into tables so the law checker can report on them.
    """
    base_f = frozenset(base)
    seeds = []
    for g in graphs:
        graph = frozenset((int(x), int(y)) for x, y in g)
        for x, y in graph:
            if x not in base_f or y not in base_f:
                raise PfunError(f"pair ({x}, {y}) is outside the base {sorted(base_f)}")
        seeds.append(graph)
    if not seeds:
        raise AlgebraError(
            "at least one generator is required: the closure of nothing is empty"
        )
    closed = _close_graphs(seeds)
    minus_t, restrict_t = _tables_for(closed)
    return FiniteAlgebra.from_tables(minus_t, restrict_t), tuple(closed)


# ---------------------------------------------------------------------------
# Boolean algebras as identity-function algebras
# ---------------------------------------------------------------------------


def boolean_as_diffrest(field: int | Iterable[Iterable[int]]) -> ConcreteAlgebra:
    """Interpret a field of sets as an algebra of identity functions.

    ``field`` is either a universe size (meaning the full powerset of
    that many points) or an explicit family of sets.  Each member set S
    becomes the identity function on S; complement within a set and
    intersection then realize the two operations.  The resulting tables
    are checked against all five laws.
    """
    if isinstance(field, int):
        if field < 0:
            raise AlgebraError("universe size must be nonnegative")
        universe = frozenset(range(1, field + 1))
        points = sorted(universe)
        sets = [
            frozenset(c)
            for k in range(len(points) + 1)
            for c in itertools.combinations(points, k)
        ]
    else:
        sets = [frozenset(int(x) for x in s) for s in field]
        if not sets:
            raise AlgebraError("a field of sets is nonempty")
        universe = frozenset().union(*sets)
        if universe not in sets:
            raise AlgebraError("not a field of sets: universe is missing")
    family = sorted(set(sets), key=sorted)
    family_set = set(family)
    for s in family:
        if universe - s not in family_set:
            raise AlgebraError(f"not a field of sets: complement of {sorted(s)} missing")
        for t in family:
            if s & t not in family_set:
                raise AlgebraError(
                    f"not a field of sets: intersection of {sorted(s)} and {sorted(t)} missing"
                )

    elements = tuple(
        PartialFunction(universe, ((x, x) for x in s)) for s in family
    )
    graphs = [f.graph for f in elements]
    minus_t, restrict_t = _tables_for(graphs)
    abstract = FiniteAlgebra.from_tables(minus_t, restrict_t)
    report = check_axioms(abstract)
    if not report.passed:
        raise InconsistencyError(
            f"identity-function algebra violates {report.failures()[0].law}"
        )
    # The dictionary must realize complement-within and intersection.
    index = {s: i for i, s in enumerate(family)}
    for i, s in enumerate(family):
        for j, t in enumerate(family):
            if minus_t[i][j] != index[s - t] or restrict_t[i][j] != index[s & t]:
                raise InconsistencyError(
                    "identity dictionary disagrees with the set operations"
                )
    return ConcreteAlgebra(universe, elements, abstract)


# ---------------------------------------------------------------------------
# Random generators for test corpora
# ---------------------------------------------------------------------------


def random_generators(
    rng: random.Random, base: Iterable[int], count: int
) -> list[PartialFunction]:
    """Sample generator functions: each point maps with probability 1/2
    to a uniformly random image point."""
    points = sorted(frozenset(base))
    gens = []
    for _ in range(count):
        graph = [(x, rng.choice(points)) for x in points if rng.random() < 0.5]
        gens.append(PartialFunction(points, graph))
    return gens
