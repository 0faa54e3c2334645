"""Independent brute-force machinery.

Three oracles: exhaustive enumeration of partial functions on tiny
bases, an exhaustive embedding search deciding whether an abstract
algebra is isomorphic to an algebra of partial functions at all, and an
exhaustive model enumerator for the defining laws with isomorph
rejection.  A differential driver cross-checks the law checker against
the embedding search on whole corpora.

The embedding search works point by point.  The trace of a base point
assigns to every algebra element either "undefined" or a value point;
traces are locally constrained by the two pointwise operation rules and
are fully determined by their values on a generating set, so the search
enumerates consistent traces once and then covers the injectivity
requirements.  A representation on fewer points extends to one on more
points by padding the base, so exhausting the maximum base size alone
decides non-representability up to that size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Sequence

from .algebra import (
    SIZE_CAP,
    AlgebraError,
    AxiomReport,
    FiniteAlgebra,
    InconsistencyError,
    check_axioms,
    mask_iter,
)
from .pfun import PartialFunction
from .represent import Representation, verify_representation


class BudgetExceededError(AlgebraError):
    """A request falls outside the search budget."""


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the oracles.

    ``max_base_size`` may be zero (the empty base is a legitimate
    search target); ``node_limit`` bounds backtracking nodes and turns
    an exhausted budget into an explicit inconclusive verdict, never a
    silent miss.
    """

    max_base_size: int = 4
    max_algebra_size: int = SIZE_CAP
    node_limit: int = 2_000_000
    seed: int = 0

    def __post_init__(self):
        if self.max_base_size < 0:
            raise BudgetExceededError("max_base_size must be nonnegative")
        if self.max_algebra_size <= 0 or self.node_limit <= 0:
            raise BudgetExceededError("budget limits must be positive")


DEFAULT_BUDGET = SearchBudget()


class _NodeLimit(Exception):
    pass


# ---------------------------------------------------------------------------
# Exhaustive partial-function enumeration
# ---------------------------------------------------------------------------


def enumerate_pfuns(
    base_size: int, budget: SearchBudget | None = None
) -> tuple[PartialFunction, ...]:
    """All partial functions on a base of the given size, canonically ordered.

    The count is (k+1)^k, so the budget caps the base size (4 by
    default).  Points are 1-based; ordering is lexicographic in the
    per-point value vectors with "undefined" first.
    """
    limit = budget.max_base_size if budget is not None else 4
    if base_size < 0 or base_size > limit:
        raise BudgetExceededError(
            f"base size {base_size} outside the budget limit {limit}"
        )
    base = frozenset(range(1, base_size + 1))
    out = []
    for values in itertools.product(range(base_size + 1), repeat=base_size):
        graph = [
            (x, values[x - 1]) for x in range(1, base_size + 1) if values[x - 1] != 0
        ]
        out.append(PartialFunction(base, graph))
    return tuple(out)


# ---------------------------------------------------------------------------
# Embedding search
# ---------------------------------------------------------------------------


def generating_set(alg: FiniteAlgebra) -> tuple[int, ...]:
    """A small generating set, chosen greedily from the top of the order."""

    def closure(mask: int) -> int:
        while True:
            new = mask
            for x in mask_iter(mask):
                for y in mask_iter(mask):
                    new |= 1 << alg.minus[x][y]
                    new |= 1 << alg.restrict[x][y]
            if new == mask:
                return mask
            mask = new

    order = sorted(
        range(alg.size),
        key=lambda e: (-alg.down_masks[e].bit_count(), e),
    )
    chosen: list[int] = []
    closed = 0
    for e in order:
        if closed == alg.all_mask:
            break
        if closed >> e & 1:
            continue
        chosen.append(e)
        closed = closure(closed | 1 << e)
    return tuple(chosen)


@dataclass(frozen=True)
class EmbeddingResult:
    verdict: str  # "found" | "none" | "inconclusive"
    assignment: tuple[PartialFunction, ...] | None
    base_size: int
    nodes: int
    seed: int

    @property
    def found(self) -> bool:
        return self.verdict == "found"


def _valid_columns(
    alg: FiniteAlgebra, gens: Sequence[int], m: int, counter: list[int], limit: int
) -> list[tuple[int, ...]]:
    """Enumerate consistent point traces: element -> 0 (undefined) or value.

    A trace is propagated from generator values through the tables; any
    clash kills the candidate.  Traces are returned as full tuples.
    """
    n = alg.size
    minus, restrict = alg.minus, alg.restrict
    columns: list[tuple[int, ...]] = []
    for combo in itertools.product(range(m + 1), repeat=len(gens)):
        counter[0] += 1
        if counter[0] > limit:
            raise _NodeLimit
        tau: list[int | None] = [None] * n
        known: list[int] = []
        ok = True

        def put(e: int, v: int) -> bool:
            if tau[e] is None:
                tau[e] = v
                known.append(e)
                return True
            return tau[e] == v

        for g, v in zip(gens, combo):
            if not put(g, v):
                ok = False
                break
        if not ok:
            continue
        qi = 0
        while ok and qi < len(known):
            e = known[qi]
            qi += 1
            snapshot = len(known)
            for idx in range(snapshot):
                x = known[idx]
                te, tx = tau[e], tau[x]
                # pair (e, x)
                v = te if (te != 0 and tx != te) else 0
                if not put(minus[e][x], v):
                    ok = False
                    break
                v = tx if te != 0 else 0
                if not put(restrict[e][x], v):
                    ok = False
                    break
                # pair (x, e)
                v = tx if (tx != 0 and te != tx) else 0
                if not put(minus[x][e], v):
                    ok = False
                    break
                v = te if tx != 0 else 0
                if not put(restrict[x][e], v):
                    ok = False
                    break
        if not ok:
            continue
        if any(t is None for t in tau):
            raise InconsistencyError("generating set failed to reach every element")
        columns.append(tuple(tau))
    return columns


def brute_force_embedding(
    alg: FiniteAlgebra, budget: SearchBudget = DEFAULT_BUDGET
) -> EmbeddingResult:
    """Decide by exhaustive search whether the algebra embeds into an
    algebra of partial functions on at most ``max_base_size`` points.

    A found assignment is verified before being reported.  "none" means
    the search space at the maximum base size was exhausted, which by
    base padding rules out every smaller base as well.
    """
    n = alg.size
    if n > budget.max_algebra_size:
        raise BudgetExceededError(
            f"algebra size {n} exceeds the budget limit {budget.max_algebra_size}"
        )
    m = budget.max_base_size
    gens = generating_set(alg)
    counter = [0]

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pair_pos = {p: k for k, p in enumerate(pairs)}
    all_pairs_mask = (1 << len(pairs)) - 1

    try:
        columns = _valid_columns(alg, gens, m, counter, budget.node_limit)
    except _NodeLimit:
        return EmbeddingResult("inconclusive", None, m, counter[0], budget.seed)

    sep_masks = []
    for col in columns:
        mask = 0
        for (i, j), k in pair_pos.items():
            if col[i] != col[j]:
                mask |= 1 << k
        sep_masks.append(mask)

    order = sorted(
        range(len(columns)), key=lambda ci: (-sep_masks[ci].bit_count(), columns[ci])
    )
    coverage = 0
    for ci in order:
        coverage |= sep_masks[ci]

    bot = tuple([0] * n)
    path: list[int] = []

    def build(found_path: list[int]) -> tuple[PartialFunction, ...]:
        cols = [columns[ci] for ci in found_path]
        cols += [bot] * (m - len(cols))
        base = frozenset(range(1, m + 1))
        assignment = []
        for a in range(n):
            graph = [
                (p + 1, cols[p][a]) for p in range(m) if cols[p][a] != 0
            ]
            assignment.append(PartialFunction(base, graph))
        return tuple(assignment)

    def dfs(depth: int, unseparated: int) -> list[int] | None:
        counter[0] += 1
        if counter[0] > budget.node_limit:
            raise _NodeLimit
        if unseparated == 0:
            return list(path)
        if depth == m or unseparated & ~coverage:
            return None
        for ci in order:
            new = sep_masks[ci] & unseparated
            if not new:
                continue
            path.append(ci)
            result = dfs(depth + 1, unseparated & ~sep_masks[ci])
            if result is not None:
                return result
            path.pop()
        return None

    try:
        solution = dfs(0, all_pairs_mask)
    except _NodeLimit:
        return EmbeddingResult("inconclusive", None, m, counter[0], budget.seed)

    if solution is None:
        return EmbeddingResult("none", None, m, counter[0], budget.seed)

    assignment = build(solution)
    rep = Representation(alg, "external", tuple(range(1, m + 1)), assignment)
    report = verify_representation(rep)
    if not report.passed:
        raise InconsistencyError(
            f"search produced an assignment that fails verification: {report.failures[0]}"
        )
    return EmbeddingResult("found", assignment, m, counter[0], budget.seed)


# ---------------------------------------------------------------------------
# Exhaustive model enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModelCatalog:
    size: int
    models: tuple[FiniteAlgebra, ...]
    exhaustive: bool
    nodes: int


def canonical_form(alg: FiniteAlgebra) -> str:
    """Minimal table serialization over relabelings sending bottom to 0.

    Two algebras are isomorphic exactly when their canonical forms
    coincide; cost grows factorially, so keep this to desk-scale sizes.
    """
    n = alg.size
    rest = [e for e in range(n) if e != alg.zero]
    best: str | None = None
    for perm in itertools.permutations(rest):
        sigma = [0] * n
        sigma[alg.zero] = 0
        for new_minus_one, old in enumerate(perm):
            sigma[old] = new_minus_one + 1
        inv = [0] * n
        for old, new in enumerate(sigma):
            inv[new] = old
        rows = []
        for table in (alg.minus, alg.restrict):
            for i in range(n):
                rows.append(
                    ",".join(str(sigma[table[inv[i]][inv[j]]]) for j in range(n))
                )
        form = f"n={n};" + ";".join(rows)
        if best is None or form < best:
            best = form
    return best


def _laws_on_partial_minus(minus: list[list[int | None]], n: int) -> bool:
    # The three complement laws, skipping instances with unknown cells.
    for a in range(n):
        for b in range(n):
            t = minus[b][a]
            if t is not None:
                u = minus[a][t]
                if u is not None and u != a:
                    return False
            ab = minus[a][b]
            ba = minus[b][a]
            if ab is not None and ba is not None:
                mab = minus[a][ab]
                mba = minus[b][ba]
                if mab is not None and mba is not None and mab != mba:
                    return False
            for c in range(n):
                if ab is not None:
                    left = minus[ab][c]
                    ac = minus[a][c]
                    if left is not None and ac is not None:
                        right = minus[ac][b]
                        if right is not None and left != right:
                            return False
    return True


def _laws_on_partial_restrict(
    minus: list[list[int]], restrict: list[list[int | None]], n: int
) -> bool:
    # The two restriction laws, skipping instances with unknown cells.
    def meet(a: int, b: int) -> int:
        return minus[a][minus[a][b]]

    for a in range(n):
        for b in range(n):
            ab = meet(a, b)
            r = restrict[ab][a]
            if r is not None and r != ab:
                return False
            rab = restrict[a][b]
            for c in range(n):
                rac = restrict[a][c]
                rbc = restrict[b][c]
                if rac is None or rbc is None or rab is None:
                    continue
                lhs = meet(rac, rbc)
                rhs = restrict[rab][c]
                if rhs is not None and lhs != rhs:
                    return False
    return True


def enumerate_axiom_models(
    n: int, budget: SearchBudget = DEFAULT_BUDGET
) -> ModelCatalog:
    """All law-abiding algebras of a given size, up to isomorphism.

    Backtracks over the two tables with the forced cells seeded (bottom
    fixed at element 0) and the laws re-checked as cells fill; complete
    models are deduplicated by canonical form.
    """
    if n < 1:
        raise AlgebraError("algebras are nonempty")
    counter = [0]
    found: dict[str, FiniteAlgebra] = {}

    minus: list[list[int | None]] = [[None] * n for _ in range(n)]
    restrict: list[list[int | None]] = [[None] * n for _ in range(n)]
    for a in range(n):
        minus[a][a] = 0
        minus[a][0] = a if a != 0 else 0
        restrict[a][a] = a
        restrict[0][a] = 0
        restrict[a][0] = 0
    free_minus = [
        (a, b) for a in range(n) for b in range(n) if minus[a][b] is None
    ]
    free_restrict = [
        (a, b) for a in range(n) for b in range(n) if restrict[a][b] is None
    ]

    def fill_restrict(k: int) -> None:
        counter[0] += 1
        if counter[0] > budget.node_limit:
            raise _NodeLimit
        if k == len(free_restrict):
            alg = FiniteAlgebra.from_tables(minus, restrict)
            report = check_axioms(alg)
            if not report.passed:
                raise InconsistencyError(
                    "incremental pruning admitted a non-model"
                )
            found.setdefault(canonical_form(alg), alg)
            return
        a, b = free_restrict[k]
        for v in range(n):
            restrict[a][b] = v
            if _laws_on_partial_restrict(minus, restrict, n):
                fill_restrict(k + 1)
            restrict[a][b] = None

    def fill_minus(k: int) -> None:
        counter[0] += 1
        if counter[0] > budget.node_limit:
            raise _NodeLimit
        if k == len(free_minus):
            fill_restrict(0)
            return
        a, b = free_minus[k]
        for v in range(n):
            minus[a][b] = v
            if _laws_on_partial_minus(minus, n):
                fill_minus(k + 1)
            minus[a][b] = None

    exhaustive = True
    try:
        fill_minus(0)
    except _NodeLimit:
        exhaustive = False

    models = tuple(found[key] for key in sorted(found))
    return ModelCatalog(n, models, exhaustive, counter[0])


# ---------------------------------------------------------------------------
# Differential validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DifferentialEntry:
    index: int
    axioms: AxiomReport
    embedding: EmbeddingResult
    agree: bool | None  # None when the search was inconclusive

    def render(self) -> str:
        token = (
            "INCONCLUSIVE" if self.agree is None else ("PASS" if self.agree else "FAIL")
        )
        return (
            f"{token} algebra={self.index} axioms="
            f"{'pass' if self.axioms.passed else 'fail'} "
            f"embedding={self.embedding.verdict} base={self.embedding.base_size}"
        )


@dataclass(frozen=True)
class DifferentialReport:
    entries: tuple[DifferentialEntry, ...]
    budget: SearchBudget

    @property
    def disagreements(self) -> tuple[DifferentialEntry, ...]:
        return tuple(e for e in self.entries if e.agree is False)

    @property
    def inconclusive(self) -> tuple[DifferentialEntry, ...]:
        return tuple(e for e in self.entries if e.agree is None)

    @property
    def all_agree(self) -> bool:
        return not self.disagreements and not self.inconclusive


def differential_check(
    corpus: Sequence[FiniteAlgebra], budget: SearchBudget = DEFAULT_BUDGET
) -> DifferentialReport:
    """Cross-validate the law checker against the embedding search.

    For a law-abiding algebra the search runs at base size equal to its
    number of atoms, which the canonical construction guarantees to
    suffice; for the rest the budget's base size is used.  Agreement
    means the two verdicts coincide; inconclusive searches are reported
    separately and never counted as agreement.
    """
    entries = []
    for idx, alg in enumerate(corpus):
        report = check_axioms(alg)
        if report.passed:
            base = len(alg.order_atoms())
        else:
            base = budget.max_base_size
        result = brute_force_embedding(alg, replace(budget, max_base_size=base))
        if result.verdict == "inconclusive":
            agree = None
        else:
            agree = report.passed == result.found
        entries.append(DifferentialEntry(idx, report, result, agree))
    return DifferentialReport(tuple(entries), budget)
