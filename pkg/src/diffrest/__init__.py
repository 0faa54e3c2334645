"""Finite difference-restriction algebras: laws, filters, representations,
and brute-force oracles."""

from .algebra import (
    SIZE_CAP,
    AlgebraError,
    AxiomFailure,
    AxiomReport,
    BooleanDownset,
    ComplementedSemilattice,
    DerivedRelations,
    DomainQuotient,
    FiniteAlgebra,
    InconsistencyError,
    LawVerdict,
    SizeCapError,
    TableError,
    boolean_downset,
    check_axioms,
    check_derived_laws,
    check_subtraction_axioms,
    complemented_semilattice_of,
    derived_relations,
    domain_quotient,
    evaluate_law,
    subtraction_from_boolean_downsets,
)
from .filters import (
    Filter,
    FilterFamily,
    ImproperFilterError,
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
from .formats import (
    ParseError,
    abstract_of,
    load_path,
    parse_algebras,
    parse_pf_literal,
    serialize_algebra,
    serialize_concrete,
)
from .oracle import (
    BudgetExceededError,
    DifferentialReport,
    EmbeddingResult,
    ModelCatalog,
    SearchBudget,
    brute_force_embedding,
    canonical_form,
    differential_check,
    enumerate_axiom_models,
    enumerate_pfuns,
    generating_set,
)
from .pfun import (
    BaseMismatchError,
    ConcreteAlgebra,
    FunctionalityError,
    PartialFunction,
    PfunError,
    boolean_as_diffrest,
    close_generators,
    close_relations,
    empty_pf,
    format_pf_literal,
    is_injective_pf,
    pf_minus,
    pf_restrict,
    random_generators,
)
from .represent import (
    CompletenessReport,
    NonHomomorphismError,
    NotAtomicError,
    Representation,
    VerificationReport,
    atomic_eta,
    atomic_theta,
    atoms,
    canonical_theta,
    completeness_report,
    injective_eta,
    is_atomic,
    is_atomistic,
    verify_hom_restriction,
    verify_representation,
)

__version__ = "0.1.0"
