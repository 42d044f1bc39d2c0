"""Fuzzy soft sets, soft relations and parameterized decision making."""

from .algebra import (
    EquivalenceClass,
    FuzzyProperties,
    FuzzyRelationMatrix,
    FuzzySoftSet,
    alpha_cut_relation,
    check_fuzzy_properties,
    equivalence_class,
    extension_principle,
    nary_combine,
    pairwise_relation,
    quotient_set,
    relation_contains,
    relation_intersection,
    relation_union,
    soft_and,
    soft_nand,
    soft_nor,
    soft_not,
    soft_or,
    soft_product_ops,
)
from .core import (
    FuzzyError,
    FuzzySet,
    InvariantViolation,
    MembershipFunctionSpec,
    MembershipKind,
    TNorm,
    Universe,
    UniverseMismatch,
    alpha_cut_set,
    complement,
    discretize,
    eval_membership,
    intersection,
    scalar_cardinality,
    set_algebra,
    tnorm_combine,
    union,
)
from .decision import (
    Criterion,
    DecisionQuery,
    PayoffTable,
    Ranking,
    decide,
    expected_value,
    possibility_dominance,
    rank,
    regret_table,
    score_alternatives,
    select_best,
    validate_probability,
)
from .uncertainty import (
    DegenerateClass,
    average_uncertainty,
    expected_cardinality,
    uncertainty_quantity,
)

__version__ = "0.1.0"
