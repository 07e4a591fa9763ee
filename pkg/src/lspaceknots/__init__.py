"""Exact invariants of L-space knots.

Sparse integer Alexander polynomials, iterated-torus knot expressions, the
gap-set complements ("formal semigroups") read off the Alexander polynomial,
exact piecewise-linear upsilon functions, and the obstructions that separate
L-space iterated torus knots from algebraic knots.
"""

from .errors import (
    ConstraintError,
    DomainError,
    HypothesisViolated,
    InfiniteComplement,
    InvalidSemigroup,
    InvalidShape,
    NotCoprime,
    NotDivisible,
    NotIteratedTorus,
    NotLSpace,
    NotLSpaceShape,
    OutOfDomain,
    ParseError,
    Undefined,
)
from .intpoly import (
    IntPolynomial,
    alexander_function_prefix,
    cable_alexander,
    parse_polynomial,
    poly_add,
    poly_exact_div,
    poly_mul,
    substitute_power,
    torus_alexander,
)
from .knotexpr import (
    Algebraicity,
    Cable,
    Certificate,
    ExplicitAlexander,
    KnotCombination,
    KnotExpr,
    LSpaceStatus,
    PRETZEL_P237,
    Pretzel237,
    Torus,
    UNKNOT,
    alexander,
    cable,
    certify_lspace,
    classify_algebraic,
    combination,
    explicit_alexander,
    genus,
    jfamily,
    parse,
    torus,
    tower,
    unparse,
)
from .obstruct import (
    Decomposition,
    DecompositionFailure,
    JumpComparison,
    ObstructionReport,
    Verdict,
    algebraicity_report,
    decompose_into_consecutive_torus,
    independence_matrix,
    jump_equality,
    lambda_invariant,
)
from .semigroup import (
    FormalSemigroup,
    cable_semigroup,
    closure_witness,
    from_alexander,
    from_generators,
    is_semigroup,
    iterated_torus_generators,
    min_nonzero,
    to_alexander,
)
from .upsilon import (
    PiecewiseLinear,
    envelope,
    evaluate,
    jump_spectrum,
    pl_combine,
    torus_consecutive_upsilon,
    upsilon_from_semigroup,
    upsilon_of_combination,
    upsilon_of_knot,
)

__all__ = [
    "Algebraicity",
    "Cable",
    "Certificate",
    "ConstraintError",
    "Decomposition",
    "DecompositionFailure",
    "DomainError",
    "ExplicitAlexander",
    "FormalSemigroup",
    "HypothesisViolated",
    "InfiniteComplement",
    "IntPolynomial",
    "InvalidSemigroup",
    "InvalidShape",
    "JumpComparison",
    "KnotCombination",
    "KnotExpr",
    "LSpaceStatus",
    "NotCoprime",
    "NotDivisible",
    "NotIteratedTorus",
    "NotLSpace",
    "NotLSpaceShape",
    "ObstructionReport",
    "OutOfDomain",
    "PRETZEL_P237",
    "ParseError",
    "PiecewiseLinear",
    "Pretzel237",
    "Torus",
    "UNKNOT",
    "Undefined",
    "Verdict",
    "alexander",
    "alexander_function_prefix",
    "algebraicity_report",
    "cable",
    "cable_alexander",
    "cable_semigroup",
    "certify_lspace",
    "classify_algebraic",
    "closure_witness",
    "combination",
    "decompose_into_consecutive_torus",
    "envelope",
    "evaluate",
    "explicit_alexander",
    "from_alexander",
    "from_generators",
    "genus",
    "independence_matrix",
    "is_semigroup",
    "iterated_torus_generators",
    "jfamily",
    "jump_equality",
    "jump_spectrum",
    "lambda_invariant",
    "min_nonzero",
    "parse",
    "parse_polynomial",
    "pl_combine",
    "poly_add",
    "poly_exact_div",
    "poly_mul",
    "substitute_power",
    "to_alexander",
    "torus",
    "torus_alexander",
    "torus_consecutive_upsilon",
    "tower",
    "unparse",
    "upsilon_from_semigroup",
    "upsilon_of_combination",
    "upsilon_of_knot",
]
