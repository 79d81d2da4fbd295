"""Exact rational invariant theory for isometry groups of (p,q) metrics.

Decide invariance of polynomials in several vector arguments, rewrite
invariants in pairing (Gram) coordinates, and manipulate the determinantal
ideal of relations among the pairings.  All arithmetic is exact over the
rationals; randomized checks are deterministic given their seeds.
"""

from .errors import (
    DimensionMismatch,
    ForeignVariable,
    GraminvError,
    IndexOutOfRange,
    InvalidIndex,
    MissingAssignment,
    NoCertificateAtDegree,
    NotAnIsometry,
    NotInKernel,
    NotInvariantError,
    NotSkew,
    ParseError,
    SingularCayley,
    SizeMismatch,
)
from .poly import Monomial, Polynomial, Variable, polynomial_sum, xvar, yvar
from .textio import format_polynomial, parse_polynomial
from .metric import (
    GramContext,
    Signature,
    gram_jacobian_rank,
    gram_pairs,
    gram_polynomial,
    independence_rank,
    minor_polynomial,
    minor_vanishes,
    substitute_gram,
)
from .group import (
    Isometry,
    LieAlgebraElement,
    cayley,
    component_label,
    component_representatives,
    is_isometry,
    sample_isometry,
    skew_basis,
)
from .invariance import (
    InvarianceVerdict,
    IsometryWitness,
    LieAlgebraWitness,
    check_invariant,
    lie_derivative,
    pullback,
    randomized_invariance_check,
)
from .rewrite import (
    MembershipCertificate,
    NormalForm,
    enumerate_minors,
    kernel_test,
    membership_certificate,
    normal_form,
    rewrite_invariant,
)

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatch",
    "ForeignVariable",
    "GraminvError",
    "GramContext",
    "IndexOutOfRange",
    "InvalidIndex",
    "InvarianceVerdict",
    "Isometry",
    "IsometryWitness",
    "LieAlgebraElement",
    "LieAlgebraWitness",
    "MembershipCertificate",
    "MissingAssignment",
    "Monomial",
    "NoCertificateAtDegree",
    "NormalForm",
    "NotAnIsometry",
    "NotInKernel",
    "NotInvariantError",
    "NotSkew",
    "ParseError",
    "Polynomial",
    "Signature",
    "SingularCayley",
    "SizeMismatch",
    "Variable",
    "cayley",
    "check_invariant",
    "component_label",
    "component_representatives",
    "enumerate_minors",
    "format_polynomial",
    "gram_jacobian_rank",
    "gram_pairs",
    "gram_polynomial",
    "independence_rank",
    "is_isometry",
    "kernel_test",
    "lie_derivative",
    "membership_certificate",
    "minor_polynomial",
    "minor_vanishes",
    "normal_form",
    "parse_polynomial",
    "polynomial_sum",
    "pullback",
    "randomized_invariance_check",
    "rewrite_invariant",
    "sample_isometry",
    "skew_basis",
    "substitute_gram",
    "xvar",
    "yvar",
]
