"""Monogenity of pure prime-power number fields, decided exactly.

The package analyzes the fields generated by a root of x**(p**r) - m
(m squarefree, |m| >= 2) through first-order Newton polygon machinery:
phi-adic expansion, lower convex envelopes with exact rational slopes,
residual polynomials over residue fields, index lower bounds, and
splitting shapes.  A classifier turns those invariants into one of
MONOGENIC_ZALPHA, NOT_MONOGENIC, or UNDETERMINED, always with a
machine-checkable certificate.
"""

__version__ = "0.1.0"

from .classify import (
    Certificate,
    ComIndexEvidence,
    MonogenityVerdict,
    PrimeAnalysis,
    Provenance,
    Status,
    classify,
    dedekind_divides_index,
    is_common_index_divisor,
    pure_prime_analysis,
)
from .errors import (
    InvariantError,
    MonogenityError,
    OracleDisagreement,
    ValidationError,
)
from .intarith import (
    INFINITY,
    binomial_valuation,
    count_monic_irreducibles,
    is_prime,
    is_squarefree,
    valuation,
)
from .ore import (
    NOT_REGULAR,
    IndexBound,
    PhiReport,
    SplittingShape,
    analyze_prime,
    count_primes_with_residue_degree,
    index_lower_bound,
    phi_report,
    splitting_shape,
)
from .polygon import (
    NewtonPolygon,
    ResidualPolynomial,
    Side,
    ValuedPoint,
    lower_convex_hull,
    phi_index,
    principal_part,
    residual_polynomial,
    valued_points,
)
from .zpoly import (
    PhiExpansion,
    PureFieldParams,
    candidate_index_primes,
    discriminant_valuation,
    phi_expansion,
    pure_polynomial,
)

__all__ = [
    "__version__",
    "INFINITY",
    "NOT_REGULAR",
    "Certificate",
    "ComIndexEvidence",
    "IndexBound",
    "InvariantError",
    "MonogenityError",
    "MonogenityVerdict",
    "NewtonPolygon",
    "OracleDisagreement",
    "PhiExpansion",
    "PhiReport",
    "PrimeAnalysis",
    "Provenance",
    "PureFieldParams",
    "ResidualPolynomial",
    "Side",
    "SplittingShape",
    "Status",
    "ValidationError",
    "ValuedPoint",
    "analyze_prime",
    "binomial_valuation",
    "candidate_index_primes",
    "classify",
    "count_monic_irreducibles",
    "count_primes_with_residue_degree",
    "dedekind_divides_index",
    "discriminant_valuation",
    "index_lower_bound",
    "is_common_index_divisor",
    "is_prime",
    "is_squarefree",
    "lower_convex_hull",
    "phi_expansion",
    "phi_index",
    "phi_report",
    "principal_part",
    "pure_polynomial",
    "pure_prime_analysis",
    "residual_polynomial",
    "splitting_shape",
    "valuation",
    "valued_points",
]
