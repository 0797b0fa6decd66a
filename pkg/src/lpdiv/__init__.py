"""L-polynomials of curves over small finite fields by exhaustive point
counting, plus executable verifiers for the divisibility relations their
Jacobian decompositions imply."""

from .finite_fields import (
    POLE,
    FiniteField,
    ModulusReducible,
    NoPrime,
    Pole,
    RationalMap,
    TooLarge,
    char_sum,
    eval_rational_map,
    make_field,
    trace,
)
from .intpoly import (
    IntPoly,
    NotPowerSums,
    ZeroConstantTerm,
    ZeroDivisor,
    divides_with_quotient,
    gcd_primitive,
    poly_from_power_sums,
    power_sums_from_poly,
    squarefree_over_Q,
    support_in_tk,
)
from .curves import (
    ArtinSchreierCurve,
    NotReduced,
    OddHyperellipticCurve,
    PointCountSeries,
    count_points,
    count_series,
    dk_curve,
    genus,
    gsum,
    two_rank_deuring,
)
from .zeta import (
    LPolynomial,
    NotConsistent,
    counts_from_lpoly,
    extension_lpoly,
    lpoly_from_counts,
    p_rank_manin,
    validate_lpoly,
)
from .decomp import (
    DivisibilityReport,
    GsumTable,
    Verdict,
    check_main_theorem,
    check_main_theorem_lpolys,
    converse_counts_check,
    counterexample_f3,
    gsum_invariance_scan,
    master_identity_check,
    split_two_prime,
    verify_conjecture_dk,
)

__all__ = [name for name in dir() if not name.startswith("_")]
