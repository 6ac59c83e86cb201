"""opnkit: exact and certified-interval arithmetic around odd perfect numbers.

Divisor-theoretic quantities (divisor sum, radical, abundancy, reciprocal
symmetric sums) are computed exactly over certified prime factorizations;
the irrational lower bounds in the number of distinct prime factors are
evaluated with outward-rounded dyadic intervals; and a constraint battery
audits candidate factorizations against the classical necessary conditions
for odd perfect numbers.
"""

from .arith import (
    Classification,
    Factorization,
    NonPrimeFactorError,
    ParseError,
    abundancy,
    classify,
    elementary_symmetric,
    factorize,
    parse_factorization,
    prime_sum,
    radical,
    reciprocal_sum,
    render,
    sigma,
    symmetric_reciprocal_sums,
    value,
)
from .bounds import (
    BoundsReport,
    Ordering3,
    PowerOfTwo,
    PrecisionExhaustedError,
    bounds_report,
    compare_rational_to_bound,
    n_lower_bound,
    nielsen_upper_bound,
    prime_sum_lower_bound,
    radical_lower_bound,
    refined_reciprocal_rhs,
    two_to_inverse_r,
)
from .checks import (
    PrimeSet,
    SuiteResult,
    check_bound_implication,
    check_exponent_lift,
    check_gm_hm_step,
    check_reciprocal_implication,
    check_refined_reciprocal_implication,
    random_prime_set,
    run_verify_suite,
    verify_chain,
)
from .constraints import (
    ConstraintReport,
    ConstraintVerdict,
    Overall,
    Verdict,
    audit,
    explain,
)
from .interval import Dyadic, Interval, nth_root_enclosure
from .primes import is_prime
from .scan import CheckpointError, ScanReport, scan_perfect, scan_radical_chain

__all__ = [
    "Classification",
    "Factorization",
    "NonPrimeFactorError",
    "ParseError",
    "abundancy",
    "classify",
    "elementary_symmetric",
    "factorize",
    "parse_factorization",
    "prime_sum",
    "radical",
    "reciprocal_sum",
    "render",
    "sigma",
    "symmetric_reciprocal_sums",
    "value",
    "BoundsReport",
    "Ordering3",
    "PowerOfTwo",
    "PrecisionExhaustedError",
    "bounds_report",
    "compare_rational_to_bound",
    "n_lower_bound",
    "nielsen_upper_bound",
    "prime_sum_lower_bound",
    "radical_lower_bound",
    "refined_reciprocal_rhs",
    "two_to_inverse_r",
    "PrimeSet",
    "SuiteResult",
    "check_bound_implication",
    "check_exponent_lift",
    "check_gm_hm_step",
    "check_reciprocal_implication",
    "check_refined_reciprocal_implication",
    "random_prime_set",
    "run_verify_suite",
    "verify_chain",
    "ConstraintReport",
    "ConstraintVerdict",
    "Overall",
    "Verdict",
    "audit",
    "explain",
    "Dyadic",
    "Interval",
    "nth_root_enclosure",
    "is_prime",
    "CheckpointError",
    "ScanReport",
    "scan_perfect",
    "scan_radical_chain",
]
