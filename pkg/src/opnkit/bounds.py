"""Certified evaluation of the lower-bound expressions in r (the number of
distinct prime factors) and exact evaluation of the rational ones.

The three irrational bounds share one skeleton: enclose 2**(1/r) with a
certified dyadic interval, subtract 1, then raise/divide with outward
rounding.  Strict comparisons of an exact rational against a bound are
decided by adaptive precision refinement, never by floating point: the
interval is tightened until it excludes the rational, or a configurable
precision cap is hit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .interval import Dyadic, Interval, ONE, div_dir, nth_root_enclosure, pow_dir

DEFAULT_START_BITS = 64
DEFAULT_PRECISION_CAP_BITS = 1 << 20
DEFAULT_REPORT_DIGITS = 50

BOUND_KINDS = ("radical", "prime_sum", "n")


class Ordering3(Enum):
    BELOW = "below"
    ABOVE = "above"
    UNDECIDED = "undecided"


class PrecisionExhaustedError(RuntimeError):
    """An interval comparison could not be resolved below the precision cap."""


def _validate(r: int, precision_bits: int, min_precision: int = 1) -> None:
    if r < 1:
        raise ValueError("r must be >= 1")
    if precision_bits < min_precision:
        raise ValueError(f"precision_bits must be >= {min_precision}")


def _work_bits(r: int, precision_bits: int) -> int:
    # raising to the r-th power multiplies relative error by about r, and the
    # subtraction of 1 loses another log2(r) bits; pad for both
    return precision_bits + 2 * max(1, r.bit_length()) + 24


def two_to_inverse_r(r: int, precision_bits: int) -> Interval:
    """Certified enclosure of 2**(1/r); exact point [2, 2] for r = 1."""
    _validate(r, precision_bits, min_precision=8)
    if r == 1:
        return Interval.point(2, precision_bits)
    return nth_root_enclosure(2, r, precision_bits)


def _root_minus_one(r: int, work: int) -> tuple[Dyadic, Dyadic]:
    root = nth_root_enclosure(2, r, work)
    lo = root.lo - 1
    hi = root.hi - 1
    if lo.mant <= 0:
        raise AssertionError("enclosure of 2**(1/r) fell at or below 1")
    return lo, hi


def radical_lower_bound(r: int, precision_bits: int) -> Interval:
    """Certified enclosure of 1 / (2**(1/r) - 1)**r; exact 1 when r = 1.

    Any product of r distinct primes whose divisor-sum ratio stays below 1
    must exceed this value, so it lower-bounds the radical of an odd
    perfect number with r distinct prime factors.
    """
    _validate(r, precision_bits)
    if r == 1:
        return Interval.point(1, precision_bits)
    work = _work_bits(r, precision_bits)
    d_lo, d_hi = _root_minus_one(r, work)
    den_lo = pow_dir(d_lo, r, work, up=False)
    den_hi = pow_dir(d_hi, r, work, up=True)
    return Interval(
        div_dir(ONE, den_hi, work, up=False),
        div_dir(ONE, den_lo, work, up=True),
        precision_bits,
    )


def prime_sum_lower_bound(r: int, precision_bits: int) -> Interval:
    """Certified enclosure of r / (2**(1/r) - 1); exact 1 when r = 1."""
    _validate(r, precision_bits)
    if r == 1:
        return Interval.point(1, precision_bits)
    work = _work_bits(r, precision_bits)
    d_lo, d_hi = _root_minus_one(r, work)
    r_dyadic = Dyadic(r)
    return Interval(
        div_dir(r_dyadic, d_hi, work, up=False),
        div_dir(r_dyadic, d_lo, work, up=True),
        precision_bits,
    )


def n_lower_bound(r: int, precision_bits: int) -> Interval:
    """Same value as radical_lower_bound (N itself exceeds its radical);
    kept as a distinct operation for reporting clarity."""
    return radical_lower_bound(r, precision_bits)


@dataclass(frozen=True)
class PowerOfTwo:
    """Exactly 2**log2, kept symbolic so astronomical bounds are never expanded."""

    log2: int

    def __post_init__(self):
        if self.log2 < 0:
            raise ValueError("log2 must be >= 0")

    def value(self) -> int:
        """Materialize the integer; only sane for moderate exponents."""
        return 1 << self.log2

    def is_above(self, n: int) -> bool:
        """n < 2**log2, decided by bit length (n >= 1)."""
        if n < 1:
            raise ValueError("comparison defined for n >= 1")
        return n.bit_length() <= self.log2


def nielsen_upper_bound(r: int) -> PowerOfTwo:
    """The classical upper bound 2**(4**r) for an odd perfect number with
    r distinct prime factors, kept symbolic."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return PowerOfTwo(4**r)


def refined_reciprocal_rhs(r: int, largest_prime: int) -> Fraction:
    """Exact value of 1 - ((1 + 1/P)**r - (1 + r/P)) for P = largest_prime.

    This is the refined ceiling for the sum of prime reciprocals; it can be
    <= 0 when r is large relative to P and is returned as-is in that case.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if largest_prime < 2:
        raise ValueError("largest_prime must be >= 2")
    p = Fraction(1, largest_prime)
    return 1 - ((1 + p) ** r - (1 + r * p))


_EVALUATORS = {
    "radical": radical_lower_bound,
    "prime_sum": prime_sum_lower_bound,
    "n": n_lower_bound,
}


def compare_rational_to_bound(
    x,
    kind: str,
    r: int,
    precision_cap_bits: int = DEFAULT_PRECISION_CAP_BITS,
    start_bits: int = DEFAULT_START_BITS,
) -> Ordering3:
    """Certified strict comparison of a rational against a bound expression.

    Returns BELOW or ABOVE only when the interval enclosure excludes x, so
    the verdict is exact.  r = 1 is dispatched to exact rational comparison
    (all three bounds equal 1 there); an exact tie is UNDECIDED since no
    strict verdict exists.  For r >= 2 the bounds are irrational, so any
    rational x separates at some finite precision.
    """
    if kind not in _EVALUATORS:
        raise ValueError(f"unknown bound kind {kind!r}; expected one of {BOUND_KINDS}")
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be >= 0")
    if r < 1:
        raise ValueError("r must be >= 1")
    if r == 1:
        if x < 1:
            return Ordering3.BELOW
        if x > 1:
            return Ordering3.ABOVE
        return Ordering3.UNDECIDED
    evaluator = _EVALUATORS[kind]
    bits = min(start_bits, precision_cap_bits)
    while True:
        enclosure = evaluator(r, bits)
        if enclosure.lo.cmp_fraction(x) > 0:
            return Ordering3.BELOW
        if enclosure.hi.cmp_fraction(x) < 0:
            return Ordering3.ABOVE
        if bits >= precision_cap_bits:
            return Ordering3.UNDECIDED
        bits = min(bits * 2, precision_cap_bits)


@dataclass(frozen=True)
class BoundsReport:
    """All lower/upper bounds for a given r at a given precision."""

    r: int
    radical_lb: Interval
    prime_sum_lb: Interval
    n_lb: Interval
    n_ub: PowerOfTwo
    precision_bits: int

    def to_json_dict(self, digits: int = DEFAULT_REPORT_DIGITS) -> dict:
        def pair(iv: Interval) -> dict:
            lo, hi = iv.to_decimal_pair(digits)
            return {"lo": lo, "hi": hi}

        return {
            "r": self.r,
            "precision_bits": self.precision_bits,
            "radical_lower_bound": pair(self.radical_lb),
            "prime_sum_lower_bound": pair(self.prime_sum_lb),
            "n_lower_bound": pair(self.n_lb),
            "n_upper_bound": {"log2": self.n_ub.log2},
        }


def bounds_report(r: int, precision_bits: int) -> BoundsReport:
    _validate(r, precision_bits)
    return BoundsReport(
        r=r,
        radical_lb=radical_lower_bound(r, precision_bits),
        prime_sum_lb=prime_sum_lower_bound(r, precision_bits),
        n_lb=n_lower_bound(r, precision_bits),
        n_ub=nielsen_upper_bound(r),
        precision_bits=precision_bits,
    )
