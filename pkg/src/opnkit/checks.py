"""Property checks for the abundancy and symmetric-sum inequalities, plus
seeded randomized and exhaustive verification suites.

Every rational comparison here is exact; every irrational one goes through
certified interval refinement.  The checks are phrased so that each one is
a falsifiable statement about arbitrary odd integers or odd prime sets:
a single `False` from any of them would be a genuine counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from .arith import Factorization, elementary_symmetric, render
from .bounds import (
    DEFAULT_PRECISION_CAP_BITS,
    Ordering3,
    PrecisionExhaustedError,
    compare_rational_to_bound,
    refined_reciprocal_rhs,
)
from .interval import nth_root_enclosure
from .primes import is_prime, primes_up_to
from .scan import factor_odd_with_spf, spf_sieve_odd

GMHM_PRECISION_CAP_BITS = 1 << 16

SUITES = ("lift", "chain", "gmhm", "bounds", "recip", "recip-refined")


@dataclass(frozen=True)
class PrimeSet:
    """Strictly increasing distinct odd primes (each >= 3)."""

    primes: tuple[int, ...]

    def __post_init__(self):
        primes = tuple(int(p) for p in self.primes)
        object.__setattr__(self, "primes", primes)
        last = 1
        for p in primes:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if p % 2 == 0:
                raise ValueError("only odd primes are allowed")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p

    def __len__(self) -> int:
        return len(self.primes)


def random_prime_set(
    rng: random.Random, max_size: int = 12, prime_cap: int = 10**4
) -> PrimeSet:
    """Uniformly sample r in [1, max_size] distinct odd primes below prime_cap."""
    pool = [p for p in primes_up_to(prime_cap) if p >= 3]
    r = rng.randint(1, max_size)
    return PrimeSet(tuple(sorted(rng.sample(pool, r))))


def _sigma_value(pairs) -> tuple[int, int]:
    s = v = 1
    for p, e in pairs:
        v *= p**e
        s *= (p ** (e + 1) - 1) // (p - 1)
    return s, v


def check_exponent_lift(b: Factorization, prime_index: int, n: int) -> bool:
    """Raising a unit exponent to n >= 2 must strictly raise the abundancy.

    Returns the truth of sigma(C)/(2C) > sigma(B)/(2B) where C is B with the
    prime at `prime_index` lifted from exponent 1 to exponent n; a theorem
    guarantees True for every valid input.
    """
    if not 0 <= prime_index < len(b.pairs):
        raise ValueError("prime_index out of range")
    p, e = b.pairs[prime_index]
    if e != 1:
        raise ValueError(f"prime {p} has exponent {e}; the lift starts from 1")
    if n < 2:
        raise ValueError("the lifted exponent must be >= 2")
    lifted = list(b.pairs)
    lifted[prime_index] = (p, n)
    s_b, v_b = _sigma_value(b.pairs)
    s_c, v_c = _sigma_value(lifted)
    return s_c * v_b > s_b * v_c


def _verify_chain_pairs(pairs) -> bool:
    v = prod(p for p, _ in pairs)
    s = prod(p + 1 for p, _ in pairs)
    for p, e in pairs:
        if e == 1:
            continue  # this chain step leaves the number unchanged
        v_next = v * p ** (e - 1)
        s_next = s // (p + 1) * ((p ** (e + 1) - 1) // (p - 1))
        if not s_next * v > s * v_next:  # strict abundancy increase required
            return False
        v, s = v_next, s_next
    return True


def verify_chain(f: Factorization) -> bool:
    """Walk from the radical back to N, restoring one exponent at a time,
    and confirm the abundancy never decreases, increasing strictly exactly
    at the steps that restore an exponent >= 2."""
    if not f.pairs:
        raise ValueError("N = 1 has no chain")
    return _verify_chain_pairs(f.pairs)


def check_gm_hm_step(
    ps: PrimeSet, k: int, precision_cap_bits: int = GMHM_PRECISION_CAP_BITS
) -> bool:
    """Strict inequality S_k > C(r,k) * radical**(-k/r) for the k-th
    reciprocal symmetric sum of the prime set.

    For k < r the right side is irrational and the comparison is decided by
    interval refinement; expected True always.  k = r is the exact-equality
    degenerate case (both sides are 1/radical), so the strict form returns
    False there.
    """
    r = len(ps)
    if not 1 <= k <= r:
        raise ValueError("need 1 <= k <= r")
    coeffs = elementary_symmetric(ps.primes)
    s_k = Fraction(coeffs[r - k], coeffs[r])
    if k == r:
        return False
    scale = comb(r, k)
    root_arg = prod(ps.primes) ** k
    bits = min(64, precision_cap_bits)
    while True:
        # C(r,k) / radical**(k/r), via the r-th root of radical**k
        rhs = nth_root_enclosure(root_arg, r, bits).reciprocal().scale_int(scale)
        if rhs.hi.cmp_fraction(s_k) < 0:
            return True
        if rhs.lo.cmp_fraction(s_k) > 0:
            return False
        if bits >= precision_cap_bits:
            raise PrecisionExhaustedError(
                f"between S_{k} and its bound at {precision_cap_bits} bits"
            )
        bits = min(bits * 2, precision_cap_bits)


def _radical_abundancy_below_one(primes) -> bool:
    return prod(p + 1 for p in primes) < 2 * prod(primes)


def check_bound_implication(
    ps: PrimeSet, precision_cap_bits: int = DEFAULT_PRECISION_CAP_BITS
) -> bool:
    """If the radical of the prime set has abundancy < 1 (exact test), its
    product and sum must clear the certified lower bounds for its size.

    Vacuously true when the premise fails; raises if an interval decision
    hits the precision cap.
    """
    primes = ps.primes
    if not primes:
        raise ValueError("empty prime set")
    if not _radical_abundancy_below_one(primes):
        return True
    r = len(primes)
    product_cmp = compare_rational_to_bound(
        Fraction(prod(primes)), "radical", r, precision_cap_bits
    )
    sum_cmp = compare_rational_to_bound(
        Fraction(sum(primes)), "prime_sum", r, precision_cap_bits
    )
    if Ordering3.UNDECIDED in (product_cmp, sum_cmp):
        raise PrecisionExhaustedError(f"bound comparison at {precision_cap_bits} bits")
    return product_cmp is Ordering3.ABOVE and sum_cmp is Ordering3.ABOVE


def check_reciprocal_implication(ps: PrimeSet) -> bool:
    """If the radical's abundancy is < 1, the prime reciprocals sum below 1.

    Fully rational; vacuously true when the premise fails.
    """
    primes = ps.primes
    if not primes:
        raise ValueError("empty prime set")
    if not _radical_abundancy_below_one(primes):
        return True
    return sum(Fraction(1, p) for p in primes) < 1


def check_refined_reciprocal_implication(ps: PrimeSet) -> bool:
    """Refined reciprocal ceiling, plus its supporting symmetric-sum bound.

    Unconditionally asserts sum_{k>=2} S_k >= (1 + 1/P)**r - (1 + r/P) with
    P the largest prime; when the radical's abundancy is < 1 it additionally
    asserts sum(1/p) < 1 - ((1 + 1/P)**r - (1 + r/P)).  Fully rational.
    """
    primes = ps.primes
    if not primes:
        raise ValueError("empty prime set")
    r = len(primes)
    largest = primes[-1]
    coeffs = elementary_symmetric(primes)
    sums = [Fraction(coeffs[r - k], coeffs[r]) for k in range(1, r + 1)]
    correction = (1 + Fraction(1, largest)) ** r - (1 + Fraction(r, largest))
    if sum(sums[1:], Fraction(0)) < correction:
        return False
    if _radical_abundancy_below_one(primes):
        if not sums[0] < refined_reciprocal_rhs(r, largest):
            return False
    return True


@dataclass
class SuiteResult:
    suite: str
    checked: int
    violations: list[str] = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "violations": list(self.violations),
            "passed": self.passed,
            "params": self.params,
        }


def _random_lift_case(rng: random.Random, pool):
    size = rng.randint(1, 5)
    primes = sorted(rng.sample(pool, size))
    exps = [rng.randint(1, 9) for _ in primes]
    star = rng.randrange(size)
    exps[star] = 1
    n = rng.randint(2, 9)
    return Factorization(tuple(zip(primes, exps))), star, n


def run_verify_suite(
    suite: str,
    *,
    trials: int = 10_000,
    seed: int = 0,
    limit: int = 100_000,
    precision_cap_bits: int = DEFAULT_PRECISION_CAP_BITS,
    prime_cap: int = 10**4,
    max_size: int = 12,
) -> SuiteResult:
    """Run one named verification suite; seeded, deterministic, exhaustive
    where the suite is defined that way (`chain` walks all odd n <= limit)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    rng = random.Random(seed)
    violations: list[str] = []
    checked = 0

    if suite == "lift":
        pool = list(primes_up_to(1000))
        for _ in range(trials):
            b, star, n = _random_lift_case(rng, pool)
            checked += 1
            if not check_exponent_lift(b, star, n):
                violations.append(f"B={render(b)} index={star} n={n}")
        params = {"trials": trials, "seed": seed}
    elif suite == "chain":
        spf = spf_sieve_odd(max(limit, 9))
        for n in range(3, limit + 1, 2):
            checked += 1
            if not _verify_chain_pairs(factor_odd_with_spf(n, spf)):
                violations.append(f"n={n}")
        params = {"limit": limit}
    else:
        for _ in range(trials):
            ps = random_prime_set(rng, max_size=max_size, prime_cap=prime_cap)
            if suite == "gmhm":
                for k in range(1, len(ps)):
                    checked += 1
                    if not check_gm_hm_step(ps, k, GMHM_PRECISION_CAP_BITS):
                        violations.append(f"primes={ps.primes} k={k}")
            elif suite == "bounds":
                checked += 1
                if not check_bound_implication(ps, precision_cap_bits):
                    violations.append(f"primes={ps.primes}")
            elif suite == "recip":
                checked += 1
                if not check_reciprocal_implication(ps):
                    violations.append(f"primes={ps.primes}")
            else:  # recip-refined
                checked += 1
                if not check_refined_reciprocal_implication(ps):
                    violations.append(f"primes={ps.primes}")
        params = {"trials": trials, "seed": seed, "prime_cap": prime_cap, "max_size": max_size}

    return SuiteResult(suite=suite, checked=checked, violations=violations, params=params)
