"""Exact divisor arithmetic over certified prime factorizations.

The central type is `Factorization`: an ordered tuple of (prime, exponent)
pairs whose primality is checked at construction time, so everything
downstream may trust it.  All derived quantities (divisor sum, radical,
abundancy, reciprocal symmetric sums) are computed exactly with integers
and `fractions.Fraction`; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import prod

from .primes import factor_pairs, is_prime

MAX_EXPONENT = 2**32 - 1


class Classification(Enum):
    DEFICIENT = "deficient"
    PERFECT = "perfect"
    ABUNDANT = "abundant"


class ParseError(ValueError):
    """Syntax error in a factorization string; `position` is the 0-based index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NonPrimeFactorError(ValueError):
    """A factor failed the primality check (composite, zero, or one)."""

    def __init__(self, factor: int):
        if factor in (0, 1):
            msg = f"{factor} is not allowed as a factor"
        else:
            msg = f"composite factor {factor}"
        super().__init__(msg)
        self.factor = factor


@dataclass(frozen=True)
class Factorization:
    """Certified prime factorization; the empty tuple denotes N = 1."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(p), int(e)) for p, e in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        last = 1
        for p, e in pairs:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if not 1 <= e <= MAX_EXPONENT:
                raise ValueError(f"exponent {e} outside [1, {MAX_EXPONENT}]")
            if not is_prime(p):
                raise NonPrimeFactorError(p)
            last = p

    @classmethod
    def from_pairs(cls, pairs) -> "Factorization":
        """Canonicalize arbitrary (prime, exponent) pairs: merge and sort."""
        counts: dict[int, int] = {}
        for p, e in pairs:
            counts[p] = counts.get(p, 0) + e
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def _from_sieve(cls, pairs) -> "Factorization":
        # fast path for sieve-generated pairs that are prime by construction;
        # skips validation, so callers must guarantee canonical input
        obj = object.__new__(cls)
        object.__setattr__(obj, "pairs", tuple(pairs))
        return obj

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def parse_factorization(text: str) -> Factorization:
    """Parse `prime('^'exponent)?('*' term)*` into a canonical Factorization.

    Repeated primes are merged by summing exponents.  The single token "1"
    (with no exponent and no other terms) denotes the empty factorization;
    0 or 1 appearing as one factor among several is rejected, as is any
    composite factor.
    """
    terms: list[tuple[int, int | None, int]] = []  # (value, exponent, position)
    i, n = 0, len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j] in " \t":
            j += 1
        return j

    def read_number(j: int, what: str) -> tuple[int, int]:
        j = skip_ws(j)
        start = j
        while j < n and text[j].isdigit():
            j += 1
        if j == start:
            raise ParseError(f"expected {what}", start)
        return int(text[start:j]), j

    while True:
        term_start = skip_ws(i)
        value, i = read_number(i, "a prime factor")
        exponent: int | None = None
        i = skip_ws(i)
        if i < n and text[i] == "^":
            exponent, i = read_number(i + 1, "an exponent")
            if exponent < 1:
                raise ParseError("exponent must be >= 1", i - len(str(exponent)))
            if exponent > MAX_EXPONENT:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT}", i - len(str(exponent)))
            i = skip_ws(i)
        terms.append((value, exponent, term_start))
        if i >= n:
            break
        if text[i] != "*":
            raise ParseError("expected '*' between factors", i)
        i += 1

    if len(terms) == 1 and terms[0][0] == 1 and terms[0][1] is None:
        return Factorization(())

    counts: dict[int, int] = {}
    for value, exponent, _ in terms:
        if value <= 1:
            raise NonPrimeFactorError(value)
        counts[value] = counts.get(value, 0) + (1 if exponent is None else exponent)
    for value in counts:
        if not is_prime(value):
            raise NonPrimeFactorError(value)
    for value, e in counts.items():
        if e > MAX_EXPONENT:
            raise ParseError(f"merged exponent of {value} exceeds {MAX_EXPONENT}", 0)
    return Factorization(tuple(sorted(counts.items())))


def render(f: Factorization) -> str:
    """Canonical text form: `p^e` terms joined by `*`, exponent 1 omitted."""
    if not f.pairs:
        return "1"
    return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f.pairs)


def value(f: Factorization) -> int:
    """The integer the factorization denotes (1 for the empty product)."""
    return prod(p**e for p, e in f.pairs)


def sigma(f: Factorization) -> int:
    """Sum of all divisors, via the multiplicative closed form per prime power."""
    return prod((p ** (e + 1) - 1) // (p - 1) for p, e in f.pairs)


def radical(f: Factorization) -> int:
    """Product of the distinct primes (squarefree kernel)."""
    return prod(f.primes)


def prime_sum(f: Factorization) -> int:
    """Sum of the distinct primes; 0 for the empty factorization."""
    return sum(f.primes)


def abundancy(f: Factorization) -> Fraction:
    """sigma(N) / (2N), exact and reduced; equals 1 exactly for perfect N."""
    return Fraction(sigma(f), 2 * value(f))


def classify(f: Factorization) -> Classification:
    s, twice = sigma(f), 2 * value(f)
    if s == twice:
        return Classification.PERFECT
    return Classification.ABUNDANT if s > twice else Classification.DEFICIENT


def reciprocal_sum(f: Factorization) -> Fraction:
    """Exact sum of 1/p over the distinct primes."""
    return sum((Fraction(1, p) for p in f.primes), Fraction(0))


def elementary_symmetric(values: tuple[int, ...] | list[int]) -> list[int]:
    """[e_0, e_1, ..., e_r] for the given integers, e_0 = 1.

    Quadratic coefficient recurrence on prod(x + v); no subset enumeration.
    """
    coeffs = [1]
    for v in values:
        coeffs.append(v * coeffs[-1])
        for j in range(len(coeffs) - 2, 0, -1):
            coeffs[j] += v * coeffs[j - 1]
    return coeffs


def symmetric_reciprocal_sums(f: Factorization) -> list[Fraction]:
    """[S_1, ..., S_r] where S_k sums 1/(product of each k-subset of primes).

    Computed from the integer elementary symmetric polynomials of the primes:
    S_k = e_{r-k} / e_r, avoiding the 2**r subset walk.
    """
    primes = f.primes
    r = len(primes)
    coeffs = elementary_symmetric(primes)
    return [Fraction(coeffs[r - k], coeffs[r]) for k in range(1, r + 1)]


def factorize(n: int) -> Factorization:
    """Certified factorization of n >= 1 (empty for n = 1)."""
    return Factorization(factor_pairs(n))
