"""Dyadic values and outward-rounded interval arithmetic.

Everything here is integer arithmetic underneath: a `Dyadic` is
mant * 2**exp with an arbitrary-size mantissa, and every inexact
operation (division, root extraction, decimal rendering) takes an
explicit rounding direction.  Interval endpoints always round outward,
so a returned enclosure is a guarantee, not a best effort: the true
real value lies inside it by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _round_mant(mant: int, exp: int, bits: int, up: bool) -> tuple[int, int]:
    """Directed rounding of mant * 2**exp to at most `bits` mantissa bits.

    up=False rounds toward -inf, up=True toward +inf (Python's >> already
    floors, for negative mantissas too).
    """
    if mant == 0:
        return 0, 0
    excess = abs(mant).bit_length() - bits
    if excess <= 0:
        return mant, exp
    rest = mant & ((1 << excess) - 1)
    q = mant >> excess
    if up and rest:
        q += 1
    return q, exp + excess


@dataclass(frozen=True)
class Dyadic:
    """Exact binary rational mant * 2**exp; mantissa kept odd (or zero)."""

    mant: int
    exp: int = 0

    def __post_init__(self):
        m, e = self.mant, self.exp
        if m == 0:
            e = 0
        else:
            shift = (m & -m).bit_length() - 1
            m >>= shift
            e += shift
        object.__setattr__(self, "mant", m)
        object.__setattr__(self, "exp", e)

    def as_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.mant << self.exp)
        return Fraction(self.mant, 1 << -self.exp)

    @property
    def msb(self) -> int:
        """Position of the most significant bit: 2**(msb-1) <= |v| < 2**msb."""
        if self.mant == 0:
            raise ValueError("msb of zero")
        return abs(self.mant).bit_length() + self.exp

    def _cmp(self, other: "Dyadic") -> int:
        e = min(self.exp, other.exp)
        a = self.mant << (self.exp - e)
        b = other.mant << (other.exp - e)
        return (a > b) - (a < b)

    @staticmethod
    def _coerce(other) -> "Dyadic":
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return NotImplemented  # type: ignore[return-value]

    def __lt__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._cmp(other) < 0

    def __le__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._cmp(other) <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._cmp(other) > 0

    def __ge__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._cmp(other) >= 0

    def cmp_fraction(self, x: Fraction) -> int:
        """Exact three-way comparison against any rational."""
        return (self.as_fraction() > x) - (self.as_fraction() < x)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.mant, self.exp)

    def __add__(self, other) -> "Dyadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = min(self.exp, other.exp)
        return Dyadic(
            (self.mant << (self.exp - e)) + (other.mant << (other.exp - e)), e
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Dyadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Dyadic":
        return (-self) + other

    def __mul__(self, other) -> "Dyadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Dyadic(self.mant * other.mant, self.exp + other.exp)

    __rmul__ = __mul__

    def halved(self) -> "Dyadic":
        return Dyadic(self.mant, self.exp - 1)


ONE = Dyadic(1)


def mul_dir(a: Dyadic, b: Dyadic, bits: int, up: bool) -> Dyadic:
    """a*b rounded in the given direction to `bits` mantissa bits."""
    m, e = _round_mant(a.mant * b.mant, a.exp + b.exp, bits, up)
    return Dyadic(m, e)


def div_dir(a: Dyadic, b: Dyadic, bits: int, up: bool) -> Dyadic:
    """a/b (b > 0) rounded in the given direction to `bits` mantissa bits."""
    if b.mant <= 0:
        raise ValueError("div_dir requires a positive divisor")
    shift = max(0, bits - abs(a.mant).bit_length() + b.mant.bit_length() + 2)
    num = a.mant << shift
    q = -((-num) // b.mant) if up else num // b.mant
    m, e = _round_mant(q, a.exp - b.exp - shift, bits, up)
    return Dyadic(m, e)


def pow_dir(a: Dyadic, n: int, bits: int, up: bool) -> Dyadic:
    """a**n (a >= 0, n >= 0) with every step rounded in the given direction."""
    if a.mant < 0:
        raise ValueError("pow_dir requires a nonnegative base")
    result = ONE
    base = a
    while n:
        if n & 1:
            result = mul_dir(result, base, bits, up)
        n >>= 1
        if n:
            base = mul_dir(base, base, bits, up)
    return result


def fraction_to_dyadic(x: Fraction, bits: int, up: bool) -> Dyadic:
    """Directed dyadic approximation of a rational (exact when it is dyadic)."""
    return div_dir(Dyadic(x.numerator), Dyadic(x.denominator), bits, up)


def decimal_exponent(x: Fraction) -> int:
    """Exact floor(log10(x)) for x > 0."""
    if x <= 0:
        raise ValueError("decimal_exponent requires a positive value")
    num, den = x.numerator, x.denominator
    # float estimate from bit lengths, then exact adjustment
    est = (num.bit_length() - den.bit_length()) * math.log10(2)
    e = math.floor(est)
    while 10**max(e + 1, 0) * den <= num * 10**max(-(e + 1), 0):
        e += 1
    while 10**max(e, 0) * den > num * 10**max(-e, 0):
        e -= 1
    return e


def to_decimal(d: Dyadic, digits: int, up: bool) -> str:
    """Scientific-notation rendering with directed rounding.

    up=False never exceeds the true value, up=True never undershoots it,
    so rendering interval endpoints preserves the enclosure.
    """
    if digits < 1:
        raise ValueError("need at least one digit")
    if d.mant == 0:
        return "0"
    if d.mant < 0:
        return "-" + to_decimal(-d, digits, not up)
    x = d.as_fraction()
    e10 = decimal_exponent(x)
    shift = digits - 1 - e10
    num, den = x.numerator, x.denominator
    if shift >= 0:
        num *= 10**shift
    else:
        den *= 10**-shift
    q, rest = divmod(num, den)
    if up and rest:
        q += 1
    if q >= 10**digits:
        q //= 10
        e10 += 1
    s = str(q)
    if digits == 1:
        return f"{s}e{e10}"
    return f"{s[0]}.{s[1:]}e{e10}"


@dataclass(frozen=True)
class Interval:
    """Certified enclosure [lo, hi] with the precision it was computed at."""

    lo: Dyadic
    hi: Dyadic
    precision_bits: int

    def __post_init__(self):
        if self.precision_bits < 1:
            raise ValueError("precision_bits must be positive")
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @classmethod
    def point(cls, v: int | Dyadic, precision_bits: int) -> "Interval":
        d = v if isinstance(v, Dyadic) else Dyadic(v)
        return cls(d, d, precision_bits)

    @property
    def _work_bits(self) -> int:
        return self.precision_bits + 32

    def width(self) -> Dyadic:
        return self.hi - self.lo

    def midpoint(self) -> Dyadic:
        return (self.lo + self.hi).halved()

    def contains(self, x) -> bool:
        if isinstance(x, Dyadic):
            return self.lo <= x <= self.hi
        x = Fraction(x)
        return self.lo.cmp_fraction(x) <= 0 <= self.hi.cmp_fraction(x)

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def add_int(self, k: int) -> "Interval":
        d = Dyadic(k)
        return Interval(self.lo + d, self.hi + d, self.precision_bits)

    def sub_int(self, k: int) -> "Interval":
        return self.add_int(-k)

    def scale_int(self, k: int) -> "Interval":
        """Exact multiplication by a nonnegative integer."""
        if k < 0:
            raise ValueError("scale_int requires k >= 0")
        d = Dyadic(k)
        return Interval(self.lo * d, self.hi * d, self.precision_bits)

    def pow_int(self, n: int) -> "Interval":
        """[lo**n, hi**n] outward; requires a nonnegative interval."""
        if self.lo.mant < 0:
            raise ValueError("pow_int requires a nonnegative interval")
        w = self._work_bits
        return Interval(
            pow_dir(self.lo, n, w, up=False),
            pow_dir(self.hi, n, w, up=True),
            self.precision_bits,
        )

    def reciprocal(self) -> "Interval":
        """[1/hi, 1/lo] outward; requires a strictly positive interval."""
        if self.lo.mant <= 0:
            raise ValueError("reciprocal requires a positive interval")
        w = self._work_bits
        return Interval(
            div_dir(ONE, self.hi, w, up=False),
            div_dir(ONE, self.lo, w, up=True),
            self.precision_bits,
        )

    def to_decimal_pair(self, digits: int = 50) -> tuple[str, str]:
        return to_decimal(self.lo, digits, up=False), to_decimal(self.hi, digits, up=True)


def _log2_float(n: int) -> float:
    shift = max(0, n.bit_length() - 53)
    return math.log2(n >> shift) + shift


def _root_seed(t: Fraction, k: int) -> Dyadic:
    """Float-quality first approximation of t**(1/k), exponent-safe."""
    y = (_log2_float(t.numerator) - _log2_float(t.denominator)) / k
    e0 = math.floor(y)
    mant = int(2.0 ** (y - e0) * (1 << 52))
    return Dyadic(mant, e0 - 52)


def _div_fraction_dyadic(t: Fraction, b: Dyadic, bits: int, up: bool) -> Dyadic:
    # t / b with b > 0, directed
    num = Dyadic(t.numerator)
    q = div_dir(num, b, bits + t.denominator.bit_length() + 2, up)
    return div_dir(q, Dyadic(t.denominator), bits, up)


def _root_newton(t: Fraction, k: int, bits: int) -> Dyadic:
    """Uncertified Newton approximation of t**(1/k) at ~bits precision."""
    x = _root_seed(t, k)
    for _ in range(80):
        p = pow_dir(x, k - 1, bits, up=False)
        q = _div_fraction_dyadic(t, p, bits, up=False)
        x_next = div_dir(x * (k - 1) + q, Dyadic(k), bits, up=False)
        delta = x_next - x
        x = x_next
        if delta.mant == 0 or delta.msb <= x.msb - bits + 4:
            break
    return x


def nth_root_enclosure(t, k: int, precision_bits: int) -> Interval:
    """Certified enclosure of t**(1/k) for rational t > 0, k >= 1.

    The candidate comes from truncated Newton iteration; the returned
    endpoints are then *proved* correct by directed-rounded powering
    (pow_up(lo) <= t forces lo <= t**(1/k), and symmetrically above).
    For values near 1 the width is at most 2**-(precision_bits+2).
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("root of a nonpositive value")
    if k < 1:
        raise ValueError("root index must be >= 1")
    if precision_bits < 1:
        raise ValueError("precision_bits must be positive")
    if k == 1:
        return Interval(
            fraction_to_dyadic(t, precision_bits + 16, up=False),
            fraction_to_dyadic(t, precision_bits + 16, up=True),
            precision_bits,
        )
    work = precision_bits + 16
    while True:
        cand = _root_newton(t, k, work)
        ulp = Dyadic(1, cand.msb - work)
        slack = 2
        while slack <= 1 << 12:
            lo = cand - ulp * Dyadic(slack)
            hi = cand + ulp * Dyadic(slack)
            if (
                lo.mant > 0
                and pow_dir(lo, k, work + 8, up=True).cmp_fraction(t) <= 0
                and pow_dir(hi, k, work + 8, up=False).cmp_fraction(t) >= 0
            ):
                return Interval(lo, hi, precision_bits)
            slack *= 4
        work *= 2  # defensive; Newton is expected to land on the first pass
