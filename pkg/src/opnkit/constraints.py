"""Audit of a candidate factorization against the known necessary
conditions for odd perfect numbers.

Every sub-check runs (no short-circuiting once the parity gate passes), so
a report shows every violated condition at once.  All divisibility and
congruence checks are exact modular arithmetic on the factorization; size
comparisons against 10**300 and 2**(4**r) are decided symbolically from
certified log2 enclosures so the candidate integer is never expanded when
huge.  A check that cannot be decided (precision cap, or an integer too
large to evaluate exactly) reports Undecided, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import prod

from .arith import Factorization, render
from .bounds import (
    DEFAULT_PRECISION_CAP_BITS,
    DEFAULT_START_BITS,
    Ordering3,
    compare_rational_to_bound,
    radical_lower_bound,
    prime_sum_lower_bound,
    refined_reciprocal_rhs,
)

_LOG_SCALES = (16, 64, 256, 1024, 4096)
_MATERIALIZE_BITS = 1 << 21
DEFAULT_EXACT_DIGIT_CAP = 20_000


class Verdict(Enum):
    PASS = "Pass"
    FAIL = "Fail"
    NOT_APPLICABLE = "NotApplicable"
    UNDECIDED = "Undecided"


class Overall(Enum):
    VIABLE = "Viable"
    REFUTED = "Refuted"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class ConstraintVerdict:
    id: str
    verdict: Verdict
    detail: str


@dataclass(frozen=True)
class ConstraintReport:
    candidate: Factorization
    verdicts: tuple[ConstraintVerdict, ...]
    overall: Overall

    def to_json_dict(self) -> dict:
        return {
            "candidate": render(self.candidate),
            "verdicts": [
                {"id": v.id, "verdict": v.verdict.value, "detail": v.detail}
                for v in self.verdicts
            ],
            "overall": self.overall.value,
        }


_LABELS = {
    Verdict.PASS: "PASS",
    Verdict.FAIL: "FAIL",
    Verdict.NOT_APPLICABLE: "N/A",
    Verdict.UNDECIDED: "UNDECIDED",
}


def explain(report: ConstraintReport) -> str:
    """One deterministic line per verdict, then the overall outcome."""
    lines = [
        f"{_LABELS[v.verdict]} {v.id}: {v.detail}" for v in report.verdicts
    ]
    lines.append(f"overall: {report.overall.value}")
    return "\n".join(lines)


def _fmt_int(x: int, max_digits: int = 40) -> str:
    s = str(x)
    if len(s) <= max_digits:
        return s
    return f"{s[0]}.{s[1:16]}e{len(s) - 1} ({len(s)} digits)"


def _log2_bounds(pairs, scale: int) -> tuple[Fraction, Fraction]:
    """Exact rational window [lo, hi) around log2 of the factored value.

    Per prime, bitlen(p**scale) pins log2(p) to within 1/scale; the upper
    bound is strict for every p (odd or even).
    """
    lo = hi = Fraction(0)
    for p, e in pairs:
        length = (p**scale).bit_length()
        lo += Fraction(e * (length - 1), scale)
        hi += Fraction(e * length, scale)
    return lo, hi


def _materialize_bits(pairs) -> int:
    return sum(e * p.bit_length() for p, e in pairs)


def _compare_value_to_pow2(pairs, k: int) -> Ordering3:
    """Factored value vs 2**k for odd values: BELOW means value < 2**k."""
    for scale in _LOG_SCALES:
        lo, hi = _log2_bounds(pairs, scale)
        if hi <= k:
            return Ordering3.BELOW
        if lo >= k:
            return Ordering3.ABOVE
        if _materialize_bits(pairs) <= _MATERIALIZE_BITS:
            v = prod(p**e for p, e in pairs)
            return Ordering3.BELOW if v < 1 << k else Ordering3.ABOVE
    return Ordering3.UNDECIDED


def _compare_value_to_pow10(pairs, d: int) -> Ordering3:
    """Factored value vs 10**d for odd values: ABOVE means value > 10**d."""
    for scale in _LOG_SCALES:
        lo, hi = _log2_bounds(pairs, scale)
        ten_len = (10**scale).bit_length()
        if lo >= Fraction(d * ten_len, scale):
            return Ordering3.ABOVE
        if hi <= Fraction(d * (ten_len - 1), scale):
            return Ordering3.BELOW
        if _materialize_bits(pairs) <= _MATERIALIZE_BITS:
            v = prod(p**e for p, e in pairs)
            return Ordering3.ABOVE if v > 10**d else Ordering3.BELOW
    return Ordering3.UNDECIDED


def _power_exceeds(p: int, e: int, bound: int) -> bool:
    """p**e > bound, exactly, without building astronomically large powers."""
    if e * (p.bit_length() - 1) >= bound.bit_length():
        return True
    acc = 1
    for _ in range(e):
        acc *= p
        if acc > bound:
            return True
    return acc > bound


def _check(cid: str, ok: bool, detail: str) -> ConstraintVerdict:
    return ConstraintVerdict(cid, Verdict.PASS if ok else Verdict.FAIL, detail)


def _na(cid: str, detail: str) -> ConstraintVerdict:
    return ConstraintVerdict(cid, Verdict.NOT_APPLICABLE, detail)


def _euler_form(pairs) -> ConstraintVerdict:
    odd_exp = [(p, e) for p, e in pairs if e % 2 == 1]
    if len(odd_exp) != 1:
        return _check(
            "euler_form",
            False,
            f"{len(odd_exp)} primes carry an odd exponent; "
            "the form P^k * Q^2 requires exactly one",
        )
    p, e = odd_exp[0]
    if p % 4 != 1:
        return _check("euler_form", False, f"special prime {p} = {p % 4} (mod 4), need 1")
    if e % 4 != 1:
        return _check("euler_form", False, f"special exponent {e} = {e % 4} (mod 4), need 1")
    q_pairs = [(q, x // 2) for q, x in pairs if q != p and x >= 2] + (
        [(p, (e - 1) // 2)] if e > 1 else []
    )
    q_pairs.sort()
    q_str = "*".join(f"{q}^{x}" if x > 1 else str(q) for q, x in q_pairs) or "1"
    return _check("euler_form", True, f"P = {p} with exponent {e}; Q = {q_str}")


def _bound_verdict(
    cid: str, quantity: int, kind: str, r: int, cap: int, start: int, name: str
) -> ConstraintVerdict:
    cmp = compare_rational_to_bound(Fraction(quantity), kind, r, cap, start_bits=start)
    evaluator = radical_lower_bound if kind in ("radical", "n") else prime_sum_lower_bound
    lo_s, hi_s = evaluator(r, 64).to_decimal_pair(20)
    detail = f"{name} = {_fmt_int(quantity)} vs lower bound in [{lo_s}, {hi_s}]"
    if cmp is Ordering3.ABOVE:
        return _check(cid, True, detail)
    if cmp is Ordering3.BELOW:
        return _check(cid, False, detail)
    return ConstraintVerdict(cid, Verdict.UNDECIDED, detail + f" (undecided at {cap}-bit cap)")


def audit(
    f: Factorization,
    precision_cap_bits: int = DEFAULT_PRECISION_CAP_BITS,
    exact_digit_cap: int = DEFAULT_EXACT_DIGIT_CAP,
    start_bits: int = DEFAULT_START_BITS,
) -> ConstraintReport:
    """Run the full battery of necessary conditions against a candidate.

    An even candidate (or N = 1) fails the parity gate immediately and is
    reported with that single verdict; otherwise every check runs and every
    verdict is reported.
    """
    pairs = f.pairs
    if not pairs or pairs[0][0] == 2:
        detail = "N = 1" if not pairs else "N is even"
        verdict = ConstraintVerdict("parity", Verdict.FAIL, f"{detail}; an odd N > 1 is required")
        return ConstraintReport(f, (verdict,), Overall.REFUTED)

    primes = [p for p, _ in pairs]
    exps = [e for _, e in pairs]
    r = len(pairs)
    verdicts = [
        ConstraintVerdict("parity", Verdict.PASS, "N is odd and exceeds 1")
    ]

    verdicts.append(_euler_form(pairs))

    verdicts.append(
        _check(
            "steuerwald",
            any(e != 1 for e in exps),
            "all exponents equal 1" if all(e == 1 for e in exps) else "some exponent exceeds 1",
        )
    )

    m36 = 1
    for p, e in pairs:
        m36 = m36 * pow(p, e, 36) % 36
    verdicts.append(
        _check(
            "touchard",
            m36 % 12 == 1 or m36 == 9,
            f"N = {m36 % 12} (mod 12) and {m36} (mod 36); need 1 (mod 12) or 9 (mod 36)",
        )
    )

    verdicts.append(_check("min_distinct", r >= 9, f"r = {r} {'<' if r < 9 else '>='} 9"))

    if 3 in primes:
        verdicts.append(_na("min_distinct_no3", "3 divides N"))
    else:
        verdicts.append(_check("min_distinct_no3", r >= 12, f"3 does not divide N and r = {r} (need >= 12)"))

    if 3 in primes or 5 in primes:
        verdicts.append(_na("min_distinct_no3no5", "3 or 5 divides N"))
    else:
        verdicts.append(
            _check("min_distinct_no3no5", r >= 15, f"neither 3 nor 5 divides N and r = {r} (need >= 15)")
        )

    if any(q in primes for q in (3, 5, 7)):
        verdicts.append(_na("min_distinct_no357", "3, 5, or 7 divides N"))
    else:
        verdicts.append(
            _check("min_distinct_no357", r >= 27, f"gcd(N, 105) = 1 and r = {r} (need >= 27)")
        )

    omega = sum(exps)
    verdicts.append(
        _check("hare_omega", omega >= 75, f"Omega(N) = {omega} {'<' if omega < 75 else '>='} 75")
    )

    thresholds = (10**8, 10**4, 10**2)
    comparisons = []
    ok = True
    for offset, needed in enumerate(thresholds):
        if r - 1 - offset < 0:
            comparisons.append(f"factor #{r - offset} absent")
            continue
        p = primes[r - 1 - offset]
        ok = ok and p > needed
        comparisons.append(f"{_fmt_int(p)} {'>' if p > needed else '<='} 10^{len(str(needed)) - 1}")
    verdicts.append(_check("largest_three", ok, "; ".join(comparisons)))

    p1 = primes[0]
    verdicts.append(
        _check(
            "perisastri_smallest",
            3 * p1 <= 2 * r + 9,
            f"3*p_1 = {3 * p1} {'<=' if 3 * p1 <= 2 * r + 9 else '>'} 2r + 9 = {2 * r + 9}",
        )
    )

    if r < 2:
        verdicts.append(_na("kishore", "fewer than two distinct primes"))
    else:
        failures = []
        for i in range(2, min(6, r) + 1):
            limit = (1 << (1 << (i - 1))) * (r - i + 1)
            if primes[i - 1] >= limit:
                failures.append(f"p_{i} = {_fmt_int(primes[i - 1])} >= 2^(2^{i - 1})*(r-{i}+1) = {_fmt_int(limit)}")
        verdicts.append(
            _check(
                "kishore",
                not failures,
                "; ".join(failures) if failures else f"p_i < 2^(2^(i-1))*(r-i+1) for i = 2..{min(6, r)}",
            )
        )

    cohen_bound = 10**20
    big = [(p, e) for p, e in pairs if _power_exceeds(p, e, cohen_bound)]
    if big:
        p, e = big[0]
        detail = f"{p}^{e} > 10^20"
    else:
        detail = "no prime-power component exceeds 10^20"
    verdicts.append(_check("cohen_component", bool(big), detail))

    brent = _compare_value_to_pow10(pairs, 300)
    if brent is Ordering3.UNDECIDED:
        verdicts.append(ConstraintVerdict("brent_size", Verdict.UNDECIDED, "N vs 10^300 undecided at the log2 refinement cap"))
    else:
        verdicts.append(
            _check("brent_size", brent is Ordering3.ABOVE, f"N {'>' if brent is Ordering3.ABOVE else '<'} 10^300")
        )

    k = 4**r
    nielsen = _compare_value_to_pow2(pairs, k)
    if nielsen is Ordering3.UNDECIDED:
        verdicts.append(ConstraintVerdict("nielsen_size", Verdict.UNDECIDED, f"N vs 2^(4^{r}) undecided at the log2 refinement cap"))
    else:
        verdicts.append(
            _check(
                "nielsen_size",
                nielsen is Ordering3.BELOW,
                f"N {'<' if nielsen is Ordering3.BELOW else '>='} 2^(4^{r}) = 2^{_fmt_int(k)}",
            )
        )

    verdicts.append(
        _bound_verdict("radical_bound", prod(primes), "radical", r, precision_cap_bits, start_bits, "radical(N)")
    )
    verdicts.append(
        _bound_verdict("prime_sum_bound", sum(primes), "prime_sum", r, precision_cap_bits, start_bits, "prime_sum(N)")
    )

    recip = sum(Fraction(1, p) for p in primes)
    verdicts.append(
        _check(
            "reciprocal_sum",
            recip < 1,
            f"sum(1/p) = {recip} {'<' if recip < 1 else '>='} 1",
        )
    )

    rhs = refined_reciprocal_rhs(r, primes[-1])
    verdicts.append(
        _check(
            "reciprocal_sum_refined",
            recip < rhs,
            f"sum(1/p) = {recip} {'<' if recip < rhs else '>='} refined ceiling {rhs}",
        )
    )

    if _materialize_bits(pairs) <= int(exact_digit_cap * 3.322):
        v = prod(p**e for p, e in pairs)
        s = prod((p ** (e + 1) - 1) // (p - 1) for p, e in pairs)
        verdicts.append(
            _check(
                "perfect_exact",
                s == 2 * v,
                f"sigma(N) = {_fmt_int(s)} {'=' if s == 2 * v else '!='} 2N = {_fmt_int(2 * v)}",
            )
        )
    else:
        verdicts.append(
            ConstraintVerdict(
                "perfect_exact",
                Verdict.UNDECIDED,
                f"N exceeds the exact-evaluation cap of {exact_digit_cap} digits",
            )
        )

    outcomes = {v.verdict for v in verdicts}
    if Verdict.FAIL in outcomes:
        overall = Overall.REFUTED
    elif Verdict.UNDECIDED in outcomes:
        overall = Overall.UNDECIDED
    else:
        overall = Overall.VIABLE
    return ConstraintReport(f, tuple(verdicts), overall)
