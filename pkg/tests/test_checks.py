import random
from fractions import Fraction
from math import comb, prod

import pytest

from opnkit.arith import Factorization, parse_factorization, symmetric_reciprocal_sums
from opnkit.bounds import PrecisionExhaustedError
from opnkit.checks import (
    PrimeSet,
    check_bound_implication,
    check_exponent_lift,
    check_gm_hm_step,
    check_reciprocal_implication,
    check_refined_reciprocal_implication,
    random_prime_set,
    run_verify_suite,
    verify_chain,
)


def gm_hm_exact(primes, k) -> int:
    """Independent oracle for S_k vs C(r,k) * radical**(-k/r).

    Raising both sides to the r-th power clears the irrational root:
    S_k > C(r,k) * a**(-k/r)  <=>  S_k**r * a**k > C(r,k)**r.
    Returns the sign of the difference.
    """
    r = len(primes)
    f = Factorization(tuple((p, 1) for p in primes))
    s_k = symmetric_reciprocal_sums(f)[k - 1]
    a = prod(primes)
    lhs = s_k**r * a**k
    rhs = Fraction(comb(r, k)) ** r
    return (lhs > rhs) - (lhs < rhs)


# --- PrimeSet -------------------------------------------------------------------


def test_prime_set_validation():
    PrimeSet((3, 5, 7))
    with pytest.raises(ValueError):
        PrimeSet((5, 3))
    with pytest.raises(ValueError):
        PrimeSet((2, 3))
    with pytest.raises(ValueError):
        PrimeSet((3, 9))
    with pytest.raises(ValueError):
        PrimeSet((3, 3))


def test_random_prime_set_deterministic():
    a = random_prime_set(random.Random(5))
    b = random_prime_set(random.Random(5))
    assert a == b
    assert all(p % 2 == 1 for p in a.primes)


# --- exponent lift (sigma(C)/2C > sigma(B)/2B) ------------------------------------


def test_lift_examples():
    assert check_exponent_lift(parse_factorization("3*5"), 0, 2)
    assert check_exponent_lift(parse_factorization("3"), 0, 2)


def test_lift_validation():
    with pytest.raises(ValueError):
        check_exponent_lift(parse_factorization("3^2*5"), 0, 3)  # exponent not 1
    with pytest.raises(ValueError):
        check_exponent_lift(parse_factorization("3*5"), 0, 1)  # n < 2
    with pytest.raises(ValueError):
        check_exponent_lift(parse_factorization("3*5"), 5, 2)  # bad index


def test_lift_randomized():
    rng = random.Random(424242)
    from opnkit.primes import primes_up_to

    pool = list(primes_up_to(1000))
    for _ in range(2000):
        size = rng.randint(1, 5)
        ps = sorted(rng.sample(pool, size))
        exps = [rng.randint(1, 9) for _ in ps]
        star = rng.randrange(size)
        exps[star] = 1
        b = Factorization(tuple(zip(ps, exps)))
        assert check_exponent_lift(b, star, rng.randint(2, 9))


# --- chain -----------------------------------------------------------------------


def test_chain_examples():
    assert verify_chain(parse_factorization("3^3*5*7"))
    assert verify_chain(parse_factorization("3*5*7"))  # squarefree: constant chain
    assert verify_chain(parse_factorization("3^2"))
    with pytest.raises(ValueError):
        verify_chain(Factorization(()))


def test_chain_strictness_detail():
    # for 945 = 3^3*5*7 the only strict step is the one restoring 3^3
    from opnkit.arith import abundancy

    rad = parse_factorization("3*5*7")
    full = parse_factorization("3^3*5*7")
    assert abundancy(rad) < abundancy(full)
    assert abundancy(rad) == Fraction(192, 210)
    assert abundancy(full) == Fraction(64, 63)


def test_chain_exhaustive_small():
    from opnkit.arith import factorize

    for n in range(3, 20001, 2):
        assert verify_chain(factorize(n)), n


# --- GM-HM steps -------------------------------------------------------------------


def test_gm_hm_examples():
    ps = PrimeSet((3, 5, 7))
    assert check_gm_hm_step(ps, 1)
    assert check_gm_hm_step(ps, 2)
    assert not check_gm_hm_step(ps, 3)  # k = r: exact equality, strict form fails
    assert check_gm_hm_step(PrimeSet((3, 5)), 1)


def test_gm_hm_against_exact_oracle():
    rng = random.Random(99)
    for _ in range(60):
        ps = random_prime_set(rng, max_size=8, prime_cap=500)
        r = len(ps)
        for k in range(1, r + 1):
            expected = gm_hm_exact(ps.primes, k)
            got = check_gm_hm_step(ps, k)
            assert got == (expected > 0)
            if k == r:
                assert expected == 0


def test_gm_hm_validation():
    ps = PrimeSet((3, 5, 7))
    with pytest.raises(ValueError):
        check_gm_hm_step(ps, 0)
    with pytest.raises(ValueError):
        check_gm_hm_step(ps, 4)


def test_gm_hm_precision_cap():
    # near-equal primes leave a sliver between S_k and its bound, far below
    # what an 8-bit enclosure can separate
    tight = PrimeSet((100000007, 100000037, 100000039, 100000049))
    assert check_gm_hm_step(tight, 2)
    with pytest.raises(PrecisionExhaustedError):
        check_gm_hm_step(tight, 2, precision_cap_bits=8)


# --- implications -------------------------------------------------------------------


def test_bound_implication_examples():
    assert check_bound_implication(PrimeSet((3, 5)))  # premise holds, bounds clear
    assert check_bound_implication(PrimeSet((3, 5, 7)))
    # premise fails: prod(1+p) = 32256 >= 2*prod(p) = 30030
    big = PrimeSet((3, 5, 7, 11, 13))
    assert prod(p + 1 for p in big.primes) >= 2 * prod(big.primes)
    assert check_bound_implication(big)


def test_reciprocal_implication_examples():
    assert check_reciprocal_implication(PrimeSet((3, 5, 7)))
    assert check_reciprocal_implication(PrimeSet((3,)))
    assert check_reciprocal_implication(PrimeSet((3, 5, 7, 11, 13)))  # vacuous


def test_refined_reciprocal_examples():
    # 71/105 < 321/343, and S_2 + S_3 = 16/105 >= (8/7)^3 - 10/7 = 22/343
    assert Fraction(71, 105) < Fraction(321, 343)
    assert Fraction(16, 105) > Fraction(22, 343)
    assert check_refined_reciprocal_implication(PrimeSet((3, 5, 7)))
    assert check_refined_reciprocal_implication(PrimeSet((3,)))


def test_implications_randomized():
    rng = random.Random(2718)
    for _ in range(400):
        ps = random_prime_set(rng)
        assert check_bound_implication(ps)
        assert check_reciprocal_implication(ps)
        assert check_refined_reciprocal_implication(ps)


# --- suite runner ---------------------------------------------------------------------


def test_run_suite_unknown():
    with pytest.raises(ValueError):
        run_verify_suite("nope")


@pytest.mark.parametrize("suite", ["lift", "gmhm", "bounds", "recip", "recip-refined"])
def test_run_suite_passes(suite):
    result = run_verify_suite(suite, trials=50, seed=11)
    assert result.passed
    assert result.checked >= 50 or suite == "gmhm"


def test_run_suite_chain():
    result = run_verify_suite("chain", limit=5000)
    assert result.passed
    assert result.checked == len(range(3, 5001, 2))


def test_run_suite_deterministic():
    a = run_verify_suite("bounds", trials=40, seed=3)
    b = run_verify_suite("bounds", trials=40, seed=3)
    assert a.to_json_dict() == b.to_json_dict()
