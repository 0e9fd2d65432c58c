import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import is_prime_trial
from subsetsum_ma.numtheory import (
    EmptyIntervalError,
    default_max_tries,
    is_probable_prime,
    mod_pow,
    sample_verifier_prime,
    smallest_prime_in,
)


class ScriptedRng:
    """Stands in for random.Random, replaying a fixed draw sequence."""

    def __init__(self, draws):
        self.draws = list(draws)
        self.calls = 0

    def randrange(self, lo, hi):
        self.calls += 1
        value = self.draws[min(self.calls, len(self.draws)) - 1]
        assert lo <= value < hi, "scripted draw outside requested range"
        return value


class TestModPow:
    def test_zero_exponent_is_identity(self):
        for base, modulus in [(0, 2), (5, 7), (163, 320), (2**80 + 1, 2**64 + 13)]:
            assert mod_pow(base, 0, modulus) == 1

    def test_direct_arithmetic(self):
        assert mod_pow(2, 10, 1000) == 24  # 1024 mod 1000
        assert mod_pow(5, 3, 7) == 6  # 125 mod 7

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            mod_pow(2, 3, 1)
        with pytest.raises(ValueError):
            mod_pow(2, 3, 0)
        with pytest.raises(ValueError):
            mod_pow(2, -1, 7)

    @given(
        base=st.integers(0, 10**12),
        e1=st.integers(0, 10**6),
        e2=st.integers(0, 10**6),
        modulus=st.integers(2, 10**12),
    )
    def test_exponent_additivity(self, base, e1, e2, modulus):
        product = mod_pow(base, e1, modulus) * mod_pow(base, e2, modulus) % modulus
        assert mod_pow(base, e1 + e2, modulus) == product

    @given(
        base=st.integers(0, 2**128),
        exp=st.integers(0, 2**40),
        modulus=st.integers(2, 2**128),
    )
    def test_agrees_with_builtin_pow(self, base, exp, modulus):
        assert mod_pow(base, exp, modulus) == pow(base, exp, modulus)


class TestIsProbablePrime:
    def test_small_knowns(self):
        assert is_probable_prime(13)
        assert not is_probable_prime(1)
        assert not is_probable_prime(0)
        assert not is_probable_prime(-7)
        assert is_probable_prime(2)
        assert not is_probable_prime(9)

    def test_65537(self):
        assert is_prime_trial(65537)
        assert is_probable_prime(65537)

    def test_carmichael_numbers_are_composite(self):
        # Fermat pseudoprimes to many bases; Miller-Rabin must not fall for them.
        for m in (561, 1105, 1729, 2465, 6601, 8911, 62745, 162401):
            assert not is_probable_prime(m)

    def test_rounds_must_be_positive(self):
        with pytest.raises(ValueError):
            is_probable_prime(13, rounds=0)

    def test_agrees_with_trial_division_to_one_million(self):
        # Bulk trial division via a sieve; exact agreement required on the
        # whole range.
        limit = 10**6
        sieve = bytearray([1]) * (limit + 1)
        sieve[0] = sieve[1] = 0
        for i in range(2, int(limit**0.5) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        mismatches = [
            m for m in range(limit + 1) if is_probable_prime(m) != bool(sieve[m])
        ]
        assert mismatches == []

    def test_large_prime_beyond_deterministic_range(self):
        # 2^89 - 1 is a Mersenne prime; exercises the randomized-witness path.
        m = 2**89 - 1
        assert m > 3_317_044_064_679_887_385_961_981
        assert is_probable_prime(m)
        assert not is_probable_prime(m + 2)  # divisible by 3


class TestSmallestPrimeIn:
    def test_examples(self):
        nt = 40
        assert smallest_prime_in(2 * nt**0.5, 4 * nt**0.5) == 13
        assert smallest_prime_in(2, 4) == 3
        assert smallest_prime_in(20, 40) == 23

    def test_empty_interval(self):
        # 25, 26, 27 are all composite.
        with pytest.raises(EmptyIntervalError):
            smallest_prime_in(24, 28)

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            smallest_prime_in(10, 10)
        with pytest.raises(ValueError):
            smallest_prime_in(0.5, 7)

    def test_open_interval_excludes_integer_endpoints(self):
        # lo = 13 itself must not be returned.
        assert smallest_prime_in(13, 20) == 17

    @given(lo=st.integers(1, 500), width=st.integers(1, 60))
    def test_result_is_least_prime_strictly_inside(self, lo, width):
        hi = lo + width
        inside = [m for m in range(lo + 1, hi) if is_prime_trial(m)]
        if not inside:
            with pytest.raises(EmptyIntervalError):
                smallest_prime_in(lo, hi)
        else:
            assert smallest_prime_in(lo, hi) == inside[0]


class TestSampleVerifierPrime:
    def test_scripted_draw_returned_when_prime(self):
        rng = ScriptedRng([163])
        assert is_prime_trial(163)
        assert sample_verifier_prime(4, 10, 24, rng) == 163  # 160 < 163 < 320

    def test_smallest_interval_has_single_candidate(self):
        # n=1, t=1: the open interval (2, 4) contains only 3.
        q = sample_verifier_prime(1, 1, 3, random.Random(0))
        assert q == 3

    def test_adversarial_rng_exhausts_budget(self):
        rng = ScriptedRng([162])  # composite, replayed forever
        assert sample_verifier_prime(4, 10, 7, rng) is None
        assert rng.calls == 7

    def test_composites_skipped_until_prime(self):
        rng = ScriptedRng([160 + 2, 164, 165, 167])
        assert sample_verifier_prime(4, 10, 10, rng) == 167
        assert rng.calls == 4

    @given(n=st.integers(1, 10), t=st.integers(1, 50), seed=st.integers(0, 1000))
    @settings(max_examples=60)
    def test_sampled_prime_in_open_interval(self, n, t, seed):
        q = sample_verifier_prime(n, t, default_max_tries(n, t), random.Random(seed))
        if q is not None:
            assert (1 << n) * t < q < (1 << (n + 1)) * t
            assert is_prime_trial(q)

    def test_deterministic_under_seed(self):
        a = sample_verifier_prime(8, 100, 30, random.Random(42))
        b = sample_verifier_prime(8, 100, 30, random.Random(42))
        assert a == b

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            sample_verifier_prime(0, 5, 3, random.Random(0))
        with pytest.raises(ValueError):
            sample_verifier_prime(3, 0, 3, random.Random(0))


class TestDefaultMaxTries:
    def test_formula(self):
        # 3 * (n + ceil(lg t)); lg 1 = 0.
        assert default_max_tries(1, 1) == 3
        assert default_max_tries(4, 10) == 3 * (4 + 4)
        assert default_max_tries(16, 10**4) == 3 * (16 + 14)
        assert default_max_tries(5, 8) == 3 * (5 + 3)
