"""Modular arithmetic and prime generation for the prover and verifier.

Counts and moduli routinely exceed 64 bits (the verifier's working modulus
lives above 2^n * t), so everything here operates on plain Python ints,
which are arbitrary precision. Functions are pure; where sampling is
involved the random source is passed explicitly, so independent streams
can be used safely from multiple threads.
"""

from __future__ import annotations

import math
import random

__all__ = [
    "EmptyIntervalError",
    "default_max_tries",
    "is_probable_prime",
    "mod_pow",
    "sample_verifier_prime",
    "smallest_prime_in",
]


class EmptyIntervalError(ValueError):
    """No prime exists in the requested open interval."""


# Quick divisibility screen before running Miller-Rabin proper.
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

# The first 13 primes form a complete Miller-Rabin witness set below this
# bound (Sorenson & Webster), making the test deterministic for every
# modulus this library meets at realistic instance sizes.
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """Compute base**exp mod modulus by square-and-multiply.

    Uses O(log exp) modular multiplications. Raises ValueError for
    modulus < 2 or negative exponents.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be non-negative, got {exp}")
    result = 1
    base %= modulus
    while exp:
        if exp & 1:
            result = result * base % modulus
        base = base * base % modulus
        exp >>= 1
    return result


def _decompose(m: int) -> tuple[int, int]:
    """Write m - 1 = d * 2**s with d odd."""
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return d, s


def _is_composite_witness(a: int, m: int, d: int, s: int) -> bool:
    """True when base a proves m composite (m odd, m - 1 = d * 2**s)."""
    x = pow(a % m, d, m)
    if x == 1 or x == m - 1:
        return False
    for _ in range(s - 1):
        x = x * x % m
        if x == m - 1:
            return False
    return True


def is_probable_prime(m: int, rounds: int = 64) -> bool:
    """Miller-Rabin primality test.

    Deterministic (exact) for m below the Sorenson-Webster bound of
    roughly 3.3e24; above it, `rounds` random witnesses bound the error
    for a composite input by 4**-rounds. Always exact for m < 2 and for
    even m.
    """
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m == p:
            return True
        if m % p == 0:
            return False
    d, s = _decompose(m)
    if m < _DETERMINISTIC_LIMIT:
        witnesses = _DETERMINISTIC_WITNESSES
    else:
        witnesses = tuple(random.randrange(2, m - 1) for _ in range(rounds))
    return not any(_is_composite_witness(a, m, d, s) for a in witnesses)


def smallest_prime_in(lo: float, hi: float) -> int:
    """Smallest prime p with lo < p < hi (open interval).

    Scans candidates ascending from floor(lo) + 1. Raises
    EmptyIntervalError if the interval contains no prime.
    """
    if not (hi > lo >= 1):
        raise ValueError(f"need hi > lo >= 1, got ({lo}, {hi})")
    candidate = math.floor(lo) + 1
    while candidate < hi:
        if is_probable_prime(candidate):
            return candidate
        candidate += 1
    raise EmptyIntervalError(f"no prime in open interval ({lo}, {hi})")


def default_max_tries(n: int, t: int) -> int:
    """Retry budget for verifier prime sampling: 3 * (n + ceil(lg t)).

    One budget of n + ceil(lg t) draws still fails with probability near
    1/e by the prime number theorem, so the budget is tripled to push the
    forced-accept rate below 5% while staying cheap.
    """
    return 3 * (n + (t - 1).bit_length())


def sample_verifier_prime(
    n: int, t: int, max_tries: int, rng: random.Random
) -> int | None:
    """Sample a uniform prime from the open interval (2^n * t, 2^(n+1) * t).

    Draws uniform candidates (randrange rejection-samples against the next
    power of two, so there is no modulo bias) and primality-tests each.
    Returns None once max_tries draws were all composite; the caller must
    treat that as a forced accept, not an error.
    """
    if n < 1 or t < 1:
        raise ValueError(f"need n >= 1 and t >= 1, got n={n}, t={t}")
    lo = (1 << n) * t
    hi = 2 * lo
    for _ in range(max_tries):
        candidate = rng.randrange(lo + 1, hi)
        if is_probable_prime(candidate):
            return candidate
    return None
