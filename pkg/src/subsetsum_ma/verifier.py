"""Probabilistic proof checking via polynomial fingerprints (the verifier side).

Instead of recounting, the verifier folds the whole instance into a single
random evaluation: it runs the counting recurrence over the p residue
classes only, with every subset contributing point**sum mod q for a random
prime q and random point. The honest proof evaluates to the same
fingerprint with certainty; a proof with any wrong count evaluates
differently unless the random point happens to be a root of the (degree
<= n*t) difference polynomial, which happens with probability below
n*t / q < 1/4.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .counters import OpCounter
from .model import Instance, Proof, ProofValidationError, validate_proof
from .numtheory import default_max_tries, mod_pow, sample_verifier_prime

REASON_FINGERPRINT = "fingerprint-mismatch"


@dataclass(frozen=True)
class Fingerprint:
    """Verifier randomness: a working modulus and an evaluation point.

    The production sampler draws the modulus as a prime from
    (2^n * t, 2^(n+1) * t) and the point uniformly below it; tests may
    construct arbitrary (modulus, point) pairs directly.
    """

    modulus: int
    point: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.point < self.modulus:
            raise ValueError(f"point {self.point} not in [0, {self.modulus})")


@dataclass(frozen=True)
class Verdict:
    """Outcome of verification.

    verified_count is present exactly when the proof was accepted and is
    the certified number of solutions. forced_accept marks rounds that
    accepted only because prime sampling exhausted its budget. On
    rejection, reason distinguishes structural failures (the codes of
    ProofValidationError) from the probabilistic "fingerprint-mismatch".
    """

    accepted: bool
    verified_count: int | None = None
    forced_accept: bool = False
    reason: str | None = None

    def __post_init__(self):
        if self.accepted != (self.verified_count is not None):
            raise ValueError("verified_count must be present iff accepted")


def fingerprint_table(
    instance: Instance,
    modulus: int,
    fp: Fingerprint,
    *,
    ops: OpCounter | None = None,
) -> list[int]:
    """Final row of the residue-class fingerprint recurrence.

    Returns a list of length `modulus` (the proof modulus p) whose entry at
    s is, mod fp.modulus, the sum of fp.point**w(X) over all subsets X with
    w(X) = s (mod p). Equivalently, entry s evaluates the polynomial
    sum of counts[i] * point**i over i = s (mod p). Each of the n item
    rounds updates all p cells, and the per-item multiplier point**w is
    computed once per round, so the work is n*p cell updates plus n modular
    exponentiations.
    """
    p, q, r = modulus, fp.modulus, fp.point
    row = [0] * p
    row[0] = 1 % q
    for w in instance.weights:
        rw = mod_pow(r, w, q)
        shift = w % p
        # rotated[s] = row[(s - w) mod p]
        rotated = (row[-shift:] + row[:-shift]) if shift else row
        row = [(stay + rw * moved) % q for stay, moved in zip(row, rotated)]
        if ops is not None:
            ops.add(p)
    return row


def evaluate_proof(proof: Proof, fp: Fingerprint, *, ops: OpCounter | None = None) -> int:
    """Evaluate the proof's claimed polynomial: sum of c * point**i mod q.

    One modular exponentiation per entry, so O(k log(n*t)) multiplications
    for k entries; the ops counter advances by one per entry term.
    """
    q, r = fp.modulus, fp.point
    total = 0
    for i, c in proof.entries:
        total = (total + c * mod_pow(r, i, q)) % q
        if ops is not None:
            ops.add(1)
    return total


def verify_once(
    instance: Instance,
    proof: Proof,
    rng: random.Random,
    *,
    max_tries: int | None = None,
    r_rng: random.Random | None = None,
    fingerprint: Fingerprint | None = None,
    ops: OpCounter | None = None,
) -> Verdict:
    """One round of the probabilistic check.

    Structural violations (wrong modulus, wrong index set, count out of
    bounds) reject deterministically with the validation reason code,
    independent of the randomness. Otherwise a fingerprint is sampled (q
    from rng, the point from r_rng, which defaults to rng) and the proof is
    accepted iff its evaluation matches the recomputed fingerprint cell at
    target mod p. If q sampling fails max_tries times in a row the round
    accepts with forced_accept=True, per the protocol's error budget.

    An honest proof is accepted with certainty; a structurally valid proof
    with any wrong count is accepted with probability at most
    n*t/q + sampling-failure < 1/2.

    `fingerprint` injects (modulus, point) directly, bypassing sampling.
    It exists for tests that need controlled randomness; the CLI never
    sets it.
    """
    try:
        validate_proof(instance, proof)
    except ProofValidationError as err:
        return Verdict(accepted=False, reason=err.reason)
    claimed = proof.claimed_count(instance.target)

    if fingerprint is None:
        if max_tries is None:
            max_tries = default_max_tries(instance.n, instance.target)
        q = sample_verifier_prime(instance.n, instance.target, max_tries, rng)
        if q is None:
            return Verdict(accepted=True, verified_count=claimed, forced_accept=True)
        r = (r_rng if r_rng is not None else rng).randrange(q)
        fingerprint = Fingerprint(q, r)

    lhs = evaluate_proof(proof, fingerprint, ops=ops)
    row = fingerprint_table(instance, proof.modulus, fingerprint, ops=ops)
    if lhs != row[instance.target % proof.modulus]:
        return Verdict(accepted=False, reason=REASON_FINGERPRINT)
    return Verdict(accepted=True, verified_count=claimed)


def verify(
    instance: Instance,
    proof: Proof,
    rounds: int,
    rng: random.Random,
    *,
    max_tries: int | None = None,
    r_rng: random.Random | None = None,
    ops: OpCounter | None = None,
) -> Verdict:
    """Run independent rounds of verify_once, rejecting if any round rejects.

    Each round draws fresh randomness from the given streams, so the
    soundness error drops to 2^-rounds while honest proofs still pass with
    certainty. The combined verdict flags forced_accept if any accepting
    round was forced.
    """
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    forced = False
    verdict = None
    for _ in range(rounds):
        verdict = verify_once(
            instance, proof, rng, max_tries=max_tries, r_rng=r_rng, ops=ops
        )
        if not verdict.accepted:
            return verdict
        forced = forced or verdict.forced_accept
    return Verdict(
        accepted=True, verified_count=verdict.verified_count, forced_accept=forced
    )
