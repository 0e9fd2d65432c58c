"""Ground-truth oracles and adversarial proof corruption.

brute_force_counts re-derives exact counts by enumerating all 2^n subsets
with bitmasks, sharing no arithmetic with the prover's recurrence, so the
two can cross-check each other. corrupt() damages honest proofs: the
value-level strategies keep every structural invariant intact (only the
fingerprint can catch them), while the structural strategies each break
one named invariant (only the format checker should fire).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .model import Instance, Proof, ResourceBudgetError
from .numtheory import smallest_prime_in
from .prover import CountTable

BRUTE_FORCE_MAX_N = 24

VALUE_STRATEGIES = (
    "increment-entry",
    "randomize-entry",
    "swap-entries",
    "zero-entry",
    "claim-off-by-one",
)
# Each structural strategy violates exactly one proof invariant; the
# reason code names the check expected to catch it.
STRUCTURAL_STRATEGIES = (
    "drop-entry",            # index-set-mismatch
    "shift-index",           # index-set-mismatch
    "overflow-entry",        # count-out-of-bounds
    "modulus-composite",     # modulus-not-prime
    "modulus-out-of-range",  # modulus-out-of-range
)


class StrategyError(ValueError):
    """The corruption strategy cannot apply to this proof."""


@dataclass(frozen=True)
class CorruptionStrategy:
    """A named way to damage a proof.

    target selects the entry position (0-based) to hit where that makes
    sense; when None the position is drawn from the rng.
    """

    kind: str
    target: int | None = None

    def __post_init__(self):
        if self.kind not in VALUE_STRATEGIES + STRUCTURAL_STRATEGIES:
            raise ValueError(f"unknown corruption kind {self.kind!r}")


def random_instance(
    rng: random.Random, n: int, target: int, max_weight: int | None = None
) -> Instance:
    """Uniform random instance: n weights drawn from [1, max_weight]."""
    if max_weight is None:
        max_weight = target
    if not 1 <= max_weight <= target:
        raise ValueError(f"max_weight must be in [1, {target}], got {max_weight}")
    return Instance(tuple(rng.randint(1, max_weight) for _ in range(n)), target)


def brute_force_counts(instance: Instance) -> CountTable:
    """Exact counts by enumerating all 2^n subsets.

    Deliberately independent of the prover: each mask is decomposed bit by
    bit and its sum tallied directly. Refuses n beyond the enumeration
    budget.
    """
    n = instance.n
    if n > BRUTE_FORCE_MAX_N:
        raise ResourceBudgetError(
            f"brute force enumerates 2^{n} subsets; budget is n <= {BRUTE_FORCE_MAX_N}"
        )
    weights = instance.weights
    counts = [0] * (instance.sum_bound + 1)
    for mask in range(1 << n):
        total = 0
        remaining = mask
        while remaining:
            total += weights[(remaining & -remaining).bit_length() - 1]
            remaining &= remaining - 1
        counts[total] += 1
    return CountTable(tuple(counts))


def _pick_position(entries, strategy: CorruptionStrategy, rng: random.Random) -> int:
    if strategy.target is not None:
        if not 0 <= strategy.target < len(entries):
            raise StrategyError(
                f"target position {strategy.target} outside the {len(entries)} entries"
            )
        return strategy.target
    return rng.randrange(len(entries))


def corrupt(
    proof: Proof,
    strategy: CorruptionStrategy,
    rng: random.Random,
    *,
    instance: Instance,
) -> Proof:
    """Return a damaged copy of the proof; never returns it unchanged.

    The instance supplies the count bound 2^n and the modulus range, which
    the proof alone does not determine. Value-level results still pass
    structural validation; structural results provably do not. Raises
    StrategyError when the strategy cannot produce a change (for example
    swap-entries on a single-entry proof).
    """
    entries = list(proof.entries)
    bound = 1 << instance.n
    kind = strategy.kind

    if kind == "increment-entry":
        pos = _pick_position(entries, strategy, rng)
        i, c = entries[pos]
        entries[pos] = (i, c + 1 if c < bound else 0)
        return Proof(proof.modulus, tuple(entries))

    if kind == "randomize-entry":
        pos = _pick_position(entries, strategy, rng)
        i, c = entries[pos]
        new = c
        while new == c:
            new = rng.randrange(bound + 1)
        entries[pos] = (i, new)
        return Proof(proof.modulus, tuple(entries))

    if kind == "swap-entries":
        if len(entries) < 2:
            raise StrategyError("swap-entries needs at least two entries")
        if len({c for _, c in entries}) < 2:
            raise StrategyError("swap-entries needs two entries with different counts")
        while True:
            a, b = rng.sample(range(len(entries)), 2)
            if entries[a][1] != entries[b][1]:
                break
        (ia, ca), (ib, cb) = entries[a], entries[b]
        entries[a], entries[b] = (ia, cb), (ib, ca)
        return Proof(proof.modulus, tuple(entries))

    if kind == "zero-entry":
        if strategy.target is not None:
            pos = _pick_position(entries, strategy, rng)
            if entries[pos][1] == 0:
                raise StrategyError(f"entry at position {pos} is already zero")
        else:
            nonzero = [pos for pos, (_, c) in enumerate(entries) if c != 0]
            if not nonzero:
                raise StrategyError("zero-entry needs a nonzero entry")
            pos = rng.choice(nonzero)
        entries[pos] = (entries[pos][0], 0)
        return Proof(proof.modulus, tuple(entries))

    if kind == "claim-off-by-one":
        positions = [p for p, (i, _) in enumerate(entries) if i == instance.target]
        if not positions:
            raise StrategyError(f"proof has no entry at the target {instance.target}")
        pos = positions[0]
        i, c = entries[pos]
        if c == 0:
            delta = 1
        elif c == bound:
            delta = -1
        else:
            delta = rng.choice((-1, 1))
        entries[pos] = (i, c + delta)
        return Proof(proof.modulus, tuple(entries))

    if kind == "drop-entry":
        pos = _pick_position(entries, strategy, rng)
        del entries[pos]
        return Proof(proof.modulus, tuple(entries))

    if kind == "shift-index":
        pos = _pick_position(entries, strategy, rng)
        i, c = entries[pos]
        entries[pos] = (i + 1, c)
        return Proof(proof.modulus, tuple(entries))

    if kind == "overflow-entry":
        pos = _pick_position(entries, strategy, rng)
        entries[pos] = (entries[pos][0], bound + 1)
        return Proof(proof.modulus, tuple(entries))

    if kind == "modulus-composite":
        # p is an odd prime, so p + 1 is even and composite.
        return Proof(proof.modulus + 1, tuple(entries))

    if kind == "modulus-out-of-range":
        root = math.sqrt(instance.sum_bound)
        outside = smallest_prime_in(4 * root, 8 * root + 3)
        return Proof(outside, tuple(entries))

    raise AssertionError(f"unhandled kind {kind!r}")
