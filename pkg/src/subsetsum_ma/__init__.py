"""Compact probabilistically checkable certificates for subset-sum counts.

The prover counts, exactly, the subsets of w_1..w_n summing to a target t
(pseudo-polynomial dynamic programming over [0, n*t]) and ships only the
counts in the target's residue class modulo a small prime - about
sqrt(n*t)/2 numbers. The verifier recomputes a random fingerprint of that
residue class in O(n * sqrt(n*t)) arithmetic, accepting honest proofs
always and detecting any altered count with probability above 1/2 per
round (in practice near 1).
"""

from .counters import OpCounter
from .model import (
    EmptyInstanceError,
    Instance,
    ParseError,
    Proof,
    ProofValidationError,
    ResourceBudgetError,
    normalize,
    parse_instance,
    parse_proof,
    serialize_instance,
    serialize_proof,
    validate_proof,
)
from .numtheory import (
    EmptyIntervalError,
    default_max_tries,
    is_probable_prime,
    mod_pow,
    sample_verifier_prime,
    smallest_prime_in,
)
from .prover import CountTable, build_proof, count_table
from .testkit import (
    CorruptionStrategy,
    StrategyError,
    brute_force_counts,
    corrupt,
    random_instance,
)
from .verifier import Fingerprint, Verdict, evaluate_proof, fingerprint_table, verify, verify_once

__version__ = "0.1.0"

__all__ = [
    "CorruptionStrategy",
    "CountTable",
    "EmptyInstanceError",
    "EmptyIntervalError",
    "Fingerprint",
    "Instance",
    "OpCounter",
    "ParseError",
    "Proof",
    "ProofValidationError",
    "ResourceBudgetError",
    "StrategyError",
    "Verdict",
    "brute_force_counts",
    "build_proof",
    "corrupt",
    "count_table",
    "default_max_tries",
    "evaluate_proof",
    "fingerprint_table",
    "is_probable_prime",
    "mod_pow",
    "normalize",
    "parse_instance",
    "parse_proof",
    "random_instance",
    "sample_verifier_prime",
    "serialize_instance",
    "serialize_proof",
    "smallest_prime_in",
    "validate_proof",
    "verify",
    "verify_once",
]
