"""Instance and proof data types, validation, and text serialization.

Both file formats are UTF-8 with LF line endings and single-space
separators:

    SUBSETSUM v1          MAPROOF v1
    n <n>                 p <p>
    t <t>                 k <entry-count>
    w <w_1> ... <w_n>     <i> <c_i>        (k lines, ascending i)

Proof parsing enforces every structural invariant, so anything that
round-trips through parse_proof is a well-formed proof for its instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import is_probable_prime

INSTANCE_MAGIC = "SUBSETSUM v1"
PROOF_MAGIC = "MAPROOF v1"


class ParseError(ValueError):
    """Instance text does not conform to the file format."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ProofValidationError(ValueError):
    """A proof violates a structural invariant.

    Carries a stable kebab-case reason code so callers can tell rejection
    classes apart: bad-magic, bad-header, bad-entry, entry-count-mismatch,
    modulus-not-prime, modulus-out-of-range, index-set-mismatch,
    count-out-of-bounds.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class EmptyInstanceError(ValueError):
    """Normalization dropped every weight."""


class ResourceBudgetError(RuntimeError):
    """A table or enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class Instance:
    """A subset-sum instance: positive weights w_1..w_n and a target t.

    Every weight must lie in [1, t]; use normalize() to drop oversized
    weights from raw input (dropping them cannot change the number of
    subsets summing to t). With the invariant in place every subset sum
    lies in [0, n*t].
    """

    weights: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.target < 1:
            raise ValueError(f"target must be >= 1, got {self.target}")
        if not self.weights:
            raise ValueError("instance needs at least one weight")
        for w in self.weights:
            if w < 1:
                raise ValueError(f"weights must be >= 1, got {w}")
            if w > self.target:
                raise ValueError(
                    f"weight {w} exceeds target {self.target}; "
                    "normalize() drops such weights explicitly"
                )

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def sum_bound(self) -> int:
        """Largest tabulated sum n*t; every subset sum is <= this."""
        return len(self.weights) * self.target


@dataclass(frozen=True)
class Proof:
    """Residue-class solution counts: a prime modulus and (index, count) pairs.

    For an instance with parameters n, t the entries must cover exactly the
    indices i in [0, n*t] with i = target (mod modulus), ascending, each
    count in [0, 2^n]. validate_proof checks all of this.
    """

    modulus: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple((int(i), int(c)) for i, c in self.entries)
        )

    def claimed_count(self, target: int) -> int:
        """The count the proof claims for the given sum index."""
        for i, c in self.entries:
            if i == target:
                return c
        raise ValueError(f"proof has no entry for index {target}")


def residue_indices(target: int, modulus: int, sum_bound: int) -> range:
    """All i in [0, sum_bound] with i = target (mod modulus), ascending."""
    return range(target % modulus, sum_bound + 1, modulus)


def validate_proof(instance: Instance, proof: Proof) -> None:
    """Check every structural proof invariant against the instance.

    Raises ProofValidationError with a reason code on the first violation;
    checks run in a fixed order (modulus primality, modulus range, index
    set, count bounds) so the reported reason is deterministic.
    """
    p = proof.modulus
    nt = instance.sum_bound
    if p < 2 or not is_probable_prime(p):
        raise ProofValidationError("modulus-not-prime", f"modulus {p} is not prime")
    # Open interval 2*sqrt(nt) < p < 4*sqrt(nt), compared exactly on squares.
    if not (p * p > 4 * nt and p * p < 16 * nt):
        raise ProofValidationError(
            "modulus-out-of-range",
            f"modulus {p} outside (2*sqrt({nt}), 4*sqrt({nt}))",
        )
    expected = residue_indices(instance.target, p, nt)
    got = [i for i, _ in proof.entries]
    if got != list(expected):
        raise ProofValidationError(
            "index-set-mismatch",
            f"entry indices {got[:8]}... do not match the residue class of "
            f"{instance.target} mod {p} up to {nt}",
        )
    bound = 1 << instance.n
    for i, c in proof.entries:
        if not 0 <= c <= bound:
            raise ProofValidationError(
                "count-out-of-bounds", f"count {c} at index {i} outside [0, 2^{instance.n}]"
            )


def normalize(weights, target: int) -> Instance:
    """Build an Instance from raw weights, dropping any weight above target.

    A weight larger than the target can never appear in a solution, so the
    number of subsets summing to the target is unchanged. Raises
    EmptyInstanceError if nothing survives.
    """
    if target < 1:
        raise ValueError(f"target must be >= 1, got {target}")
    for w in weights:
        if w < 1:
            raise ValueError(f"weights must be >= 1, got {w}")
    kept = tuple(w for w in weights if w <= target)
    if not kept:
        raise EmptyInstanceError(f"all weights exceed target {target}")
    return Instance(kept, target)


def _is_canonical_decimal(token: str) -> bool:
    """No sign, no leading zeros, ASCII digits only."""
    return token.isascii() and token.isdigit() and (token == "0" or token[0] != "0")


def _decimal(token: str, what: str, line: int | None = None) -> int:
    if not _is_canonical_decimal(token):
        raise ParseError(f"{what} is not a canonical decimal: {token!r}", line)
    return int(token)


def _text_lines(data: bytes | str) -> list[str]:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _header_int(line: str, key: str, lineno: int) -> int:
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != key:
        raise ParseError(f"expected '{key} <value>', got {line!r}", lineno)
    return _decimal(parts[1], key, lineno)


def parse_instance(data: bytes | str) -> Instance:
    """Parse instance text, reporting the offending line on failure.

    Weights exceeding the target are rejected, not silently normalized.
    """
    lines = _text_lines(data)
    if len(lines) != 4:
        raise ParseError(f"expected 4 lines, got {len(lines)}")
    if lines[0] != INSTANCE_MAGIC:
        raise ParseError(f"expected {INSTANCE_MAGIC!r}, got {lines[0]!r}", 1)
    n = _header_int(lines[1], "n", 2)
    t = _header_int(lines[2], "t", 3)
    if n < 1:
        raise ParseError(f"n must be >= 1, got {n}", 2)
    if t < 1:
        raise ParseError(f"t must be >= 1, got {t}", 3)

    w_parts = lines[3].split(" ")
    if w_parts[0] != "w":
        raise ParseError(f"expected weights line, got {lines[3]!r}", 4)
    weights = [_decimal(tok, "weight", 4) for tok in w_parts[1:]]
    if len(weights) != n:
        raise ParseError(f"header says n={n} but found {len(weights)} weights", 4)
    for w in weights:
        if w < 1:
            raise ParseError(f"non-positive weight {w}", 4)
        if w > t:
            raise ParseError(f"weight {w} exceeds target {t}", 4)
    return Instance(tuple(weights), t)


def serialize_instance(instance: Instance) -> bytes:
    lines = [
        INSTANCE_MAGIC,
        f"n {instance.n}",
        f"t {instance.target}",
        "w " + " ".join(str(w) for w in instance.weights),
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")


def serialize_proof(proof: Proof) -> bytes:
    lines = [PROOF_MAGIC, f"p {proof.modulus}", f"k {len(proof.entries)}"]
    lines.extend(f"{i} {c}" for i, c in proof.entries)
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_proof(data: bytes | str, instance: Instance) -> Proof:
    """Parse and fully validate proof text against its instance.

    Round-trips with serialize_proof byte-exactly. Every failure raises
    ProofValidationError with a reason code; a rejected proof file is a
    rejected proof, never a tool error.
    """
    lines = _text_lines(data)
    if not lines or lines[0] != PROOF_MAGIC:
        raise ProofValidationError(
            "bad-magic", f"expected {PROOF_MAGIC!r}, got {lines[0]!r}" if lines else "empty input"
        )

    def header(idx: int, key: str) -> int:
        if idx >= len(lines):
            raise ProofValidationError("bad-header", f"missing {key!r} line")
        parts = lines[idx].split(" ")
        if len(parts) != 2 or parts[0] != key or not _is_canonical_decimal(parts[1]):
            raise ProofValidationError("bad-header", f"malformed {key!r} line: {lines[idx]!r}")
        return int(parts[1])

    p = header(1, "p")
    k = header(2, "k")
    if len(lines) - 3 != k:
        raise ProofValidationError(
            "entry-count-mismatch", f"header says k={k} but found {len(lines) - 3} entry lines"
        )
    entries = []
    for line in lines[3:]:
        parts = line.split(" ")
        if (
            len(parts) != 2
            or not _is_canonical_decimal(parts[0])
            or not _is_canonical_decimal(parts[1])
        ):
            raise ProofValidationError("bad-entry", f"malformed entry line: {line!r}")
        entries.append((int(parts[0]), int(parts[1])))
    proof = Proof(p, tuple(entries))
    validate_proof(instance, proof)
    return proof
