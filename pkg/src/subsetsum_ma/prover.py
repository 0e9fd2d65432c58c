"""Exact solution counting and proof extraction (the prover side).

The prover tabulates, for every sum i in [0, n*t], how many subsets hit
exactly i, then ships only the counts in the target's residue class modulo
a small prime. The table costs O(n * n*t) big-int additions; the extracted
proof has O(sqrt(n*t)) entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .counters import OpCounter
from .model import Instance, Proof, ResourceBudgetError, residue_indices
from .numtheory import smallest_prime_in

# One DP row holds sum_bound + 1 Python ints; refuse tables that would
# not fit comfortably in memory rather than thrash.
DEFAULT_CELL_BUDGET = 20_000_000


@dataclass(frozen=True)
class CountTable:
    """counts[i] = number of subsets whose weights sum to exactly i.

    Indexed over [0, n*t]. counts[0] is always 1 (the empty set) and the
    counts sum to 2^n over all i.
    """

    counts: tuple[int, ...]


def count_table(
    instance: Instance,
    *,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    ops: OpCounter | None = None,
) -> CountTable:
    """Exact subset-sum counts via the classic row-rolling recurrence.

    Only the previous row is kept, so memory is two rows of n*t + 1
    arbitrary-precision counts. Counts are exact for any n; they reach
    2^n, so machine words are never assumed. The ops counter advances by
    one per table cell per item round, i.e. n * (n*t + 1) in total.
    """
    size = instance.sum_bound + 1
    if size > cell_budget:
        raise ResourceBudgetError(
            f"count table of {size} cells exceeds the budget of {cell_budget}"
        )
    row = [0] * size
    row[0] = 1
    for w in instance.weights:
        # row[i] <- row[i] + row[i - w] for i >= w; cells below w carry
        # over unchanged, including the always-1 column at i = 0.
        row = row[:w] + [a + b for a, b in zip(row[w:], row)]
        if ops is not None:
            ops.add(size)
    return CountTable(tuple(row))


def build_proof(
    instance: Instance,
    *,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    ops: OpCounter | None = None,
) -> tuple[Proof, int]:
    """Count exactly, then extract the compact residue-class proof.

    The proof modulus is the smallest prime p with
    2*sqrt(n*t) < p < 4*sqrt(n*t) (one always exists by Bertrand's
    postulate), and the entries are the counts at every index congruent to
    the target mod p, zeros included. Returns (proof, solution_count)
    where solution_count is the exact number of subsets hitting the
    target - the quantity the proof certifies.
    """
    table = count_table(instance, cell_budget=cell_budget, ops=ops)
    nt = instance.sum_bound
    root = math.sqrt(nt)
    p = smallest_prime_in(2 * root, 4 * root)
    entries = tuple(
        (i, table.counts[i]) for i in residue_indices(instance.target, p, nt)
    )
    return Proof(p, entries), table.counts[instance.target]
