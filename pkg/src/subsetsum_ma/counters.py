"""Deterministic operation counters.

Wall clocks are too noisy at desk scale to demonstrate how prover and
verifier work scale with the target, so the hot loops report their table
updates and evaluation terms through these counters instead.
"""

from dataclasses import dataclass


@dataclass
class OpCounter:
    count: int = 0

    def add(self, amount: int = 1) -> None:
        self.count += amount
