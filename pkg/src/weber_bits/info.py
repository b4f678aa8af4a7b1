"""Information content and entropy of discrete events.

The information of an event, -log2(p) bits, is the perception of a
probability stimulus with threshold 1: I = -log2(p/1) = log2(1/p). The
unification is exercised directly in the test suite against
:func:`weber_bits.core.perceive`.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .core import BITS, PerceptionBits
from .errors import InvalidDistribution, OutOfRange

SUM_TOLERANCE = 1e-9


def information(p: float) -> PerceptionBits:
    """Information content -log2(p) bits of an event with probability p.

    p = 0 would carry infinite information and is rejected rather than
    returned as infinity.
    """
    if not 0.0 < p <= 1.0:
        raise OutOfRange(f"probability must be in (0, 1], got {p}")
    # log2(1/p) rather than -log2(p): bit-identical to the perception of
    # stimulus 1 against threshold p, which is the identity this module exists for
    return PerceptionBits(math.log2(1.0 / p), BITS)


@dataclass(frozen=True)
class DiscreteDistribution:
    """Finite probability vector; entries >= 0 and summing to 1.

    Out-of-tolerance input errors instead of being renormalized;
    measurement data should be cleaned explicitly.
    """

    probs: tuple[float, ...]

    def __init__(self, probs: Sequence[float]):
        probs = tuple(float(p) for p in probs)
        if not probs:
            raise InvalidDistribution("distribution needs at least one entry")
        if any(p < 0 for p in probs):
            raise InvalidDistribution(f"negative probability in {probs}")
        total = math.fsum(probs)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise InvalidDistribution(f"probabilities sum to {total}, not 1")
        object.__setattr__(self, "probs", probs)

    def __len__(self) -> int:
        return len(self.probs)


def shannon_entropy(dist: DiscreteDistribution) -> PerceptionBits:
    """Shannon entropy -sum(p·log2 p) in bits/symbol, with 0·log2 0 = 0."""
    h = -math.fsum(p * math.log2(p) for p in dist.probs if p > 0.0)
    return PerceptionBits(h + 0.0, BITS)
