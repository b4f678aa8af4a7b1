"""Logarithmic stimulus-response map: R = K·log2(S/S0).

A stimulus is perceived relative to its threshold; the response grows
with the log of the ratio, measured in bits (gain K) or nats (gain
k = K/ln 2). The differential form dR = k·dS/S is also available as a
numerical integrator so the closed form can be checked against an
independent route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BelowThreshold,
    InvalidSteps,
    NegativeResponse,
    NonPositiveInput,
    UnitMismatch,
)

LN2 = math.log(2.0)

BITS = "bits"
NATS = "nats"


@dataclass(frozen=True)
class Stimulus:
    """A physical magnitude and its perception threshold, same unit tag.

    Unit tags are opaque labels compared for equality only; no
    dimensional algebra is attempted.
    """

    magnitude: float
    threshold: float
    unit: str = "dimensionless"
    threshold_unit: str | None = None

    def __post_init__(self):
        if self.magnitude <= 0:
            raise NonPositiveInput(f"stimulus magnitude must be > 0, got {self.magnitude}")
        if self.threshold <= 0:
            raise NonPositiveInput(f"stimulus threshold must be > 0, got {self.threshold}")
        thr_unit = self.unit if self.threshold_unit is None else self.threshold_unit
        if thr_unit != self.unit:
            raise UnitMismatch(f"magnitude unit {self.unit!r} != threshold unit {thr_unit!r}")
        object.__setattr__(self, "threshold_unit", thr_unit)


@dataclass(frozen=True)
class PerceptionBits:
    """A response magnitude in bits or nats."""

    value: float
    unit: str = BITS

    def __post_init__(self):
        if self.unit not in (BITS, NATS):
            raise ValueError(f"unit must be {BITS!r} or {NATS!r}, got {self.unit!r}")

    @property
    def bits(self) -> float:
        return self.value if self.unit == BITS else self.value / LN2

    @property
    def nats(self) -> float:
        return self.value if self.unit == NATS else self.value * LN2


@dataclass(frozen=True)
class Gain:
    """Bits-domain gain K. The natural-log gain is derived, never stored."""

    K: float = 1.0

    def __post_init__(self):
        if self.K <= 0:
            raise NonPositiveInput(f"gain K must be > 0, got {self.K}")

    @property
    def k_natural(self) -> float:
        """Gain of the natural-log form, from K = k·ln 2."""
        return self.K / LN2


def perceive(stimulus: Stimulus, gain: Gain = Gain()) -> PerceptionBits:
    """Response to a stimulus: K·log2(S/S0) bits.

    Exactly 0 at S = S0. Sub-threshold stimuli raise BelowThreshold
    rather than clamping to 0; silent clamping hides unit mistakes.
    """
    if stimulus.magnitude < stimulus.threshold:
        raise BelowThreshold(
            f"stimulus {stimulus.magnitude} is below threshold {stimulus.threshold}"
        )
    return PerceptionBits(gain.K * math.log2(stimulus.magnitude / stimulus.threshold), BITS)


def perceive_inverse(
    response: PerceptionBits, threshold: float, gain: Gain = Gain(), unit: str = "dimensionless"
) -> Stimulus:
    """Stimulus that produces the given response: S = S0·2^(R/K)."""
    bits = response.bits
    if bits < 0:
        raise NegativeResponse(f"response must be >= 0, got {bits} bits")
    if threshold <= 0:
        raise NonPositiveInput(f"threshold must be > 0, got {threshold}")
    return Stimulus(threshold * 2.0 ** (bits / gain.K), threshold, unit)


def convert(response: PerceptionBits, target_unit: str) -> PerceptionBits:
    """Re-express a response in bits or nats. Same-unit conversion is identity."""
    if target_unit not in (BITS, NATS):
        raise ValueError(f"target unit must be {BITS!r} or {NATS!r}, got {target_unit!r}")
    if target_unit == response.unit:
        return response
    if target_unit == NATS:
        return PerceptionBits(response.value * LN2, NATS)
    return PerceptionBits(response.value / LN2, BITS)


def integrate_weber_ode(
    threshold: float,
    target: float,
    k_natural: float = 1.0,
    steps: int = 10_000,
    spacing: str = "log",
) -> PerceptionBits:
    """Integrate dR = k·dS/S from the threshold to the target, in nats.

    ``spacing="log"`` applies the composite trapezoid rule after the
    substitution u = ln S, which makes the integrand constant; the
    result is exact up to rounding. ``spacing="linear"`` integrates k/S
    on equally spaced nodes and converges at second order, which is the
    scheme to use when demonstrating convergence toward the closed form
    k·ln(target/threshold).
    """
    if threshold <= 0 or target <= 0:
        raise NonPositiveInput(f"bounds must be > 0, got {threshold} -> {target}")
    if k_natural <= 0:
        raise NonPositiveInput(f"k must be > 0, got {k_natural}")
    if target < threshold:
        raise BelowThreshold(f"target {target} is below threshold {threshold}")
    if steps < 1:
        raise InvalidSteps(f"steps must be >= 1, got {steps}")
    if spacing not in ("log", "linear"):
        raise ValueError(f"spacing must be 'log' or 'linear', got {spacing!r}")

    if spacing == "log":
        # d(ln S) steps of a constant integrand: every trapezoid panel
        # contributes k*du exactly.
        du = (math.log(target) - math.log(threshold)) / steps
        total = k_natural * du * steps
    else:
        h = (target - threshold) / steps
        total = 0.0
        for i in range(steps):
            s_lo = threshold + i * h
            s_hi = threshold + (i + 1) * h
            total += 0.5 * h * (k_natural / s_lo + k_natural / s_hi)
    return PerceptionBits(total, NATS)
