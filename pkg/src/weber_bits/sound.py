"""Perception of a sound wave characterized by frequency and amplitude.

A wave's total perception is log2(f·a/(f0·a0)) bits, the sum of the
pitch and amplitude responses. Its mean over the two response channels,
log2(f·a/(f0·a0))/2 bits/response, is strictly a function of the
product f·a, so equal-product waves score identically - the same
condition under which they carry identical energy, since f1·a1 = f2·a2
implies f1²·a1² = f2²·a2².

The gain is fixed at K = 1 here; the thresholds f0 and a0 have no
canonical values and must always be supplied by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import BITS, PerceptionBits
from .errors import BelowThreshold, NonPositiveInput, UnitMismatch

ENTROPY_UNIT = "bits/response"


@dataclass(frozen=True)
class SoundWave:
    """A single-component wave: frequency in Hz, amplitude in a caller-chosen unit."""

    frequency: float
    amplitude: float
    amplitude_unit: str = "full-scale"

    def __post_init__(self):
        if self.frequency <= 0:
            raise NonPositiveInput(f"frequency must be > 0 Hz, got {self.frequency}")
        if self.amplitude <= 0:
            raise NonPositiveInput(f"amplitude must be > 0, got {self.amplitude}")


@dataclass(frozen=True)
class PerceptionThresholds:
    """Frequency and amplitude thresholds (f0 Hz, a0 in the waves' amplitude unit)."""

    f0: float
    a0: float
    amplitude_unit: str = "full-scale"

    def __post_init__(self):
        if self.f0 <= 0:
            raise NonPositiveInput(f"frequency threshold must be > 0 Hz, got {self.f0}")
        if self.a0 <= 0:
            raise NonPositiveInput(f"amplitude threshold must be > 0, got {self.a0}")


@dataclass(frozen=True)
class HaengJinEntropy:
    """Mean perception per response channel, in bits/response."""

    value: float
    unit: str = ENTROPY_UNIT


def _check_in_range(wave: SoundWave, thr: PerceptionThresholds) -> None:
    if wave.amplitude_unit != thr.amplitude_unit:
        raise UnitMismatch(
            f"wave amplitude unit {wave.amplitude_unit!r} != "
            f"threshold unit {thr.amplitude_unit!r}"
        )
    if wave.frequency < thr.f0:
        raise BelowThreshold(f"frequency {wave.frequency} Hz is below threshold {thr.f0} Hz")
    if wave.amplitude < thr.a0:
        raise BelowThreshold(f"amplitude {wave.amplitude} is below threshold {thr.a0}")


def total_perception(wave: SoundWave, thr: PerceptionThresholds) -> PerceptionBits:
    """Total response to both attributes: log2(f·a/(f0·a0)) bits."""
    _check_in_range(wave, thr)
    return PerceptionBits(
        math.log2(wave.frequency * wave.amplitude / (thr.f0 * thr.a0)) + 0.0, BITS
    )


def haengjin_entropy(wave: SoundWave, thr: PerceptionThresholds) -> HaengJinEntropy:
    """Arithmetic mean of the two responses: log2(f·a/(f0·a0))/2 bits/response."""
    return HaengJinEntropy(total_perception(wave, thr).value / 2.0)


def energy_proxy(wave: SoundWave) -> float:
    """Relative energy (f·a)²; equal for two waves iff their f·a products are equal."""
    return (wave.frequency * wave.amplitude) ** 2


def rejected_shannon_form(wave: SoundWave, thr: PerceptionThresholds) -> PerceptionBits:
    """Entropy-style weighted sum (f0/f)·log2(f/f0) + (a0/a)·log2(a/a0).

    Kept only as a counterexample generator: unlike the mean response it
    is not a function of the product f·a, which is why it is unusable as
    a wave entropy.
    """
    _check_in_range(wave, thr)
    f_ratio = wave.frequency / thr.f0
    a_ratio = wave.amplitude / thr.a0
    return PerceptionBits(
        math.log2(f_ratio) / f_ratio + math.log2(a_ratio) / a_ratio + 0.0, BITS
    )


def entropy_equivalent(
    w1: SoundWave, w2: SoundWave, thr: PerceptionThresholds, rel_tol: float = 1e-9
) -> bool:
    """Whether two in-range waves have equal f·a product within rel_tol.

    Equal products imply equal mean perception and equal energy proxy.
    """
    _check_in_range(w1, thr)
    _check_in_range(w2, thr)
    p1 = w1.frequency * w1.amplitude
    p2 = w2.frequency * w2.amplitude
    return abs(p1 - p2) <= rel_tol * max(p1, p2)
