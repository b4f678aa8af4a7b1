"""Classical logarithmic scales: bels, stellar magnitudes, equal temperament.

Each is an instance of the same threshold-relative log response, with
its own conventional base and reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import BITS, PerceptionBits
from .errors import BelowThreshold, NonPositiveInput

# Standard threshold of hearing intensity, W/m^2.
HEARING_THRESHOLD_INTENSITY = 1e-12

# 100:1 brightness ratio is exactly 5 magnitudes, so one magnitude is
# a factor of 100^(1/5) and the base-10 coefficient is 5/2.
POGSON_COEFFICIENT = 2.5

SEMITONES_PER_OCTAVE = 12


@dataclass(frozen=True)
class IntensityLevel:
    """Sound intensity level above the hearing threshold, in bels."""

    bels: float

    @property
    def decibels(self) -> float:
        return 10.0 * self.bels


@dataclass(frozen=True)
class MagnitudeDifference:
    """Stellar magnitude difference m2 - m1 (dimensionless)."""

    value: float


@dataclass(frozen=True)
class PitchInterval:
    """Signed equal-temperament interval in (real-valued) semitones."""

    semitones: float


def intensity_level_bels(intensity: float) -> IntensityLevel:
    """log10(I / 1e-12) bels; 0 at the hearing threshold."""
    if intensity <= 0:
        raise NonPositiveInput(f"intensity must be > 0 W/m^2, got {intensity}")
    return IntensityLevel(math.log10(intensity / HEARING_THRESHOLD_INTENSITY) + 0.0)


def magnitude_difference(b1: float, b2: float) -> MagnitudeDifference:
    """m2 - m1 = 2.5·log10(b1/b2); a 100:1 brightness ratio is exactly 5."""
    if b1 <= 0 or b2 <= 0:
        raise NonPositiveInput(f"brightnesses must be > 0, got {b1}, {b2}")
    return MagnitudeDifference(POGSON_COEFFICIENT * math.log10(b1 / b2) + 0.0)


def equal_temperament_frequency(reference: float, semitones: float) -> float:
    """reference·2^(semitones/12) Hz; +12 semitones doubles the frequency."""
    if reference <= 0:
        raise NonPositiveInput(f"reference frequency must be > 0 Hz, got {reference}")
    return reference * 2.0 ** (semitones / SEMITONES_PER_OCTAVE)


def pitch_perception_bits(frequency: float, reference: float) -> PerceptionBits:
    """log2(f/f_ref) bits; one octave is exactly 1 bit."""
    if frequency <= 0 or reference <= 0:
        raise NonPositiveInput(f"frequencies must be > 0 Hz, got {frequency}, {reference}")
    if frequency < reference:
        raise BelowThreshold(f"frequency {frequency} Hz is below reference {reference} Hz")
    return PerceptionBits(math.log2(frequency / reference) + 0.0, BITS)
