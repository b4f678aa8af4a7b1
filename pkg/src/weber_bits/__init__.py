"""Perceptual magnitudes in bits.

Closed-form log-ratio perception of physical stimuli, information
content as perception of a probability stimulus, sound-wave entropy from
(frequency, amplitude) pairs, the classical bel/magnitude/semitone
scales, and a WAV analysis pipeline that turns audio into an entropy
time series.
"""

from .audio import (
    AnalysisFrame,
    EntropyPoint,
    SampleBuffer,
    analyze_frames,
    entropy_series,
    read_wav,
)
from .core import (
    BITS,
    LN2,
    NATS,
    Gain,
    PerceptionBits,
    Stimulus,
    convert,
    integrate_weber_ode,
    perceive,
    perceive_inverse,
)
from .errors import (
    BelowThreshold,
    CorruptFile,
    DecodeError,
    InvalidDistribution,
    InvalidHop,
    InvalidSteps,
    NegativeResponse,
    NonPositiveInput,
    OutOfRange,
    UnitMismatch,
    UnsupportedFormat,
    ValidationError,
    WeberBitsError,
    WindowTooLarge,
)
from .estimators import DominantToneAnalyzer, LogPerceptionScaler, SoundEntropyTransformer
from .info import DiscreteDistribution, information, shannon_entropy
from .scales import (
    IntensityLevel,
    MagnitudeDifference,
    PitchInterval,
    equal_temperament_frequency,
    intensity_level_bels,
    magnitude_difference,
    pitch_perception_bits,
)
from .sound import (
    HaengJinEntropy,
    PerceptionThresholds,
    SoundWave,
    energy_proxy,
    entropy_equivalent,
    haengjin_entropy,
    rejected_shannon_form,
    total_perception,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisFrame",
    "BITS",
    "BelowThreshold",
    "CorruptFile",
    "DecodeError",
    "DiscreteDistribution",
    "DominantToneAnalyzer",
    "EntropyPoint",
    "Gain",
    "HaengJinEntropy",
    "IntensityLevel",
    "InvalidDistribution",
    "InvalidHop",
    "InvalidSteps",
    "LN2",
    "LogPerceptionScaler",
    "MagnitudeDifference",
    "NATS",
    "NegativeResponse",
    "NonPositiveInput",
    "OutOfRange",
    "PerceptionBits",
    "PerceptionThresholds",
    "PitchInterval",
    "SampleBuffer",
    "SoundEntropyTransformer",
    "SoundWave",
    "Stimulus",
    "UnitMismatch",
    "UnsupportedFormat",
    "ValidationError",
    "WeberBitsError",
    "WindowTooLarge",
    "analyze_frames",
    "convert",
    "energy_proxy",
    "entropy_equivalent",
    "entropy_series",
    "equal_temperament_frequency",
    "haengjin_entropy",
    "information",
    "integrate_weber_ode",
    "intensity_level_bels",
    "magnitude_difference",
    "perceive",
    "perceive_inverse",
    "pitch_perception_bits",
    "read_wav",
    "shannon_entropy",
    "total_perception",
]
