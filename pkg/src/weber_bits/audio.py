"""From raw audio bytes to per-window (frequency, amplitude) estimates.

The wave model is a single dominant sinusoid per analysis window: Hann
window, magnitude spectrum, strongest interior bin, parabolic refinement
of the peak in log magnitude. That (f, a) pair feeds the sound-wave
entropy, giving an entropy-over-time series for a WAV file.

The decoder accepts RIFF/WAVE, PCM, 16-bit signed little-endian, mono or
stereo, 8-192 kHz. It is hand-rolled on struct rather than the stdlib
``wave`` module so that codec, depth, and truncation failures map onto
the package's own error taxonomy.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

from .errors import (
    CorruptFile,
    InvalidHop,
    UnsupportedFormat,
    ValidationError,
    WindowTooLarge,
)
from .sound import PerceptionThresholds, SoundWave, haengjin_entropy

PCM_FORMAT_TAG = 1
MIN_SAMPLE_RATE = 8_000
MAX_SAMPLE_RATE = 192_000
MIN_WINDOW = 256
MAX_WINDOW = 65_536

# Peak amplitudes below this fraction of full scale are treated as
# silence; taking logs of numerical noise is meaningless.
SILENCE_FLOOR = 1e-6

# Coherent gain of the periodic Hann window.
HANN_COHERENT_GAIN = 0.5


@dataclass(frozen=True)
class SampleBuffer:
    """Mono float samples in [-1, 1] plus their sample rate."""

    samples: np.ndarray
    sample_rate: int
    channel_count_original: int


@dataclass(frozen=True)
class AnalysisFrame:
    """Dominant-peak estimate for one analysis window."""

    start_time: float
    dominant_frequency: float
    amplitude: float


@dataclass(frozen=True)
class EntropyPoint:
    """Sound entropy of one frame; entropy is None below threshold."""

    start_time: float
    entropy: float | None

    @property
    def below_threshold(self) -> bool:
        return self.entropy is None


def read_wav(data: bytes) -> SampleBuffer:
    """Decode PCM 16-bit WAV bytes into a normalized mono SampleBuffer.

    Stereo is downmixed by per-sample channel average; samples are
    scaled by 1/32768 into [-1, 1].
    """
    if len(data) < 12 or data[0:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise CorruptFile("not a RIFF/WAVE stream")

    fmt = None
    pcm_bytes = None
    pos = 12
    while pos + 8 <= len(data):
        chunk_id = data[pos : pos + 4]
        (chunk_size,) = struct.unpack_from("<I", data, pos + 4)
        body = data[pos + 8 : pos + 8 + chunk_size]
        if len(body) < chunk_size:
            raise CorruptFile(f"truncated {chunk_id!r} chunk")
        if chunk_id == b"fmt ":
            if chunk_size < 16:
                raise CorruptFile("fmt chunk shorter than 16 bytes")
            fmt = struct.unpack_from("<HHIIHH", body, 0)
        elif chunk_id == b"data":
            pcm_bytes = body
        pos += 8 + chunk_size + (chunk_size & 1)  # chunks are word-aligned

    if fmt is None:
        raise CorruptFile("missing fmt chunk")
    if pcm_bytes is None:
        raise CorruptFile("missing data chunk")

    format_tag, channels, sample_rate, _byte_rate, _block_align, bits = fmt
    if format_tag != PCM_FORMAT_TAG:
        raise UnsupportedFormat(f"compression code {format_tag}, only PCM (1) is supported")
    if bits != 16:
        raise UnsupportedFormat(f"{bits}-bit samples, only 16-bit is supported")
    if channels not in (1, 2):
        raise UnsupportedFormat(f"{channels} channels, only mono or stereo is supported")
    if not MIN_SAMPLE_RATE <= sample_rate <= MAX_SAMPLE_RATE:
        raise UnsupportedFormat(f"sample rate {sample_rate} Hz outside 8-192 kHz")

    frame_bytes = 2 * channels
    usable = len(pcm_bytes) - len(pcm_bytes) % frame_bytes
    raw = np.frombuffer(pcm_bytes[:usable], dtype="<i2")
    if raw.size == 0:
        raise CorruptFile("data chunk holds no complete sample frame")
    if channels == 2:
        raw = raw.reshape(-1, 2).mean(axis=1)
    samples = raw.astype(np.float64) / 32768.0
    return SampleBuffer(samples, int(sample_rate), channels)


def _hann(n: int) -> np.ndarray:
    # Periodic form, coherent gain exactly 0.5.
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(n) / n)


def _refine_peak(log_mag: np.ndarray, k: int) -> float:
    """Fractional bin offset from a parabolic fit over k-1, k, k+1 in log magnitude."""
    a, b, g = log_mag[k - 1], log_mag[k], log_mag[k + 1]
    denom = a - 2.0 * b + g
    if denom >= 0.0 or not np.isfinite(denom):
        return 0.0  # flat or degenerate neighborhood, keep the bin
    return 0.5 * (a - g) / denom


def _hann_mainlobe(offset: float) -> float:
    """Hann mainlobe magnitude response at a fractional bin offset.

    Normalized to 1 at offset 0: sinc(d)/(1 - d^2). Dividing the peak-bin
    magnitude by this undoes scalloping loss, which a plain parabolic
    peak-height fit misestimates by up to ~4% near offset 0.5.
    """
    if offset == 0.0:
        return 1.0
    return math.sin(math.pi * offset) / (math.pi * offset) / (1.0 - offset * offset)


def analyze_frames(buffer: SampleBuffer, window_size: int = 4096, hop: int = 2048):
    """Estimate the dominant (frequency, amplitude) of each full window.

    Windows whose refined peak amplitude falls below the silence floor
    produce no frame. Frames are returned in time order.
    """
    if not (MIN_WINDOW <= window_size <= MAX_WINDOW) or window_size & (window_size - 1):
        raise ValidationError(
            f"window_size must be a power of two in [{MIN_WINDOW}, {MAX_WINDOW}], "
            f"got {window_size}"
        )
    if window_size > buffer.samples.size:
        raise WindowTooLarge(
            f"window_size {window_size} exceeds sample count {buffer.samples.size}"
        )
    if not 1 <= hop <= window_size:
        raise InvalidHop(f"hop must be in [1, window_size], got {hop}")

    window = _hann(window_size)
    scale = 2.0 / (HANN_COHERENT_GAIN * window_size)
    tiny = np.finfo(np.float64).tiny
    frames: list[AnalysisFrame] = []
    for start in range(0, buffer.samples.size - window_size + 1, hop):
        segment = buffer.samples[start : start + window_size]
        mag = np.abs(np.fft.rfft(segment * window))
        interior = mag[1:-1]  # exclude DC and Nyquist
        k = 1 + int(np.argmax(interior))
        if mag[k] * scale < SILENCE_FLOOR:
            continue
        log_mag = np.log(np.maximum(mag[k - 1 : k + 2], tiny))
        offset = _refine_peak(log_mag, 1)
        freq = (k + offset) * buffer.sample_rate / window_size
        amp = min(mag[k] * scale / _hann_mainlobe(offset), 1.0)
        if amp < SILENCE_FLOOR:
            continue
        frames.append(AnalysisFrame(start / buffer.sample_rate, freq, amp))
    return frames


def entropy_series(
    frames: list[AnalysisFrame], thr: PerceptionThresholds
) -> list[EntropyPoint]:
    """Sound entropy per frame; sub-threshold frames become explicit markers."""
    points = []
    for frame in frames:
        if frame.dominant_frequency < thr.f0 or frame.amplitude < thr.a0:
            points.append(EntropyPoint(frame.start_time, None))
        else:
            wave = SoundWave(frame.dominant_frequency, frame.amplitude, thr.amplitude_unit)
            points.append(EntropyPoint(frame.start_time, haengjin_entropy(wave, thr).value))
    return points
