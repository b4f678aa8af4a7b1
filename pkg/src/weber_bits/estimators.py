"""Scikit-learn compatible wrappers around the core transforms.

These let the log-perception map and the audio analysis slot into
sklearn pipelines: all are stateless transformers (fit is a no-op) with
``get_params``/``set_params`` from BaseEstimator and input validation
via ``check_array``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array

from .audio import SampleBuffer, analyze_frames
from .core import LN2
from .errors import BelowThreshold, NonPositiveInput


class LogPerceptionScaler(TransformerMixin, BaseEstimator):
    """Elementwise stimulus-to-response map K·log2(X/threshold).

    Parameters
    ----------
    threshold : float
        Stimulus magnitude that maps to a 0 response; must be > 0.
    gain : float
        Bits-domain gain K; must be > 0.
    clamp : bool
        When True, sub-threshold entries map to 0 instead of raising.
    unit : {"bits", "nats"}
        Output gauge; nats multiply the bits value by ln 2.
    """

    def __init__(self, threshold=1.0, gain=1.0, clamp=False, unit="bits"):
        self.threshold = threshold
        self.gain = gain
        self.clamp = clamp
        self.unit = unit

    def fit(self, X, y=None):
        if self.threshold <= 0:
            raise NonPositiveInput(f"threshold must be > 0, got {self.threshold}")
        if self.gain <= 0:
            raise NonPositiveInput(f"gain must be > 0, got {self.gain}")
        if self.unit not in ("bits", "nats"):
            raise ValueError(f"unit must be 'bits' or 'nats', got {self.unit!r}")
        return self

    def transform(self, X):
        self.fit(X)
        X = check_array(X, ensure_2d=False, dtype=np.float64)
        if np.any(X <= 0):
            raise NonPositiveInput("all stimulus magnitudes must be > 0")
        if np.any(X < self.threshold) and not self.clamp:
            raise BelowThreshold(
                f"sub-threshold entries present (threshold {self.threshold}); "
                "set clamp=True to map them to 0"
            )
        out = self.gain * np.log2(np.maximum(X, self.threshold) / self.threshold)
        return out * LN2 if self.unit == "nats" else out

    def inverse_transform(self, X):
        self.fit(X)
        X = check_array(X, ensure_2d=False, dtype=np.float64)
        bits = X / LN2 if self.unit == "nats" else X
        return self.threshold * np.exp2(bits / self.gain)


class DominantToneAnalyzer(TransformerMixin, BaseEstimator):
    """Windowed dominant-peak analysis of a mono sample vector.

    ``transform`` maps a 1-D float sample array in [-1, 1] to an (n, 3)
    array of rows (start_time_s, dominant_frequency_hz, amplitude).
    """

    def __init__(self, sample_rate=44100, window_size=4096, hop=2048):
        self.sample_rate = sample_rate
        self.window_size = window_size
        self.hop = hop

    def fit(self, X, y=None):
        return self

    def transform(self, X):
        X = check_array(X, ensure_2d=False, dtype=np.float64)
        if X.ndim != 1:
            raise ValueError(f"expected a 1-D sample vector, got shape {X.shape}")
        buffer = SampleBuffer(X, int(self.sample_rate), 1)
        frames = analyze_frames(buffer, self.window_size, self.hop)
        return np.array(
            [[f.start_time, f.dominant_frequency, f.amplitude] for f in frames],
            dtype=np.float64,
        ).reshape(-1, 3)


class SoundEntropyTransformer(TransformerMixin, BaseEstimator):
    """Per-row sound entropy log2(f·a/(f0·a0))/2 of (frequency, amplitude) pairs.

    Accepts (n, 2) arrays of (f, a) or the (n, 3) output of
    DominantToneAnalyzer (time column passed through untouched in the
    latter case). Sub-threshold rows yield NaN, the array-level analogue
    of the below-threshold marker.
    """

    def __init__(self, freq_threshold=None, amp_threshold=None):
        self.freq_threshold = freq_threshold
        self.amp_threshold = amp_threshold

    def fit(self, X, y=None):
        if self.freq_threshold is None or self.amp_threshold is None:
            raise ValueError("freq_threshold and amp_threshold are required, no defaults")
        if self.freq_threshold <= 0 or self.amp_threshold <= 0:
            raise NonPositiveInput("thresholds must be > 0")
        return self

    def transform(self, X):
        self.fit(X)
        X = check_array(X, dtype=np.float64)
        if X.shape[1] not in (2, 3):
            raise ValueError(f"expected (n, 2) or (n, 3) input, got shape {X.shape}")
        f, a = X[:, -2], X[:, -1]
        if np.any(f <= 0) or np.any(a <= 0):
            raise NonPositiveInput("frequencies and amplitudes must be > 0")
        ok = (f >= self.freq_threshold) & (a >= self.amp_threshold)
        entropy = np.full(X.shape[0], np.nan)
        entropy[ok] = 0.5 * np.log2(
            f[ok] * a[ok] / (self.freq_threshold * self.amp_threshold)
        )
        if X.shape[1] == 3:
            return np.column_stack([X[:, 0], entropy])
        return entropy.reshape(-1, 1)
