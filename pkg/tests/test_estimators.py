import numpy as np
import pytest
from sklearn.pipeline import make_pipeline

from weber_bits.errors import BelowThreshold, NonPositiveInput
from weber_bits.estimators import (
    DominantToneAnalyzer,
    LogPerceptionScaler,
    SoundEntropyTransformer,
)


def sine(freq, amp, seconds=1.0, sample_rate=44100):
    t = np.arange(int(seconds * sample_rate)) / sample_rate
    return amp * np.sin(2 * np.pi * freq * t)


class TestLogPerceptionScaler:
    def test_transform_matches_closed_form(self):
        scaler = LogPerceptionScaler(threshold=100.0)
        out = scaler.fit_transform(np.array([100.0, 200.0, 400.0]))
        assert out == pytest.approx([0.0, 1.0, 2.0])

    def test_inverse_round_trip(self):
        scaler = LogPerceptionScaler(threshold=3.0, gain=2.5)
        x = np.array([[3.0, 7.0], [30.0, 3000.0]])
        assert scaler.inverse_transform(scaler.transform(x)) == pytest.approx(x)

    def test_nats_gauge(self):
        scaler = LogPerceptionScaler(threshold=1.0, unit="nats")
        assert scaler.transform(np.array([2.0]))[0] == pytest.approx(np.log(2.0))

    def test_sub_threshold_raises_without_clamp(self):
        with pytest.raises(BelowThreshold):
            LogPerceptionScaler(threshold=10.0).transform(np.array([5.0]))

    def test_clamp_maps_to_zero(self):
        out = LogPerceptionScaler(threshold=10.0, clamp=True).transform(np.array([5.0, 20.0]))
        assert out == pytest.approx([0.0, 1.0])

    def test_rejects_non_positive(self):
        with pytest.raises(NonPositiveInput):
            LogPerceptionScaler(threshold=1.0).transform(np.array([0.0]))

    def test_get_params(self):
        params = LogPerceptionScaler(threshold=2.0, gain=3.0).get_params()
        assert params["threshold"] == 2.0 and params["gain"] == 3.0


class TestDominantToneAnalyzer:
    def test_recovers_tone(self):
        frames = DominantToneAnalyzer().fit_transform(sine(440.0, 0.5))
        assert frames.shape[1] == 3
        assert frames[:, 1] == pytest.approx(440.0, abs=0.5)
        assert frames[:, 2] == pytest.approx(0.5, rel=0.02)

    def test_silence_gives_empty(self):
        frames = DominantToneAnalyzer().transform(np.zeros(8192))
        assert frames.shape == (0, 3)

    def test_rejects_2d(self):
        with pytest.raises(ValueError):
            DominantToneAnalyzer().transform(np.zeros((100, 100)))


class TestSoundEntropyTransformer:
    def test_requires_thresholds(self):
        with pytest.raises(ValueError):
            SoundEntropyTransformer().fit(np.ones((1, 2)))

    def test_pairs(self):
        t = SoundEntropyTransformer(freq_threshold=100.0, amp_threshold=1.0)
        out = t.fit_transform(np.array([[200.0, 2.0], [400.0, 2.0]]))
        assert out[:, 0] == pytest.approx([1.0, 1.5])

    def test_sub_threshold_rows_are_nan(self):
        t = SoundEntropyTransformer(freq_threshold=100.0, amp_threshold=1.0)
        out = t.fit_transform(np.array([[50.0, 2.0], [200.0, 2.0]]))
        assert np.isnan(out[0, 0]) and out[1, 0] == pytest.approx(1.0)

    def test_pipeline_composes_with_analyzer(self):
        pipe = make_pipeline(
            DominantToneAnalyzer(),
            SoundEntropyTransformer(freq_threshold=20.0, amp_threshold=1e-4),
        )
        out = pipe.fit_transform(sine(440.0, 0.5))
        truth = 0.5 * np.log2(440 * 0.5 / (20 * 1e-4))
        assert out.shape[1] == 2  # (time, entropy)
        assert out[:, 1] == pytest.approx(truth, abs=0.02)
