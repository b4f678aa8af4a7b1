import struct

import numpy as np
import pytest


def make_wav(samples, sample_rate=44100, channels=1, format_tag=1, bits=16):
    """Build WAV bytes from int16 interleaved samples (list or array)."""
    pcm = np.asarray(samples, dtype="<i2").tobytes()
    fmt = struct.pack(
        "<IHHIIHH", 16, format_tag, channels, sample_rate,
        sample_rate * channels * bits // 8, channels * bits // 8, bits,
    )
    return (
        b"RIFF" + struct.pack("<I", 4 + 8 + 16 + 8 + len(pcm)) + b"WAVE"
        + b"fmt " + fmt
        + b"data" + struct.pack("<I", len(pcm)) + pcm
    )


def sine_wav(freq, amp, seconds, sample_rate=44100):
    t = np.arange(int(seconds * sample_rate)) / sample_rate
    x = amp * np.sin(2 * np.pi * freq * t)
    return make_wav(np.round(np.clip(x, -1, 1) * 32767).astype("<i2"))


@pytest.fixture
def wav_builder():
    return make_wav
