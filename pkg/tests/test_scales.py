import pytest
from hypothesis import given
from hypothesis import strategies as st

from weber_bits.errors import BelowThreshold, NonPositiveInput
from weber_bits.scales import (
    equal_temperament_frequency,
    intensity_level_bels,
    magnitude_difference,
    pitch_perception_bits,
)

# Frozen with a 40-digit mpmath oracle.
ONE_MAGNITUDE_RATIO = 2.5118864315095801
A_SHARP_4 = 466.1637615180899

positive = st.floats(min_value=1e-6, max_value=1e6)


class TestIntensityLevel:
    def test_threshold_is_zero_bels(self):
        assert intensity_level_bels(1e-12).bels == 0.0

    def test_ten_times_is_one_bel(self):
        level = intensity_level_bels(1e-11)
        assert level.bels == pytest.approx(1.0, rel=1e-12)
        assert level.decibels == pytest.approx(10.0, rel=1e-12)

    def test_one_watt_per_square_meter(self):
        assert intensity_level_bels(1.0).bels == pytest.approx(12.0, rel=1e-12)

    def test_rejects_non_positive(self):
        with pytest.raises(NonPositiveInput):
            intensity_level_bels(0.0)

    @given(i=st.floats(min_value=1e-12, max_value=10.0))
    def test_decade_additivity(self, i):
        assert intensity_level_bels(10 * i).bels == pytest.approx(
            intensity_level_bels(i).bels + 1.0, rel=1e-12, abs=1e-12
        )


class TestMagnitudeDifference:
    def test_hundredfold_is_five(self):
        assert magnitude_difference(100.0, 1.0).value == pytest.approx(5.0, rel=1e-12)

    def test_equal_brightness(self):
        assert magnitude_difference(3.7, 3.7).value == 0.0

    def test_one_magnitude_ratio(self):
        assert magnitude_difference(ONE_MAGNITUDE_RATIO, 1.0).value == pytest.approx(
            1.0, rel=1e-9
        )

    @given(b1=positive, b2=positive)
    def test_antisymmetry(self, b1, b2):
        assert magnitude_difference(b1, b2).value == pytest.approx(
            -magnitude_difference(b2, b1).value, rel=1e-12, abs=1e-12
        )

    @given(b=positive)
    def test_defining_property_any_base_brightness(self, b):
        assert magnitude_difference(100 * b, b).value == pytest.approx(5.0, rel=1e-12)


class TestEqualTemperament:
    def test_octave_doubles(self):
        for f in (55.0, 440.0, 1234.5):
            assert equal_temperament_frequency(f, 12) == pytest.approx(2 * f, rel=1e-12)

    def test_one_semitone_above_a4(self):
        assert equal_temperament_frequency(440, 1) == pytest.approx(A_SHARP_4, rel=1e-12)

    def test_octave_down(self):
        assert equal_temperament_frequency(440, -12) == pytest.approx(220, rel=1e-12)

    @given(f=positive, m=st.floats(min_value=-48, max_value=48),
           n=st.floats(min_value=-48, max_value=48))
    def test_steps_compose(self, f, m, n):
        stepped = equal_temperament_frequency(equal_temperament_frequency(f, m), n)
        assert stepped == pytest.approx(equal_temperament_frequency(f, m + n), rel=1e-12)


class TestPitchPerception:
    def test_octave_is_one_bit(self):
        assert pitch_perception_bits(880, 440).value == pytest.approx(1.0, rel=1e-12)

    def test_at_reference(self):
        assert pitch_perception_bits(440, 440).value == 0.0

    def test_semitone_is_a_twelfth_of_a_bit(self):
        assert pitch_perception_bits(A_SHARP_4, 440).value == pytest.approx(
            1.0 / 12.0, rel=1e-9
        )

    def test_below_reference(self):
        with pytest.raises(BelowThreshold):
            pitch_perception_bits(220, 440)

    @given(f=positive)
    def test_octave_consistency(self, f):
        up = equal_temperament_frequency(f, 12)
        assert pitch_perception_bits(up, f).value == pytest.approx(1.0, rel=1e-12)
