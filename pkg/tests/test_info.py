import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weber_bits.core import Stimulus, perceive
from weber_bits.errors import InvalidDistribution, OutOfRange
from weber_bits.info import DiscreteDistribution, information, shannon_entropy

# Frozen with a 40-digit mpmath oracle.
H_25_75 = 0.8112781244591328

probabilities = st.floats(min_value=1e-12, max_value=1.0)


class TestInformation:
    @pytest.mark.parametrize("p,expected", [(1.0, 0.0), (0.5, 1.0), (0.25, 2.0)])
    def test_dyadic_anchors(self, p, expected):
        assert information(p).value == expected

    @pytest.mark.parametrize("p", [0.0, -0.1, 1.0000001])
    def test_out_of_range(self, p):
        with pytest.raises(OutOfRange):
            information(p)

    @given(p=probabilities)
    def test_is_perception_of_a_probability_stimulus(self, p):
        # information content is the response to stimulus 1 with threshold p
        assert information(p).value == pytest.approx(
            perceive(Stimulus(1.0, p)).value, rel=1e-12, abs=0.0
        )

    @given(p1=probabilities, p2=probabilities)
    def test_monotone_decreasing(self, p1, p2):
        lo, hi = sorted((p1, p2))
        if lo == hi:
            return
        assert information(lo).value > information(hi).value


class TestDiscreteDistribution:
    def test_rejects_empty(self):
        with pytest.raises(InvalidDistribution):
            DiscreteDistribution([])

    def test_rejects_negative(self):
        with pytest.raises(InvalidDistribution):
            DiscreteDistribution([1.1, -0.1])

    def test_rejects_bad_sum_without_renormalizing(self):
        with pytest.raises(InvalidDistribution):
            DiscreteDistribution([0.5, 0.6])

    def test_accepts_within_tolerance(self):
        DiscreteDistribution([0.5, 0.5 + 5e-10])


class TestShannonEntropy:
    def test_fair_coin(self):
        assert shannon_entropy(DiscreteDistribution([0.5, 0.5])).value == 1.0

    def test_point_mass(self):
        assert shannon_entropy(DiscreteDistribution([1.0])).value == 0.0

    def test_biased_coin(self):
        h = shannon_entropy(DiscreteDistribution([0.25, 0.75]))
        assert h.value == pytest.approx(H_25_75, rel=1e-12)

    def test_zero_entry_contributes_nothing(self):
        h = shannon_entropy(DiscreteDistribution([0.5, 0.5, 0.0]))
        assert h.value == 1.0

    @given(weights=st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1,
                            max_size=16).filter(lambda w: sum(w) > 1e-6))
    def test_bounds(self, weights):
        total = math.fsum(weights)
        dist = DiscreteDistribution([w / total for w in weights])
        h = shannon_entropy(dist).value
        assert -1e-12 <= h <= math.log2(len(dist)) + 1e-9

    @given(weights=st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=2,
                            max_size=16))
    def test_permutation_invariance(self, weights):
        total = math.fsum(weights)
        probs = [w / total for w in weights]
        h1 = shannon_entropy(DiscreteDistribution(probs)).value
        h2 = shannon_entropy(DiscreteDistribution(list(reversed(probs)))).value
        assert h1 == pytest.approx(h2, rel=1e-12, abs=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 7, 16])
    def test_uniform_attains_maximum(self, n):
        h = shannon_entropy(DiscreteDistribution([1.0 / n] * n)).value
        assert h == pytest.approx(math.log2(n), rel=1e-12)
