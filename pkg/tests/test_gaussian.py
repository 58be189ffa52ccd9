import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from spread_edge import (
    DomainError,
    absolute_bin_prob,
    interval_prob,
    std_normal_cdf,
    stern_cover_probability,
)


def phi_oracle(z: float) -> float:
    """Standard normal CDF by quadrature of the density, independent of erfc."""
    density = lambda t: math.exp(-0.5 * t * t) / math.sqrt(2 * math.pi)
    tail, _ = integrate.quad(density, -40.0, z)
    return tail


class TestStdNormalCdf:
    def test_zero(self):
        assert std_normal_cdf(0.0) == 0.5

    def test_baylor_z(self):
        assert round(std_normal_cdf(0.4 / 15), 4) == 0.5106

    def test_against_quadrature_oracle(self):
        for z in (-6, -3, -1.959964, -0.5, -0.01, 0.3, 1.0, 1.959964, 2.5, 5.0):
            assert std_normal_cdf(z) == pytest.approx(phi_oracle(z), abs=1e-8)

    def test_two_sigma_quantile(self):
        assert round(std_normal_cdf(1.959964), 4) == 0.9750

    @given(st.floats(min_value=-8, max_value=8))
    def test_symmetry(self, z):
        assert std_normal_cdf(-z) == pytest.approx(1 - std_normal_cdf(z), abs=1e-12)

    def test_monotone(self):
        zs = np.linspace(-10, 10, 2001)
        vals = [std_normal_cdf(z) for z in zs]
        assert all(a <= b for a, b in zip(vals, vals[1:]))


class TestIntervalProb:
    def test_total_mass_with_open_ends(self):
        assert interval_prob(None, None, 0.0, 22.0) == pytest.approx(1.0, abs=1e-12)

    def test_half_of_table2_three_bin(self):
        got = interval_prob(2.5, 3.5, 0.0, 22.0)
        oracle = phi_oracle(3.5 / 22) - phi_oracle(2.5 / 22)
        assert got == pytest.approx(oracle, abs=1e-9)
        assert round(got, 4) == 0.0180

    def test_central_bin_identity(self):
        for sd in (5.0, 15.0, 22.0):
            assert interval_prob(-0.5, 0.5, 0.0, sd) == pytest.approx(
                2 * std_normal_cdf(0.5 / sd) - 1, abs=1e-12
            )

    @given(
        st.floats(min_value=-30, max_value=30),
        st.floats(min_value=0.1, max_value=30),
        st.floats(min_value=0.1, max_value=30),
        st.floats(min_value=-10, max_value=10),
        st.floats(min_value=1, max_value=30),
    )
    def test_additivity(self, a, gap1, gap2, mean, sd):
        b, c = a + gap1, a + gap1 + gap2
        lhs = interval_prob(a, b, mean, sd) + interval_prob(b, c, mean, sd)
        assert lhs == pytest.approx(interval_prob(a, c, mean, sd), abs=1e-12)

    def test_bad_inputs(self):
        with pytest.raises(DomainError):
            interval_prob(1.0, 0.0, 0.0, 15.0)
        with pytest.raises(DomainError):
            interval_prob(0.0, 1.0, 0.0, 0.0)


class TestSternCoverProbability:
    def test_baylor(self):
        assert stern_cover_probability(-2.9, -2.5, 15.0) == pytest.approx(0.5106, abs=5e-5)

    def test_half_when_projection_equals_line(self):
        assert stern_cover_probability(-6.5, -6.5, 15.0) == 0.5

    def test_two_sides_sum_to_one(self):
        # opposing team's projection and line are the negations
        for delta in (0.5, 1.0, 3.5):
            a = stern_cover_probability(-6.5, -6.5 + delta, 15.0)
            b = stern_cover_probability(6.5, 6.5 - delta, 15.0)
            assert a + b == pytest.approx(1.0, abs=1e-12)

    def test_strictly_increasing_in_gap(self):
        gaps = np.linspace(-20, 20, 101)
        vals = [stern_cover_probability(-3.0, -3.0 + g, 15.0) for g in gaps]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_bad_sd(self):
        with pytest.raises(DomainError):
            stern_cover_probability(-3.0, -2.5, 0.0)


class TestAbsoluteBinProb:
    @pytest.mark.parametrize(
        "d,expected",
        [(3, 0.036), (7, 0.034), (11, 0.032)],
    )
    def test_table2_values(self, d, expected):
        assert round(absolute_bin_prob(d, 22.0), 3) == expected

    def test_zero_bin_is_single_sided(self):
        sd = 22.0
        assert absolute_bin_prob(0, sd) == pytest.approx(2 * std_normal_cdf(0.5 / sd) - 1, abs=1e-15)

    def test_total_mass(self):
        total = sum(absolute_bin_prob(d, 22.0) for d in range(1001))
        assert total == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("sd", [3.0, 15.0, 22.0, 40.0])
    def test_total_mass_scales_with_sd(self, sd):
        n = 60 * math.ceil(sd)
        total = sum(absolute_bin_prob(d, sd) for d in range(n + 1))
        assert total == pytest.approx(1.0, abs=1e-9)

    def test_matches_interval_oracle(self):
        for d in range(1, 30):
            oracle = 2 * interval_prob(d - 0.5, d + 0.5, 0.0, 22.0)
            assert absolute_bin_prob(d, 22.0) == pytest.approx(oracle, abs=1e-15)

    def test_bad_inputs(self):
        with pytest.raises(DomainError):
            absolute_bin_prob(-1, 22.0)
        with pytest.raises(DomainError):
            absolute_bin_prob(3, -1.0)
