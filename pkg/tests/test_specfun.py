"""Bessel kernel against the extended-precision series oracle.

Frozen constants below were generated with tests/oracles.py (ascending series
summed in extended precision; zeros by bisecting that series).
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from floquet_complexity.specfun import bessel_j, bessel_zero
from oracles import bessel_j_series, bessel_zero_ref, mcmahon_zero

# (order, z, reference) from the series oracle
FROZEN_VALUES = [
    (0, 1.0, 0.7651976865579666),
    (1, 1.0, 0.4400505857449335),
    (2, 4.0, 0.3641281458520728),
    (2, 7.0, -0.30141722008594013),
    (5, 20.0, 0.15116976798239498),
    (0, 200.0, -0.015437439930565091),
    (50, 200.0, 0.015693898978573085),
]

# (order, index, reference) from bisection on the series oracle
FROZEN_ZEROS = [
    (0, 1, 2.404825557695773),
    (0, 2, 5.5200781102863115),
    (1, 1, 3.831705970207512),
    (2, 1, 5.135622301840682),
    (2, 2, 8.417244140399866),
    (2, 3, 11.619841172149059),
    (0, 20, 62.048469190227166),
]


@pytest.mark.parametrize("order,z,ref", FROZEN_VALUES)
def test_frozen_values(order, z, ref):
    assert bessel_j(order, z) == pytest.approx(ref, abs=1e-12)


def test_envelope_against_series_oracle():
    # |z| <= 200, order <= 50: absolute error stays below 1e-12
    worst = 0.0
    for order in [0, 1, 2, 3, 5, 8, 13, 21, 34, 50]:
        switch = 7.0 + 0.5 * order
        grid = [0.05, 0.7, 2.0, 4.5, 8.6, 14.0, 26.5, 47.0, 88.0, 160.0, 200.0,
                switch - 0.3, switch + 0.3]
        for z in grid:
            worst = max(worst, abs(bessel_j(order, z) - bessel_j_series(order, z)))
    assert worst <= 1e-12


def test_value_at_origin():
    assert bessel_j(0, 0.0) == 1.0
    for order in (1, 2, 7, -3):
        assert bessel_j(order, 0.0) == 0.0


@given(order=st.integers(min_value=-50, max_value=50),
       z=st.floats(min_value=-200.0, max_value=200.0))
@settings(max_examples=200, deadline=None)
def test_parity_identities(order, z):
    ref = bessel_j(abs(order), abs(z))
    sign = -1.0 if (order < 0 and order % 2) else 1.0
    sign *= -1.0 if (z < 0 and abs(order) % 2) else 1.0
    assert bessel_j(order, z) == sign * ref
    # J_{-n}(z) = (-1)^n J_n(z) directly
    flip = -1.0 if abs(order) % 2 else 1.0
    assert bessel_j(-order, z) == flip * bessel_j(order, z)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        bessel_j(0, math.nan)
    with pytest.raises(ValueError):
        bessel_j(2, math.inf)
    with pytest.raises(TypeError):
        bessel_j(1.5, 1.0)
    with pytest.raises(ValueError):
        bessel_zero(0, 0)
    with pytest.raises(TypeError):
        bessel_zero(0, 1.5)


@pytest.mark.parametrize("order,index,ref", FROZEN_ZEROS)
def test_frozen_zeros(order, index, ref):
    z = bessel_zero(order, index)
    assert z == pytest.approx(ref, abs=1e-10)
    assert abs(bessel_j(order, z)) <= 1e-11


def test_zero_residuals_and_ordering():
    for order in (0, 1, 2, 5, 10, 50):
        prev = 0.0
        for index in range(1, 11):
            z = bessel_zero(order, index)
            assert z > prev
            assert abs(bessel_j(order, z)) <= 1e-11
            prev = z


def test_interlacing():
    # zeros of consecutive orders interlace: j_{l,i} < j_{l+1,i} < j_{l,i+1}
    for order in range(0, 7):
        for index in range(1, 9):
            a = bessel_zero(order, index)
            b = bessel_zero(order + 1, index)
            c = bessel_zero(order, index + 1)
            assert a < b < c


def test_zero_spacing_approaches_pi():
    for index in range(10, 21):
        spacing = bessel_zero(2, index + 1) - bessel_zero(2, index)
        assert abs(spacing - math.pi) <= 0.01


def test_mcmahon_cross_check():
    # large-index zeros approach the McMahon expansion (truncation ~3e-10 at i=20)
    assert abs(bessel_zero(0, 20) - mcmahon_zero(0, 20)) <= 1e-8
    assert abs(bessel_zero(1, 25) - mcmahon_zero(1, 25)) <= 1e-8


def test_zero_oracle_agreement_live():
    # one live (non-frozen) bisection of the series oracle
    assert bessel_zero(3, 2) == pytest.approx(bessel_zero_ref(3, 2), abs=1e-10)


def test_asymptotic_form_low_orders():
    # |J_l(z) - sqrt(2/(pi z)) cos(z - (2l+1)pi/4)| <= 0.05/z for z >= 20l+20.
    # The 0.05/z envelope only holds through order 1; see the higher-order
    # variant below for why.
    for order in (0, 1):
        z = 20.0 * order + 20.0
        while z <= 200.0:
            lead = math.sqrt(2.0 / (math.pi * z)) * math.cos(z - (2 * order + 1) * math.pi / 4)
            assert abs(bessel_j(order, z) - lead) <= 0.05 / z
            z += 1.37


def test_asymptotic_form_higher_orders():
    # For order >= 2 the first correction term (4 l^2 - 1)/(8z) dominates the
    # deviation from the leading cosine and exceeds 0.05/z throughout z <= 200,
    # so the envelope has to carry that factor.
    for order in range(2, 7):
        z = 20.0 * order + 20.0
        while z <= 200.0:
            amp = math.sqrt(2.0 / (math.pi * z))
            lead = amp * math.cos(z - (2 * order + 1) * math.pi / 4)
            bound = 1.5 * amp * (4.0 * order * order - 1.0) / (8.0 * z)
            assert abs(bessel_j(order, z) - lead) <= bound
            z += 1.37
