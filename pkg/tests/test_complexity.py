"""Complexity observables: closed form, averages, derivatives, equilibrium limit."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from floquet_complexity import (
    ModelParams,
    bessel_j,
    bessel_zero,
    drive_frame,
    effective_params,
    evolve_analytic,
    evolve_ode_series,
    momentum_grid,
    polar_decompose,
)
from floquet_complexity.complexity import (
    AverageRecord,
    complexity_series,
    complexity_t,
    early_slope,
    equilibration_time,
    floquet_complexity,
    ising_ground_complexity,
    sweep_derivatives,
    time_average,
)

from oracles import simpson_ground_complexity

OMEGA = math.pi
J = 0.01 * OMEGA


def resonant_params(dg0=0.0, g1=OMEGA, L=1000, ell=2):
    return ModelParams(J=J, g0=ell * OMEGA / 4.0 + dg0, g1=g1, omega=OMEGA, L=L, ell=ell)


class TestComplexityT:
    def test_zero_time_is_zero(self):
        assert complexity_t(resonant_params(), 0.0) == 0.0

    def test_rejects_bad_times(self):
        p = resonant_params(L=8)
        with pytest.raises(ValueError):
            complexity_t(p, -1.0)
        with pytest.raises(ValueError):
            complexity_t(p, math.nan)

    def test_vanishes_at_bessel_zero_drive(self):
        # 4 g1 / Omega at the first zero of the order-2 Bessel function
        p = resonant_params(g1=OMEGA * bessel_zero(2, 1) / 4.0)
        for t in (0.0, 3.0, 40.0, 900.0):
            assert complexity_t(p, t) <= 1e-10

    def test_gamma_flip_symmetry(self):
        # same |gamma| through an odd and an even harmonic: ell = 2 at
        # 4g1/Omega = 4 gives +J_2(4); solve J_1(x) = J_2(4) so ell = 1
        # gives the opposite sign at identical detuning and chain size
        target = bessel_j(2, 4.0)
        lo, hi = 0.5, 1.8413
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if bessel_j(1, mid) < target:
                lo = mid
            else:
                hi = mid
        x1 = 0.5 * (lo + hi)
        dg0 = 0.37 * J
        p_plus = ModelParams(J=J, g0=2 * OMEGA / 4 + dg0, g1=OMEGA, omega=OMEGA, L=16, ell=2)
        p_minus = ModelParams(
            J=J, g0=1 * OMEGA / 4 + dg0, g1=x1 * OMEGA / 4, omega=OMEGA, L=16, ell=1
        )
        ts = np.linspace(0.0, 30.0 / J, 400)
        dev = np.abs(complexity_t(p_plus, ts) - complexity_t(p_minus, ts))
        assert np.max(dev) < 1e-12

    def test_consistency_with_state_definition(self):
        # closed form vs sum of polar angles of the evolved states,
        # 25 parameter draws x 40 times = 1000 samples
        rng = np.random.default_rng(7)
        for _ in range(25):
            ell = int(rng.integers(0, 4))
            omega = float(rng.uniform(0.5, 20.0))
            p = ModelParams(
                J=float(rng.uniform(0.01, 2.0)),
                g0=ell * omega / 4.0 + float(rng.uniform(-1.5, 1.5)),
                g1=float(rng.uniform(0.0, 8.0)),
                omega=omega,
                L=16,
                ell=ell,
            )
            eff = effective_params(p)
            frame = drive_frame(p)
            grid = momentum_grid(p)
            for t in rng.uniform(0.0, 100.0, size=40):
                theta, _ = polar_decompose(evolve_analytic(grid, eff, frame, float(t)))
                assert abs(complexity_t(p, float(t)) - float(np.sum(theta))) < 1e-12

    @settings(max_examples=40, deadline=None)
    @given(
        dg0=st.floats(-3 * J, 3 * J),
        g1=st.floats(0.0, 3 * OMEGA),
        t=st.floats(0.0, 5000.0),
        L=st.sampled_from([2, 8, 100]),
    )
    def test_bound(self, dg0, g1, t, L):
        c = complexity_t(resonant_params(dg0=dg0, g1=g1, L=L), t)
        assert 0.0 <= c <= (L / 2) * (math.pi / 2) + 1e-12

    def test_matches_ode_oracle_small_chain(self):
        # exact integration of every mode of an L = 8 chain
        p = resonant_params(L=8)
        ts = np.linspace(0.0, 30.0, 13)
        total = np.zeros_like(ts)
        for m in momentum_grid(p):
            series = evolve_ode_series(m, p, ts)
            total += np.arcsin(np.minimum(np.abs(series.u), 1.0))
        dev = np.abs(complexity_t(p, ts) - total)
        # rotating-wave truncation error budget at omega_eff/Omega ~ 4e-3
        assert np.max(dev) < 0.05

    def test_array_and_scalar_agree(self):
        p = resonant_params(L=32)
        ts = np.array([0.0, 1.0, 17.3])
        arr = complexity_t(p, ts)
        for i, t in enumerate(ts):
            assert arr[i] == complexity_t(p, float(t))


class TestEarlySlope:
    def test_zero_anisotropy(self):
        # gamma at the located zero is ~1e-16, amplified by 1/sin(pi/L)
        assert early_slope(resonant_params(g1=OMEGA * bessel_zero(2, 1) / 4.0)) == pytest.approx(
            0.0, abs=1e-13
        )

    def test_volume_law(self):
        p = resonant_params(L=1000)
        gamma = abs(effective_params(p).anisotropy)
        assert early_slope(p) == pytest.approx(2 * J * gamma * p.L / math.pi, rel=2e-5)

    def test_finite_difference_matches(self):
        p = resonant_params()
        t0 = 1e-3 / J
        fd = complexity_t(p, t0) / t0
        assert abs(fd - early_slope(p)) / early_slope(p) < 1e-3

    def test_early_time_window(self):
        p = resonant_params()
        s = early_slope(p)
        for t in (1e-5 / (2 * J), 1e-4 / (2 * J), 1e-3 / (2 * J)):
            assert abs(complexity_t(p, t) / t - s) / s <= 1e-3


class TestEquilibrationTime:
    def test_formula_values(self):
        assert equilibration_time(resonant_params(dg0=0.0)) == pytest.approx(1 / (2 * J))
        assert equilibration_time(resonant_params(dg0=2 * J)) == pytest.approx(1 / (6 * J))

    def test_monotone_in_detuning(self):
        ts = [equilibration_time(resonant_params(dg0=f * J)) for f in (0.0, 1.0, 2.0, 5.0)]
        assert all(a > b for a, b in zip(ts, ts[1:]))


class TestTimeAverage:
    def test_input_validation(self):
        p = resonant_params(L=8)
        with pytest.raises(ValueError):
            time_average(p, n_periods=0)
        with pytest.raises(ValueError):
            time_average(p, n_periods=10, samples_per_period=3)
        with pytest.raises(ValueError):
            time_average(p, n_periods=2.0)

    def test_gamma_zero_averages_to_zero(self):
        p = resonant_params(g1=OMEGA * bessel_zero(2, 1) / 4.0)
        assert time_average(p, n_periods=2, samples_per_period=16) <= 1e-10

    def test_horizon_convergence(self):
        p = resonant_params(dg0=0.5 * J)
        a = time_average(p, 1000, 64)
        b = time_average(p, 2000, 64)
        assert abs(a - b) / a < 5e-3

    def test_pm_plateau_decreases_with_g0(self):
        ts = np.linspace(0.0, 20.0 / J, 2001)
        window = slice(1500, None)
        means = []
        for f in (1.5, 2.0, 3.0):
            means.append(float(np.mean(complexity_t(resonant_params(dg0=f * J), ts)[window])))
        assert means[0] > means[1] > means[2]

    def test_fmz_never_equilibrates(self):
        ts = np.linspace(0.0, 20.0 / J, 2001)
        c = complexity_t(resonant_params(dg0=0.0), ts)
        late = c[1500:]
        assert (late.max() - late.min()) > 0.2 * late.mean()


class TestFloquetComplexity:
    def test_paramagnetic_limit_with_zero_gamma(self):
        p = resonant_params(dg0=2.0 * J, g1=OMEGA * bessel_zero(2, 1) / 4.0)
        assert floquet_complexity(p, "-") == pytest.approx(0.0, abs=1e-12)
        assert floquet_complexity(p, "+") == pytest.approx((p.L / 2) * (math.pi / 2), rel=1e-12)

    def test_branch_sum_identity(self):
        # pointwise |theta| + (pi/2 - |theta|) = pi/2, so the split is exact
        # for any sign of gamma or the detuning
        for dg0 in (0.0, 0.5 * J, 2.0 * J, -1.3 * J):
            for g1_over in (1.0, 1.5):
                p = resonant_params(dg0=dg0, g1=g1_over * OMEGA)
                total = floquet_complexity(p, "+") + floquet_complexity(p, "-")
                assert total == pytest.approx(p.L * math.pi / 4.0, rel=1e-12)

    def test_bad_branch(self):
        with pytest.raises(ValueError):
            floquet_complexity(resonant_params(L=8), "pm")


def records_from(xs, ys):
    return [AverageRecord(float(x), float(y), 0.0, 1) for x, y in zip(xs, ys)]


class TestSweepDerivatives:
    def test_linear_data(self):
        xs = np.linspace(0.0, 1.0, 11)
        recs = records_from(xs, 3.0 * xs + 0.25)
        d1 = np.array([d for _, d in sweep_derivatives(recs, order=1)])
        d2 = np.array([d for _, d in sweep_derivatives(recs, order=2)])
        np.testing.assert_allclose(d1, 3.0, atol=1e-10)
        np.testing.assert_allclose(d2, 0.0, atol=1e-10)

    def test_abs_kink_jump(self):
        xs = np.linspace(-0.5, 0.5, 21)
        recs = records_from(xs, np.abs(xs))
        pairs = sweep_derivatives(recs, order=1)
        left = [d for x, d in pairs if x < -0.026]
        right = [d for x, d in pairs if x > 0.026]
        assert left[-1] == pytest.approx(-1.0, abs=1e-12)
        assert right[0] == pytest.approx(1.0, abs=1e-12)

    def test_quadratic_second_derivative(self):
        xs = np.linspace(0.0, 2.0, 9)
        recs = records_from(xs, 1.5 * xs**2)
        d2 = np.array([d for _, d in sweep_derivatives(recs, order=2)])
        np.testing.assert_allclose(d2, 3.0, atol=1e-10)

    def test_rejects_bad_input(self):
        xs = [0.0, 0.1, 0.25]
        with pytest.raises(ValueError):
            sweep_derivatives(records_from(xs, [1, 2, 3]), order=1)
        with pytest.raises(ValueError):
            sweep_derivatives(records_from([0.0, 0.1], [1, 2]), order=1)
        ok = records_from([0.0, 0.1, 0.2], [1, 2, 3])
        with pytest.raises(ValueError):
            sweep_derivatives(ok, order=3)

    def test_record_validation(self):
        with pytest.raises(ValueError):
            AverageRecord(0.0, -1.0, 0.0, 1)
        with pytest.raises(ValueError):
            AverageRecord(0.0, 1.0, -0.5, 1)


class TestIsingGroundComplexity:
    def test_free_fermion_point(self):
        assert ising_ground_complexity(0.0) == pytest.approx(math.pi / 8, abs=1e-12)

    def test_critical_point_closed_form(self):
        # eta = (pi/2 - k/2)/2 exactly at g0 = J, integrating to pi/16
        assert ising_ground_complexity(1.0) == pytest.approx(math.pi / 16, abs=1e-12)

    def test_asymptotic_decay(self):
        for g0 in (100.0, 1000.0):
            c = ising_ground_complexity(g0)
            assert c * 2 * math.pi * g0 == pytest.approx(1.0, abs=2e-4)

    def test_matches_simpson_oracle(self):
        for g0 in (0.3, 0.9, 1.0, 1.1, 3.0):
            mine = ising_ground_complexity(g0)
            ref = simpson_ground_complexity(g0, 1.0)
            assert abs(mine - ref) < 1e-9

    def test_quadrature_converged(self):
        for g0 in (0.999, 1.001, 2.0):
            a = ising_ground_complexity(g0, n_quad=64)
            b = ising_ground_complexity(g0, n_quad=128)
            assert abs(a - b) < 1e-12

    def test_second_derivative_divergence_rate(self):
        def d2(g0, h):
            return (
                ising_ground_complexity(g0 - h)
                - 2 * ising_ground_complexity(g0)
                + ising_ground_complexity(g0 + h)
            ) / h**2

        r_far = abs(d2(1.1, 5e-3))
        r_near = abs(d2(1.01, 5e-4))
        ratio = r_near / r_far
        assert 6.5 < ratio < 13.5

    def test_input_validation(self):
        with pytest.raises(ValueError):
            ising_ground_complexity(1.0, J=0.0)
        with pytest.raises(ValueError):
            ising_ground_complexity(1.0, n_quad=32)
        with pytest.raises(ValueError):
            ising_ground_complexity(1.0, n_quad=64.0)


class TestComplexitySeries:
    def test_fields_and_invariants(self):
        p = resonant_params(L=32)
        ts = np.linspace(0.0, 5.0, 50)
        series = complexity_series(p, ts)
        assert series.params is p
        assert series.values[0] == 0.0
        assert np.all(series.values >= 0.0)
        assert series.times.shape == series.values.shape
