"""Runtime invariant suite.

Six suites cover the numerical core: Bessel residuals and zero spacing,
state normalization, the gamma -> -gamma symmetry of the complexity,
closed-form/state-definition consistency, the two-branch complexity split,
and assorted algebraic identities of the effective description.

`fault="gamma-sign"` flips the anisotropy sign in one branch of the symmetry
suite; a healthy build must then FAIL that suite (negative control for the
test harness itself).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complexity import complexity_t, floquet_complexity
from .dynamics import drive_frame, evolve_analytic, polar_decompose
from .model import ModelParams, effective_params, momentum_grid
from .specfun import bessel_j, bessel_zero

__all__ = ["SuiteResult", "SelftestReport", "run_selftest"]

_MAX_LISTED = 8


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: int
    failed: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class SelftestReport:
    suites: tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.suites)


class _Collector:
    def __init__(self, name):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.failures = []

    def check(self, ok: bool, detail: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < _MAX_LISTED:
                self.failures.append(detail)
            elif len(self.failures) == _MAX_LISTED:
                self.failures.append("... more failures suppressed")

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.passed, self.failed, tuple(self.failures))


def _random_params(rng, L=16) -> ModelParams:
    ell = int(rng.integers(0, 4))
    omega = float(rng.uniform(0.5, 20.0))
    return ModelParams(
        J=float(rng.uniform(0.01, 2.0)),
        g0=ell * omega / 4.0 + float(rng.uniform(-1.5, 1.5)),
        g1=float(rng.uniform(0.0, 8.0)),
        omega=omega,
        L=L,
        ell=ell,
    )


def _suite_bessel(rng) -> SuiteResult:
    col = _Collector("bessel")
    for order in range(6):
        for index in range(1, 6):
            z = bessel_zero(order, index)
            residual = abs(bessel_j(order, z))
            col.check(
                residual <= 1e-11,
                f"|J_{order}(zero {index})| = {residual:.3e}, expected <= 1e-11",
            )
    prev = bessel_zero(2, 10)
    for index in range(11, 21):
        z = bessel_zero(2, index)
        gap = z - prev
        col.check(
            abs(gap - math.pi) <= 0.01,
            f"zero spacing {index - 1}->{index} = {gap:.6f}, expected pi +- 0.01",
        )
        prev = z
    for z in rng.uniform(0.1, 30.0, size=15):
        for order in (0, 1, 2, 5):
            direct = bessel_j(order, float(z))
            sign = (-1.0) ** order
            col.check(
                bessel_j(order, -float(z)) == sign * direct
                and bessel_j(-order, float(z)) == sign * direct,
                f"parity identity broken at J_{order}({z:.4f})",
            )
    return col.result()


def _suite_normalization(rng) -> SuiteResult:
    col = _Collector("normalization")
    for _ in range(250):
        p = _random_params(rng)
        eff = effective_params(p)
        frame = drive_frame(p)
        grid = momentum_grid(p)
        for t in rng.uniform(0.0, 200.0, size=40):
            state = evolve_analytic(grid, eff, frame, float(t))
            dev = float(np.max(np.abs(np.abs(state.u) ** 2 + np.abs(state.v) ** 2 - 1.0)))
            col.check(dev <= 1e-12, f"norm deviation {dev:.3e} at t = {t:.3f}, expected <= 1e-12")
    return col.result()


def _matched_gamma_pair(dg0: float, L: int):
    # ell = 2 at 4g1/Omega = 4 has gamma = +J_2(4); find x with J_1(x) = J_2(4)
    # so the ell = 1 drive carries the same |gamma| with the opposite sign
    omega = math.pi
    target = bessel_j(2, 4.0)
    lo, hi = 0.5, 1.8413
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if bessel_j(1, mid) < target:
            lo = mid
        else:
            hi = mid
    x1 = 0.5 * (lo + hi)
    p_plus = ModelParams(J=0.01 * omega, g0=2 * omega / 4 + dg0, g1=omega, omega=omega, L=L, ell=2)
    p_minus = ModelParams(
        J=0.01 * omega, g0=1 * omega / 4 + dg0, g1=x1 * omega / 4, omega=omega, L=L, ell=1
    )
    return p_plus, p_minus


def _suite_symmetry(rng, fault) -> SuiteResult:
    col = _Collector("symmetry")
    for _ in range(3):
        dg0 = float(rng.uniform(-0.05, 0.05)) * math.pi
        p_plus, p_minus = _matched_gamma_pair(dg0, L=16)
        for t in rng.uniform(0.0, 500.0, size=10):
            a = complexity_t(p_plus, float(t))
            b = complexity_t(p_minus, float(t))
            col.check(
                abs(a - b) <= 1e-12,
                f"C(t={t:.2f}) differs under gamma flip by {abs(a - b):.3e}, expected <= 1e-12",
            )
    # mode-level antisymmetry of the Bogoliubov angle for 2*dg0 - omega_k > 0
    flip = 1.0 if fault == "gamma-sign" else -1.0
    for _ in range(10):
        p = _random_params(rng)
        eff = effective_params(p)
        a = 2.0 * eff.detuning - eff.grid.omega_k
        b = eff.grid.delta_k * abs(eff.anisotropy)
        mask = a > 1e-9
        if not mask.any():
            col.check(True, "")
            continue
        theta_pos = 0.5 * np.arctan2(b[mask], a[mask])
        theta_neg = 0.5 * np.arctan2(flip * b[mask], a[mask])
        dev = float(np.max(np.abs(theta_neg + theta_pos)))
        col.check(
            dev <= 1e-15,
            f"theta(-gamma) + theta(gamma) = {dev:.3e}, expected <= 1e-15",
        )
    return col.result()


def _suite_consistency(rng) -> SuiteResult:
    col = _Collector("consistency")
    for _ in range(10):
        p = _random_params(rng)
        eff = effective_params(p)
        frame = drive_frame(p)
        grid = momentum_grid(p)
        for t in rng.uniform(0.0, 100.0, size=5):
            theta, _ = polar_decompose(evolve_analytic(grid, eff, frame, float(t)))
            dev = abs(complexity_t(p, float(t)) - float(np.sum(theta)))
            col.check(
                dev <= 1e-12,
                f"C(t) vs summed polar angles differ by {dev:.3e}, expected <= 1e-12",
            )
    return col.result()


def _suite_floquet_split(rng) -> SuiteResult:
    col = _Collector("floquet_split")
    for _ in range(20):
        omega = float(rng.uniform(1.0, 10.0))
        # 4g1/Omega inside (0, first zero of J_2): gamma > 0, all theta in [0, pi/4]
        p = ModelParams(
            J=float(rng.uniform(0.005, 0.05)) * omega,
            g0=2 * omega / 4.0 + float(rng.uniform(-0.03, 0.03)) * omega,
            g1=float(rng.uniform(0.5, 4.5)) * omega / 4.0,
            omega=omega,
            L=16,
            ell=2,
        )
        total = floquet_complexity(p, "+") + floquet_complexity(p, "-")
        dev = abs(total - p.L * math.pi / 4.0)
        col.check(dev <= 1e-11, f"C+ + C- off the exact split by {dev:.3e}, expected <= 1e-11")
    return col.result()


def _suite_identities(rng) -> SuiteResult:
    col = _Collector("identities")
    for _ in range(30):
        p = _random_params(rng)
        eff = effective_params(p)
        a = 2.0 * eff.detuning - eff.grid.omega_k
        b = eff.grid.delta_k * eff.anisotropy
        dev_eps = float(np.max(np.abs(eff.eps**2 - (a**2 + b**2)) / np.maximum(eff.eps**2, 1e-300)))
        col.check(dev_eps <= 1e-12, f"eps^2 identity off by rel {dev_eps:.3e}")
        dev_amp = float(np.max(np.abs(eff.a_plus**2 + eff.a_minus**2 - 1.0)))
        col.check(dev_amp <= 1e-14, f"amplitude normalization off by {dev_amp:.3e}")
        frame = drive_frame(p)
        t = float(rng.uniform(0.0, 10.0))
        gain = frame.alpha(t + p.drive_period) - frame.alpha(t)
        dev_alpha = abs(gain - 2.0 * math.pi * p.ell)
        col.check(dev_alpha <= 1e-9, f"frame phase gain off by {dev_alpha:.3e}")
    return col.result()


def run_selftest(seed: int = 1234, fault: str | None = None) -> SelftestReport:
    if fault not in (None, "gamma-sign"):
        raise ValueError(f"unknown fault {fault!r}; supported: gamma-sign")
    rng = np.random.default_rng(seed)
    suites = (
        _suite_bessel(rng),
        _suite_normalization(rng),
        _suite_symmetry(rng, fault),
        _suite_consistency(rng),
        _suite_floquet_split(rng),
        _suite_identities(rng),
    )
    return SelftestReport(suites=suites)
