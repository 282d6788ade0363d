"""Complexity observables of the driven chain.

Everything here reduces to the per-mode polar angle Theta_k = arcsin|u_k|.
For the closed-form evolution |u_k(t)| = |Delta_k gamma| |sin(eps_k t)| / eps_k,
so the instantaneous complexity is

    C(t) = sum_k |arcsin( clamp(Delta_k gamma sin(eps_k t)/eps_k, -1, 1) )|

with the sinc-like factor replaced by its Taylor limit t (1 - (eps t)^2/6)
when eps t < 1e-4.  The time average uses a finite trapezoidal horizon
measured in driving periods; the horizon is part of every AverageRecord.

The equilibrium chain enters through ising_ground_complexity, the k-integral
(1/2pi) int_0^pi |eta_k| dk with eta_k = atan2(sin k, g0/J - cos k)/2.  Its
integrand loses analyticity at the band edges as |g0| -> J, so the quadrature
uses Gauss-Legendre panels crowded geometrically toward k = 0 and k = pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .model import ModelParams, effective_params

__all__ = [
    "ComplexitySeries",
    "AverageRecord",
    "complexity_t",
    "complexity_series",
    "early_slope",
    "equilibration_time",
    "time_average",
    "floquet_complexity",
    "sweep_derivatives",
    "ising_ground_complexity",
]

# times per chunk when evaluating long series; 4096 x 500 modes ~ 16 MB
_CHUNK = 4096


@dataclass(frozen=True)
class ComplexitySeries:
    """C(t) sampled on a time grid, with the parameters it was built from."""

    times: np.ndarray
    values: np.ndarray
    params: ModelParams


@dataclass(frozen=True)
class AverageRecord:
    """One point of a parameter sweep of the time-averaged complexity."""

    param_value: float
    c_bar: float
    c_minus: float
    n_periods: int

    def __post_init__(self):
        if self.c_bar < 0 or self.c_minus < 0:
            raise ValueError("complexities must be non-negative")


def _mode_arrays(p: ModelParams):
    eff = effective_params(p)
    return eff.grid.delta_k * eff.anisotropy, eff.eps


def _values_chunk(b, eps, t_chunk):
    x = eps[None, :] * t_chunk[:, None]
    small = x < 1e-4
    sin_fac = np.empty_like(x)
    np.divide(np.sin(x), np.broadcast_to(eps[None, :], x.shape), out=sin_fac, where=~small)
    if small.any():
        tt = np.broadcast_to(t_chunk[:, None], x.shape)
        sin_fac[small] = (tt * (1.0 - x * x / 6.0))[small]
    arg = np.clip(b[None, :] * sin_fac, -1.0, 1.0)
    return np.abs(np.arcsin(arg)).sum(axis=1)


def complexity_t(p: ModelParams, t):
    """Instantaneous complexity at time(s) t >= 0; scalar in, scalar out."""
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t_arr < 0) or not np.all(np.isfinite(t_arr)):
        raise ValueError("t must be finite and non-negative")
    b, eps = _mode_arrays(p)
    out = np.empty(t_arr.shape[0])
    for lo in range(0, t_arr.shape[0], _CHUNK):
        sl = slice(lo, lo + _CHUNK)
        out[sl] = _values_chunk(b, eps, t_arr[sl])
    if np.ndim(t) == 0:
        return float(out[0])
    return out


def complexity_series(p: ModelParams, times) -> ComplexitySeries:
    t_arr = np.asarray(times, dtype=float)
    return ComplexitySeries(times=t_arr, values=complexity_t(p, t_arr), params=p)


def early_slope(p: ModelParams) -> float:
    """Initial growth rate dC/dt|_0 = 2 J |gamma| / sin(pi/L)."""
    eff = effective_params(p)
    return 2.0 * p.J * abs(eff.anisotropy) / math.sin(math.pi / p.L)


def equilibration_time(p: ModelParams) -> float:
    """Saturation time estimate 1/(2|g0 - g0_res| + 2J) (advisory scale)."""
    return 1.0 / (2.0 * abs(p.detuning) + 2.0 * p.J)


def time_average(p: ModelParams, n_periods: int = 1000, samples_per_period: int = 64) -> float:
    """Trapezoidal average of C(t) over n_periods driving periods."""
    if not isinstance(n_periods, int) or n_periods < 1:
        raise ValueError(f"n_periods must be a positive integer, got {n_periods!r}")
    if not isinstance(samples_per_period, int) or samples_per_period < 4:
        raise ValueError(f"samples_per_period must be an integer >= 4, got {samples_per_period!r}")
    horizon = n_periods * p.drive_period
    times = np.linspace(0.0, horizon, n_periods * samples_per_period + 1)
    values = complexity_t(p, times)
    return float(np.trapezoid(values, dx=times[1] - times[0]) / horizon)


def floquet_complexity(p: ModelParams, branch: str) -> float:
    """Complexity of the Floquet mode itself: branch '-' or '+'.

    With theta folded into (-pi/4, pi/4] the '-' mode is the dominantly
    occupied one, so C- = sum_k |theta_k| tracks the time-averaged complexity
    and C+ = sum_k (pi/2 - |theta_k|) is the complement; both are constant in
    time and C+ + C- = L pi/4 identically.
    """
    theta = effective_params(p).theta
    if branch == "-":
        return float(np.sum(np.abs(theta)))
    if branch == "+":
        return float(np.sum(math.pi / 2.0 - np.abs(theta)))
    raise ValueError(f"branch must be '+' or '-', got {branch!r}")


def sweep_derivatives(records: Sequence[AverageRecord] | Iterable, order: int = 1):
    """Finite-difference d(c_bar)/d(param) along a uniformly spaced sweep.

    Central stencils inside, one-sided at the ends (second-order accurate for
    order 1).  Returns [(param_value, derivative), ...].
    """
    recs = list(records)
    if len(recs) < 3:
        raise ValueError("need at least 3 records")
    x = np.array([r.param_value for r in recs], dtype=float)
    y = np.array([r.c_bar for r in recs], dtype=float)
    steps = np.diff(x)
    h = steps[0]
    if h <= 0 or np.max(np.abs(steps - h)) > 1e-9 * abs(h):
        raise ValueError("records must sit on a uniformly increasing parameter grid")
    if order == 1:
        d = np.gradient(y, h, edge_order=2)
    elif order == 2:
        d = np.empty_like(y)
        d[1:-1] = (y[:-2] - 2.0 * y[1:-1] + y[2:]) / h**2
        if len(recs) >= 4:
            d[0] = (2.0 * y[0] - 5.0 * y[1] + 4.0 * y[2] - y[3]) / h**2
            d[-1] = (2.0 * y[-1] - 5.0 * y[-2] + 4.0 * y[-3] - y[-4]) / h**2
        else:
            d[0] = d[-1] = d[1]
    else:
        raise ValueError(f"order must be 1 or 2, got {order!r}")
    return list(zip(x.tolist(), d.tolist()))


def ising_ground_complexity(g0: float, J: float = 1.0, n_quad: int = 64) -> float:
    """Ground-state complexity of the static chain relative to g0 -> infinity.

    C = (1/2pi) int_0^pi |eta_k| dk, eta_k = atan2(sin k, g0/J - cos k)/2.
    """
    if not (J > 0):
        raise ValueError(f"J must be positive, got {J!r}")
    if not isinstance(n_quad, int) or n_quad < 64:
        raise ValueError(f"n_quad must be an integer >= 64, got {n_quad!r}")
    nodes, weights = np.polynomial.legendre.leggauss(n_quad)
    j = np.arange(1, 41)
    # panels crowd toward both band edges; non-analyticity sits at k = 0 for
    # g0 -> +J and at k = pi for g0 -> -J
    breaks = np.unique(
        np.concatenate(([0.0], math.pi * 0.5**j, math.pi - math.pi * 0.5**j, [math.pi]))
    )
    ratio = g0 / J
    total = 0.0
    for a, b in zip(breaks[:-1], breaks[1:]):
        k = 0.5 * (b - a) * nodes + 0.5 * (a + b)
        eta = 0.5 * np.arctan2(np.sin(k), ratio - np.cos(k))
        total += 0.5 * (b - a) * float(np.dot(weights, np.abs(eta)))
    return total / (2.0 * math.pi)
