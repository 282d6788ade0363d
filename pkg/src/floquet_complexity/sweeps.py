"""Parameter sweeps, phase-diagram grids, and analytic-vs-ODE comparisons.

Each grid point is an independent pure computation, so sweeps optionally fan
out over a process pool; results are collected and sorted by parameter value,
which makes the output independent of the worker count.
"""

from __future__ import annotations

import dataclasses
import math
import multiprocessing
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .complexity import AverageRecord, complexity_t, floquet_complexity, sweep_derivatives, time_average
from .dynamics import evolve_ode_series
from .model import (
    ModelParams,
    PhaseLabel,
    anisotropy,
    momentum_grid,
    phase_classify,
    validity_check,
)

__all__ = [
    "SweepRecord",
    "GridCell",
    "OracleRun",
    "run_average_sweep",
    "run_phase_grid",
    "run_oracle_comparison",
]


@dataclass(frozen=True)
class SweepRecord:
    """One grid point of a time-averaged-complexity sweep."""

    param_value: float
    c_bar: float
    c_minus: float
    c_plus: float
    d1: float
    d2: float
    phase: PhaseLabel
    valid: bool
    detuning_ratio: float
    rabi_ratio: float


@dataclass(frozen=True)
class GridCell:
    g0: float
    g1: float
    gamma: float
    dg0: float
    phase: PhaseLabel
    valid: bool
    detuning_ratio: float
    rabi_ratio: float


@dataclass(frozen=True)
class OracleRun:
    """Analytic vs exact-integration comparison at one drive frequency."""

    omega: float
    times: np.ndarray
    c_analytic: np.ndarray
    c_ode: np.ndarray
    max_dev: float
    norm_drift: float


def _with_axis(base: ModelParams, axis: str, value: float) -> ModelParams:
    if axis == "g0":
        return dataclasses.replace(base, g0=value)
    if axis == "g1":
        return dataclasses.replace(base, g1=value)
    raise ValueError(f"sweep axis must be 'g0' or 'g1', got {axis!r}")


def _average_point(task):
    base, axis, value, n_periods, samples_per_period = task
    p = _with_axis(base, axis, float(value))
    report = validity_check(p)
    return (
        float(value),
        time_average(p, n_periods, samples_per_period),
        floquet_complexity(p, "-"),
        floquet_complexity(p, "+"),
        phase_classify(p),
        report.valid,
        report.detuning_ratio,
        report.rabi_ratio,
    )


def run_average_sweep(
    base: ModelParams,
    axis: str,
    values: Sequence[float],
    n_periods: int = 1000,
    samples_per_period: int = 64,
    workers: int = 1,
) -> list[SweepRecord]:
    """Sweep g0 or g1, returning records sorted by the swept value."""
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers!r}")
    vals = sorted(float(v) for v in values)
    if not vals:
        raise ValueError("sweep needs at least one value")
    _with_axis(base, axis, vals[0])  # fail fast on a bad axis
    tasks = [(base, axis, v, n_periods, samples_per_period) for v in vals]
    if workers == 1:
        points = [_average_point(t) for t in tasks]
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            points = pool.map(_average_point, tasks)
    points.sort(key=lambda row: row[0])
    n = len(points)
    if n >= 3:
        recs = [AverageRecord(p[0], p[1], p[2], n_periods) for p in points]
        d1 = [d for _, d in sweep_derivatives(recs, order=1)]
        d2 = [d for _, d in sweep_derivatives(recs, order=2)]
    else:
        d1 = d2 = [math.nan] * n
    return [
        SweepRecord(
            param_value=p[0],
            c_bar=p[1],
            c_minus=p[2],
            c_plus=p[3],
            d1=d1[i],
            d2=d2[i],
            phase=p[4],
            valid=p[5],
            detuning_ratio=p[6],
            rabi_ratio=p[7],
        )
        for i, p in enumerate(points)
    ]


def run_phase_grid(
    base: ModelParams, g0_values: Sequence[float], g1_values: Sequence[float]
) -> list[GridCell]:
    """Classify every (g0, g1) cell; rows are row-major in (g0, g1)."""
    cells = []
    for g0 in g0_values:
        for g1 in g1_values:
            p = dataclasses.replace(base, g0=float(g0), g1=float(g1))
            report = validity_check(p)
            cells.append(
                GridCell(
                    g0=float(g0),
                    g1=float(g1),
                    gamma=anisotropy(p),
                    dg0=p.detuning,
                    phase=phase_classify(p),
                    valid=report.valid,
                    detuning_ratio=report.detuning_ratio,
                    rabi_ratio=report.rabi_ratio,
                )
            )
    return cells


def run_oracle_comparison(
    omega_values: Sequence[float],
    times: Sequence[float],
    J: float = 1.0,
    L: int = 8,
    ell: int = 2,
    detuning: float = 1.0,
    g1_ratio: float = 1.0,
    dt: float | None = None,
) -> list[OracleRun]:
    """Closed form vs RK4 truth along a drive-frequency ladder.

    For each Omega the drive is rebuilt as g0 = ell*Omega/4 + detuning,
    g1 = g1_ratio*Omega, holding J fixed, so the ladder probes the 1/Omega
    convergence of the high-frequency approximation at a fixed physical
    detuning.
    """
    if L > 32:
        raise ValueError(f"oracle comparisons are capped at L = 32 modes, got L = {L}")
    t_arr = np.asarray(times, dtype=float)
    runs = []
    for omega in omega_values:
        omega = float(omega)
        p = ModelParams(
            J=J, g0=ell * omega / 4.0 + detuning, g1=g1_ratio * omega, omega=omega, L=L, ell=ell
        )
        c_analytic = complexity_t(p, t_arr)
        c_ode = np.zeros_like(t_arr)
        drift = 0.0
        for mode in momentum_grid(p):
            series = evolve_ode_series(mode, p, t_arr, dt=dt)
            c_ode += np.arcsin(np.minimum(np.abs(series.u), 1.0))
            drift = max(drift, series.norm_drift)
        dev = float(np.max(np.abs(c_analytic - c_ode)))
        runs.append(
            OracleRun(
                omega=omega,
                times=t_arr,
                c_analytic=c_analytic,
                c_ode=c_ode,
                max_dev=dev,
                norm_drift=drift,
            )
        )
    return runs
