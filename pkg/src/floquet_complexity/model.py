"""Momentum-space description of the periodically driven Ising chain.

The chain H(t) = -J sum sz_i sz_{i+1} - g(t) sum sx_i with g(t) = g0 + g1 cos(Omega t)
maps, in the even-parity sector, onto independent two-level problems labelled by
the positive momenta k = (2j-1)pi/L.  Near the resonance g0 ~ ell*Omega/4 the
high-frequency rotating-wave treatment turns each of them into a static
anisotropic-XY Bogoliubov problem whose parameters live in ``EffectiveParams``:

    detuning    dg0   = g0 - ell*Omega/4
    anisotropy  gamma = (-1)^ell J_ell(4 g1 / Omega)
    angle       theta_k : tan(2 theta_k) = Delta_k gamma / (2 dg0 - omega_k)
    dispersion  eps_k = sqrt((2 dg0 - omega_k)^2 + (Delta_k gamma)^2)

with omega_k = 2J cos k and Delta_k = 2J sin k.  Everything downstream
(dynamics, complexity, phase structure) is built from these quantities.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import bessel_j

__all__ = [
    "ModelParams",
    "MomentumMode",
    "MomentumGrid",
    "EffectiveParams",
    "PhaseLabel",
    "ValidityReport",
    "brillouin_momenta",
    "momentum_grid",
    "effective_params",
    "bogoliubov_angle",
    "floquet_spectrum",
    "phase_classify",
    "validity_check",
]


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the driven chain (hbar = 1).

    J : Ising coupling, > 0.
    g0, g1 : static and drive amplitude of the transverse field, g1 >= 0.
    omega : drive frequency, > 0.
    L : number of sites, even, >= 2.
    ell : resonance index, integer >= 0 (g0 near ell*omega/4).
    """

    J: float
    g0: float
    g1: float
    omega: float
    L: int
    ell: int

    def __post_init__(self):
        for name in ("J", "g0", "g1", "omega"):
            val = getattr(self, name)
            if not (isinstance(val, (int, float)) and math.isfinite(val)):
                raise ValueError(f"{name} must be a finite number, got {val!r}")
        if self.J <= 0:
            raise ValueError(f"J must be positive, got {self.J}")
        if self.omega <= 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if self.g1 < 0:
            raise ValueError(f"g1 must be non-negative, got {self.g1}")
        if not isinstance(self.L, int) or self.L < 2 or self.L % 2:
            raise ValueError(f"L must be an even integer >= 2, got {self.L!r}")
        if not isinstance(self.ell, int) or self.ell < 0:
            raise ValueError(f"ell must be a non-negative integer, got {self.ell!r}")

    @property
    def g0_resonant(self) -> float:
        """Resonant static field ell*omega/4."""
        return 0.25 * self.ell * self.omega

    @property
    def detuning(self) -> float:
        return self.g0 - self.g0_resonant

    @property
    def drive_period(self) -> float:
        return 2.0 * math.pi / self.omega

    @property
    def bessel_argument(self) -> float:
        return 4.0 * self.g1 / self.omega


@dataclass(frozen=True)
class MomentumMode:
    k: float
    omega_k: float  # 2J cos k
    delta_k: float  # 2J sin k


@dataclass(frozen=True)
class MomentumGrid:
    """The L/2 positive momenta of the even-parity sector, as arrays."""

    k: np.ndarray
    omega_k: np.ndarray
    delta_k: np.ndarray

    def __post_init__(self):
        for arr in (self.k, self.omega_k, self.delta_k):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return self.k.size

    def __iter__(self):
        for i in range(self.k.size):
            yield MomentumMode(float(self.k[i]), float(self.omega_k[i]), float(self.delta_k[i]))


def brillouin_momenta(L: int, J: float = 1.0) -> MomentumGrid:
    """Momenta k = (2j-1)pi/L for j = 1..L/2, with omega_k and Delta_k."""
    if not isinstance(L, int) or L < 2 or L % 2:
        raise ValueError(f"L must be an even integer >= 2, got {L!r}")
    if J <= 0:
        raise ValueError(f"J must be positive, got {J}")
    j = np.arange(1, L // 2 + 1, dtype=float)
    k = (2.0 * j - 1.0) * math.pi / L
    return MomentumGrid(k=k, omega_k=2.0 * J * np.cos(k), delta_k=2.0 * J * np.sin(k))


def momentum_grid(params: ModelParams) -> MomentumGrid:
    return brillouin_momenta(params.L, params.J)


@dataclass(frozen=True)
class EffectiveParams:
    """Rotating-wave effective description at resonance index ell.

    Scalars: detuning dg0, anisotropy gamma, omega_eff = J|gamma| and the
    XY couplings j_plus/j_minus = J(1 +- gamma)/2.  Per-mode arrays (aligned
    with ``grid``): Bogoliubov angle theta in (-pi/4, pi/4], dispersion eps,
    the two quasienergy branches eps_plus/eps_minus (m = 0 Floquet zone), and
    the overlap amplitudes a_plus = -sin(theta), a_minus = cos(theta) of the
    paramagnetic initial state with the Floquet modes.  The fold makes
    |a_minus| >= |a_plus| everywhere: '-' labels the dominantly occupied mode.
    """

    params: ModelParams
    grid: MomentumGrid
    detuning: float
    anisotropy: float
    omega_eff: float
    j_plus: float
    j_minus: float
    theta: np.ndarray
    eps: np.ndarray
    eps_plus: np.ndarray
    eps_minus: np.ndarray
    a_plus: np.ndarray
    a_minus: np.ndarray

    def __post_init__(self):
        for arr in (self.theta, self.eps, self.eps_plus, self.eps_minus,
                    self.a_plus, self.a_minus):
            arr.setflags(write=False)


def effective_params(params: ModelParams) -> EffectiveParams:
    grid = momentum_grid(params)
    dg0 = params.detuning
    gamma = anisotropy(params)
    a = 2.0 * dg0 - grid.omega_k
    b = grid.delta_k * gamma
    theta = _folded_half_angle(b, a)
    eps = np.hypot(a, b)
    shift = 0.5 * params.ell * params.omega
    return EffectiveParams(
        params=params,
        grid=grid,
        detuning=dg0,
        anisotropy=gamma,
        omega_eff=params.J * abs(gamma),
        j_plus=0.5 * params.J * (1.0 + gamma),
        j_minus=0.5 * params.J * (1.0 - gamma),
        theta=theta,
        eps=eps,
        eps_plus=-grid.omega_k + eps + shift,
        eps_minus=-grid.omega_k - eps + shift,
        a_plus=-np.sin(theta),
        a_minus=np.cos(theta),
    )


def anisotropy(params: ModelParams) -> float:
    """gamma = (-1)^ell J_ell(4 g1 / Omega); depends on the ratio only."""
    sign = -1.0 if params.ell % 2 else 1.0
    return sign * bessel_j(params.ell, params.bessel_argument)


def _folded_half_angle(b, a):
    # Half-angle of atan2 folded by pi/2 into (-pi/4, pi/4].  tan(2 theta) is
    # pi/2-periodic in theta, so the fold preserves the defining relation while
    # picking the branch that vanishes as gamma -> 0 (no dynamics at freezing).
    theta = 0.5 * np.arctan2(b, a)
    theta = np.where(theta > 0.25 * math.pi, theta - 0.5 * math.pi, theta)
    theta = np.where(theta <= -0.25 * math.pi, theta + 0.5 * math.pi, theta)
    return theta


def bogoliubov_angle(mode, eff: EffectiveParams):
    """Bogoliubov angle for a mode or a grid, folded into (-pi/4, pi/4].

    tan(2 theta) = Delta_k gamma / (2 dg0 - omega_k); of the two half-angle
    branches this one makes |a_minus| >= |a_plus|, i.e. the '-' Floquet mode
    is the dominantly occupied one and theta itself measures how far the
    initial state sits from it.
    """
    return _folded_half_angle(
        np.asarray(mode.delta_k) * eff.anisotropy,
        2.0 * eff.detuning - np.asarray(mode.omega_k),
    )


def floquet_spectrum(mode, eff: EffectiveParams):
    """(eps, eps_plus, eps_minus) for a mode or a grid (m = 0 Floquet zone)."""
    a = 2.0 * eff.detuning - np.asarray(mode.omega_k)
    b = np.asarray(mode.delta_k) * eff.anisotropy
    eps = np.hypot(a, b)
    shift = 0.5 * eff.params.ell * eff.params.omega
    return eps, -np.asarray(mode.omega_k) + eps + shift, -np.asarray(mode.omega_k) - eps + shift


class PhaseLabel(enum.Enum):
    PM = "PM"
    FMZ = "FMZ"
    FMY = "FMY"
    ISING_CRITICAL = "ISING_CRITICAL"
    ANISOTROPIC_CRITICAL = "ANISOTROPIC_CRITICAL"


def phase_classify(params: ModelParams, tol: float = 1e-9) -> PhaseLabel:
    """Non-equilibrium phase of the driven chain at these parameters.

    Criticality wins over the bulk labels: the anisotropic line |gamma| <= tol
    inside the ferromagnetic strip, then the Ising lines |dg0| = J, then
    paramagnetic |dg0| > J versus the two ferromagnets by the sign of gamma.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    dg0 = params.detuning
    gamma = anisotropy(params)
    if abs(gamma) <= tol and abs(dg0) < params.J * (1.0 - tol):
        return PhaseLabel.ANISOTROPIC_CRITICAL
    if abs(abs(dg0) - params.J) <= tol * params.J:
        return PhaseLabel.ISING_CRITICAL
    if abs(dg0) > params.J:
        return PhaseLabel.PM
    return PhaseLabel.FMZ if gamma > 0 else PhaseLabel.FMY


@dataclass(frozen=True)
class ValidityReport:
    """High-frequency expansion health: both ratios must stay below 0.1."""

    detuning_ratio: float
    rabi_ratio: float
    valid: bool = field(init=False, default=False)

    def __post_init__(self):
        object.__setattr__(
            self, "valid", self.detuning_ratio < 0.1 and self.rabi_ratio < 0.1
        )


def validity_check(params: ModelParams) -> ValidityReport:
    return ValidityReport(
        detuning_ratio=abs(params.detuning) / params.omega,
        rabi_ratio=params.J * abs(anisotropy(params)) / params.omega,
    )
