"""Circuit complexity of the periodically driven transverse-field Ising chain.

The package maps the driven chain onto independent two-level momentum modes,
solves them both in closed form (high-frequency rotating-wave limit) and by
exact integration, and measures the Nielsen complexity of the evolved state.
Time-averaged complexity serves as the order parameter for the driven phase
diagram.
"""

from .model import (
    EffectiveParams,
    ModelParams,
    MomentumGrid,
    MomentumMode,
    PhaseLabel,
    ValidityReport,
    anisotropy,
    bogoliubov_angle,
    brillouin_momenta,
    effective_params,
    floquet_spectrum,
    momentum_grid,
    phase_classify,
    validity_check,
)
from .complexity import (
    AverageRecord,
    ComplexitySeries,
    complexity_series,
    complexity_t,
    early_slope,
    equilibration_time,
    floquet_complexity,
    ising_ground_complexity,
    sweep_derivatives,
    time_average,
)
from .dynamics import (
    DriveFrame,
    OdeSeries,
    SpinorState,
    default_time_step,
    drive_frame,
    evolve_analytic,
    evolve_ode,
    evolve_ode_series,
    floquet_mode,
    polar_decompose,
)
from .selftest import SelftestReport, SuiteResult, run_selftest
from .specfun import bessel_j, bessel_zero
from .sweeps import (
    GridCell,
    OracleRun,
    SweepRecord,
    run_average_sweep,
    run_oracle_comparison,
    run_phase_grid,
)

__version__ = "0.1.0"

__all__ = [
    "ModelParams",
    "MomentumMode",
    "MomentumGrid",
    "EffectiveParams",
    "PhaseLabel",
    "ValidityReport",
    "anisotropy",
    "bogoliubov_angle",
    "brillouin_momenta",
    "effective_params",
    "floquet_spectrum",
    "momentum_grid",
    "phase_classify",
    "validity_check",
    "DriveFrame",
    "SpinorState",
    "OdeSeries",
    "drive_frame",
    "default_time_step",
    "evolve_analytic",
    "evolve_ode",
    "evolve_ode_series",
    "floquet_mode",
    "polar_decompose",
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
    "SweepRecord",
    "GridCell",
    "OracleRun",
    "run_average_sweep",
    "run_phase_grid",
    "run_oracle_comparison",
    "SelftestReport",
    "SuiteResult",
    "run_selftest",
    "bessel_j",
    "bessel_zero",
    "__version__",
]
