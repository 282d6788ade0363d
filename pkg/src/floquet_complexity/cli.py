"""Command-line surface: evolve, average, phase-diagram, oracle, selftest.

Configuration comes from an optional JSON file (--config) plus flags; flags
win.  Every command writes one CSV table (--out, default stdout) whose
'#'-header records the resolved configuration, so identical configurations
produce byte-identical files.

Exit codes: 0 success, 1 usage or configuration error, 2 numerical-invariant
failure (selftest).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .complexity import complexity_t, early_slope, equilibration_time
from .model import ModelParams, anisotropy, validity_check
from .output import write_table
from .selftest import run_selftest
from .sweeps import run_average_sweep, run_oracle_comparison, run_phase_grid

__all__ = ["RunConfig", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved settings for one command invocation."""

    command: str
    out: str | None
    workers: int
    J: float
    g0_values: tuple[float, ...]
    g1: float
    omega_values: tuple[float, ...]
    L: int
    ell: int
    t_max: float | None = None
    t_steps: int | None = None
    sweep_axis: str | None = None
    sweep_min: float | None = None
    sweep_max: float | None = None
    sweep_steps: int | None = None
    periods: int | None = None
    samples_per_period: int | None = None
    dt: float | None = None
    detuning: float | None = None
    g1_ratio: float | None = None
    g0_min: float | None = None
    g0_max: float | None = None
    g0_steps: int | None = None
    g1_min: float | None = None
    g1_max: float | None = None
    g1_steps: int | None = None
    seed: int | None = None
    inject_fault: str | None = None

    @property
    def omega(self) -> float:
        return self.omega_values[0]


def _cast_float(key, value) -> float:
    if isinstance(value, bool):
        raise ConfigError(f"{key} must be a number, got {value!r}")
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} must be a number, got {value!r}") from None
    if not math.isfinite(out):
        raise ConfigError(f"{key} must be finite, got {value!r}")
    return out


def _cast_int(key, value) -> int:
    if isinstance(value, bool):
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    raise ConfigError(f"{key} must be an integer, got {value!r}")


def _cast_float_list(key, value) -> tuple[float, ...]:
    if isinstance(value, str):
        parts = [s for s in value.split(",") if s.strip()]
        return tuple(_cast_float(key, s) for s in parts)
    if isinstance(value, (list, tuple)):
        return tuple(_cast_float(key, v) for v in value)
    return (_cast_float(key, value),)


class _Settings:
    """Flag-over-config-over-default lookup with unknown-key detection."""

    def __init__(self, ns: argparse.Namespace, config: dict):
        self.flags = {k: v for k, v in vars(ns).items() if k not in ("command", "config")}
        self.config = config
        self.seen = set()

    def raw(self, key):
        self.seen.add(key)
        flag = self.flags.get(key)
        if flag is not None:
            return flag
        return self.config.get(key)

    def get_float(self, key, default):
        value = self.raw(key)
        return default if value is None else _cast_float(key, value)

    def get_int(self, key, default):
        value = self.raw(key)
        return default if value is None else _cast_int(key, value)

    def get_str(self, key, default):
        value = self.raw(key)
        if value is None:
            return default
        if not isinstance(value, str):
            raise ConfigError(f"{key} must be a string, got {value!r}")
        return value

    def get_float_list(self, key, default):
        value = self.raw(key)
        return default if value is None else _cast_float_list(key, value)

    def get_optional_float(self, key):
        value = self.raw(key)
        return None if value is None else _cast_float(key, value)

    def reject_unknown(self):
        unknown = sorted(set(self.config) - self.seen)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")


def _common(settings: _Settings, command: str):
    out = settings.get_str("out", None)
    workers = settings.get_int("workers", 1)
    if workers < 1:
        raise ConfigError(f"workers must be >= 1, got {workers}")
    omega = settings.get_float("omega", math.pi)
    ell = settings.get_int("ell", 2)
    J = settings.get_float("J", 0.01 * omega)
    g1 = settings.get_float("g1", omega)
    return command, out, workers, omega, ell, J, g1


def build_config(command: str, ns: argparse.Namespace, config: dict) -> RunConfig:
    settings = _Settings(ns, config)
    if command == "evolve":
        cfg = _build_evolve(settings)
    elif command == "average":
        cfg = _build_average(settings)
    elif command == "phase-diagram":
        cfg = _build_phase_diagram(settings)
    elif command == "oracle":
        cfg = _build_oracle(settings)
    elif command == "selftest":
        cfg = _build_selftest(settings)
    else:  # pragma: no cover - argparse restricts choices
        raise ConfigError(f"unknown command {command!r}")
    settings.reject_unknown()
    return cfg


def _build_evolve(s: _Settings) -> RunConfig:
    command, out, workers, omega, ell, J, g1 = _common(s, "evolve")
    center = ell * omega / 4.0
    g0_values = s.get_float_list("g0", (center, center + J, center + 2.0 * J))
    L = s.get_int("L", 1000)
    t_max = s.get_float("t_max", 20.0 / J)
    t_steps = s.get_int("t_steps", 400)
    if t_max <= 0:
        raise ConfigError(f"t_max must be positive, got {t_max}")
    if t_steps < 2:
        raise ConfigError(f"t_steps must be >= 2, got {t_steps}")
    if not g0_values:
        raise ConfigError("g0 list must not be empty")
    return RunConfig(
        command=command, out=out, workers=workers, J=J, g0_values=g0_values, g1=g1,
        omega_values=(omega,), L=L, ell=ell, t_max=t_max, t_steps=t_steps,
    )


def _build_average(s: _Settings) -> RunConfig:
    command, out, workers, omega, ell, J, g1 = _common(s, "average")
    center = ell * omega / 4.0
    g0_values = s.get_float_list("g0", (center,))
    if len(g0_values) != 1:
        raise ConfigError("average takes a single g0")
    L = s.get_int("L", 1000)
    axis = s.get_str("sweep_axis", "g0")
    if axis not in ("g0", "g1"):
        raise ConfigError(f"sweep-axis must be g0 or g1, got {axis!r}")
    if axis == "g0":
        lo_default, hi_default = center - 2.0 * J, center + 2.0 * J
    else:
        lo_default, hi_default = 0.5 * omega, 2.3 * omega
    sweep_min = s.get_float("sweep_min", lo_default)
    sweep_max = s.get_float("sweep_max", hi_default)
    sweep_steps = s.get_int("sweep_steps", 81)
    if sweep_steps < 1:
        raise ConfigError(f"sweep-steps must be >= 1, got {sweep_steps}")
    if sweep_steps > 1 and not (sweep_max > sweep_min):
        raise ConfigError("sweep range is empty")
    periods = s.get_int("periods", 1000)
    spp = s.get_int("samples_per_period", 64)
    if periods < 1:
        raise ConfigError(f"periods must be >= 1, got {periods}")
    if spp < 4:
        raise ConfigError(f"samples-per-period must be >= 4, got {spp}")
    return RunConfig(
        command=command, out=out, workers=workers, J=J, g0_values=g0_values, g1=g1,
        omega_values=(omega,), L=L, ell=ell, sweep_axis=axis, sweep_min=sweep_min,
        sweep_max=sweep_max, sweep_steps=sweep_steps, periods=periods,
        samples_per_period=spp,
    )


def _build_phase_diagram(s: _Settings) -> RunConfig:
    command, out, workers, omega, ell, J, g1 = _common(s, "phase-diagram")
    center = ell * omega / 4.0
    g0_values = s.get_float_list("g0", (center,))
    L = s.get_int("L", 1000)
    g0_min = s.get_float("g0_min", center - 2.0 * J)
    g0_max = s.get_float("g0_max", center + 2.0 * J)
    g0_steps = s.get_int("g0_steps", 41)
    g1_min = s.get_float("g1_min", 0.25 * omega)
    g1_max = s.get_float("g1_max", 2.5 * omega)
    g1_steps = s.get_int("g1_steps", 41)
    for name, lo, hi, steps in (
        ("g0", g0_min, g0_max, g0_steps),
        ("g1", g1_min, g1_max, g1_steps),
    ):
        if steps < 2:
            raise ConfigError(f"{name}-steps must be >= 2 for a grid, got {steps}")
        if not (hi > lo):
            raise ConfigError(f"{name} range is empty")
    return RunConfig(
        command=command, out=out, workers=workers, J=J, g0_values=g0_values, g1=g1,
        omega_values=(omega,), L=L, ell=ell, g0_min=g0_min, g0_max=g0_max,
        g0_steps=g0_steps, g1_min=g1_min, g1_max=g1_max, g1_steps=g1_steps,
    )


def _build_oracle(s: _Settings) -> RunConfig:
    out = s.get_str("out", None)
    workers = s.get_int("workers", 1)
    if workers < 1:
        raise ConfigError(f"workers must be >= 1, got {workers}")
    omega_values = s.get_float_list("omega", (50.0, 100.0, 200.0, 400.0))
    if not omega_values:
        raise ConfigError("omega list must not be empty")
    ell = s.get_int("ell", 2)
    J = s.get_float("J", 1.0)
    L = s.get_int("L", 8)
    if L > 32:
        raise ConfigError(f"oracle runs are capped at L = 32, got {L}")
    detuning = s.get_float("detuning", 1.0)
    g1_ratio = s.get_float("g1_ratio", 1.0)
    t_max = s.get_float("t_max", 20.0)
    t_steps = s.get_int("t_steps", 81)
    if t_max <= 0 or t_steps < 2:
        raise ConfigError("oracle needs t_max > 0 and t_steps >= 2")
    dt = s.get_optional_float("dt")
    if dt is not None and dt <= 0:
        raise ConfigError(f"dt must be positive, got {dt}")
    g1 = g1_ratio * omega_values[0]
    return RunConfig(
        command="oracle", out=out, workers=workers, J=J,
        g0_values=(ell * omega_values[0] / 4.0 + detuning,), g1=g1,
        omega_values=omega_values, L=L, ell=ell, t_max=t_max, t_steps=t_steps,
        dt=dt, detuning=detuning, g1_ratio=g1_ratio,
    )


def _build_selftest(s: _Settings) -> RunConfig:
    out = s.get_str("out", None)
    seed = s.get_int("seed", 1234)
    fault = s.get_str("inject_fault", None)
    return RunConfig(
        command="selftest", out=out, workers=1, J=1.0, g0_values=(0.0,), g1=0.0,
        omega_values=(1.0,), L=2, ell=0, seed=seed, inject_fault=fault,
    )


def _model_for(cfg: RunConfig, g0: float, g1: float | None = None, omega: float | None = None):
    return ModelParams(
        J=cfg.J,
        g0=g0,
        g1=cfg.g1 if g1 is None else g1,
        omega=cfg.omega if omega is None else omega,
        L=cfg.L,
        ell=cfg.ell,
    )


def cmd_evolve(cfg: RunConfig) -> int:
    times = np.linspace(0.0, cfg.t_max, cfg.t_steps)
    header = {
        "command": "evolve", "J": cfg.J, "g1": cfg.g1, "omega": cfg.omega,
        "L": cfg.L, "ell": cfg.ell, "t_max": cfg.t_max, "t_steps": cfg.t_steps,
        "g0_list": ",".join(f"{v:.16e}" for v in cfg.g0_values),
    }
    series = []
    slope = None
    for i, g0 in enumerate(cfg.g0_values):
        p = _model_for(cfg, g0)
        report = validity_check(p)
        header[f"g0_{i}"] = g0
        header[f"detuning_{i}"] = p.detuning
        header[f"t_star_{i}"] = equilibration_time(p)
        header[f"valid_{i}"] = report.valid
        header[f"detuning_ratio_{i}"] = report.detuning_ratio
        header[f"rabi_ratio_{i}"] = report.rabi_ratio
        series.append(complexity_t(p, times))
        if slope is None:
            slope = early_slope(p)
            header["gamma"] = anisotropy(p)
            header["early_slope"] = slope
    columns = ["t"] + [f"c_{i}" for i in range(len(series))] + ["slope_ref"]
    rows = (
        (times[j], *(c[j] for c in series), slope * times[j]) for j in range(len(times))
    )
    write_table(cfg.out, header, columns, rows)
    return EXIT_OK


def cmd_average(cfg: RunConfig) -> int:
    values = np.linspace(cfg.sweep_min, cfg.sweep_max, cfg.sweep_steps)
    base = _model_for(cfg, cfg.g0_values[0])
    records = run_average_sweep(
        base,
        cfg.sweep_axis,
        values,
        n_periods=cfg.periods,
        samples_per_period=cfg.samples_per_period,
        workers=cfg.workers,
    )
    header = {
        "command": "average", "J": cfg.J, "g0": cfg.g0_values[0], "g1": cfg.g1,
        "omega": cfg.omega, "L": cfg.L, "ell": cfg.ell, "sweep_axis": cfg.sweep_axis,
        "sweep_min": cfg.sweep_min, "sweep_max": cfg.sweep_max,
        "sweep_steps": cfg.sweep_steps, "periods": cfg.periods,
        "samples_per_period": cfg.samples_per_period,
    }
    columns = [
        cfg.sweep_axis, "c_bar", "c_minus", "c_plus", "d1", "d2",
        "phase", "valid", "detuning_ratio", "rabi_ratio",
    ]
    rows = (
        (
            r.param_value, r.c_bar, r.c_minus, r.c_plus, r.d1, r.d2,
            r.phase, r.valid, r.detuning_ratio, r.rabi_ratio,
        )
        for r in records
    )
    write_table(cfg.out, header, columns, rows)
    return EXIT_OK


def cmd_phase_diagram(cfg: RunConfig) -> int:
    g0s = np.linspace(cfg.g0_min, cfg.g0_max, cfg.g0_steps)
    g1s = np.linspace(cfg.g1_min, cfg.g1_max, cfg.g1_steps)
    base = _model_for(cfg, cfg.g0_values[0])
    cells = run_phase_grid(base, g0s, g1s)
    header = {
        "command": "phase-diagram", "J": cfg.J, "omega": cfg.omega, "L": cfg.L,
        "ell": cfg.ell, "g0_min": cfg.g0_min, "g0_max": cfg.g0_max,
        "g0_steps": cfg.g0_steps, "g1_min": cfg.g1_min, "g1_max": cfg.g1_max,
        "g1_steps": cfg.g1_steps,
    }
    columns = ["g0", "g1", "gamma", "dg0", "phase", "valid", "detuning_ratio", "rabi_ratio"]
    rows = (
        (c.g0, c.g1, c.gamma, c.dg0, c.phase, c.valid, c.detuning_ratio, c.rabi_ratio)
        for c in cells
    )
    write_table(cfg.out, header, columns, rows)
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    times = np.linspace(0.0, cfg.t_max, cfg.t_steps)
    runs = run_oracle_comparison(
        cfg.omega_values,
        times,
        J=cfg.J,
        L=cfg.L,
        ell=cfg.ell,
        detuning=cfg.detuning,
        g1_ratio=cfg.g1_ratio,
        dt=cfg.dt,
    )
    header = {
        "command": "oracle", "J": cfg.J, "L": cfg.L, "ell": cfg.ell,
        "detuning": cfg.detuning, "g1_ratio": cfg.g1_ratio, "t_max": cfg.t_max,
        "t_steps": cfg.t_steps, "dt": math.nan if cfg.dt is None else cfg.dt,
        "omega_list": ",".join(f"{v:.16e}" for v in cfg.omega_values),
    }
    footer = {}
    for i, run in enumerate(runs):
        p = ModelParams(
            J=cfg.J, g0=cfg.ell * run.omega / 4.0 + cfg.detuning,
            g1=cfg.g1_ratio * run.omega, omega=run.omega, L=cfg.L, ell=cfg.ell,
        )
        report = validity_check(p)
        footer[f"max_dev_{i}"] = run.max_dev
        footer[f"norm_drift_{i}"] = run.norm_drift
        footer[f"valid_{i}"] = report.valid
        footer[f"detuning_ratio_{i}"] = report.detuning_ratio
        footer[f"rabi_ratio_{i}"] = report.rabi_ratio
    columns = ["omega", "t", "c_analytic", "c_ode", "abs_diff"]
    rows = (
        (run.omega, run.times[j], run.c_analytic[j], run.c_ode[j],
         abs(run.c_analytic[j] - run.c_ode[j]))
        for run in runs
        for j in range(len(run.times))
    )
    write_table(cfg.out, header, columns, rows, footer=footer)
    return EXIT_OK


def cmd_selftest(cfg: RunConfig) -> int:
    report = run_selftest(seed=cfg.seed, fault=cfg.inject_fault)
    lines = []
    for suite in report.suites:
        lines.append(f"{suite.name}: {suite.passed} passed, {suite.failed} failed")
        for failure in suite.failures:
            lines.append(f"    {failure}")
    lines.append(f"selftest: {'PASS' if report.ok else 'FAIL'} (seed {cfg.seed})")
    text = "\n".join(lines) + "\n"
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    return EXIT_OK if report.ok else EXIT_INVARIANT


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file; flags override it")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--workers", help="process count for sweeps (default 1)")
    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--J", help="exchange coupling (default 0.01*omega)")
    model.add_argument("--g0", help="static field; comma list for evolve")
    model.add_argument("--g1", help="drive amplitude (default omega)")
    model.add_argument("--omega", help="drive frequency (default pi); comma list for oracle")
    model.add_argument("--L", help="chain length, even (default 1000)")
    model.add_argument("--ell", help="resonance index (default 2)")

    parser = _Parser(prog="floquet-complexity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_ev = sub.add_parser("evolve", parents=[common, model], help="time series of C(t)")
    p_ev.add_argument("--t-max", dest="t_max", help="time window end (default 20/J)")
    p_ev.add_argument("--t-steps", dest="t_steps", help="sample count (default 400)")

    p_av = sub.add_parser("average", parents=[common, model], help="sweep of C-bar")
    p_av.add_argument("--sweep-axis", dest="sweep_axis", help="g0 or g1 (default g0)")
    p_av.add_argument("--sweep-min", dest="sweep_min", help="sweep start")
    p_av.add_argument("--sweep-max", dest="sweep_max", help="sweep end")
    p_av.add_argument("--sweep-steps", dest="sweep_steps", help="grid size (default 81)")
    p_av.add_argument("--periods", help="averaging horizon in periods (default 1000)")
    p_av.add_argument(
        "--samples-per-period", dest="samples_per_period", help="samples per period (default 64)"
    )

    p_ph = sub.add_parser("phase-diagram", parents=[common, model], help="(g0, g1) phase grid")
    p_ph.add_argument("--g0-min", dest="g0_min")
    p_ph.add_argument("--g0-max", dest="g0_max")
    p_ph.add_argument("--g0-steps", dest="g0_steps")
    p_ph.add_argument("--g1-min", dest="g1_min")
    p_ph.add_argument("--g1-max", dest="g1_max")
    p_ph.add_argument("--g1-steps", dest="g1_steps")

    p_or = sub.add_parser("oracle", parents=[common, model], help="closed form vs exact ODE")
    p_or.add_argument("--t-max", dest="t_max", help="time window end (default 20)")
    p_or.add_argument("--t-steps", dest="t_steps", help="sample count (default 81)")
    p_or.add_argument("--dt", help="RK4 step (default: auto from drift budget)")
    p_or.add_argument("--detuning", help="g0 offset from resonance (default 1.0)")
    p_or.add_argument("--g1-ratio", dest="g1_ratio", help="g1/omega along the ladder (default 1.0)")

    p_st = sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    p_st.add_argument("--seed", help="RNG seed for sampled checks (default 1234)")
    p_st.add_argument(
        "--inject-fault", dest="inject_fault",
        help="negative-control fault hook (supported: gamma-sign)",
    )
    return parser


_HANDLERS = {
    "evolve": cmd_evolve,
    "average": cmd_average,
    "phase-diagram": cmd_phase_diagram,
    "oracle": cmd_oracle,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = {}
    if getattr(ns, "config", None):
        try:
            with open(ns.config, "r", encoding="utf-8") as handle:
                config = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config {ns.config}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if not isinstance(config, dict):
            print("error: config file must hold a JSON object", file=sys.stderr)
            return EXIT_USAGE
    try:
        cfg = build_config(ns.command, ns, config)
        return _HANDLERS[ns.command](cfg)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
