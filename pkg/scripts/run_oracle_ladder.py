#!/usr/bin/env python3
"""Closed form against RK4 truth along a drive-frequency ladder.

Doubling Omega at fixed J, detuning and g1/Omega should shrink the worst-case
deviation of the rotating-wave closed form roughly like 1/Omega; the summary
footer lists max deviation and integrator norm drift per rung.
"""

import argparse

import numpy as np

from floquet_complexity.output import write_table
from floquet_complexity.sweeps import run_oracle_comparison


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None)
    ap.add_argument("--omegas", default="50,100,200,400", help="comma list, units of J")
    ap.add_argument("--t-max", type=float, default=20.0, help="units of 1/J")
    ap.add_argument("--t-steps", type=int, default=81)
    ap.add_argument("--L", type=int, default=8)
    ap.add_argument("--dt", type=float, default=None)
    args = ap.parse_args()

    omegas = [float(s) for s in args.omegas.split(",")]
    times = np.linspace(0.0, args.t_max, args.t_steps)
    runs = run_oracle_comparison(omegas, times, J=1.0, L=args.L, ell=2,
                                 detuning=1.0, g1_ratio=1.0, dt=args.dt)

    header = {"J": 1.0, "L": args.L, "ell": 2, "detuning": 1.0, "g1_ratio": 1.0,
              "t_max": args.t_max}
    columns = ["omega", "t", "c_analytic", "c_ode", "abs_diff"]
    rows = []
    footer = {}
    for i, run in enumerate(runs):
        for j, t in enumerate(run.times):
            rows.append((run.omega, t, run.c_analytic[j], run.c_ode[j],
                         abs(run.c_analytic[j] - run.c_ode[j])))
        footer[f"max_dev_{i}"] = run.max_dev
        footer[f"norm_drift_{i}"] = run.norm_drift
    write_table(args.out, header, columns, rows, footer=footer)


if __name__ == "__main__":
    main()
