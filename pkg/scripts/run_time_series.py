#!/usr/bin/env python3
"""Complexity time series at a few detunings, plus the early-time reference.

Writes one column of C(t) per detuning and a slope_ref column equal to
2 J |gamma| / sin(pi/L) * t, the universal small-t growth all detunings share.
"""

import argparse
import math

import numpy as np

from floquet_complexity.complexity import complexity_t, early_slope, equilibration_time
from floquet_complexity.model import ModelParams, anisotropy
from floquet_complexity.output import write_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None, help="output CSV (default stdout)")
    ap.add_argument("--L", type=int, default=1000)
    ap.add_argument("--omega", type=float, default=math.pi)
    ap.add_argument("--j-frac", type=float, default=0.01, help="J/Omega")
    ap.add_argument("--dg0", default="0,1,2", help="detunings in units of J, comma list")
    ap.add_argument("--t-max", type=float, default=None, help="default 20/J")
    ap.add_argument("--t-steps", type=int, default=400)
    args = ap.parse_args()

    omega = args.omega
    J = args.j_frac * omega
    fracs = [float(s) for s in args.dg0.split(",")]
    t_max = args.t_max if args.t_max is not None else 20.0 / J
    times = np.linspace(0.0, t_max, args.t_steps)

    header = {"omega": omega, "J": J, "L": args.L, "ell": 2, "g1": omega, "t_max": t_max}
    series = []
    for i, frac in enumerate(fracs):
        p = ModelParams(J=J, g0=2 * omega / 4.0 + frac * J, g1=omega,
                        omega=omega, L=args.L, ell=2)
        series.append(complexity_t(p, times))
        header[f"dg0_{i}"] = frac * J
        header[f"t_star_{i}"] = equilibration_time(p)
    header["gamma"] = anisotropy(p)
    header["early_slope"] = early_slope(p)

    columns = ["t"] + [f"c_{i}" for i in range(len(fracs))] + ["slope_ref"]
    rows = [
        (t, *(s[j] for s in series), header["early_slope"] * t)
        for j, t in enumerate(times)
    ]
    write_table(args.out, header, columns, rows)


if __name__ == "__main__":
    main()
