#!/usr/bin/env python3
"""Fine scan of the time-averaged complexity across one Ising critical line.

The scan is centered on g0 = ell*Omega/4 + sign*J and stepped in units of
1e-3 J; the CSV carries c_bar, both Floquet-mode complexities and the
finite-difference derivative columns, so the kink and its first-derivative
jump can be plotted directly.
"""

import argparse
import math

import numpy as np

from floquet_complexity.model import ModelParams
from floquet_complexity.output import write_table
from floquet_complexity.sweeps import run_average_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None)
    ap.add_argument("--line", type=int, choices=(1, -1), default=1,
                    help="which Ising line, g0 = center + line*J")
    ap.add_argument("--halfwidth", type=int, default=35, help="steps on each side")
    ap.add_argument("--step", type=float, default=1e-3, help="grid step in units of J")
    ap.add_argument("--periods", type=int, default=1000)
    ap.add_argument("--samples-per-period", type=int, default=64)
    ap.add_argument("--L", type=int, default=1000)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    omega = math.pi
    J = 0.01 * omega
    center = 2 * omega / 4.0
    g0c = center + args.line * J
    values = g0c + np.arange(-args.halfwidth, args.halfwidth + 1) * args.step * J
    base = ModelParams(J=J, g0=center, g1=omega, omega=omega, L=args.L, ell=2)
    records = run_average_sweep(base, "g0", values, n_periods=args.periods,
                                samples_per_period=args.samples_per_period,
                                workers=args.workers)

    header = {"omega": omega, "J": J, "L": args.L, "ell": 2, "g1": omega,
              "g0_center": g0c, "step": args.step * J, "periods": args.periods,
              "samples_per_period": args.samples_per_period}
    columns = ["g0", "c_bar", "c_minus", "c_plus", "d1", "d2", "phase", "valid"]
    rows = [(r.param_value, r.c_bar, r.c_minus, r.c_plus, r.d1, r.d2,
             r.phase, r.valid) for r in records]
    write_table(args.out, header, columns, rows)


if __name__ == "__main__":
    main()
