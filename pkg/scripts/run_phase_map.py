#!/usr/bin/env python3
"""Non-equilibrium phase map over the (g0, g1) drive plane.

Each cell carries the phase label (PM / FMZ / FMY / critical lines), the
anisotropy and detuning that decide it, and the rotating-frame validity
ratios, on a row-major (g0, g1) grid.
"""

import argparse
import math

import numpy as np

from floquet_complexity.model import ModelParams
from floquet_complexity.output import write_table
from floquet_complexity.sweeps import run_phase_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None)
    ap.add_argument("--g0-halfwidth", type=float, default=2.0, help="in units of J")
    ap.add_argument("--g0-steps", type=int, default=81)
    ap.add_argument("--g1-min", type=float, default=0.25, help="in units of Omega")
    ap.add_argument("--g1-max", type=float, default=2.5, help="in units of Omega")
    ap.add_argument("--g1-steps", type=int, default=81)
    args = ap.parse_args()

    omega = math.pi
    J = 0.01 * omega
    center = 2 * omega / 4.0
    g0s = np.linspace(center - args.g0_halfwidth * J, center + args.g0_halfwidth * J,
                      args.g0_steps)
    g1s = np.linspace(args.g1_min * omega, args.g1_max * omega, args.g1_steps)
    base = ModelParams(J=J, g0=center, g1=omega, omega=omega, L=16, ell=2)
    cells = run_phase_grid(base, g0s, g1s)

    header = {"omega": omega, "J": J, "ell": 2,
              "g0_min": g0s[0], "g0_max": g0s[-1], "g0_steps": args.g0_steps,
              "g1_min": g1s[0], "g1_max": g1s[-1], "g1_steps": args.g1_steps}
    columns = ["g0", "g1", "gamma", "dg0", "phase", "valid",
               "detuning_ratio", "rabi_ratio"]
    rows = [(c.g0, c.g1, c.gamma, c.dg0, c.phase, c.valid,
             c.detuning_ratio, c.rabi_ratio) for c in cells]
    write_table(args.out, header, columns, rows)


if __name__ == "__main__":
    main()
