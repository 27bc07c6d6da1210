#!/usr/bin/env python3
"""Sweep the charge at fixed mass and tabulate the interior fluid state.

Emits CSV with one row per charge: the extracted density and pressure at
a fixed fractional position between the horizons, their warp-weighted
forms (which recover Q^2 exactly), and the unbalanced mumu residual.
Useful for eyeballing how the charge enters the interior source terms.

    python scripts/charge_sweep.py --mass 1 --steps 20 > sweep.csv
"""

import argparse
import sys

from rnwarp import BlackHoleParams, fluid_report, horizons, warp_state

EIGHT_PI = 8.0 * 3.141592653589793


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mass", type=float, default=1.0)
    ap.add_argument("--steps", type=int, default=20, help="number of charge values")
    ap.add_argument("--max-ratio", type=float, default=0.95, help="largest Q/m")
    ap.add_argument("--position", type=float, default=0.5,
                    help="fractional position between the horizons (0, 1)")
    args = ap.parse_args(argv)

    sys.stdout.write("charge,r,rho,pressure,q2_from_rho,q2_from_pressure,res_mumu\n")
    for k in range(args.steps + 1):
        q = args.mass * args.max_ratio * k / args.steps
        p = BlackHoleParams(args.mass, q)
        hp = horizons(p)
        r = hp.r_minus + args.position * hp.width
        rep = fluid_report(p, r)
        w = warp_state(p, r)
        q2_rho = rep.rho * EIGHT_PI * w.f2 ** 4 / (w.f1 * w.f1)
        q2_p = rep.pressure * EIGHT_PI * w.f2 ** 4
        sys.stdout.write(
            f"{q!r},{r!r},{rep.rho!r},{rep.pressure!r},"
            f"{q2_rho!r},{q2_p!r},{rep.residuals.mumu!r}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
