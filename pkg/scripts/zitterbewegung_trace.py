"""Compare <alpha^k>(t) with <v^k>(t) for a superposition of energy branches.

    python3 scripts/zitterbewegung_trace.py [--pz 0.75] [--out trace.csv]

Prints the peak-to-peak spread of each column and the predicted alpha
oscillation amplitude 2|a||b| |u^dag alpha^k v|.
"""
import argparse

import numpy as np

from relspin.cli import trace_csv
from relspin.dirac import dirac_basis, dirac_spinors
from relspin.dynamics import zitterbewegung_comparison
from relspin.minkowski import MomentumContext


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--mass", type=float, default=1.0)
    ap.add_argument("--pz", type=float, default=0.75)
    ap.add_argument("--out")
    args = ap.parse_args()
    ctx = MomentumContext(args.mass, np.array([0.0, 0.0, args.pz]))
    a = b = 2 ** -0.5
    tr = zitterbewegung_comparison(ctx, (a, b), n=128)
    u, v = dirac_spinors(ctx)
    uu, vv = u[0.5] / np.linalg.norm(u[0.5]), v[0.5] / np.linalg.norm(v[0.5])
    print(f"p0 = {ctx.p0:.6g}, oscillation frequency 2 p0 = {2 * ctx.p0:.6g}")
    for k, alpha in enumerate(dirac_basis().alpha):
        amp = 2 * a * b * abs(np.vdot(uu, alpha @ vv))
        print(f"k={k + 1}  alpha ptp/2 = {np.ptp(tr.alpha[:, k]) / 2:.6f} (predicted {amp:.6f})"
              f"  velocity ptp = {np.ptp(tr.velocity[:, k]):.3e}")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(trace_csv(tr))


if __name__ == "__main__":
    main()
