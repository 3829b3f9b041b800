"""Closed-form |z(gamma; y)| against the brute-force candidate solver on a grid."""
import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from altbase.spectra import z_bound, z_bound_oracle


@dataclass
class GridConfig:
    gamma_steps: int = 20
    y_steps: int = 10
    gamma_lo: Fraction = Fraction(-2)
    gamma_hi: Fraction = Fraction(1)
    dps: int = 30


def grid(cfg: GridConfig):
    for a in range(cfg.gamma_steps):
        g = cfg.gamma_lo + (cfg.gamma_hi - cfg.gamma_lo) * Fraction(a, cfg.gamma_steps - 1)
        for b in range(1, cfg.y_steps + 1):
            y = g + Fraction(b, cfg.y_steps + 1)
            if y != 0:
                yield g, y


def run(cfg: GridConfig, out=sys.stdout) -> mpmath.mpf:
    writer = csv.writer(out)
    writer.writerow(["gamma", "y", "z_closed", "z_oracle", "abs_diff"])
    worst = mpmath.mpf(0)
    with mpmath.workdps(cfg.dps + 10):
        for g, y in grid(cfg):
            zc, zo = z_bound(g, y, dps=cfg.dps), z_bound_oracle(g, y, dps=cfg.dps)
            worst = max(worst, abs(zc - zo))
            writer.writerow([str(g), str(y), mpmath.nstr(zc, 17), mpmath.nstr(zo, 17), mpmath.nstr(abs(zc - zo), 3)])
    print(f"max difference {mpmath.nstr(worst, 3)}", file=sys.stderr)
    return worst


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gamma-steps", type=int, default=20)
    ap.add_argument("--y-steps", type=int, default=10)
    args = ap.parse_args()
    run(GridConfig(gamma_steps=args.gamma_steps, y_steps=args.y_steps))
