"""Distance of the achieved conjugate to -phi along increasing approximation quality."""
import argparse
from dataclasses import dataclass, field

import mpmath

from altbase.spectra import build_sharpness


@dataclass
class LadderConfig:
    levels: list = field(default_factory=lambda: [(3, 8), (5, 16), (7, 32), (9, 64)])
    precision: int = 30


def run(cfg: LadderConfig) -> list:
    rows = []
    with mpmath.workdps(cfg.precision + 10):
        print("n,Q,N,irreducibility,theta,conjugate,distance")
        for n, Q in cfg.levels:
            inst = build_sharpness(n=n, Q=Q, precision=cfg.precision)
            rows.append((n, Q, inst.N, inst.distance))
            print(f"{n},{Q},{inst.N},{inst.irreducibility},{mpmath.nstr(inst.theta.to_mpf(20), 15)},"
                  f"{mpmath.nstr(mpmath.chop(inst.achieved_conjugate), 15)},{mpmath.nstr(inst.distance, 6)}")
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()
    levels = [(n, 2 ** ((n + 3) // 2)) for n in range(3, args.max_n + 1, 2)]
    run(LadderConfig(levels=levels))
