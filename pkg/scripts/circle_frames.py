"""Render the circle pair at a few radii for gamma = 0, y = 1 and locate the contact radius."""
import argparse
from dataclasses import dataclass, field
from pathlib import Path

import mpmath

from altbase.parse import parse_expression
from altbase.spectra import circles, find_tangencies, tangency_note, to_csv, to_svg


@dataclass
class FrameConfig:
    gamma: str = "0"
    y: str = "1"
    radii: list = field(default_factory=lambda: ["1.775", "(3+sqrt(17))/4", "1.8"])
    samples: int = 400
    out_dir: Path = Path("figures")
    dps: int = 30


def run(cfg: FrameConfig) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    with mpmath.workdps(cfg.dps + 10):
        g = parse_expression(cfg.gamma).to_mpf(cfg.dps + 10)
        y = parse_expression(cfg.y).to_mpf(cfg.dps + 10)
        tangencies = find_tangencies(g, y, R_lo=0.5, R_hi=3, dps=cfg.dps)
        for t in tangencies:
            print(f"contact ({t.kind}) at R = {mpmath.nstr(t.R, 15)}, point {mpmath.nstr(t.point, 15)}")
        for k, text in enumerate(cfg.radii):
            R = parse_expression(text).to_mpf(cfg.dps + 10)
            res = circles(g, y, R, samples=cfg.samples, dps=cfg.dps)
            stem = cfg.out_dir / f"circles_{k}"
            stem.with_suffix(".svg").write_text(to_svg(res))
            stem.with_suffix(".csv").write_text(to_csv(res))
            note = tangency_note(res, tangencies)
            print(f"R = {text}: {res.count} intersection(s) -> {stem}.svg" + (f"; {note}" if note else ""))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=FrameConfig.out_dir)
    ap.add_argument("--R", nargs="*", help="radii as exact expressions")
    args = ap.parse_args()
    cfg = FrameConfig(out_dir=args.out_dir)
    if args.R:
        cfg.radii = args.R
    run(cfg)
