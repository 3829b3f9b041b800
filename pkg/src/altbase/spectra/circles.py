"""The two circle families whose contact defines z(gamma; y).

C_R is the circle |Z| = R/(1+R).  A_R is the locus |2y - c Z| = R |1 - Z| with
c = 2y - 2gamma - 1, an Apollonius circle for the points P = 2y/c and 1 with
ratio k = R/|c| (a line when k = 1).  Both are symmetric about the real axis,
so their centers are real and contact points are found on that axis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from altbase.errors import DomainError

DEFAULT_DPS = 30


@dataclass(frozen=True)
class Curve:
    """A circle (center on the real axis) or, if ``line_at`` is set, the line Re Z = line_at."""

    center: mpmath.mpf
    radius: mpmath.mpf
    line_at: Optional[mpmath.mpf] = None

    @property
    def is_line(self) -> bool:
        return self.line_at is not None

    def sample(self, samples: int, span=None) -> list:
        if self.is_line:
            span = span or 2
            return [mpmath.mpc(self.line_at, -span + 2 * span * t / (samples - 1)) for t in range(samples)]
        return [self.center + self.radius * mpmath.expj(2 * mpmath.pi * t / samples) for t in range(samples)]


@dataclass(frozen=True)
class CirclesResult:
    gamma: mpmath.mpf
    y: mpmath.mpf
    R: mpmath.mpf
    A: Curve
    C: Curve
    count: int
    intersections: tuple
    A_points: tuple
    C_points: tuple

    @property
    def degenerate(self) -> bool:
        return self.A.is_line


def _mp(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    if hasattr(v, "to_mpf"):
        return v.to_mpf(mpmath.mp.dps)
    return mpmath.mpf(v)


def circle_C(R) -> Curve:
    return Curve(mpmath.mpf(0), R / (1 + R))


def circle_A(gamma, y, R) -> Curve:
    c = 2 * y - 2 * gamma - 1
    if c == 0:
        return Curve(mpmath.mpf(1), 2 * abs(y) / R)
    P = 2 * y / c
    k = R / abs(c)
    if k == 1:
        return Curve(mpmath.mpf(0), mpmath.inf, line_at=(P + 1) / 2)
    center = (P - k * k) / (1 - k * k)
    radius = k * abs(P - 1) / abs(1 - k * k)
    return Curve(center, radius)


def _tol():
    return mpmath.mpf(10) ** (-(mpmath.mp.dps - 8))


def intersections(A: Curve, C: Curve) -> tuple[int, tuple]:
    """Number of common points (0, 1 or 2) and the points themselves."""
    rc = C.radius
    tol = _tol()
    if A.is_line:
        t = A.line_at
        if abs(abs(t) - rc) <= tol:
            return 1, (mpmath.mpc(t, 0),)
        if abs(t) > rc:
            return 0, ()
        h = mpmath.sqrt(rc * rc - t * t)
        return 2, (mpmath.mpc(t, h), mpmath.mpc(t, -h))
    d = abs(A.center - C.center)
    ra = A.radius
    if d <= tol and abs(ra - rc) <= tol:
        raise DomainError("the circles coincide")
    outer, inner = d - (ra + rc), d - abs(ra - rc)
    if abs(outer) <= tol or abs(inner) <= tol:
        # tangency: the contact point lies on the line of centers (the real axis)
        if d <= tol:
            return 0, ()
        u = (A.center - C.center) / d
        if abs(outer) <= tol:
            p = C.center + rc * u
        else:
            p = C.center + rc * u if rc > ra else C.center - rc * u
        return 1, (mpmath.mpc(p, 0),)
    if outer > 0 or inner < 0:
        return 0, ()
    # radical line: Re Z = a measured from C's center toward A's
    a = (d * d + rc * rc - ra * ra) / (2 * d)
    h = mpmath.sqrt(max(rc * rc - a * a, 0))
    u = 1 if A.center >= C.center else -1
    x0 = C.center + u * a
    return 2, (mpmath.mpc(x0, h), mpmath.mpc(x0, -h))


def circles(gamma, y, R, samples: int = 400, dps: int = DEFAULT_DPS) -> CirclesResult:
    with mpmath.workdps(dps + 10):
        g, yv, Rv = _mp(gamma), _mp(y), _mp(R)
        if Rv <= 0:
            raise DomainError("R must be positive")
        if samples < 3:
            raise DomainError("need at least 3 samples")
        A = circle_A(g, yv, Rv)
        C = circle_C(Rv)
        count, pts = intersections(A, C)
        return CirclesResult(g, yv, Rv, A, C, count, pts, tuple(A.sample(samples)), tuple(C.sample(samples)))


@dataclass(frozen=True)
class Tangency:
    R: mpmath.mpf
    kind: str  # "internal" or "external"
    point: mpmath.mpc


def _gaps(g, y, R):
    A, C = circle_A(g, y, R), circle_C(R)
    if A.is_line:
        return None
    d = abs(A.center)
    return d - (A.radius + C.radius), d - abs(A.radius - C.radius)


def find_tangencies(gamma, y, R_lo=0.01, R_hi=5, steps: int = 4000, dps: int = DEFAULT_DPS) -> list[Tangency]:
    """All R in [R_lo, R_hi] where A_R and C_R touch, located by sign changes and bisection."""
    with mpmath.workdps(dps + 10):
        g, yv = _mp(gamma), _mp(y)
        lo, hi = _mp(R_lo), _mp(R_hi)
        grid = [lo + (hi - lo) * t / steps for t in range(steps + 1)]
        out = []
        for kind, idx in (("external", 0), ("internal", 1)):
            prev = None
            for R in grid:
                gp = _gaps(g, yv, R)
                if gp is None:
                    prev = None
                    continue
                if prev is not None and prev[1] * gp[idx] < 0:
                    a, b = prev[0], R
                    fa = prev[1]
                    for _ in range(3 * dps + 40):
                        mid = (a + b) / 2
                        gm = _gaps(g, yv, mid)
                        if gm is None:
                            break
                        if fa * gm[idx] <= 0:
                            b = mid
                        else:
                            a, fa = mid, gm[idx]
                    Rt = (a + b) / 2
                    gt = _gaps(g, yv, Rt)
                    if gt is None or abs(gt[idx]) > mpmath.mpf(10) ** (-dps // 2):
                        prev = (R, gp[idx])
                        continue  # sign change across a pole, not a contact
                    res = circles(g, yv, Rt, samples=3, dps=dps)
                    pt = res.intersections[0] if res.intersections else mpmath.mpc(mpmath.nan)
                    out.append(Tangency(Rt, kind, pt))
                prev = (R, gp[idx])
        return sorted(out, key=lambda t: t.R)


def tangency_note(result: CirclesResult, tangencies: list[Tangency]) -> str:
    """Say when ``result.R`` is not a contact radius and where the nearest contact is ("" otherwise)."""
    if not tangencies or result.count == 1:
        return ""
    nearest = min(tangencies, key=lambda t: abs(t.R - result.R))
    return (f"R = {mpmath.nstr(result.R, 12)} is not a tangency; nearest tangency ({nearest.kind}) "
            f"at R = {mpmath.nstr(nearest.R, 12)}")


def to_csv(result: CirclesResult) -> str:
    lines = ["re,im,curve"]
    for curve, pts in (("A", result.A_points), ("C", result.C_points)):
        for z in pts:
            lines.append(f"{mpmath.nstr(z.real, 17)},{mpmath.nstr(z.imag, 17)},{curve}")
    return "\n".join(lines) + "\n"


def to_svg(result: CirclesResult, size: int = 800, extent: float = 2.0) -> str:
    """Both curves, the unit circle, axes and intersection markers on a fixed square canvas."""
    scale = size / (2 * extent)

    def px(z):
        return size / 2 + float(z.real) * scale, size / 2 - float(z.imag) * scale

    def circle(cx, r, color, width=2, dash=None):
        x, yy = px(mpmath.mpc(cx, 0))
        d = f' stroke-dasharray="{dash}"' if dash else ""
        return f'<circle cx="{x:.3f}" cy="{yy:.3f}" r="{float(r) * scale:.3f}" fill="none" stroke="{color}" stroke-width="{width}"{d}/>'

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="0" y1="{size / 2}" x2="{size}" y2="{size / 2}" stroke="#999" stroke-width="1"/>',
        f'<line x1="{size / 2}" y1="0" x2="{size / 2}" y2="{size}" stroke="#999" stroke-width="1"/>',
        circle(0, 1, "#bbb", 1, "4 4"),
        circle(result.C.center, result.C.radius, "blue"),
    ]
    if result.A.is_line:
        x, _ = px(mpmath.mpc(result.A.line_at, 0))
        parts.append(f'<line x1="{x:.3f}" y1="0" x2="{x:.3f}" y2="{size}" stroke="red" stroke-width="2"/>')
    else:
        parts.append(circle(result.A.center, result.A.radius, "red"))
    for z in result.intersections:
        x, yy = px(z)
        parts.append(f'<circle cx="{x:.3f}" cy="{yy:.3f}" r="5" fill="black"/>')
    label = (f"gamma={mpmath.nstr(result.gamma, 6)} y={mpmath.nstr(result.y, 6)} "
             f"R={mpmath.nstr(result.R, 8)} intersections={result.count}")
    parts.append(f'<text x="10" y="20" font-family="monospace" font-size="14">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
