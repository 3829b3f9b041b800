"""The minimal-modulus real solution z(gamma; y) of

    |Z| / (1 - |Z|) = |(2y - (2y - 2gamma - 1) Z) / (1 - Z)|,   -1 < Z < 1,

in closed form, plus a brute-force solver used as an oracle.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath

from altbase.errors import DomainError
from altbase.exactreal import FieldElement, sign_of

DEFAULT_DPS = 30


def _mp(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    if hasattr(v, "to_mpf"):
        return v.to_mpf(mpmath.mp.dps)
    return mpmath.mpf(v)


def _sign(v) -> int:
    if isinstance(v, FieldElement):
        return sign_of(v)
    return (v > 0) - (v < 0)


def _locate(gamma, y) -> str:
    """Where y sits in [gamma, gamma+1]: "lower", "upper" or "interior".

    Exact inputs (ints, Fractions, field elements) are compared exactly, so
    y = gamma+1 is recognized even when neither endpoint is a binary float.
    """
    exact = all(isinstance(v, (int, Fraction, FieldElement)) for v in (gamma, y))
    if not exact:
        gamma, y = _mp(gamma), _mp(y)
    if _sign(y) == 0:
        raise DomainError("z(gamma; y) is undefined at y = 0")
    lo, hi = _sign(y - gamma), _sign(y - gamma - 1)
    if lo < 0 or hi > 0:
        raise DomainError("y must lie in [gamma, gamma+1]")
    if lo == 0:
        return "lower"
    return "upper" if hi == 0 else "interior"


def _at_lower(y):
    # y == gamma
    if y > 0:
        return y / (y + 1)
    if y >= mpmath.mpf(-1) / 2:
        return -y
    return (y + mpmath.sqrt(y * y - 4 * y)) / 2


def _at_upper(y):
    # y == gamma + 1
    if y >= mpmath.mpf(1) / 2:
        return (mpmath.sqrt(y * y + 4 * y) - y) / 2
    if y > 0:
        return y
    return y / (y - 1)


def _interior(g, y):
    half = mpmath.mpf(1) / 2
    if g >= -half and y > 0:
        d = g - y
        return (g + 1) / (2 * d) + mpmath.sqrt(((g + 1) ** 2 + 4 * y * (y - g)) / (d * d)) / 2
    if g < -half and y > 0:
        return y / (y - g)
    if g >= -half and y < 0:
        return y / (y - g - 1)
    e = g + 1 - y
    return g / (2 * e) + mpmath.sqrt((g * g - 4 * y * e) / (e * e)) / 2


def z_bound(gamma, y, dps: int = DEFAULT_DPS):
    """|z(gamma; y)| from the closed-form case table."""
    where = _locate(gamma, y)
    with mpmath.workdps(dps + 10):
        g, yv = _mp(gamma), _mp(y)
        if where == "lower":
            out = _at_lower(yv)
        elif where == "upper":
            out = _at_upper(yv)
        else:
            out = _interior(g, yv)
    with mpmath.workdps(dps):
        return +out


def oracle_candidates(gamma, y, dps: int = DEFAULT_DPS) -> list:
    """All real solutions in (-1, 1) \\ {0} of the four sign-resolved forms."""
    where = _locate(gamma, y)
    with mpmath.workdps(dps + 10):
        g, yv = _mp(gamma), _mp(y)
        if where == "lower":
            yv = g
        elif where == "upper":
            g = yv - 1
        c = 2 * yv - 2 * g - 1
        lower_gap = mpmath.mpf(0) if where == "lower" else yv - g        # y - gamma
        upper_gap = mpmath.mpf(0) if where == "upper" else g + 1 - yv    # gamma + 1 - y

        def L(z):
            return 2 * yv - c * z

        out = []
        # 0 < z < 1: z/(1-z) = |L|/(1-z)  =>  z = +-L(z)
        if lower_gap:
            z = yv / lower_gap
            if 0 < z < 1 and L(z) > 0:
                out.append(z)
        if upper_gap:
            z = -yv / upper_gap
            if 0 < z < 1 and L(z) < 0:
                out.append(z)
        # -1 < z < 0: -z/(1+z) = |L|/(1-z)  => quadratics
        for a, b, cc, s in ((-lower_gap, g + 1, yv, 1), (upper_gap, g, yv, -1)):
            if a == 0:
                roots = [-cc / b] if b != 0 else []
            else:
                D = b * b - 4 * a * cc
                if D < 0:
                    roots = []
                else:
                    sq = mpmath.sqrt(D)
                    roots = [(-b + sq) / (2 * a), (-b - sq) / (2 * a)]
            for z in roots:
                if -1 < z < 0 and s * L(z) > 0:
                    out.append(z)
        return out


def z_bound_oracle(gamma, y, dps: int = DEFAULT_DPS):
    """Minimum |z| over the brute-force candidate solutions."""
    cands = oracle_candidates(gamma, y, dps)
    if not cands:
        raise DomainError("no real solution in (-1, 1)")
    with mpmath.workdps(dps):
        return +min(abs(z) for z in cands)
