"""All complex roots of a polynomial by Aberth-Ehrlich simultaneous iteration.

Each approximation comes with an a posteriori inclusion radius: with the
Weierstrass corrections ``W_i = p(z_i) / (a_n * prod_{j != i} (z_i - z_j))``
every root of p lies in the union of the disks ``|z - z_i| <= n |W_i|``, and a
connected component made of k disks holds exactly k roots.  When the disks are
pairwise disjoint each one certifies a single root.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from altbase.errors import DomainError
from altbase.exactreal import poly as P


@dataclass(frozen=True)
class ComplexRoot:
    value: mpmath.mpc
    radius: mpmath.mpf

    @property
    def modulus(self):
        return abs(self.value)

    def __complex__(self):
        return complex(self.value)


def _to_mp(c):
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    return mpmath.mpmathify(c)


def _horner(coeffs_desc, z):
    acc = mpmath.mpc(0)
    for c in coeffs_desc:
        acc = acc * z + c
    return acc


def _horner_with_derivative(coeffs_desc, z):
    p = mpmath.mpc(0)
    dp = mpmath.mpc(0)
    for c in coeffs_desc:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth(coeffs_asc: Sequence, dps: int, max_iter: int = 2000) -> list:
    """Raw Aberth iteration at ``dps`` working digits; returns mpc approximations."""
    n = len(coeffs_asc) - 1
    with mpmath.workdps(dps):
        cs = [mpmath.mpmathify(_to_mp(c)) for c in coeffs_asc]
        desc = list(reversed(cs))
        lead = desc[0]
        # Initial points on a circle of radius ~ geometric mean root size.
        rad = abs(cs[0] / lead) ** (mpmath.mpf(1) / n) if cs[0] != 0 else mpmath.mpf(1)
        rad = max(min(rad, mpmath.mpf(10) ** 6), mpmath.mpf(10) ** -6)
        zs = [rad * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf("0.4")) for k in range(n)]
        tol = mpmath.mpf(10) ** (-(dps - 5))
        for _ in range(max_iter):
            biggest = mpmath.mpf(0)
            new = list(zs)
            for i in range(n):
                p, dp = _horner_with_derivative(desc, zs[i])
                if p == 0:
                    continue
                ratio = p / dp if dp != 0 else mpmath.mpc(tol)
                s = mpmath.fsum(1 / (zs[i] - zs[j]) for j in range(n) if j != i)
                denom = 1 - ratio * s
                step = ratio / denom if denom != 0 else ratio
                new[i] = zs[i] - step
                biggest = max(biggest, abs(step) / max(1, abs(zs[i])))
            zs = new
            if biggest < tol:
                break
        return zs


def inclusion_radii(coeffs_asc: Sequence, zs: Sequence, dps: int) -> list:
    n = len(zs)
    with mpmath.workdps(dps):
        cs = [_to_mp(c) for c in coeffs_asc]
        desc = list(reversed(cs))
        lead = desc[0]
        absdesc = [abs(c) for c in desc]
        eps = mpmath.mpf(10) ** (-(dps - 3))
        radii = []
        for i in range(n):
            val = abs(_horner(desc, zs[i]))
            # rounding slack for the evaluation of p(z_i)
            val += eps * abs(_horner(absdesc, abs(zs[i]))) * (n + 1)
            prod = abs(lead)
            for j in range(n):
                if j != i:
                    prod *= abs(zs[i] - zs[j])
            radii.append(n * val / prod if prod != 0 else mpmath.inf)
        return radii


def _disjoint(zs, radii) -> bool:
    n = len(zs)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(zs[i] - zs[j]) <= radii[i] + radii[j]:
                return False
    return True


def roots_of(coeffs_asc: Sequence, precision: int = 30) -> list[ComplexRoot]:
    """Certified roots of a polynomial with (real or complex) numeric coefficients."""
    coeffs = list(coeffs_asc)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise DomainError("complex_roots of the zero polynomial")
    n = len(coeffs) - 1
    if n == 0:
        return []
    dps = precision + 20 + 2 * n
    target = mpmath.mpf(10) ** (-precision)
    for _ in range(6):
        zs = aberth(coeffs, dps)
        radii = inclusion_radii(coeffs, zs, dps)
        if all(r < target for r in radii) and _disjoint(zs, radii):
            with mpmath.workdps(precision + 10):
                out = [ComplexRoot(mpmath.mpc(z), mpmath.mpf(r)) for z, r in zip(zs, radii)]
            return sorted(out, key=lambda r: (float(r.value.real), float(r.value.imag)))
        dps *= 2
    raise DomainError("root certification failed (clustered or multiple roots?)")


def complex_roots(p, precision: int = 30) -> list[ComplexRoot]:
    """All complex roots of a squarefree rational polynomial with certified radii."""
    p = P.poly(p)
    if not p:
        raise DomainError("complex_roots of the zero polynomial")
    if not P.is_squarefree(p):
        raise DomainError("complex_roots requires a squarefree polynomial")
    return roots_of(p, precision)
