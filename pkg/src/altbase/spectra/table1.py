"""Conjugate bounds for alpha when the second base entry is a fixed function p(alpha)."""
from __future__ import annotations

from fractions import Fraction

import mpmath

from altbase.errors import DomainError
from altbase.exactreal import real_roots

CASES = ("scaled_positive", "scaled_negative", "monomial")


def kappa():
    """The real root of X^3 - 2X^2 + X - 1 as an exact real."""
    (root,) = real_roots((-1, 1, -2, 1))
    return root


def upsilon(n: int, alpha, dps: int = 30):
    """(alpha^(n-1) + sqrt(alpha^(2n-2) + 4)) / 2."""
    with mpmath.workdps(dps + 10):
        a = mpmath.mpmathify(alpha)
        out = (a ** (n - 1) + mpmath.sqrt(a ** (2 * n - 2) + 4)) / 2
    with mpmath.workdps(dps):
        return +out


def table1_bound(case: str, r, n: int = 1, alpha=None, dps: int = 30):
    """Bound on |lambda| for p(X) = rX (r <= 1), -rX, or rX^n."""
    r = Fraction(r)
    if r <= 0:
        raise DomainError("r must be positive")
    with mpmath.workdps(dps + 10):
        rm = mpmath.mpf(r.numerator) / r.denominator
        if case == "scaled_positive":
            if r > 1:
                raise DomainError("the golden-ratio row needs r <= 1")
            out = (1 + mpmath.sqrt(5)) / 2
        elif case == "scaled_negative":
            k = kappa().to_mpf(dps + 10)
            out = min(k / rm, k)
        elif case == "monomial":
            if n < 1:
                raise DomainError("the monomial row needs n >= 1")
            if alpha is None:
                raise DomainError("the monomial row needs alpha")
            u = upsilon(n, alpha, dps + 10)
            out = max(u, u / rm ** (mpmath.mpf(1) / (n + 1)))
        else:
            raise DomainError(f"unknown case {case!r}; expected one of {', '.join(CASES)}")
    with mpmath.workdps(dps):
        return +out
