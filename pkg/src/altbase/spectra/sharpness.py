"""Semi-Parry pairs (theta, beta) with a conjugate of theta near a prescribed point.

Given rational M_0 = Q > M_j > 0 approximating Q*d_j for a seed series
f(w) = 1 + sum d_j w^j, the largest real root theta of

    F_N(Y) = Y^(n+1) - N * sum_{j=0}^{n} M_j beta^(-j) Y^(n-j)

has d(theta, beta; 1) = (N M_0, 0, N M_1, 0, ..., N M_n, 0, 0, ...), and for
large N a conjugate of theta approaches 1/(beta * delta) where f(delta) = 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import mpmath
import sympy

from altbase.base import make_base
from altbase.errors import DomainError, HypothesisViolated
from altbase.exactreal import RealAlgebraic, make_context, real_roots, roots_of, sign_of
from altbase.exactreal import poly as P
from altbase.expansion import DigitWord, ExpansionRecord, greedy_expand

IRREDUCIBLE = "irreducible-by-eisenstein"
INCONCLUSIVE = "inconclusive"
UNVERIFIED = "irreducibility unverified"


@dataclass(frozen=True)
class Seed:
    """Digits d_j in [0, 1] (j >= 1; d_0 = 1) and the root delta0 of sum d_j w^j inside the unit disk."""

    name: str
    digit: Callable[[int], Fraction]
    delta0: Optional[Callable[[int], mpmath.mpc]] = None

    def root(self, n: int, dps: int):
        if self.delta0 is not None:
            with mpmath.workdps(dps):
                return mpmath.mpc(self.delta0(dps))
        coeffs = [Fraction(1)] + [Fraction(self.digit(j)) for j in range(1, n + 1)]
        return min((r.value for r in roots_of(coeffs, dps)), key=abs)


def _minus_inverse_phi(dps):
    with mpmath.workdps(dps):
        return -(mpmath.sqrt(5) - 1) / 2


# f(w) = 1 + w + w^3 + w^5 + ... = 1 + w/(1 - w^2), vanishing at w = -1/phi.
ALTERNATING = Seed("1 + sum z^(2j-1)", lambda j: Fraction(j % 2), _minus_inverse_phi)


def eisenstein_check(p: Sequence[int], N: int) -> str:
    """Eisenstein's criterion at the prime N for an integer polynomial (ascending)."""
    p = [int(c) for c in P.trim(tuple(Fraction(c) for c in p))]
    if len(p) < 2 or not sympy.isprime(N):
        return INCONCLUSIVE
    if p[-1] % N == 0 or any(c % N for c in p[:-1]) or p[0] % (N * N) == 0:
        return INCONCLUSIVE
    return IRREDUCIBLE


def _as_real(v) -> RealAlgebraic:
    if isinstance(v, RealAlgebraic):
        return v
    return RealAlgebraic.rational(Fraction(v))


def approximate_digits(seed: Seed, beta: RealAlgebraic, Q: int, n: int) -> tuple:
    """M_0 = Q and M_j = Q*d_j rounded into the admissible range (1 <= M_j < Q min(1, beta))."""
    if Q < 2:
        raise DomainError("Q must be at least 2 (or pass M explicitly)")
    if beta >= 1:
        cap, upper = Fraction(1), Q - 1
    else:
        b = beta.minimal()
        if not b.is_rational:
            raise DomainError("0 < beta < 1 requires a rational beta")
        cap = b.lo
        upper = math.ceil(Q * cap) - 1
        if upper < 1:
            raise DomainError("Q * beta must exceed 1")
    out = [Q]
    for j in range(1, n + 1):
        t = Fraction(seed.digit(j)) * cap * Q
        out.append(min(max(round(t), 1), upper))
    return tuple(out)


def f_n_coefficients(beta: RealAlgebraic, M: Sequence[int], N: int) -> list:
    """F_N as ascending coefficients in the field of beta (FieldElements)."""
    base_ctx = make_context([beta])
    b = base_ctx.element_of(beta)
    n = len(M) - 1
    coeffs = [base_ctx.zero() for _ in range(n + 2)]
    coeffs[n + 1] = base_ctx.one()
    for j, Mj in enumerate(M):
        coeffs[n - j] = -(b ** (-j) if j else base_ctx.one()) * (N * Mj)
    return coeffs


def _cleared_integer_poly(coeffs) -> tuple:
    return P.primitive_int(tuple(c.as_fraction() for c in coeffs))


def _theta(beta: RealAlgebraic, coeffs, dps: int) -> tuple[RealAlgebraic, tuple, str]:
    """Largest real root of F_N as an exact real, the rational polynomial used and its irreducibility label."""
    if all(c.is_rational() for c in coeffs):
        p = _cleared_integer_poly(coeffs)
        return real_roots(p)[-1], p, ""
    # beta irrational: use the norm of beta^n F_N(Y) down to Q.
    mb = beta.minimal().poly
    ctx = coeffs[0].context
    bgen = ctx.element_of(beta)
    n = len(coeffs) - 2
    scaled = [c * bgen ** n for c in coeffs]
    # write each coefficient as a polynomial in beta
    deg = ctx.degree
    basis = [bgen ** k for k in range(deg)]
    from altbase.exactreal.field import solve_dependency

    in_b = []
    for c in scaled:
        sol = solve_dependency([v.vector for v in basis], c.vector)
        in_b.append(tuple(sol))
    norm = P.resultant_in(in_b, mb)
    with mpmath.workdps(dps + 20):
        num = [c.to_mpf(dps + 20) for c in coeffs]
        approx = max((r.value.real for r in roots_of(num, dps) if abs(r.value.imag) <= r.radius), default=None)
    if approx is None:
        raise DomainError("F_N has no real root")
    cands = real_roots(norm)
    bits = 16
    while True:
        hit = [r for r in cands if r.interval(bits)[0] - Fraction(1, 1 << bits) <= Fraction(str(approx)) <= r.interval(bits)[1] + Fraction(1, 1 << bits)]
        if len(hit) == 1:
            return hit[0], norm, UNVERIFIED
        bits *= 2
        if bits > 4096:
            raise DomainError("could not isolate theta")


@dataclass(frozen=True)
class SharpnessInstance:
    beta: RealAlgebraic
    Q: int
    n: int
    M: tuple
    N: int
    F_N: tuple
    theta: RealAlgebraic
    target_delta: mpmath.mpc
    target: mpmath.mpc
    achieved_conjugate: mpmath.mpc
    distance: mpmath.mpf
    theta_in_window: bool
    digits_match: bool
    expected: DigitWord
    record: ExpansionRecord = field(repr=False)
    irreducibility: str = ""

    @property
    def digits(self) -> DigitWord:
        return self.record.digits


def _prime_candidates(start: int):
    p = sympy.nextprime(start)
    while True:
        yield p
        p = sympy.nextprime(p)


def build_sharpness(
    seed: Seed = ALTERNATING,
    beta=1,
    Q: int = 8,
    N: Optional[int] = None,
    n: int = 3,
    M: Optional[Sequence[int]] = None,
    precision: int = 30,
    max_tries: int = 200,
) -> SharpnessInstance:
    beta = _as_real(beta)
    if beta.sign() <= 0:
        raise DomainError("beta must be positive")
    if M is None:
        M = approximate_digits(seed, beta, Q, n)
    else:
        M = tuple(int(m) for m in M)
        n = len(M) - 1
        Q = M[0]
    if n < 1 or any(m <= 0 for m in M):
        raise DomainError("need n >= 1 and positive M_j")
    small = beta < 1
    if small:
        b = beta.minimal().lo
        if any(M[0] * b - Mj <= 0 for Mj in M[1:]):
            raise DomainError("0 < beta < 1 requires M_j < M_0 beta")
    rational_beta = beta.minimal().is_rational

    def admissible(p: int) -> bool:
        if small and any(p * (M[0] * b - Mj) <= 1 for Mj in M[1:]):
            return False
        if rational_beta:
            return eisenstein_check(_cleared_integer_poly(f_n_coefficients(beta, M, p)), p) == IRREDUCIBLE
        return True

    if N is not None:
        if not sympy.isprime(N) or N <= M[-1]:
            raise DomainError("N must be a prime larger than M_n")
        if small and any(N * (M[0] * b - Mj) <= 1 for Mj in M[1:]):
            raise DomainError("N(M_0 beta - M_j) > 1 fails")
        candidates = [N]
    else:
        gen = _prime_candidates(M[-1])
        candidates = (next(gen) for _ in range(max_tries))

    last_error = None
    for p in candidates:
        if N is None and not admissible(p):
            continue
        try:
            return _instance(seed, beta, Q, n, M, p, precision, rational_beta)
        except HypothesisViolated as exc:
            last_error = exc
            if N is not None:
                raise
    raise HypothesisViolated(f"no admissible prime found: {last_error}")


def _instance(seed, beta, Q, n, M, N, precision, rational_beta) -> SharpnessInstance:
    coeffs = f_n_coefficients(beta, M, N)
    theta, fpoly, label = _theta(beta, coeffs, precision)
    if rational_beta:
        label = eisenstein_check(fpoly, N)
    base = make_base([theta, beta])
    th = base.betas[0]
    NM0 = N * M[0]
    theta_in_window = sign_of(th - NM0) >= 0 and sign_of(th - (NM0 + 1)) < 0
    pre = []
    for Mj in M:
        pre += [N * Mj, 0]
    expected = DigitWord.periodic(pre[:-1], (0,))
    rec = greedy_expand(base, 1, cutoff=2 * len(M) + 4)
    digits_match = rec.digits == expected
    if not (theta_in_window and digits_match):
        raise HypothesisViolated("digit realization failed: N*M_0 <= theta < N*M_0+1 or the digit word does not hold")
    dps = precision + 10
    with mpmath.workdps(dps):
        delta0 = seed.root(n, dps)
        bnum = beta.to_mpf(dps)
        delta = delta0 * bnum
        target = 1 / delta
        num = [c.to_mpf(dps) for c in coeffs]
        roots = roots_of(num, precision)
        best = min(roots, key=lambda r: abs(r.value - target))
        dist = abs(best.value - target)
    return SharpnessInstance(beta, Q, n, tuple(M), N, fpoly, theta, delta, target, best.value, dist,
                             theta_in_window, digits_match, expected, rec, label)
