"""The polynomial relation satisfied by a base entry when an expansion is eventually periodic.

Writing the periodic expansion of x with preperiod K blocks and period M
blocks of n digits, and y_j for the value of block j, the geometric series
gives

    x * (B^(K+M) - B^K) = sum_{j<=K} y_j (B^(K+M-j) - B^(K-j)) + sum_{K<j<=K+M} y_j B^(K+M-j)

with B = B[n].  Replacing one entry beta_i by an indeterminate X turns both
sides into polynomials in X over the field generated by the remaining data.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from altbase.base import AlternateBase, partial_product
from altbase.errors import DomainError, UnresolvedError
from altbase.exactreal import FieldElement
from altbase.exactreal import poly as P
from altbase.expansion import DigitWord, greedy_expand


# polynomials over the field: ascending lists of FieldElements

def _trim(p: list) -> list:
    while p and p[-1].is_zero():
        p.pop()
    return p


def kp_add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] = out[k] + c
    return _trim(out)


def kp_scale(a: list, c) -> list:
    return _trim([x * c for x in a])


def kp_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    zero = a[0].context.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def kp_eval(a: list, x: FieldElement) -> FieldElement:
    acc = x.context.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class PeriodicPolynomial:
    """LHS - RHS of the periodic-expansion identity as a polynomial in X = beta_i.

    ``coefficients`` are ascending and lie in the field generated by every
    quantity except beta_i.  ``k`` and ``m`` count digits (multiples of n).
    """

    variable_index: int
    coefficients: tuple
    k: int
    m: int
    y_values: tuple
    lhs: tuple = ()
    rhs: tuple = ()

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, value: FieldElement) -> FieldElement:
        return kp_eval(list(self.coefficients), value)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coefficients)

    def rational_coefficients(self) -> tuple:
        if not self.is_rational():
            raise DomainError("coefficients are not rational")
        return tuple(c.as_fraction() for c in self.coefficients)

    def rational_minimal_factor(self, root: FieldElement) -> tuple:
        """The irreducible factor over Q (primitive, ascending) vanishing at ``root``."""
        for f in P.factor_over_q(self.rational_coefficients()):
            if kp_eval([root.context.rational(c) for c in f], root).is_zero():
                return f
        raise AssertionError("no rational factor vanishes at the given root")


def _block_linear(base: AlternateBase, digits, i: int) -> list:
    """Each block value y_j as (v_j, u_j): y_j = u_j * X + v_j with X = beta_i."""
    n = base.n
    bi = base.beta(i)
    tails = []
    for t in range(1, n + 1):
        tail = partial_product(base, t + 1, n)  # B[t+1, n]
        tails.append((tail / bi, True) if t < i else (tail, False))
    zero = base.context.zero()
    out = []
    for j in range(len(digits) // n):
        u, v = zero, zero
        for t in range(1, n + 1):
            a = digits[n * j + t - 1]
            if not a:
                continue
            coef, has_x = tails[t - 1]
            if has_x:
                u = u + coef * a
            else:
                v = v + coef * a
        out.append((v, u))
    return out


def eq1_polynomial(base: AlternateBase, x, word: DigitWord, i: int) -> PeriodicPolynomial:
    if not word.resolved:
        raise UnresolvedError("the expansion is not resolved as eventually periodic")
    n = base.n
    if not 1 <= i <= n:
        raise DomainError("index i must satisfy 1 <= i <= n")
    x = base.lift(x)
    ctx = base.context
    pre, per = word.blocks(n)
    K, M = len(pre) // n, len(per) // n
    ys = _block_linear(base, pre + per, i)
    Mi = base.total / base.beta(i)
    one = ctx.one()

    def bpow(e):  # B[n]^e = (Mi X)^e
        return [ctx.zero()] * e + [Mi ** e]

    lhs = kp_scale(kp_add(bpow(K + M), kp_scale(bpow(K), -one)), x)
    rhs: list = []
    for j, (v, u) in enumerate(ys, start=1):
        yj = _trim([v, u])
        if j <= K:
            w = kp_add(bpow(K + M - j), kp_scale(bpow(K - j), -one))
        else:
            w = bpow(K + M - j)
        rhs = kp_add(rhs, kp_mul(yj, w))
    coeffs = kp_add(lhs, kp_scale(rhs, -one))
    y_vals = tuple(v + u * base.beta(i) for v, u in ys)
    return PeriodicPolynomial(i, tuple(coeffs), K * n, M * n, y_vals, tuple(lhs), tuple(rhs))


def leading_coefficients(base: AlternateBase, x, word: DigitWord, i: int) -> tuple[FieldElement, FieldElement]:
    """Coefficients of X^(K+M) on the left and right of the identity."""
    pp = eq1_polynomial(base, x, word, i)
    top = (pp.k + pp.m) // base.n
    zero = base.context.zero()
    lc = pp.lhs[top] if len(pp.lhs) > top else zero
    rc = pp.rhs[top] if len(pp.rhs) > top else zero
    return lc, rc


@dataclass(frozen=True)
class AlgebraicityCertificate:
    algebraic: bool
    witness: Optional[PeriodicPolynomial]
    y: FieldElement

    @property
    def status(self) -> str:
        return "algebraic-with-witness" if self.algebraic else "inconclusive"


def algebraicity_certificate(base: AlternateBase, x, word: Optional[DigitWord], i: int) -> AlgebraicityCertificate:
    """beta_i is algebraic over the field of the other data whenever T^(i-1)(x) != 0."""
    x = base.lift(x)
    rec = greedy_expand(base, x, cutoff=max(i, 1))
    y = rec.states[i - 1]
    if y.is_zero():
        return AlgebraicityCertificate(False, None, y)
    if word is None:
        word = greedy_expand(base, x).digits
    pp = eq1_polynomial(base, x, word, i)
    if pp.degree < 1:
        raise AssertionError("leading coefficients agree although T^(i-1)(x) != 0")
    return AlgebraicityCertificate(True, pp, y)
