"""Alternate bases, digit alphabets, partial products and shifts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from altbase.errors import ContextMismatch, DomainError
from altbase.exactreal import FieldElement, NumberFieldContext, RealAlgebraic, floor_of, make_context, sign_of
from altbase.exactreal.field import DEFAULT_DEGREE_CAP


@dataclass(frozen=True)
class Alphabet:
    """Integer digits in [lower, upper] or [lower, upper)."""

    lower: int
    upper: int
    upper_inclusive: bool

    def __contains__(self, d: int) -> bool:
        if self.upper_inclusive:
            return self.lower <= d <= self.upper
        return self.lower <= d < self.upper

    def digits(self) -> range:
        return range(self.lower, self.upper + 1 if self.upper_inclusive else self.upper)

    def closed(self) -> "Alphabet":
        return Alphabet(self.lower, self.upper, True)


def _is_integer(a: FieldElement) -> bool:
    return a.is_rational() and a.as_fraction().denominator == 1


def alphabet(beta: FieldElement, gamma: FieldElement) -> Alphabet:
    if beta.is_zero():
        raise DomainError("alphabet of a zero base entry")
    lo_end = floor_of(beta * gamma - gamma)
    hi_end = floor_of(beta * (gamma + 1) - gamma)
    half_open = sign_of(beta) > 0 and _is_integer(beta + gamma * (beta - 1))
    return Alphabet(min(lo_end, hi_end), max(lo_end, hi_end), not half_open)


@dataclass(frozen=True)
class AlternateBase:
    """The purely periodic base (beta_1, ..., beta_n) repeated, anchored at gamma.

    All entries live in one number field so floors and equalities are exact.
    """

    betas: tuple
    gamma: FieldElement
    context: NumberFieldContext

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(self.betas))
        if not self.betas:
            raise DomainError("an alternate base needs at least one entry")
        for b in self.betas + (self.gamma,):
            if b.context is not self.context:
                raise ContextMismatch("base entries must share one context")
        if any(b.is_zero() for b in self.betas):
            raise DomainError("base entries must be nonzero")
        prod = self.context.one()
        for b in self.betas:
            prod = prod * b
        if sign_of(abs(prod) - 1) <= 0:
            raise DomainError("|B[n]| must exceed 1 for the expansion to converge")

    @property
    def n(self) -> int:
        return len(self.betas)

    def beta(self, m: int) -> FieldElement:
        """beta_m with 1-based, period-reduced index."""
        return self.betas[(m - 1) % self.n]

    def alphabet(self, m: int) -> Alphabet:
        return alphabet(self.beta(m), self.gamma)

    def partial_product(self, i: int, j: int) -> FieldElement:
        return partial_product(self, i, j)

    def shift(self, k: int) -> "AlternateBase":
        return shift(self, k)

    def lift(self, value) -> FieldElement:
        return self.context.element_of(value)

    @property
    def total(self) -> FieldElement:
        """B[n], the product over one period."""
        return partial_product(self, 1, self.n)

    def __repr__(self):
        inner = ", ".join(f"{float(b):.6g}" for b in self.betas)
        return f"AlternateBase(({inner}), gamma={float(self.gamma):.6g})"


def partial_product(base: AlternateBase, i: int, j: int) -> FieldElement:
    """B[i, j] = beta_i * ... * beta_j, with B[j+1, j] = 1."""
    if i < 1 or i > j + 1:
        raise DomainError("partial_product needs 1 <= i <= j + 1")
    out = base.context.one()
    for m in range(i, j + 1):
        out = out * base.beta(m)
    return out


def shift(base: AlternateBase, k: int) -> AlternateBase:
    """sigma^k: rotate the period left by k."""
    if k < 0:
        raise DomainError("shift needs k >= 0")
    k %= base.n
    betas = base.betas[k:] + base.betas[:k]
    return AlternateBase(betas, base.gamma, base.context)


def make_base(betas: Sequence, gamma=0, extras: Iterable = (), degree_cap: int = DEFAULT_DEGREE_CAP) -> AlternateBase:
    """Build a base from exact reals, registering gamma and ``extras`` in the same field.

    Entries may be :class:`RealAlgebraic`, ints or Fractions.  The extras (for
    example a point x to expand) are afterwards available through
    ``base.lift(value)``.
    """
    def as_ra(v):
        if isinstance(v, RealAlgebraic):
            return v
        if isinstance(v, (int, Fraction)):
            return RealAlgebraic.rational(v)
        if isinstance(v, FieldElement):
            return v.to_real_algebraic()
        raise DomainError(f"cannot use {v!r} as an exact real")

    betas = [as_ra(b) for b in betas]
    gamma = as_ra(gamma)
    extras = [as_ra(e) for e in extras]
    ctx = make_context(betas + [gamma] + extras, degree_cap)
    return AlternateBase(tuple(ctx.element_of(b) for b in betas), ctx.element_of(gamma), ctx)
