"""Conjugates of a base entry over the field of the other data, and the resulting bound.

If d(B; x) is eventually periodic and y = T^(i-1)(x) != 0, every conjugate
lambda != beta_i of beta_i over K_i = Q(gamma, x, beta_j : j != i) satisfies
|lambda| <= 1 / |M_i z(gamma; y)| with M_i = B[n] / beta_i.  A conjugate
outside that disk therefore certifies that the expansion is not eventually
periodic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from altbase.base import AlternateBase, make_base, shift
from altbase.errors import DomainError, HypothesisViolated, UnresolvedError
from altbase.exactreal import FieldElement, roots_of
from altbase.exactreal.field import solve_dependency
from altbase.expansion import DEFAULT_CUTOFF, ExpansionRecord, greedy_expand
from altbase.spectra.zbound import z_bound

DEFAULT_PRECISION = 30


class Echelon:
    """Incrementally maintained row-echelon basis of a Q-subspace."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[tuple[int, list]] = []

    def reduce(self, v: Sequence) -> list:
        v = [Fraction(c) for c in v]
        for piv, row in self.rows:
            if v[piv] != 0:
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        r = self.reduce(v)
        piv = next((k for k, c in enumerate(r) if c != 0), None)
        if piv is None:
            return False
        r = [c / r[piv] for c in r]
        self.rows = [(p, [a - row[piv] * b for a, b in zip(row, r)] if row[piv] != 0 else row) for p, row in self.rows]
        self.rows.append((piv, r))
        return True


def subfield_basis(generators: Sequence[FieldElement], ctx) -> list[FieldElement]:
    """A Q-basis of the subfield generated by ``generators`` inside ``ctx``."""
    one = ctx.one()
    ech = Echelon(ctx.degree)
    ech.add(one.vector)
    basis = [one]
    frontier = [one]
    gens = [g for g in generators if not g.is_rational()]
    while frontier:
        new = []
        for b in frontier:
            for g in gens:
                p = b * g
                if ech.add(p.vector):
                    basis.append(p)
                    new.append(p)
        frontier = new
    return basis


def relative_minimal_polynomial(value: FieldElement, subfield: Sequence[FieldElement]) -> list[FieldElement]:
    """Monic minimal polynomial of ``value`` over the subfield spanned by ``subfield``.

    Returned ascending with coefficients in the subfield; found as the first
    power value**d in the span of {kappa * value**b : b < d}.
    """
    ctx = value.context
    cols: list = []
    elems: list = []
    cur = ctx.one()
    for d in range(1, ctx.degree + 1):
        for kappa in subfield:
            elems.append((len(elems) // len(subfield), kappa))
            cols.append((kappa * cur).vector)
        cur = cur * value
        sol = solve_dependency(cols, cur.vector)
        if sol is not None:
            coeffs = [ctx.zero() for _ in range(d)]
            for s, (b, kappa) in zip(sol, elems):
                if s:
                    coeffs[b] = coeffs[b] + kappa * s
            return [-c for c in coeffs] + [ctx.one()]
    raise AssertionError("no relative dependency found within the field degree")


class Verdict(str, enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ConjugateEntry:
    value: mpmath.mpc
    radius: mpmath.mpf
    modulus: mpmath.mpf
    verdict: Verdict

    @property
    def within_bound(self) -> Optional[bool]:
        if self.verdict is Verdict.INDETERMINATE:
            return None
        return self.verdict is Verdict.INSIDE


@dataclass(frozen=True)
class BoundReport:
    """Outcome of comparing the conjugates of beta_i with 1/|M_i z(gamma; y)|.

    ``periodic`` is True/False when the expansion of x was resolved within
    the cutoff, None otherwise.  A conjugate outside the bound together with
    an unresolved expansion is a certificate of non-periodicity.
    """

    i: int
    y: FieldElement
    z_abs: mpmath.mpf
    M_i: FieldElement
    bound: mpmath.mpf
    relative_minpoly: tuple
    conjugates: tuple
    periodic: Optional[bool]

    @property
    def violated(self) -> bool:
        return any(c.verdict is Verdict.OUTSIDE for c in self.conjugates)

    @property
    def all_inside(self) -> bool:
        return all(c.verdict is Verdict.INSIDE for c in self.conjugates)

    @property
    def certifies_nonperiodic(self) -> bool:
        if self.violated and self.periodic:
            raise AssertionError("a periodic expansion violates the conjugate bound")
        return self.violated

    @property
    def max_modulus(self):
        return max((c.modulus for c in self.conjugates), default=mpmath.mpf(0))

    def summary(self) -> str:
        if not self.conjugates:
            return "no nontrivial conjugates"
        if self.violated:
            return "violation => non-periodicity certificate"
        if self.all_inside:
            return "all conjugates inside the bound"
        return "indeterminate"


def _other_generators(base: AlternateBase, x: FieldElement, i: int) -> list[FieldElement]:
    return [b for k, b in enumerate(base.betas, start=1) if k != i] + [base.gamma, x]


def conjugate_bound_check(
    base: AlternateBase,
    x,
    i: int,
    precision: int = DEFAULT_PRECISION,
    cutoff: int = DEFAULT_CUTOFF,
    record: Optional[ExpansionRecord] = None,
) -> BoundReport:
    n = base.n
    if not 1 <= i <= n:
        raise DomainError("index i must satisfy 1 <= i <= n")
    x = base.lift(x)
    if record is None:
        record = greedy_expand(base, x, cutoff=cutoff)
    y = record.states[i - 1]
    if y.is_zero():
        raise DomainError("T^(i-1)(x) = 0: the bound needs y != 0")
    ctx = base.context
    bi = base.beta(i)
    Mi = base.total / bi
    sub = subfield_basis(_other_generators(base, x, i), ctx)
    # M_i must be fixed by every embedding fixing K_i, i.e. lie in K_i.
    ech = Echelon(ctx.degree)
    for s in sub:
        ech.add(s.vector)
    if any(ech.reduce(Mi.vector)):
        raise HypothesisViolated("hypothesis violated, bound inapplicable: M_i is not in K_i")
    rel = relative_minimal_polynomial(bi, sub)
    dps = precision + 10
    with mpmath.workdps(dps + 20):
        z = z_bound(base.gamma, y, dps=dps + 20)
        mi = abs(Mi.to_mpf(dps + 20))
        bound = 1 / (mi * z)
        entries = []
        if len(rel) > 2:
            coeffs = [c.to_mpf(dps + 20) for c in rel]
            roots = roots_of(coeffs, precision=dps)
            bnum = bi.to_mpf(dps + 20)
            # drop the root nearest beta_i itself
            own = min(range(len(roots)), key=lambda k: abs(roots[k].value - bnum))
            slack = mpmath.mpf(10) ** (-(dps - 5))
            for k, r in enumerate(roots):
                if k == own:
                    continue
                mod = abs(r.value)
                rad = r.radius + slack
                if mod + rad <= bound:
                    v = Verdict.INSIDE
                elif mod - rad > bound:
                    v = Verdict.OUTSIDE
                else:
                    v = Verdict.INDETERMINATE
                entries.append(ConjugateEntry(r.value, rad, mod, v))
    periodic = True if record.resolved else None
    return BoundReport(i, y, z, Mi, bound, tuple(rel), tuple(entries), periodic)


def rotated(base: AlternateBase, i: int) -> AlternateBase:
    """sigma^(i-1)(B), so that entry i becomes the first entry."""
    return shift(base, i - 1)


def eq2_residual(base: AlternateBase, x, i: int, lam, precision: int = DEFAULT_PRECISION,
                 record: Optional[ExpansionRecord] = None, continuation: bool = False):
    """y + sum_{j>=1} T^(nj)(y) / (lambda M_i)^j with the orbit taken from position i-1.

    The tail is eventually periodic, so the series is summed in closed form.
    A tail of zeros makes it a finite sum for every lambda.  Otherwise
    |lambda M_i| <= 1 is rejected unless ``continuation`` asks for the
    rational closed form anyway.
    """
    x = base.lift(x)
    if record is None:
        record = greedy_expand(base, x)
    if not record.resolved:
        raise UnresolvedError("the expansion is not resolved as eventually periodic")
    n, k, m = base.n, record.k, record.m
    states = record.states

    def state(pos):
        if pos <= k:
            return states[pos]
        return states[k + (pos - k) % m]

    dps = precision + 10
    with mpmath.workdps(dps):
        lam = mpmath.mpmathify(lam)
        Mi = (base.total / base.beta(i)).to_mpf(dps)
        q = lam * Mi
        r = 1 / q
        start = i - 1
        j0 = 1
        while start + n * j0 < k:
            j0 += 1
        p = m // n
        zero_tail = all(state(start + n * j).is_zero() for j in range(j0, j0 + p))
        if abs(q) <= 1 and not (zero_tail or continuation):
            raise DomainError("series diverges: |lambda M_i| <= 1")
        total = state(start).to_mpf(dps) + 0j
        rj = mpmath.mpc(1)
        for j in range(1, j0):
            rj *= r
            total += state(start + n * j).to_mpf(dps) * rj
        tail = mpmath.mpc(0)
        for j in range(j0, j0 + p):
            rj *= r
            tail += state(start + n * j).to_mpf(dps) * rj
        if not zero_tail:
            total += tail / (1 - r ** p)
    with mpmath.workdps(precision):
        return +total


def with_point(base: AlternateBase, x) -> tuple[AlternateBase, FieldElement]:
    """Return a base whose field also contains x (rebuilding it if needed)."""
    try:
        return base, base.lift(x)
    except DomainError:
        pass
    if isinstance(x, FieldElement):
        x = x.to_real_algebraic()
    b = make_base([v.to_real_algebraic() for v in base.betas], base.gamma.to_real_algebraic(), extras=[x],
                  degree_cap=base.context.degree_cap)
    return b, b.lift(x)
