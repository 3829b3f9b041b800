"""Exact arithmetic in a real number field Q(theta).

A :class:`NumberFieldContext` fixes a primitive element ``theta`` (a
:class:`RealAlgebraic` with irreducible defining polynomial).  Elements are
polynomials in ``theta`` of degree below ``[Q(theta):Q]``; because the modulus
is irreducible this representation is unique, so equality and zero tests are
symbolic.  Signs are decided by exact interval evaluation at successively
refined enclosures of ``theta``.

Several algebraic numbers are brought into one field with
:func:`make_context`, which composes them one at a time: for a current
generator g and a new value v it picks a small integer t for which the
resultant of the shifted minimal polynomials is squarefree, takes theta =
g + t*v, and recovers v inside Q(theta) as the root of a linear gcd.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from altbase.errors import ContextMismatch, DomainError, FieldTooLarge, InvalidAlgebraic
from altbase.exactreal import poly as P
from altbase.exactreal.algebraic import RealAlgebraic

DEFAULT_DEGREE_CAP = 64
MAX_SIGN_BITS = 1 << 22


class NumberFieldContext:
    """The field Q(generator) together with the values registered in it."""

    def __init__(self, generator: RealAlgebraic, registered=(), degree_cap: int = DEFAULT_DEGREE_CAP):
        generator = generator.minimal()
        self.generator = generator
        self.degree = generator.degree
        self.degree_cap = degree_cap
        self.modulus = P.monic(generator.poly)
        self._registered: list[tuple[RealAlgebraic, tuple]] = list(registered)
        self._gen_cache: dict[int, tuple[Fraction, Fraction]] = {}

    def __repr__(self):
        return f"NumberFieldContext(degree={self.degree}, generator={self.generator!r})"

    # -- elements -------------------------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        c = P.poly(coeffs)
        if len(c) > self.degree:
            c = P.rem(c, self.modulus)
        return FieldElement(self, c)

    def rational(self, q) -> "FieldElement":
        return FieldElement(self, P.poly((q,)))

    def zero(self) -> "FieldElement":
        return FieldElement(self, ())

    def one(self) -> "FieldElement":
        return self.rational(1)

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.rational(self.generator.lo)
        return FieldElement(self, P.X)

    @property
    def coordinates(self) -> list[tuple[RealAlgebraic, tuple]]:
        return list(self._registered)

    def element_of(self, value) -> "FieldElement":
        """The element denoting a registered (or rational) value."""
        if isinstance(value, FieldElement):
            if value.context is not self:
                raise ContextMismatch("element belongs to another context")
            return value
        if isinstance(value, (int, Fraction)):
            return self.rational(value)
        if isinstance(value, RealAlgebraic):
            if value.is_rational:
                return self.rational(value.lo)
            for ra, vec in self._registered:
                if ra is value:
                    return FieldElement(self, vec)
            for ra, vec in self._registered:
                if ra.same_value(value):
                    return FieldElement(self, vec)
            raise DomainError(f"{value!r} is not registered in this context")
        raise TypeError(f"cannot lift {type(value).__name__} into a number field")

    # -- numerics -------------------------------------------------------------

    def gen_interval(self, bits: int) -> tuple[Fraction, Fraction]:
        iv = self._gen_cache.get(bits)
        if iv is None:
            iv = self.generator.interval(bits)
            self._gen_cache[bits] = iv
        return iv


@dataclass(frozen=True, eq=False)
class FieldElement:
    """An element of a :class:`NumberFieldContext`, stored as a trimmed polynomial in the generator."""

    context: NumberFieldContext
    poly: tuple

    @property
    def vector(self) -> tuple:
        """Coefficients in the power basis, padded to the field degree."""
        return tuple(self.poly) + (Fraction(0),) * (self.context.degree - len(self.poly))

    def key(self) -> tuple:
        return tuple(self.poly)

    def is_zero(self) -> bool:
        return not self.poly

    def is_rational(self) -> bool:
        return len(self.poly) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("element is irrational")
        return Fraction(self.poly[0]) if self.poly else Fraction(0)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.context is not self.context:
                raise ContextMismatch("context mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.context.rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.context, P.add(self.poly, o.poly))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.context, P.neg(self.poly))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.context, P.sub(self.poly, o.poly))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_rational():
            return FieldElement(self.context, P.scale(self.poly, o.as_fraction()))
        if self.is_rational():
            return FieldElement(self.context, P.scale(o.poly, self.as_fraction()))
        prod = P.mul(self.poly, o.poly)
        if len(prod) > self.context.degree:
            prod = P.rem(prod, self.context.modulus)
        return FieldElement(self.context, prod)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in number field")
        if self.is_rational():
            return self.context.rational(1 / self.as_fraction())
        g, s, _ = P.ext_gcd(self.poly, self.context.modulus)
        assert P.degree(g) == 0
        return FieldElement(self.context, P.rem(s, self.context.modulus) if len(s) > self.context.degree else s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_rational():
            q = o.as_fraction()
            if q == 0:
                raise ZeroDivisionError("division by zero in number field")
            return FieldElement(self.context, P.scale(self.poly, 1 / q))
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.context.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == other
        if isinstance(other, FieldElement):
            return self.context is other.context and self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_fraction())
        return hash((id(self.context), self.poly))

    def __lt__(self, other):
        return sign_of(self - other) < 0

    def __le__(self, other):
        return sign_of(self - other) <= 0

    def __gt__(self, other):
        return sign_of(self - other) > 0

    def __ge__(self, other):
        return sign_of(self - other) >= 0

    def __abs__(self):
        return -self if sign_of(self) < 0 else self

    def __float__(self):
        lo, hi = self.interval(64)
        return float((lo + hi) / 2)

    def __repr__(self):
        if self.is_rational():
            return f"FieldElement({self.as_fraction()})"
        return f"FieldElement({P.to_string(self.poly, 'g')} ~ {float(self):.12g})"

    # -- numerics -------------------------------------------------------------

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        """Exact rational enclosure from the generator refined to 2**-bits."""
        if self.is_rational():
            q = self.as_fraction()
            return q, q
        lo, hi = self.context.gen_interval(bits)
        return P.interval_eval(self.poly, lo, hi)

    def to_mpf(self, dps: int = 30):
        import mpmath

        bits = int(dps * 3.33) + 32
        while True:
            lo, hi = self.interval(bits)
            mag = max(abs(lo), abs(hi), Fraction(1, 1 << 64))
            if hi - lo <= mag * Fraction(1, 10 ** (dps + 3)) or lo == hi:
                break
            bits *= 2
        with mpmath.workdps(dps + 10):
            m = (lo + hi) / 2
            return mpmath.mpf(m.numerator) / m.denominator

    def sign(self) -> int:
        return sign_of(self)

    def floor(self) -> int:
        return floor_of(self)

    def minimal_polynomial(self) -> tuple:
        return minimal_polynomial(self)

    def to_real_algebraic(self) -> RealAlgebraic:
        """This element as a standalone real algebraic number (minimal polynomial + interval)."""
        if self.is_rational():
            return RealAlgebraic.rational(self.as_fraction())
        m = minimal_polynomial(self)
        seq = P.sturm_sequence(m)
        bits = 32
        while True:
            lo, hi = self.interval(bits)
            if lo < hi and P.sign_at(m, lo) != 0 and P.sign_at(m, hi) != 0 and P.sturm_count(seq, lo, hi) == 1:
                return RealAlgebraic._trusted(m, lo, hi)
            bits *= 2


def _start_bits(poly: tuple) -> int:
    size = 0
    for c in poly:
        c = Fraction(c)
        size = max(size, c.numerator.bit_length(), c.denominator.bit_length())
    return 64 + size


def sign_of(a: FieldElement) -> int:
    """Exact sign: zero is decided symbolically, nonzero by interval refinement."""
    if a.is_zero():
        return 0
    if a.is_rational():
        return P.sign(a.as_fraction())
    bits = _start_bits(a.poly)
    while bits <= MAX_SIGN_BITS:
        lo, hi = a.interval(bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
    raise DomainError("sign refinement budget exhausted")


def floor_of(a: FieldElement) -> int:
    """The integer k with k <= a < k+1."""
    if a.is_rational():
        return math.floor(a.as_fraction())
    bits = _start_bits(a.poly)
    while bits <= MAX_SIGN_BITS:
        lo, hi = a.interval(bits)
        fl, fh = math.floor(lo), math.floor(hi)
        if fl == fh:
            return fl
        if fh == fl + 1:
            return fh if sign_of(a - fh) >= 0 else fl
        bits *= 2
    raise DomainError("floor refinement budget exhausted")


def field_arith(op: str, a: FieldElement, b: FieldElement) -> FieldElement:
    if not isinstance(a, FieldElement) or not isinstance(b, FieldElement):
        raise TypeError("field_arith expects FieldElements")
    if a.context is not b.context:
        raise ContextMismatch("context mismatch")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# -- linear algebra over Q ----------------------------------------------------

def solve_dependency(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Solve sum_k x_k * columns[k] = target over Q; None if inconsistent.

    ``columns`` must be linearly independent.
    """
    ncols = len(columns)
    nrows = len(target)
    rows = [[Fraction(columns[k][r]) for k in range(ncols)] + [Fraction(target[r])] for r in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        if rows[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][ncols]
    return x


def rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(map(Fraction, v)) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(rk + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[rk][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def minimal_polynomial(a: FieldElement) -> tuple:
    """Minimal polynomial over Q as primitive integer coefficients (ascending).

    The first power a**d lying in the Q-span of 1, a, ..., a**(d-1) gives the
    kernel vector of the matrix of powers; its polynomial is irreducible.
    """
    if a.is_rational():
        return P.primitive_int((-a.as_fraction(), 1))
    powers = [a.context.one().vector]
    cur = a.context.one()
    for d in range(1, a.context.degree + 1):
        cur = cur * a
        sol = solve_dependency(powers, cur.vector)
        if sol is not None:
            return P.primitive_int(tuple(-s for s in sol) + (Fraction(1),))
        powers.append(cur.vector)
    raise AssertionError("no dependency found within the field degree")


# -- polynomials over a number field ----------------------------------------

def _kpoly_trim(p: list) -> list:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _kpoly_rem(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    while len(_kpoly_trim(a)) - 1 >= db:
        c = a[-1] * inv
        shift = len(a) - 1 - db
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - c * b[j]
        a.pop()
    return a


def _kpoly_gcd(a: list, b: list) -> list:
    a, b = _kpoly_trim(list(a)), _kpoly_trim(list(b))
    while b:
        a, b = b, _kpoly_trim(_kpoly_rem(a, b))
    inv = a[-1].inverse()
    return [c * inv for c in a]


# -- compositum ---------------------------------------------------------------

def _is_registered(registered, v: RealAlgebraic):
    for ra, vec in registered:
        if ra.same_value(v):
            return vec
    return None


def _adjoin(ctx: NumberFieldContext, v: RealAlgebraic) -> NumberFieldContext:
    v = v.minimal()
    if v.is_rational:
        return NumberFieldContext(ctx.generator, ctx._registered + [(v, P.poly((v.lo,)))], ctx.degree_cap)
    if _is_registered(ctx._registered, v) is not None:
        return ctx
    if ctx.degree == 1:
        reg = list(ctx._registered) + [(v, P.X)]
        return NumberFieldContext(v, reg, ctx.degree_cap)
    g = ctx.generator
    G, Pv = P.poly(g.poly), P.poly(v.poly)
    for t in (1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7):
        R = P.resultant_shift(G, Pv, t)
        if P.is_squarefree(R):
            break
    else:
        raise FieldTooLarge("no separating element found for the compositum")
    # Isolate theta = g + t*v among the real roots of R.
    seqR = P.sturm_sequence(R)
    bits = 16
    while True:
        gl, gh = g.interval(bits)
        vl, vh = v.interval(bits)
        if t > 0:
            lo, hi = gl + t * vl, gh + t * vh
        else:
            lo, hi = gl + t * vh, gh + t * vl
        if lo < hi and P.sign_at(R, lo) != 0 and P.sign_at(R, hi) != 0 and P.sturm_count(seqR, lo, hi) == 1:
            break
        bits *= 2
    H = None
    for f in P.factor_over_q(R):
        if P.degree(f) >= 2 and P.sign_at(f, lo) != 0 and P.sign_at(f, hi) != 0 \
                and P.sturm_count(P.sturm_sequence(f), lo, hi) == 1:
            H = f
            break
    assert H is not None, "theta must be a root of an irreducible factor of degree >= 2"
    if P.degree(H) > ctx.degree_cap:
        raise FieldTooLarge(f"field too large: degree {P.degree(H)} exceeds cap {ctx.degree_cap}")
    theta = RealAlgebraic._trusted(H, lo, hi)
    K = NumberFieldContext(theta, (), ctx.degree_cap)
    th = K.gen()
    # gcd over K of Pv(z) and G(theta - t*z) is z - v.
    pz = [K.rational(c) for c in Pv]
    lin = [th, K.rational(-t)]
    gz = [K.zero()]
    for c in reversed(G):
        # gz = gz * lin + c
        prod = [K.zero()] * (len(gz) + 1)
        for i, a in enumerate(gz):
            prod[i] = prod[i] + a * lin[0]
            prod[i + 1] = prod[i + 1] + a * lin[1]
        prod[0] = prod[0] + c
        gz = _kpoly_trim(prod)
    d = _kpoly_gcd(pz, gz)
    if len(d) != 2:
        raise AssertionError("separating element did not give a linear gcd")
    v_in_K = -d[0]
    g_in_K = th - t * v_in_K
    reg = []
    for ra, vec in ctx._registered:
        acc = K.zero()
        for c in reversed(vec):
            acc = acc * g_in_K + c
        reg.append((ra, acc.poly))
    reg.append((v, v_in_K.poly))
    return NumberFieldContext(theta, reg, ctx.degree_cap)


def _check_registered(ctx: NumberFieldContext, bits: int = 128):
    for ra, vec in ctx._registered:
        e = FieldElement(ctx, vec)
        lo, hi = e.interval(bits)
        rl, rh = ra.interval(bits)
        if hi < rl or lo > rh:
            raise AssertionError(f"registered value {ra!r} does not match its coordinates")


def make_context(values: Iterable, degree_cap: int = DEFAULT_DEGREE_CAP) -> NumberFieldContext:
    """Smallest field (up to choice of primitive element) containing every value.

    Values may be :class:`RealAlgebraic`, ints or Fractions.
    """
    vals = []
    for v in values:
        if isinstance(v, (int, Fraction)):
            v = RealAlgebraic.rational(v)
        if not isinstance(v, RealAlgebraic):
            raise InvalidAlgebraic(f"invalid algebraic input: {v!r}")
        vals.append(v)
    if not vals:
        raise DomainError("make_context needs at least one value")
    ctx = NumberFieldContext(RealAlgebraic.rational(0), (), degree_cap)
    for v in vals:
        ctx = _adjoin(ctx, v)
        # keep the original object registered too, so lookups by identity work
        if not any(ra is v for ra, _ in ctx._registered):
            vec = _is_registered(ctx._registered, v)
            ctx._registered.append((v, vec))
    _check_registered(ctx)
    return ctx


def extend_context(ctx: NumberFieldContext, values: Iterable) -> NumberFieldContext:
    """A new context containing the old registered values plus ``values``."""
    return make_context([ra for ra, _ in ctx._registered] + list(values), ctx.degree_cap)
