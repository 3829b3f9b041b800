"""Real algebraic numbers as (defining polynomial, isolating interval).

Root isolation uses Sturm sequences with dyadic bisection.  The defining
polynomial is factored over Q first, so every non-rational root is isolated
against an irreducible factor and bisection midpoints can never hit a root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from altbase.errors import DomainError, InvalidAlgebraic
from altbase.exactreal import poly as P


@dataclass(frozen=True, eq=False)
class RealAlgebraic:
    """A real root of ``poly`` lying in the open interval ``(lo, hi)``.

    ``poly`` holds primitive integer coefficients in ascending order.  Rational
    values use a linear polynomial and a degenerate interval ``lo == hi``.
    Instances are immutable; ``refine`` returns a new, tighter value.
    """

    poly: tuple
    lo: Fraction
    hi: Fraction
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        p = P.primitive_int(self.poly)
        if P.degree(p) < 1:
            raise InvalidAlgebraic("defining polynomial must be non-constant")
        object.__setattr__(self, "poly", p)
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if P.degree(p) == 1:
            r = Fraction(-p[0], p[1])
            object.__setattr__(self, "lo", r)
            object.__setattr__(self, "hi", r)
            return
        if not P.is_squarefree(p):
            raise InvalidAlgebraic("invalid algebraic input: defining polynomial is not squarefree")
        if not self.lo < self.hi:
            raise InvalidAlgebraic("isolating interval must satisfy lo < hi")
        if P.sign_at(p, self.lo) == 0 or P.sign_at(p, self.hi) == 0:
            raise InvalidAlgebraic("isolating interval endpoints must not be roots")
        if P.sturm_count(self._sturm, self.lo, self.hi) != 1:
            raise InvalidAlgebraic("interval does not isolate exactly one real root")

    # -- construction ---------------------------------------------------------

    @classmethod
    def rational(cls, q) -> "RealAlgebraic":
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q)

    @classmethod
    def _trusted(cls, p, lo, hi) -> "RealAlgebraic":
        # Skips the Sturm validation; callers guarantee the invariants.
        obj = object.__new__(cls)
        object.__setattr__(obj, "poly", p)
        object.__setattr__(obj, "lo", lo)
        object.__setattr__(obj, "hi", hi)
        object.__setattr__(obj, "_memo", {})
        return obj

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        return P.degree(self.poly)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError("value is irrational")
        return self.lo

    @property
    def _sturm(self):
        seq = self._memo.get("sturm")
        if seq is None:
            seq = P.sturm_sequence(self.poly)
            self._memo["sturm"] = seq
        return seq

    def __repr__(self):
        if self.is_rational:
            return f"RealAlgebraic({self.lo})"
        return f"RealAlgebraic({P.to_string(self.poly)}, ({self.lo}, {self.hi}) ~ {float(self):.12g})"

    def __float__(self):
        lo, hi = self.interval(60)
        return float((lo + hi) / 2)

    # -- refinement -----------------------------------------------------------

    def bisect(self) -> "RealAlgebraic":
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        s = P.sign_at(self.poly, mid)
        if s == 0:
            return RealAlgebraic.rational(mid)
        if s == P.sign_at(self.poly, self.lo):
            return RealAlgebraic._trusted(self.poly, mid, self.hi)
        return RealAlgebraic._trusted(self.poly, self.lo, mid)

    def refine(self, bits: int) -> "RealAlgebraic":
        """A copy whose interval width is at most 2**-bits."""
        if self.is_rational:
            return self
        cache = self._memo.setdefault("refined", {})
        best = None
        for b in sorted(cache):
            if b >= bits:
                best = cache[b]
                break
        if best is not None:
            return best
        start = self
        for b in sorted(cache, reverse=True):
            start = cache[b]
            break
        target = Fraction(1, 1 << bits)
        cur = start
        s_lo = P.sign_at(cur.poly, cur.lo)
        lo, hi = cur.lo, cur.hi
        while hi - lo > target:
            mid = (lo + hi) / 2
            s = P.sign_at(cur.poly, mid)
            if s == 0:
                cur = RealAlgebraic.rational(mid)
                cache[bits] = cur
                return cur
            if s == s_lo:
                lo = mid
            else:
                hi = mid
        cur = RealAlgebraic._trusted(self.poly, lo, hi)
        cache[bits] = cur
        return cur

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        r = self.refine(bits)
        return r.lo, r.hi

    def to_mpf(self, dps: int = 30):
        import mpmath

        bits = int(dps * 3.33) + 16
        lo, hi = self.interval(bits)
        with mpmath.workdps(dps + 10):
            m = (lo + hi) / 2
            return mpmath.mpf(m.numerator) / m.denominator

    # -- normal form ----------------------------------------------------------

    def minimal(self) -> "RealAlgebraic":
        """Same value, with its defining polynomial replaced by the minimal one."""
        if self.is_rational:
            return self
        m = self._memo.get("minimal")
        if m is not None:
            return m
        factors = P.factor_over_q(self.poly)
        if len(factors) == 1:
            m = self
        else:
            m = None
            for f in factors:
                if P.degree(f) == 1:
                    r = Fraction(-f[0], f[1])
                    if self.lo < r < self.hi:
                        m = RealAlgebraic.rational(r)
                        break
                    continue
                if P.sturm_count(P.sturm_sequence(f), self.lo, self.hi) == 1:
                    m = RealAlgebraic._trusted(f, self.lo, self.hi)
                    break
            assert m is not None
        self._memo["minimal"] = m
        return m

    def sign(self) -> int:
        m = self.minimal()
        if m.is_rational:
            return P.sign(m.lo)
        bits = 8
        while True:
            lo, hi = m.interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def same_value(self, other: "RealAlgebraic") -> bool:
        a, b = self.minimal(), other.minimal()
        if a.poly != b.poly:
            return False
        if a.is_rational:
            return a.lo == b.lo
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo >= hi:
            return False
        return P.sturm_count(a._sturm, lo, hi) == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.lo == other
        if isinstance(other, RealAlgebraic):
            return self.same_value(other)
        return NotImplemented

    def __hash__(self):
        m = self.minimal()
        return hash(m.poly) if not m.is_rational else hash(m.lo)

    # -- arithmetic (delegated to a number field) --------------------------------

    def _binop(self, other, op):
        from altbase.exactreal.field import make_context

        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.rational(other)
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        ctx = make_context([self, other])
        a, b = ctx.element_of(self), ctx.element_of(other)
        return op(a, b).to_real_algebraic()

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __neg__(self):
        if self.is_rational:
            return RealAlgebraic.rational(-self.lo)
        p = tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.poly))
        return RealAlgebraic._trusted(P.primitive_int(p), -self.hi, -self.lo)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def sqrt(self) -> "RealAlgebraic":
        """The nonnegative square root."""
        s = self.sign()
        if s < 0:
            raise DomainError("square root of a negative value")
        if s == 0:
            return RealAlgebraic.rational(0)
        m = self.minimal()
        if m.is_rational:
            q = m.lo
            rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
            if rn * rn == q.numerator and rd * rd == q.denominator:
                return RealAlgebraic.rational(Fraction(rn, rd))
        # p(X^2) has +-sqrt(r) for every root r of p; pick the positive root
        # whose square lies in m's isolating interval.
        sq = tuple(c if k % 2 == 0 else 0 for k, c in enumerate(P.compose(m.poly, (0, 0, 1))))
        candidates = [r for r in real_roots(sq) if r.sign() > 0]
        bits = 16
        while True:
            lo, hi = m.interval(bits)
            keep = []
            for r in candidates:
                rl, rh = r.interval(bits)
                if rh * rh >= lo and rl * rl <= hi:
                    keep.append(r)
            if len(keep) == 1:
                return keep[0].minimal()
            candidates = keep
            bits *= 2


def _isolate_irreducible(f: tuple) -> list[RealAlgebraic]:
    seq = P.sturm_sequence(f)
    B = P.root_bound(f)
    out = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        c = P.sturm_count(seq, a, b)
        if c == 0:
            continue
        if c == 1:
            out.append(RealAlgebraic._trusted(f, a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    return out


def real_roots(p) -> list[RealAlgebraic]:
    """All distinct real roots of a rational polynomial, ascending, with disjoint intervals."""
    p = P.trim(tuple(Fraction(c) for c in p))
    if not p:
        raise DomainError("real_roots of the zero polynomial")
    if P.degree(p) == 0:
        return []
    roots = []
    for f in P.factor_over_q(p):
        if P.degree(f) == 1:
            roots.append(RealAlgebraic.rational(Fraction(-f[0], f[1])))
        else:
            roots.extend(_isolate_irreducible(f))
    # Roots of distinct factors are distinct; refine until intervals separate.
    changed = True
    while changed:
        changed = False
        roots.sort(key=lambda r: (r.lo, r.hi))
        for i in range(len(roots) - 1):
            a, b = roots[i], roots[i + 1]
            if a.hi >= b.lo and not (a.is_rational and b.is_rational):
                roots[i] = a.bisect()
                roots[i + 1] = b.bisect()
                changed = True
    return roots


def count_sign_variation_roots(p) -> int:
    """Number of distinct real roots certified by a full Sturm sequence."""
    p = P.trim(tuple(Fraction(c) for c in p))
    seq = P.sturm_sequence(p)
    B = P.root_bound(p)
    return P.sturm_count(seq, -B, B)
