"""Dense univariate polynomials over Q.

A polynomial is a tuple of coefficients in *ascending* order of degree,
``(c0, c1, ..., cd)``, with no trailing zeros.  The zero polynomial is ``()``.
Coefficients are ``int`` or ``fractions.Fraction``; every routine accepts
either and returns Fractions unless documented otherwise.

Factorisation over Q and bivariate resultants are delegated to sympy; all the
rest (Euclid, Sturm sequences, interval evaluation) is done here on Fractions.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
X: Poly = (Fraction(0), Fraction(1))


def poly(coeffs: Iterable) -> Poly:
    """Build a trimmed polynomial from ascending coefficients."""
    return trim(tuple(Fraction(c) for c in coeffs))


def trim(p: Sequence) -> Poly:
    p = tuple(p)
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def degree(p: Poly) -> int:
    return len(p) - 1


def lc(p: Poly):
    return p[-1] if p else 0


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, c) -> Poly:
    if c == 0:
        return ZERO
    return tuple(a * c for a in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def power(p: Poly, k: int) -> Poly:
    out: Poly = (1,)
    base = p
    while k:
        if k & 1:
            out = mul(out, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return out


def shift_up(p: Poly, k: int) -> Poly:
    """Multiply by X**k."""
    return (0,) * k + tuple(p) if p else ZERO


def divmod_(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in a]
    db, lb = degree(b), Fraction(b[-1])
    if len(a) - 1 < db:
        return ZERO, trim(a)
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lb
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    return trim(q), trim(a[:db])


def rem(a: Poly, b: Poly) -> Poly:
    return divmod_(a, b)[1]


def monic(p: Poly) -> Poly:
    if not p:
        return ZERO
    c = Fraction(p[-1])
    return tuple(Fraction(a) / c for a in p)


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    c = Fraction(r0[-1])
    return monic(r0), scale(s0, 1 / c), scale(t0, 1 / c)


def derivative(p: Poly) -> Poly:
    return trim(tuple(i * p[i] for i in range(1, len(p))))


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p: Poly, q: Poly) -> Poly:
    """p(q(X))."""
    out: Poly = ZERO
    for c in reversed(p):
        out = add(mul(out, q), (c,) if c else ZERO)
    return out


def is_squarefree(p: Poly) -> bool:
    return degree(gcd(p, derivative(p))) <= 0


def squarefree_part(p: Poly) -> Poly:
    g = gcd(p, derivative(p))
    if degree(g) <= 0:
        return trim(p)
    return divmod_(p, g)[0]


def primitive_int(p: Poly) -> tuple:
    """Scale to integer coefficients with content 1 and positive leading term."""
    p = trim(p)
    if not p:
        return ()
    fr = [Fraction(c) for c in p]
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in fr), 1)
    ints = [int(c * den) for c in fr]
    g = reduce(math.gcd, ints, 0)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_at(p: Poly, x) -> int:
    return sign(evaluate(p, x))


def reverse(p: Poly) -> Poly:
    """X**deg * p(1/X)."""
    return trim(tuple(reversed(p)))


def scale_var(p: Poly, c) -> Poly:
    """p(c*X)."""
    out = []
    ck = Fraction(1)
    for a in p:
        out.append(a * ck)
        ck *= c
    return trim(out)


def translate(p: Poly, c) -> Poly:
    """p(X + c)."""
    return compose(p, (Fraction(c), Fraction(1)))


# --- Sturm sequences ---------------------------------------------------------

def sturm_sequence(p: Poly) -> list[Poly]:
    p = squarefree_part(p)
    seq = [p, derivative(p)]
    while seq[-1]:
        seq.append(neg(rem(seq[-2], seq[-1])))
    return seq[:-1]


def sign_variations(values: Iterable) -> int:
    count, last = 0, 0
    for v in values:
        s = sign(v)
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def sturm_count(seq: list[Poly], a, b) -> int:
    """Distinct real roots of seq[0] in (a, b]."""
    va = sign_variations(evaluate(q, a) for q in seq)
    vb = sign_variations(evaluate(q, b) for q in seq)
    return va - vb


def root_bound(p: Poly) -> Fraction:
    """A power of two strictly exceeding the modulus of every complex root."""
    p = trim(p)
    lead = abs(Fraction(p[-1]))
    m = max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))
    bound = 1 + m
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


# --- Interval evaluation -----------------------------------------------------

def imul(a: tuple, b: tuple) -> tuple:
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


def interval_eval(p: Poly, lo, hi) -> tuple:
    """Exact enclosure of {p(x) : lo <= x <= hi} by interval Horner.

    Runs on integers: with x = A/L and coefficients N_k/D, the scaled value
    D * L^deg * p(x) = sum N_k A^k L^(deg-k) is accumulated exactly.
    """
    if not p:
        return Fraction(0), Fraction(0)
    if lo == hi:
        v = evaluate(p, lo)
        return v, v
    lo, hi = Fraction(lo), Fraction(hi)
    cs = [Fraction(c) for c in p]
    D = 1
    for c in cs:
        D = D * c.denominator // math.gcd(D, c.denominator)
    N = [c.numerator * (D // c.denominator) for c in cs]
    L = lo.denominator * hi.denominator // math.gcd(lo.denominator, hi.denominator)
    A0, A1 = lo.numerator * (L // lo.denominator), hi.numerator * (L // hi.denominator)
    deg = len(N) - 1
    a0 = a1 = N[-1]
    Lk = 1
    for k in range(deg - 1, -1, -1):
        Lk *= L
        prods = (a0 * A0, a0 * A1, a1 * A0, a1 * A1)
        t = N[k] * Lk
        a0, a1 = min(prods) + t, max(prods) + t
    scale = D * Lk
    return Fraction(a0, scale), Fraction(a1, scale)


# --- sympy bridge ------------------------------------------------------------

def _to_sympy(p: Poly, var):
    import sympy

    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c) for c in p])), var, domain="QQ")


def _from_sympy(sp) -> Poly:
    return poly(Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs()))


def factor_over_q(p: Poly) -> list[tuple]:
    """Distinct irreducible factors of p over Q, as primitive integer polynomials."""
    import sympy

    x = sympy.Symbol("x")
    _, factors = _to_sympy(p, x).factor_list()
    out = []
    for f, _mult in factors:
        q = primitive_int(_from_sympy(f))
        if degree(q) >= 1:
            out.append(q)
    return out


def resultant_shift(g: Poly, q: Poly, t) -> tuple:
    """Res_z(q(z), g(X - t*z)) as a primitive integer polynomial in X.

    Its roots are all sums g_i + t*q_j over the roots g_i of g and q_j of q.
    """
    import sympy

    x, z = sympy.symbols("x z")
    gs = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * (x - t * z) ** k for k, c in enumerate(g))
    qs = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * z ** k for k, c in enumerate(q))
    r = sympy.resultant(sympy.Poly(qs, z), sympy.Poly(gs, z))
    rp = sympy.Poly(r, x)
    return primitive_int(_from_sympy(rp))


def resultant_in(F_coeffs_in_b: Sequence[Poly], mb: Poly) -> tuple:
    """Norm of a polynomial whose coefficients are polynomials in an algebraic b.

    ``F_coeffs_in_b[k]`` is the coefficient of Y**k written as a polynomial in
    b; ``mb`` is the minimal polynomial of b.  Returns Res_b(mb(b), F(Y, b)) as
    a primitive integer polynomial in Y.
    """
    import sympy

    y, b = sympy.symbols("y b")

    def sym(p, var):
        return sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * var ** k for k, c in enumerate(p))

    F = sum(sym(ck, b) * y ** k for k, ck in enumerate(F_coeffs_in_b))
    r = sympy.resultant(sympy.Poly(sym(mb, b), b), sympy.Poly(F, b))
    return primitive_int(_from_sympy(sympy.Poly(r, y)))


def to_string(p: Poly, var: str = "X") -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = Fraction(p[k])
        if c == 0:
            continue
        mag = abs(c)
        sgn = "-" if c < 0 else "+"
        if k == 0:
            body = str(mag)
        else:
            coef = "" if mag == 1 else f"{mag}*"
            body = f"{coef}{var}" + (f"^{k}" if k > 1 else "")
        terms.append((sgn, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    s = ("-" if first_sign == "-" else "") + first
    for sg, body in terms[1:]:
        s += f" {sg} {body}"
    return s
