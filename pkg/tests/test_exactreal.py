from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from altbase.errors import ContextMismatch, DomainError, FieldTooLarge, InvalidAlgebraic
from altbase.exactreal import (
    RealAlgebraic,
    complex_roots,
    count_sign_variation_roots,
    field_arith,
    floor_of,
    make_context,
    minimal_polynomial,
    real_roots,
    sign_of,
)
from altbase.exactreal import poly as P
from reals import ALPHA, PHI, PLASTIC, SQRT3

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)


def sympy_minpoly(expr):
    x = sympy.Symbol("x")
    p = sympy.Poly(sympy.minimal_polynomial(expr, x), x)
    return tuple(int(c) for c in reversed(p.all_coeffs()))


def normalized(p):
    p = P.primitive_int(p)
    return p if p[-1] > 0 else tuple(-c for c in p)


# -- contexts -----------------------------------------------------------------

def test_context_of_sqrt3_has_degree_two():
    ctx = make_context([SQRT3])
    assert ctx.degree == 2
    assert ctx.element_of(SQRT3) ** 2 == 3


def test_compositum_holds_both_values():
    ctx = make_context([ALPHA, SQRT3])
    assert ctx.degree == 4
    for v, radicand, shift, den in ((ALPHA, 21, 3, 6), (SQRT3, 3, 0, 1)):
        lo, hi = ctx.element_of(v).interval(256)
        assert hi - lo < Fraction(1, 10**30)
        with mpmath.workdps(60):
            exact = (shift + mpmath.sqrt(radicand)) / den
            assert mpmath.mpf(lo.numerator) / lo.denominator <= exact + mpmath.mpf(10) ** -40
            assert mpmath.mpf(hi.numerator) / hi.denominator >= exact - mpmath.mpf(10) ** -40


def test_rational_context_is_q():
    assert make_context([Fraction(2, 3)]).degree == 1


def test_degree_cap():
    with pytest.raises(FieldTooLarge):
        make_context([SQRT3, root2(), root5()], degree_cap=4)


def root2():
    return real_roots((-2, 0, 1))[1]


def root5():
    return real_roots((-5, 0, 1))[1]


def test_non_algebraic_input_rejected():
    with pytest.raises(InvalidAlgebraic):
        make_context([1.5])


def test_non_squarefree_polynomial_rejected():
    with pytest.raises(InvalidAlgebraic):
        RealAlgebraic((1, -2, 1), Fraction(0), Fraction(2))


# -- arithmetic ---------------------------------------------------------------

def test_field_arith_examples():
    ctx = make_context([SQRT3])
    s = ctx.element_of(SQRT3)
    assert field_arith("add", s, -s).is_zero()
    assert field_arith("mul", s, s) == 3
    pctx = make_context([PHI])
    p = pctx.element_of(PHI)
    assert field_arith("mul", p, p) == p + 1


def test_field_arith_errors():
    ctx = make_context([SQRT3])
    with pytest.raises(ZeroDivisionError):
        field_arith("div", ctx.element_of(SQRT3), ctx.zero())
    other = make_context([PHI])
    with pytest.raises(ContextMismatch):
        field_arith("add", ctx.element_of(SQRT3), other.element_of(PHI))


@given(fractions, fractions)
def test_rational_arithmetic_is_exact(p, q):
    ctx = make_context([p, q])
    a, b = ctx.element_of(p), ctx.element_of(q)
    assert field_arith("add", a, b).as_fraction() == p + q
    assert field_arith("sub", a, b).as_fraction() == p - q
    assert field_arith("mul", a, b).as_fraction() == p * q
    if q:
        assert field_arith("div", a, b).as_fraction() == p / q


@given(fractions, fractions)
def test_quadratic_arithmetic_matches_sympy(p, q):
    ctx = make_context([SQRT3])
    a = ctx.rational(p) + ctx.element_of(SQRT3) * q
    expr = sympy.Rational(p.numerator, p.denominator) + sympy.sqrt(3) * sympy.Rational(q.numerator, q.denominator)
    sq = a * a
    assert abs(float(sq) - float(expr**2)) <= 1e-9 * max(1.0, abs(float(expr**2)))
    if not a.is_zero():
        inv = a.inverse()
        assert a * inv == 1


# -- signs and floors ---------------------------------------------------------

def test_sign_examples():
    ctx = make_context([ALPHA, SQRT3, PHI])
    assert sign_of(ctx.zero()) == 0
    assert sign_of(ctx.element_of(PHI) - 1) == 1
    assert sign_of(ctx.element_of(ALPHA) - ctx.element_of(SQRT3)) == -1


def test_floor_examples():
    ctx = make_context([ALPHA, SQRT3, PHI])
    assert floor_of(ctx.element_of(PHI)) == 1
    assert floor_of(ctx.element_of(ALPHA) * ctx.element_of(SQRT3)) == 2
    assert floor_of(-ctx.element_of(PHI)) == -2
    assert floor_of(ctx.rational(-3)) == -3


def test_sign_of_tiny_difference():
    # u = 1 + sqrt 2 has norm -1, so u^40 + u^-40 is an integer and u^40 sits 5e-16 below it.
    ctx = make_context([root2()])
    u = ctx.element_of(root2()) + 1
    tiny = u ** -40
    assert sign_of(tiny) == 1
    assert sign_of(-tiny) == -1
    trace = u ** 40 + tiny
    assert trace.is_rational() and trace.as_fraction().denominator == 1
    assert floor_of(u ** 40) == trace.as_fraction() - 1
    assert floor_of(trace) == trace.as_fraction()


_field = make_context([ALPHA, SQRT3])


@given(st.lists(st.integers(-30, 30), min_size=4, max_size=4), st.integers(1, 20))
def test_floor_brackets_element(coords, den):
    a = _field.element([Fraction(c, den) for c in coords])
    k = floor_of(a)
    assert sign_of(a - k) in (0, 1)
    assert sign_of(a - k - 1) == -1


@given(st.lists(st.integers(-9, 9), min_size=4, max_size=4).filter(any), st.integers(1, 9))
def test_minimal_polynomial_vanishes(coords, den):
    a = _field.element([Fraction(c, den) for c in coords])
    m = minimal_polynomial(a)
    acc = _field.zero()
    for c in reversed(m):
        acc = acc * a + c
    assert acc.is_zero()


# -- minimal polynomials ------------------------------------------------------

def test_minimal_polynomial_examples():
    assert normalized(minimal_polynomial(make_context([PHI]).element_of(PHI))) == (-1, -1, 1)
    assert normalized(minimal_polynomial(make_context([PHI]).rational(3))) == (-3, 1)
    ctx = make_context([ALPHA, SQRT3])
    assert normalized(minimal_polynomial(ctx.element_of(ALPHA))) == (-1, -3, 3)


def test_minimal_polynomial_against_sympy():
    ctx = make_context([ALPHA, SQRT3])
    a, s = ctx.element_of(ALPHA), ctx.element_of(SQRT3)
    expr_a = (3 + sympy.sqrt(21)) / 6
    for elem, expr in ((a * s, expr_a * sympy.sqrt(3)), (a + s, expr_a + sympy.sqrt(3)), (a / s - 2, expr_a / sympy.sqrt(3) - 2)):
        assert normalized(minimal_polynomial(elem)) == normalized(sympy_minpoly(expr))


# -- real roots ---------------------------------------------------------------

def test_real_roots_examples():
    roots = real_roots((-1, -1, 1))
    assert [round(float(r), 12) for r in roots] == [round((1 - 5**0.5) / 2, 12), round((1 + 5**0.5) / 2, 12)]
    kappa = real_roots((-1, 1, -2, 1))
    assert len(kappa) == 1 and abs(float(kappa[0]) - 1.754877666246693) < 1e-12
    assert real_roots((1, 0, 1)) == []
    with pytest.raises(DomainError):
        real_roots(())


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_real_roots_isolate(coeffs):
    p = P.squarefree_part(P.poly(coeffs))
    if P.degree(p) < 1:
        return
    roots = real_roots(p)
    assert len(roots) == count_sign_variation_roots(p)
    x = sympy.Symbol("x")
    expected = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p])), x).count_roots()
    assert len(roots) == expected
    for r in roots:
        lo, hi = r.interval(8)
        s_lo, s_hi = P.sign_at(p, lo), P.sign_at(p, hi)
        assert lo == hi and s_lo == 0 or s_lo * s_hi < 0
    for a, b in zip(roots, roots[1:]):
        assert a.interval(8)[1] < b.interval(8)[0]


# -- complex roots ------------------------------------------------------------

def test_complex_roots_examples():
    vals = sorted(float(r.value.real) for r in complex_roots((-1, -1, 1)))
    assert vals == pytest.approx([-0.6180339887, 1.6180339887], abs=1e-9)
    vals = sorted(float(r.value.real) for r in complex_roots((-3, 0, 1)))
    assert vals == pytest.approx([-1.7320508076, 1.7320508076], abs=1e-9)


def test_plastic_roots():
    roots = complex_roots((-1, -1, 0, 1), precision=40)
    real = [r for r in roots if abs(r.value.imag) < 1e-30]
    pair = [r for r in roots if abs(r.value.imag) >= 1e-30]
    assert len(real) == 1 and abs(float(real[0].value.real) - float(PLASTIC)) < 1e-15
    assert len(pair) == 2
    for r in pair:
        assert abs(float(r.modulus) - 0.8688369618) < 1e-9
    with mpmath.workdps(50):
        prod = real[0].value * pair[0].value * pair[1].value
        assert abs(abs(prod) - 1) < mpmath.mpf(10) ** -35


def test_complex_roots_rejects_repeated_root():
    with pytest.raises(DomainError):
        complex_roots((1, -2, 1))
    with pytest.raises(DomainError):
        complex_roots(())


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=8).filter(lambda c: c[-1] != 0 and c[0] != 0))
def test_complex_roots_sum_and_radii(coeffs):
    p = P.poly(coeffs)
    if not P.is_squarefree(p):
        return
    precision = 25
    roots = complex_roots(p, precision=precision)
    assert len(roots) == P.degree(p)
    with mpmath.workdps(precision + 10):
        total = mpmath.fsum(r.value for r in roots)
        expected = -mpmath.mpf(coeffs[-2]) / coeffs[-1]
        assert abs(total - expected) < mpmath.mpf(10) ** (-precision + 2)
        for r in roots:
            assert r.radius < mpmath.mpf(10) ** -precision
    oracle = [complex(z) for z in sympy.Poly(list(reversed(coeffs)), sympy.Symbol("x")).nroots(n=30)]
    got = [complex(r.value) for r in roots]
    for z in oracle:
        assert min(abs(z - g) for g in got) < 1e-12
