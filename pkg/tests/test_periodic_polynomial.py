import pytest
import sympy
from hypothesis import assume, given

from altbase.base import make_base
from altbase.errors import DomainError, UnresolvedError
from altbase.expansion import DigitWord, evaluate_digits, greedy_expand
from altbase.exactreal import poly as P
from altbase.exactreal.field import solve_dependency
from altbase.spectra import algebraicity_certificate, eq1_polynomial, leading_coefficients
from altbase.spectra.eq1 import kp_eval
from reals import ALPHA, PHI, SQRT3, pisot_pairs, small_rationals

W = DigitWord.periodic


def test_golden_ratio_recovers_its_minimal_polynomial():
    base = make_base([PHI])
    pp = eq1_polynomial(base, 1, greedy_expand(base, 1).digits, 1)
    assert pp.is_rational()
    assert pp.evaluate(base.betas[0]).is_zero()
    f = pp.rational_minimal_factor(base.betas[0])
    assert P.primitive_int(f) in ((-1, -1, 1), (1, 1, -1))
    # independent: sympy factorization of the same rational polynomial
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in pp.rational_coefficients()])), x)
    assert any(fac.as_expr().expand() in (x**2 - x - 1, -(x**2) + x + 1) for fac, _ in sympy.factor_list(poly)[1])


def test_integer_base_gives_linear_factor():
    base = make_base([5])
    pp = eq1_polynomial(base, 1, W((5,), (0,)), 1)
    assert P.primitive_int(pp.rational_minimal_factor(base.betas[0])) in ((-5, 1), (5, -1))


def test_alpha_is_algebraic_over_q_sqrt3():
    base = make_base([ALPHA, SQRT3])
    word = greedy_expand(base, 1).digits
    pp = eq1_polynomial(base, 1, word, 1)
    assert pp.degree >= 1
    assert pp.evaluate(base.betas[0]).is_zero()
    # coefficients avoid beta_1: they live in Q(sqrt 3) = span{1, sqrt 3}
    s3 = base.betas[1]
    for c in pp.coefficients:
        p, q = in_q_sqrt3(c, s3)
        assert c == base.context.rational(p) + s3 * q
    cert = algebraicity_certificate(base, 1, word, 1)
    assert cert.status == "algebraic-with-witness"
    assert cert.y == 1


def in_q_sqrt3(c, s3):
    """Rationals p, q with c = p + q*sqrt3 (fails if c is outside Q(sqrt 3))."""
    sol = solve_dependency([c.context.one().vector, s3.vector], c.vector)
    assert sol is not None, "coefficient is not in Q(sqrt 3)"
    return sol[0], sol[1]


def test_certificate_inconclusive_when_orbit_hits_zero():
    base = make_base([PHI, PHI])
    word = greedy_expand(base, 1).digits   # 1 1 | (0): T^2(1) = 0
    cert = algebraicity_certificate(base, 1, word, 2)
    assert cert.status == "algebraic-with-witness"
    assert cert.witness.degree >= 1
    assert not cert.y.is_zero()
    base3 = make_base([PHI, PHI, PHI])
    cert = algebraicity_certificate(base3, 1, greedy_expand(base3, 1).digits, 3)
    assert cert.status == "inconclusive" and cert.witness is None


def test_periodic_polynomial_errors():
    base = make_base([PHI])
    with pytest.raises(UnresolvedError):
        eq1_polynomial(base, 1, DigitWord.unresolved([1, 0]), 1)
    with pytest.raises(DomainError):
        eq1_polynomial(base, 1, W((1, 1), (0,)), 2)


@given(pisot_pairs(), small_rationals)
def test_identity_holds_exactly(pair, x):
    base = make_base(pair)
    rec = greedy_expand(base, x, cutoff=3000)
    assume(rec.resolved)
    assert evaluate_digits(base, rec.digits) == x
    for i in (1, 2):
        pp = eq1_polynomial(base, x, rec.digits, i)
        assert pp.k % 2 == 0 and pp.m % 2 == 0
        bi = base.beta(i)
        assert kp_eval(list(pp.lhs), bi) == kp_eval(list(pp.rhs), bi)
        assert pp.evaluate(bi).is_zero()
        lc, rc = leading_coefficients(base, x, rec.digits, i)
        assert (lc != rc) == (not rec.states[i - 1].is_zero())
