from fractions import Fraction

import mpmath
import pytest

from altbase.base import make_base
from altbase.errors import DomainError, UnresolvedError
from altbase.exactreal import make_context
from altbase.expansion import greedy_expand
from altbase.spectra import conjugate_bound_check, eq2_residual
from altbase.spectra.conjugates import Verdict, relative_minimal_polynomial, rotated, subfield_basis, with_point
from reals import ALPHA, PHI, PHI_SQ, SQRT3, TRIBONACCI


@pytest.fixture(autouse=True)
def high_precision():
    with mpmath.workdps(40):
        yield


def golden():
    return (1 + mpmath.sqrt(5)) / 2


def test_sqrt3_over_q_alpha_violates_the_bound():
    base = make_base([SQRT3, ALPHA])
    rep = conjugate_bound_check(base, 1, 1, cutoff=300)
    assert rep.periodic is None
    assert [int(c) for c in _rational(rep.relative_minpoly)] == [-3, 0, 1]
    (conj,) = rep.conjugates
    assert abs(conj.value + mpmath.sqrt(3)) < 1e-25
    alpha = (3 + mpmath.sqrt(21)) / 6
    assert abs(rep.bound - golden() / alpha) < 1e-20
    assert conj.verdict is Verdict.OUTSIDE
    assert rep.violated and rep.certifies_nonperiodic
    assert rep.summary() == "violation => non-periodicity certificate"


def _rational(coeffs):
    return [c.as_fraction() for c in coeffs]


def test_golden_ratio_within_bound():
    base = make_base([PHI])
    rep = conjugate_bound_check(base, 1, 1)
    assert abs(rep.bound - golden()) < 1e-25
    assert abs(rep.z_abs - 1 / golden()) < 1e-25
    (conj,) = rep.conjugates
    assert abs(conj.modulus - 1 / golden()) < 1e-25
    assert conj.within_bound is True
    assert rep.all_inside and not rep.violated and rep.periodic


def test_no_nontrivial_conjugates_when_beta_is_in_the_subfield():
    base = make_base([PHI, PHI])
    rep = conjugate_bound_check(base, 1, 1)
    assert rep.conjugates == () and len(rep.relative_minpoly) == 2
    assert rep.summary() == "no nontrivial conjugates"


def test_bound_needs_nonzero_y():
    base = make_base([PHI, PHI, PHI])
    with pytest.raises(DomainError):
        conjugate_bound_check(base, 1, 3)     # T^2(1) = 0
    with pytest.raises(DomainError):
        conjugate_bound_check(base, 1, 4)


def test_periodic_violation_would_be_a_contradiction():
    base = make_base([TRIBONACCI])
    rep = conjugate_bound_check(base, 1, 1)
    assert rep.periodic is True and not rep.violated
    assert not rep.certifies_nonperiodic


def test_subfield_and_relative_minpoly():
    ctx = make_context([ALPHA, SQRT3])
    a, s = ctx.element_of(ALPHA), ctx.element_of(SQRT3)
    sub = subfield_basis([a], ctx)
    assert len(sub) == 2
    rel = relative_minimal_polynomial(s, sub)
    assert _rational(rel) == [-3, 0, 1]
    # alpha over Q(sqrt 3): 3X^2 - 3X - 1 normalized to monic
    rel = relative_minimal_polynomial(a, subfield_basis([s], ctx))
    assert _rational(rel) == [Fraction(-1, 3), -1, 1]


def test_rotation_and_point_helpers():
    base = make_base([ALPHA, SQRT3])
    assert rotated(base, 2).betas == (base.betas[1], base.betas[0])
    b2, x = with_point(base, PHI)
    assert x * x == x + 1 and b2.context.degree == 8


# -- residual series --------------------------------------------------------------

def test_residual_vanishes_at_the_conjugate():
    base = make_base([PHI])
    lam = (1 - mpmath.sqrt(5)) / 2
    assert abs(eq2_residual(base, 1, 1, lam)) < 1e-12


def test_residual_at_beta_itself_is_not_zero():
    base = make_base([PHI])
    assert abs(eq2_residual(base, 1, 1, golden())) > 1e-3


def test_residual_negative_control():
    base = make_base([PHI])
    for lam in (-0.5, -0.7, 0.3 + 0.4j, 2.5):
        assert abs(eq2_residual(base, 1, 1, lam)) > 1e-3


def test_residual_divergence_and_continuation():
    base = make_base([PHI_SQ])
    rec = greedy_expand(base, 1)
    assert not rec.digits.is_finite()
    lam = (3 - mpmath.sqrt(5)) / 2      # the conjugate of phi^2, |lam| < 1
    with pytest.raises(DomainError):
        eq2_residual(base, 1, 1, lam)
    assert abs(eq2_residual(base, 1, 1, lam, continuation=True)) < 1e-20


def test_residual_needs_resolved_expansion():
    base = make_base([SQRT3, ALPHA])
    rec = greedy_expand(base, 1, cutoff=50)
    with pytest.raises(UnresolvedError):
        eq2_residual(base, 1, 1, -1.7, record=rec)
