from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altbase.base import Alphabet, alphabet, make_base, partial_product, shift
from altbase.errors import DomainError
from altbase.exactreal import make_context
from reals import PHI, PHI_INV, PHI_SQ, SQRT3, SIGNED_ENTRIES, GAMMAS


def ctx_elem(value):
    ctx = make_context([value])
    return ctx, ctx.element_of(value)


def test_alphabet_examples():
    ctx = make_context([PHI])
    zero = ctx.zero()
    two = alphabet(ctx.rational(2), zero)
    assert two == Alphabet(0, 2, False) and list(two.digits()) == [0, 1]
    assert alphabet(ctx.element_of(PHI), zero) == Alphabet(0, 1, True)
    neg = alphabet(-ctx.element_of(PHI), zero)
    assert list(neg.digits()) == [-2, -1, 0] and neg.upper_inclusive


def test_alphabet_with_offset_gamma():
    ctx = make_context([PHI])
    # gamma = -1/2, beta = 3: beta + gamma*(beta-1) = 2 is an integer, so the top is excluded
    a = alphabet(ctx.rational(3), ctx.rational(Fraction(-1, 2)))
    assert a == Alphabet(-1, 2, False)


def test_alphabet_rejects_zero():
    ctx = make_context([PHI])
    with pytest.raises(DomainError):
        alphabet(ctx.zero(), ctx.zero())


@given(st.sampled_from(SIGNED_ENTRIES), st.sampled_from(GAMMAS))
def test_alphabet_independent_of_representation(beta, gamma):
    # the same real lifted into two different fields gives the same alphabet
    small = make_context([beta, gamma])
    big = make_context([beta, gamma, SQRT3, PHI])
    a1 = alphabet(small.element_of(beta), small.element_of(gamma))
    a2 = alphabet(big.element_of(beta), big.element_of(gamma))
    assert a1 == a2
    assert a1.lower <= a1.upper


def test_partial_product_examples():
    base = make_base([PHI_INV, PHI_SQ], extras=[PHI])
    assert partial_product(base, 1, 0) == 1
    assert partial_product(base, 1, 2) == base.lift(PHI)
    s3 = make_base([SQRT3])
    assert partial_product(s3, 1, 2) == 3
    assert s3.total == s3.lift(SQRT3)
    with pytest.raises(DomainError):
        partial_product(base, 3, 1)


def test_shift_examples():
    base = make_base([PHI, SQRT3, Fraction(5, 2)])
    b = base.betas
    assert shift(base, 2).betas == (b[2], b[0], b[1])
    assert shift(base, 3).betas == b
    pair = make_base([PHI_INV, PHI_SQ])
    assert shift(pair, 1).betas == (pair.betas[1], pair.betas[0])
    assert shift(pair, 1).context is pair.context


@given(st.integers(0, 10), st.integers(0, 10))
def test_shift_composes(a, b):
    base = make_base([PHI, SQRT3, Fraction(5, 2)])
    assert shift(shift(base, a), b).betas == shift(base, (a + b) % 3).betas


def test_constructor_enforces_growth():
    with pytest.raises(DomainError):
        make_base([Fraction(1, 2)])
    with pytest.raises(DomainError):
        make_base([PHI, PHI_INV])   # product exactly 1
    with pytest.raises(DomainError):
        make_base([0, 3])
    assert make_base([Fraction(1, 2), 3]).n == 2


def test_gamma_and_extras_share_the_field():
    base = make_base([SQRT3], gamma=Fraction(-1, 2), extras=[PHI])
    assert base.gamma == Fraction(-1, 2)
    assert base.lift(PHI) * base.lift(PHI) == base.lift(PHI) + 1
