from fractions import Fraction

import mpmath
import pytest

from altbase.errors import DomainError
from altbase.spectra import kappa, table1_bound, upsilon


@pytest.fixture(autouse=True)
def high_precision():
    with mpmath.workdps(40):
        yield


def test_golden_row():
    assert abs(table1_bound("scaled_positive", Fraction(1, 2)) - (1 + mpmath.sqrt(5)) / 2) < 1e-25
    with pytest.raises(DomainError):
        table1_bound("scaled_positive", 2)


def test_kappa_row():
    k = kappa()
    assert k.poly in ((-1, 1, -2, 1), (1, -1, 2, -1))
    assert abs(float(k) - 1.754877666) < 1e-9
    km = k.to_mpf(40)
    assert abs(km**3 - 2 * km**2 + km - 1) < 1e-30
    assert abs(table1_bound("scaled_negative", 1) - km) < 1e-25
    assert abs(table1_bound("scaled_negative", 2) - km / 2) < 1e-25
    assert abs(table1_bound("scaled_negative", Fraction(1, 3)) - km) < 1e-25


def test_monomial_row():
    phi = (1 + mpmath.sqrt(5)) / 2
    assert abs(upsilon(1, phi) - phi) < 1e-25
    assert abs(table1_bound("monomial", 1, n=1, alpha=phi) - phi) < 1e-12
    u = upsilon(2, 3)
    assert abs(u - (3 + mpmath.sqrt(13)) / 2) < 1e-25
    assert abs(table1_bound("monomial", Fraction(1, 8), n=2, alpha=3) - u * 2) < 1e-25


def test_invalid_cases():
    with pytest.raises(DomainError):
        table1_bound("scaled_negative", 0)
    with pytest.raises(DomainError):
        table1_bound("monomial", 1, n=0, alpha=2)
    with pytest.raises(DomainError):
        table1_bound("monomial", 1, n=1)
    with pytest.raises(DomainError):
        table1_bound("cubic", 1)
