import cmath
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from eisbasis.specialfn import (PoleError, WindowError, bessel_k, gamma, phi_mellin_closed, phi_mellin_numeric,
                                phi_polynomial, rgamma, whittaker_recursions, whittaker_w)
from eisbasis.verify import PK_TABLE, _parse_poly2


def close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


@settings(max_examples=80, deadline=None)
@given(st.floats(-8, 8), st.floats(-15, 15))
def test_gamma_against_mpmath(x, y):
    z = complex(x, y)
    if abs(z - round(x)) < 1e-3 and round(x) <= 0:
        return
    ref = complex(mpmath.gamma(z))
    assert abs(gamma(z) - ref) <= 1e-12 * abs(ref) + 1e-300


def test_gamma_poles():
    for n in range(0, 6):
        assert rgamma(-n) == 0
    assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-14


def test_duplication():
    s = 1.1 + 0.7j
    lhs = gamma(2 * s - 1)
    rhs = math.pi**-0.5 * cmath.exp((2 * s - 2) * math.log(2)) * gamma(s - 0.5) * gamma(s)
    assert close(lhs, rhs, 1e-11)


def gamma_ratio(s, d1, k):
    num = gamma(s - 0.5) * gamma(s) * gamma(1 - s + d1 / 2)
    den = gamma(s - 0.5 + d1 / 2) * gamma(s - k / 2) * gamma(1 - s + k / 2)
    return num / den


def test_gamma_ratio_constant():
    for k in range(5):
        d1 = k % 2
        for s in (0.3 + 0.8j, 1.7 - 0.4j):
            assert abs(1j ** (-k + d1) * gamma_ratio(s, d1, k) - 1) < 1e-10


@pytest.mark.parametrize("nu", [0.3, 2.5, 1 + 4j, 0.2 + 12j, 7.0])
@pytest.mark.parametrize("x", [0.05, 0.8, 5.0, 40.0])
def test_bessel_k_against_mpmath(nu, x):
    ref = complex(mpmath.besselk(nu, x))
    assert close(bessel_k(nu, x), ref, 1e-11)


@pytest.mark.parametrize("kappa", [0, 0.5, -0.5, 1.5, -2, 3])
@pytest.mark.parametrize("mu", [0.2, 0.9 + 0.4j, 2j])
@pytest.mark.parametrize("y", [0.3, 2.0, 25.0])
def test_whittaker_against_mpmath(kappa, mu, y):
    ref = complex(mpmath.whitw(kappa, mu, y))
    assert abs(whittaker_w(kappa, mu, y) - ref) <= 1e-10 * max(abs(ref), 1e-300) + 1e-14


def test_whittaker_window():
    with pytest.raises(WindowError):
        whittaker_w(0.5, 0.3, 250.0)
    with pytest.raises(WindowError):
        whittaker_w(4.5, 0.3, 1.0)
    with pytest.raises(WindowError):
        whittaker_w(0, 31j, 1.0)


def test_whittaker_recursions_grid():
    for alpha in (0.0, 0.5, 1.0):
        for beta in (0.4, 0.7 + 0.5j):
            for y in (0.5, 1.0, 3.0):
                r1, r2 = whittaker_recursions(alpha, beta, y)
                assert r1 < 1e-8 and r2 < 1e-8


def test_pk_examples():
    assert phi_polynomial(0, 1) == _parse_poly2("1")
    assert phi_polynomial(0, -1) == _parse_poly2("0")
    assert phi_polynomial(1, 1) == phi_polynomial(1, -1) == _parse_poly2("1")
    assert phi_polynomial(2, 1) == _parse_poly2("s - 1/2")
    assert phi_polynomial(2, -1) == _parse_poly2("2")
    # 2 (s - 1/2)^2 - beta^2 + 1/4 expanded
    assert phi_polynomial(4, 1) == _parse_poly2("2*s^2 - 2*s - beta^2 + 3/4")
    assert phi_polynomial(4, -1) == _parse_poly2("4*s - 2")


def test_pk_table():
    for (k, eps), text in PK_TABLE.items():
        assert phi_polynomial(k, eps) == _parse_poly2(text)


def test_pk_coefficients_rational():
    for k in range(9):
        for eps in (1, -1):
            assert all(isinstance(c, Fraction) for c in phi_polynomial(k, eps).terms.values())
    with pytest.raises(ValueError):
        phi_polynomial(9, 1)


def test_phi_closed_examples():
    assert phi_mellin_closed(0, -1, 2.3, 0.4) == 0
    s, b = 2.2 + 0.3j, 0.4 - 0.2j
    for eps in (1, -1):
        ref = gamma((s + b + (1 + eps) / 2) / 2) * gamma((s - b + (1 - eps) / 2) / 2)
        assert close(phi_mellin_closed(1, eps, s, b), ref, 1e-13)


def test_phi_numeric_examples():
    assert close(phi_mellin_numeric(3, 1, 2.2, 0.4 + 0.6j), phi_mellin_closed(3, 1, 2.2, 0.4 + 0.6j), 1e-7)
    ref = gamma((2.5 + 0.3) / 2) * gamma((2.5 - 0.3) / 2)
    assert close(phi_mellin_numeric(0, 1, 2.5, 0.3), ref, 1e-8)
    assert abs(phi_mellin_numeric(0, -1, 2.5, 0.3)) < 1e-9


@pytest.mark.parametrize("k", range(5))
@pytest.mark.parametrize("eps", [1, -1])
def test_phi_closed_vs_numeric(k, eps):
    for s, b in ((2.2, 0.4 + 0.6j), (3.1 + 0.5j, 0.3), (2.6 - 0.4j, -0.2 + 1.1j)):
        num = phi_mellin_numeric(k, eps, s, b)
        assert abs(num - phi_mellin_closed(k, eps, s, b)) < 1e-7 * max(1, abs(num))


def test_phi_beta_zero_by_continuity():
    for k in range(5):
        for eps in (1, -1):
            at0 = phi_mellin_closed(k, eps, 2.4, 0)
            near = phi_mellin_closed(k, eps, 2.4, 1e-7)
            assert abs(at0 - near) < 1e-5 * max(1, abs(at0))


def test_phi_pole():
    with pytest.raises(PoleError):
        phi_mellin_closed(1, 1, -1.0, 0.0)
