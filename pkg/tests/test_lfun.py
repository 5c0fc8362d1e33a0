import cmath

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eisbasis.arith import prime_divisors
from eisbasis.characters import enumerate_characters, primitive_characters, principal
from eisbasis.lfun import PrecisionError, completed_l, dirichlet_l, hurwitz_zeta, root_number
from eisbasis.specialfn import PoleError


def primes_upto(n):
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return np.nonzero(sieve)[0]


def mp_l(s, chi):
    q = chi.modulus
    if s == 1:
        # mpmath.dirichlet does not cancel the pole here; use -(1/q) sum chi(a) digamma(a/q)
        return complex(-sum(chi(a) * mpmath.digamma(mpmath.mpf(a) / q) for a in range(1, q + 1)) / q)
    return complex(mpmath.dirichlet(s, [chi(n) for n in range(q)]))


def test_zeta_values():
    assert abs(dirichlet_l(2, principal(1)) - np.pi**2 / 6) < 1e-14
    assert abs(dirichlet_l(0, principal(1)) + 0.5) < 1e-14
    with pytest.raises(PoleError):
        dirichlet_l(1, principal(1))


def test_against_mpmath():
    for s in (2.0, 0.5 + 3j, -0.7 + 1.2j, 1.0, 0.3 - 8j):
        for q in (3, 4, 5, 7, 8, 12):
            for chi in primitive_characters(q):
                ref = mp_l(s, chi)
                assert abs(dirichlet_l(s, chi) - ref) < 1e-10 * max(1, abs(ref))


def test_hurwitz_against_mpmath():
    for s in (0.5 + 2j, 3.0, -1.5 + 0.5j):
        for a in (0.1, 0.5, 1.0, 2.7):
            ref = complex(mpmath.zeta(s, a))
            assert abs(hurwitz_zeta(s, a) - ref) < 1e-11 * max(1, abs(ref))


def test_precision_cap():
    with pytest.raises(PrecisionError):
        dirichlet_l(0.5 + 70j, principal(1))


def test_root_number_examples():
    assert root_number(principal(1)) == 1
    quad5 = [c for c in primitive_characters(5) if c.order == 2][0]
    assert abs(root_number(quad5) - 1) < 1e-12
    for q in range(1, 51):
        for chi in primitive_characters(q):
            assert abs(abs(root_number(chi)) - 1) < 1e-10
    with pytest.raises(ValueError):
        root_number(principal(6))


def test_functional_equation_grid():
    grid = [complex(x, y) for x in np.linspace(-0.5, 1.5, 5) for y in np.linspace(-2, 2, 5)]
    for q in range(1, 21):
        for chi in primitive_characters(q):
            eps = root_number(chi)
            for s in grid:
                if chi.parity == 0 and s in (0, 1):
                    continue  # removable: Gamma pole against a zero (or the zeta pole)
                lhs = completed_l(s, chi)
                rhs = eps * completed_l(1 - s, chi.conj())
                assert abs(lhs - rhs) < 1e-9 * max(1, abs(lhs))


def test_completed_examples():
    assert abs(completed_l(0.3, principal(1)) - completed_l(0.7, principal(1))) < 1e-9
    for chi in primitive_characters(5) + primitive_characters(8):
        if chi.order == 2 and chi.parity == 0:
            assert abs(completed_l(0.7, chi).imag) < 1e-12


def test_euler_product_tail():
    chi = primitive_characters(7)[1]
    s = 2 + 0.5j
    ref = dirichlet_l(s, chi)
    errs = []
    for P in (10, 100, 1000, 10000):
        prod = 1
        for p in primes_upto(P):
            prod /= 1 - chi(int(p)) * cmath.exp(-s * np.log(p))
        errs.append(abs(prod - ref))
        # every n left out of the partial product exceeds P, so the tail is below sum_{n>P} n^-2 < 1/P
        assert errs[-1] < 1 / P
    assert all(a > b for a, b in zip(errs, errs[1:]))


def test_imprimitive_equals_core_times_euler_factors():
    s = 1.7 + 0.3j
    for q in (3, 4, 5, 7):
        for chi in primitive_characters(q):
            for m in (2, 3, 6, 10):
                lifted = chi.lift(q * m)
                corr = 1
                for p in prime_divisors(q * m):
                    corr *= 1 - chi(p) * cmath.exp(-s * np.log(p))
                assert abs(dirichlet_l(s, lifted) - dirichlet_l(s, chi) * corr) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30), st.data(), st.floats(1.2, 3), st.floats(-5, 5))
def test_conjugation_symmetry(q, data, x, y):
    chi = data.draw(st.sampled_from(enumerate_characters(q)))
    s = complex(x, y)
    assert abs(dirichlet_l(s, chi).conjugate() - dirichlet_l(s.conjugate(), chi.conj())) < 1e-11
