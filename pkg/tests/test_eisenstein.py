import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eisbasis.characters import enumerate_characters, primitive_characters, principal
from eisbasis.eisenstein.fourier import (completion_factor, eval_completed_fourier, eval_pair_fourier,
                                         lambda_coeff)
from eisbasis.eisenstein.identities import (automorphy_residual, coefficient_fe_residual, constant_term_symmetry,
                                            functional_equation_residual, holomorphic_check, holomorphic_qexpansion,
                                            periodicity_residual, random_gamma0, weight_one_proportionality)
from eisbasis.eisenstein.lattice import TruncationSpec
from eisbasis.eisenstein.pairs import CharacterPair
from eisbasis.eisenstein.series import eval_cusp_coset, eval_cusp_coset_naive, eval_pair_lattice
from eisbasis.lfun import dirichlet_l
from eisbasis.specialfn import WindowError
from eisbasis.modgroup import singular_cusps
from eisbasis.verify import primitive_pairs

Z0 = 0.3 + 1.1j


def brute_pair(pair, z, s, radius=160):
    """(q2 y)^s [delta_{q1=1} + sum_{c>=1, d, (c,d)=1} chi1(c) chi2(d) j(c q2 z + d)^-k |c q2 z + d|^-2s]."""
    q2, k = pair.q2, pair.k
    c = np.arange(1, radius + 1)[:, None]
    d = np.arange(-radius * 6, radius * 6 + 1)[None, :]
    c, d = np.broadcast_arrays(c, d)
    ok = np.gcd(c, d) == 1
    X = c * q2 * z + d
    w = pair.chi1.values[c % pair.q1] * pair.chi2.values[d % pair.q2]
    terms = np.where(ok, w * np.abs(X) ** (-2 * s) * (np.abs(X) / X) ** k, 0)
    total = terms.sum() + (1 if pair.q1 == 1 else 0)
    return cmath.exp(s * math.log(q2 * z.imag)) * total


def test_pair_validation():
    c3 = primitive_characters(3)[0]
    with pytest.raises(ValueError):
        CharacterPair(c3, principal(1), 0)
    p = CharacterPair(c3, principal(1), 1)
    assert p.level == 3 and p.nebentypus() == c3


@pytest.mark.parametrize("qs", [(1, 1), (3, 1), (1, 4), (3, 4), (5, 5), (4, 3)])
def test_lattice_against_direct_sum(qs):
    for c1 in primitive_characters(qs[0]):
        for c2 in primitive_characters(qs[1]):
            pair = CharacterPair(c1, c2, (c1.parity + c2.parity) % 2)
            s = 3.0 + 0.4j
            ref = brute_pair(pair, Z0, s)
            assert abs(eval_pair_lattice(pair, Z0, s) - ref) < 1e-7 * max(1, abs(ref))


def test_lattice_dilation():
    pair = CharacterPair(primitive_characters(3)[0], principal(1), 1)
    assert abs(eval_pair_lattice(pair, Z0, 1.4, dilation=3) - eval_pair_lattice(pair, 3 * Z0, 1.4)) < 1e-13


def test_three_evaluators_agree():
    s = 1.5
    for N in range(1, 31):
        for pair in primitive_pairs(N):
            if pair.k > 1:
                continue
            for z in (0.3 + 1.1j, -0.2 + 1.6j):
                a = eval_pair_lattice(pair, z, s)
                b = eval_pair_fourier(pair, z, s)
                assert abs(a - b) < 1e-7 * max(1, abs(a))


def test_coset_against_naive():
    N = 6
    for psi in enumerate_characters(N):
        for cusp in singular_cusps(N, psi):
            s = 2.5
            a = eval_cusp_coset(N, psi, cusp, Z0, s, psi.parity)
            b = eval_cusp_coset_naive(N, psi, cusp, Z0, s, psi.parity, radius=60)
            assert abs(a - b) < 1e-5 * max(1, abs(a))


def test_weight_nebentypus_transformation():
    rng = np.random.default_rng(7)
    for pair in primitive_pairs(12) + primitive_pairs(5) + primitive_pairs(1, 4):
        done = 0
        while done < 5:
            g = random_gamma0(pair.level, rng, size=1)
            if g.c == 0:
                continue
            # |cz + d| = 1 keeps both z and gamma z at height 1/|c|
            z = -g.d / g.c + 0.1 + 1j / abs(g.c)
            assert automorphy_residual(pair, g, z, 1.4) < 1e-7
            done += 1
        assert periodicity_residual(pair, Z0, 1.6 + 0.5j) < 1e-12


def test_lambda_multiplicative():
    s = 0.6 + 0.8j
    for pair in primitive_pairs(12) + primitive_pairs(15) + primitive_pairs(9):
        for m in range(1, 31):
            for n in range(1, 31):
                if math.gcd(m, n) == 1:
                    prod = lambda_coeff(pair, m, s) * lambda_coeff(pair, n, s)
                    assert abs(lambda_coeff(pair, m * n, s) - prod) < 1e-12 * max(1, abs(prod))


def test_dirichlet_series_partial_sums():
    pair = primitive_pairs(15)[1]
    s, u = 0.5 + 0.3j, 2.0
    ref = dirichlet_l(u + s - 0.5, pair.chi1) * dirichlet_l(u + 0.5 - s, pair.chi2.conj())
    lam = np.array([lambda_coeff(pair, n, s) for n in range(1, 10001)])
    ns = np.arange(1, 10001)
    partial = np.cumsum(lam * ns ** (-u))
    for X in (10, 100, 1000, 10000):
        # |lambda(n)| <= d(n) on Re s = 1/2 and sum_{n>X} d(n) n^-2 < (log X + 2)/X
        assert abs(partial[X - 1] - ref) < (math.log(X) + 2) / X


def test_functional_equation_and_coefficients():
    for pair in primitive_pairs(12) + primitive_pairs(7) + primitive_pairs(1):
        assert functional_equation_residual(pair, Z0, 0.6 + 0.8j) < 1e-7
        assert coefficient_fe_residual(pair, 0.6 + 0.8j) < 1e-12
        assert constant_term_symmetry(pair, 1.3, 0.6 + 0.8j) < 1e-10


def test_completion_factor_nonzero_generic():
    for pair in primitive_pairs(12):
        assert abs(completion_factor(pair, 1.4)) > 1e-6


def test_fourier_underflow_flag():
    pair = CharacterPair(principal(1), principal(1), 0)
    val, info = eval_completed_fourier(pair, 0.1 + 20j, 1.4, with_info=True)
    assert info["underflow"] > 0


def test_fourier_higher_weight_against_lattice():
    for k in (2, 3, 4):
        for pair in primitive_pairs(12, k)[:2] + primitive_pairs(5, k)[:2]:
            a = eval_pair_lattice(pair, Z0, 1.7)
            b = eval_pair_fourier(pair, Z0, 1.7)
            assert abs(a - b) < 1e-8 * max(1, abs(a))


def test_holomorphic_examples():
    one = principal(1)
    e4 = CharacterPair(one, one, 4)
    coeffs = holomorphic_qexpansion(e4, 5)
    assert [complex(c).real for c in coeffs] == [1, 9, 28, 73, 126]
    assert holomorphic_check(e4, Z0).passed
    c3 = primitive_characters(3)[0]
    for pair in (CharacterPair(one, c3, 3), CharacterPair(c3, one, 3)):
        assert holomorphic_check(pair, -0.1 + 0.8j).passed


def test_weight_one_proportionality():
    # at s = 1/2 a weight-one pair and its dual have the same coefficients, so the series are proportional
    for q in range(1, 21):
        for pair in primitive_pairs(q, 1):
            assert weight_one_proportionality(pair) < 1e-12
    pair = primitive_pairs(15, 1)[0]
    ratios = [eval_completed_fourier(pair, z, 0.5) / eval_completed_fourier(pair.dual(), z, 0.5)
              for z in (0.3 + 1.1j, -0.2 + 0.9j)]
    assert abs(ratios[0] - ratios[1]) < 1e-9 * abs(ratios[0])
    with pytest.raises(ValueError):
        weight_one_proportionality(primitive_pairs(12, 0)[0])


def test_refusals():
    one = CharacterPair(principal(1), principal(1), 0)
    with pytest.raises(ValueError):
        TruncationSpec(decay=5)
    with pytest.raises(ValueError):
        eval_pair_lattice(one, 0.3 - 1j, 1.4)
    with pytest.raises(WindowError):
        eval_pair_lattice(one, Z0, 1.01)
    with pytest.raises(WindowError):
        eval_pair_lattice(one, 0.3 + 1e-4j, 1.4)


@settings(max_examples=25, deadline=None)
@given(st.floats(-0.5, 0.5), st.floats(0.8, 2.0), st.floats(1.2, 2.0), st.floats(-3, 3))
def test_lattice_fourier_property(x, y, sr, si):
    pair = CharacterPair(primitive_characters(3)[0], primitive_characters(4)[0], 0)
    z, s = complex(x, y), complex(sr, si)
    a = eval_pair_lattice(pair, z, s)
    b = eval_pair_fourier(pair, z, s)
    assert abs(a - b) < 1e-7 * max(1, abs(a))
