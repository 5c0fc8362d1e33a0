import cmath
from fractions import Fraction
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eisbasis.arith import divisors, euler_phi, inverse_mod, lcm
from eisbasis.characters import enumerate_characters, primitive_characters, principal
from eisbasis.modgroup import (atkin_lehner_matrix, count_singular, enumerate_cusps, exact_divisors, is_singular,
                               kloosterman, make_cusp, scaling_matrix, singular_cusps, stabilizer)


def test_cusp_counts():
    assert len(enumerate_cusps(1)) == 1
    assert len(enumerate_cusps(4)) == 3
    assert len(enumerate_cusps(12)) == 6
    for N in range(1, 61):
        cs = enumerate_cusps(N)
        assert len(cs) == sum(euler_phi(gcd(f, N // f)) for f in divisors(N))
        assert len({c.key() for c in cs}) == len(cs)


def test_cusp_invariants():
    for N in range(1, 61):
        for c in enumerate_cusps(N):
            assert gcd(c.u, N) == 1 and N % c.f == 0
            f0, n0 = c.split
            assert f0 * n0 == lcm(c.f, c.Nprime) and gcd(f0, n0) == 1
            assert c.f % f0 == 0 and c.Nprime % n0 == 0
            assert (c.w**2 * c.Ndouble) % N == 0


def test_split_tie_rules():
    c = make_cusp(36, 6)
    assert c.splitting("f0") == (6, 1)
    assert c.splitting("n0") == (1, 6)
    with pytest.raises(ValueError):
        c.splitting("other")


def test_singular_examples():
    for N in (6, 12, 30):
        assert len(singular_cusps(N, principal(N))) == len(enumerate_cusps(N))
    for N in (5, 8, 12, 16, 21):
        for psi in primitive_characters(N):
            for c in enumerate_cusps(N):
                assert is_singular(c, psi) == (c.width_gcd == 1)
    c16 = primitive_characters(16)[0]
    assert count_singular(16, c16) == 2
    assert sorted(c.f for c in singular_cusps(16, c16)) == [1, 16]
    psi9 = [p for p in enumerate_characters(9) if p.conductor == 3][0]
    assert is_singular(make_cusp(9, 3), psi9)


def test_singular_is_periodicity():
    # psi(1 + (N/(f,N/f)) t) = 1 for all t is the definition of singularity
    for N in range(1, 37):
        for psi in enumerate_characters(N):
            for c in enumerate_cusps(N):
                per = N // c.width_gcd
                direct = all(abs(psi(1 + per * t) - 1) < 1e-12 for t in range(N) if gcd(1 + per * t, N) == 1)
                assert is_singular(c, psi) == direct


def test_count_matches_enumeration():
    for N in range(1, 201):
        for psi in enumerate_characters(N):
            assert count_singular(N, psi) == len(singular_cusps(N, psi))


def test_modulus_mismatch():
    with pytest.raises(ValueError):
        is_singular(make_cusp(12, 2), principal(6))


def test_representative_change_congruence():
    # any gamma in Gamma_0(N) with gamma(1/(uf)) = u/f has lower-right entry = ubar mod [f, N']
    for N in range(1, 37):
        for c in enumerate_cusps(N):
            f, u, w = c.f, c.u, c.w
            mod = lcm(f, c.Nprime)
            found = 0
            for d in range(-2 * N * N, 2 * N * N + 1):
                cc = f - d * w
                if cc % N or (u * d - 1) % f:
                    continue
                b = (u * d - 1) // f
                a = u - b * w
                assert a * d - b * cc == 1
                assert Fraction(a + b * w, cc + d * w) == Fraction(u, f)
                assert (d * u - 1) % mod == 0
                found += 1
            assert found


def test_stabilizer():
    for t in range(-2, 3):
        g = stabilizer(make_cusp(12, 2, 1), t)
        assert g.det == 1 and g.c % 12 == 0
    for N in range(1, 37):
        for c in enumerate_cusps(N):
            g = stabilizer(c, 1)
            assert g.det == 1 and g.c % N == 0
            # fixes the cusp 1/w
            assert Fraction(g.a + g.b * c.w, g.c + g.d * c.w) == Fraction(1, c.w)


def test_scaling_matrix():
    c = make_cusp(12, 12)
    sm = scaling_matrix(c)
    assert c.Ndouble == 1 and (sm.integral.a, sm.integral.b, sm.integral.c, sm.integral.d) == (1, 0, c.w, 1)
    for N in range(1, 37):
        for c in enumerate_cusps(N):
            sm = scaling_matrix(c)
            assert sm.image_of_infinity() == Fraction(1, c.w)
            conj = sm.conjugate(stabilizer(c, 1))
            assert conj == ((1, 1), (0, 1))


def test_atkin_lehner_matrix():
    assert atkin_lehner_matrix(1, 12).det == 1
    for N in range(1, 61):
        for Q in exact_divisors(N):
            W = atkin_lehner_matrix(Q, N)
            R = N // Q
            assert W.det == Q
            assert W.a % Q == 0 and W.d % Q == 0 and W.c % N == 0
            assert (W.a // Q - 1) % R == 0 and (W.b - 1) % Q == 0
    W = atkin_lehner_matrix(2, 6)
    assert W.det == 2 and W.b % 2 == 1 and (W.a // 2 - 1) % 3 == 0
    with pytest.raises(ValueError):
        atkin_lehner_matrix(2, 12)


def test_kloosterman_examples():
    assert abs(kloosterman(principal(1), 1, 1, 1) - 1) < 1e-14
    assert abs(kloosterman(principal(1), 1, 1, 2) - 1) < 1e-14
    assert abs(kloosterman(principal(1), 1, 1, 3) + 1) < 1e-14
    with pytest.raises(ValueError):
        kloosterman(principal(4), 1, 1, 6)


def test_kloosterman_real_for_trivial_character():
    for c in range(1, 40):
        assert abs(kloosterman(principal(1), 2, 3, c).imag) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.data(), st.integers(-30, 30), st.integers(-30, 30))
def test_kloosterman_conjugation(N, data, m, n):
    psi = data.draw(st.sampled_from(enumerate_characters(N)))
    c = N * data.draw(st.integers(1, 60 // N))
    assert abs(kloosterman(psi, m, n, c).conjugate() - kloosterman(psi.conj(), -m, -n, c)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40), st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 40))
def test_kloosterman_symmetry(c, m, n, a):
    # S(m, n; c) = S(n, m; c) and S(am, n; c) = S(m, an; c) for a coprime to c (trivial character)
    one = principal(1)
    assert abs(kloosterman(one, m, n, c) - kloosterman(one, n, m, c)) < 1e-11
    if gcd(a, c) == 1:
        assert abs(kloosterman(one, a * m, n, c) - kloosterman(one, m, a * n, c)) < 1e-11
