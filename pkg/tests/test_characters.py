import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eisbasis.arith import euler_phi, units
from eisbasis.characters import (character, character_index, conductor, enumerate_characters, factor_character,
                                 gauss_sum, induce, primitive_characters, principal)


def brute_conductor(chi):
    # smallest d | q with chi(n) = 1 whenever n = 1 mod d, n a unit
    q = chi.modulus
    for d in range(1, q + 1):
        if q % d == 0 and all(abs(chi(n) - 1) < 1e-12 for n in units(q) if (n - 1) % d == 0):
            return d


def test_counts_and_labels():
    for q in range(1, 40):
        cs = enumerate_characters(q)
        assert len(cs) == euler_phi(q)
        assert len(set(cs)) == len(cs)
        for i, chi in enumerate(cs):
            assert character_index(chi) == i
            assert character(q, i) == chi


def test_conductor_examples():
    assert conductor(principal(12)) == 1
    odd4 = [c for c in enumerate_characters(4) if c.parity == 1][0]
    assert conductor(odd4.lift(8)) == 4
    quad5 = [c for c in enumerate_characters(5) if c.order == 2][0]
    assert conductor(quad5) == 5


def test_conductor_matches_brute_force():
    for q in range(1, 61):
        for chi in enumerate_characters(q):
            assert conductor(chi) == brute_conductor(chi)


def test_principal_mod_one_is_primitive():
    assert principal(1).is_primitive()
    assert primitive_characters(1) == (principal(1),)


def test_induce():
    assert induce(principal(1), 12) == principal(12)
    quad3 = primitive_characters(3)[0]
    assert conductor(induce(quad3, 12)) == 3
    with pytest.raises(ValueError):
        induce(quad3, 10)
    for q in range(1, 31):
        for chi in primitive_characters(q):
            assert induce(chi, q).primitive() == chi


def test_induce_conductor_invariant():
    for q in range(1, 26):
        for chi in primitive_characters(q):
            for m in range(q, 101, q):
                assert conductor(induce(chi, m)) == q


def test_factor_character():
    chi = enumerate_characters(15)[3]
    a, b = factor_character(chi, 1, 15)
    assert a.modulus == 1 and b == chi
    quad15 = [c for c in enumerate_characters(15) if c.order == 2 and c.is_primitive()][0]
    a, b = factor_character(quad15, 3, 5)
    assert a.order == 2 and b.order == 2 and a.is_primitive() and b.is_primitive()
    for chi in enumerate_characters(45):
        a, b = factor_character(chi, 9, 5)
        assert a.lift(45) * b.lift(45) == chi
    with pytest.raises(ValueError):
        factor_character(chi, 3, 15)
    with pytest.raises(ValueError):
        factor_character(chi, 5, 5)


def test_gauss_sum_examples():
    assert abs(gauss_sum(principal(1)) - 1) < 1e-14
    quad5 = [c for c in enumerate_characters(5) if c.order == 2][0]
    assert abs(gauss_sum(quad5) - math.sqrt(5)) < 1e-12
    assert abs(gauss_sum(primitive_characters(3)[0]) - 1j * math.sqrt(3)) < 1e-12


def test_orthogonality():
    for q in range(1, 51):
        cs = enumerate_characters(q)
        table = np.array([[chi(a) for a in units(q)] for chi in cs])
        gram = table.conj().T @ table
        assert np.abs(gram - euler_phi(q) * np.eye(len(cs))).max() < 1e-12


def test_gauss_sum_modulus():
    for q in range(1, 101):
        for chi in primitive_characters(q):
            assert abs(abs(gauss_sum(chi)) - math.sqrt(q)) < 1e-10


def test_twisted_gauss_sum_all_n():
    for q in range(1, 31):
        for chi in primitive_characters(q):
            tau = gauss_sum(chi)
            for n in range(-q, 2 * q + 1):
                direct = sum(chi(m) * cmath.exp(2j * math.pi * m * n / q) for m in range(q))
                assert abs(direct - chi(n).conjugate() * tau) < 1e-10


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.data())
def test_multiplicative_and_periodic(q, data):
    chi = data.draw(st.sampled_from(enumerate_characters(q)))
    a, b = data.draw(st.integers(-500, 500)), data.draw(st.integers(-500, 500))
    assert abs(chi(a * b) - chi(a) * chi(b)) < 1e-12
    assert abs(chi(a + q) - chi(a)) < 1e-12
    assert abs(chi(-1) - (-1) ** chi.parity) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.data())
def test_conj_and_order(q, data):
    chi = data.draw(st.sampled_from(enumerate_characters(q)))
    assert (chi * chi.conj()).is_principal()
    assert chi.conj().conductor == chi.conductor
    vals = chi.values
    assert np.abs(vals ** chi.order - (np.abs(vals) > 0)).max() < 1e-10
