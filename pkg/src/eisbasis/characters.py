"""Dirichlet characters stored as exponent vectors on fixed unit-group generators.

A character mod q is determined by its values on the canonical generators of
(Z/q)*: the smallest primitive root of each odd prime power, {-1, 5} for 2^a
with a >= 3 and {-1} for 4.  Values are kept exact as angles (a Fraction t with
chi(n) = exp(2 pi i t)); floating complex numbers only appear when asked for.
"""

from __future__ import annotations

import cmath
import itertools
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .arith import factorize, inverse_mod, lcm, valuation


def _primitive_root(pa: int, p: int) -> int:
    phi = pa // p * (p - 1)
    qs = [r for r, _ in factorize(phi)]
    for g in range(2, pa):
        if gcd(g, p) == 1 and all(pow(g, phi // r, pa) != 1 for r in qs):
            return g
    raise ArithmeticError(f"no primitive root mod {pa}")


def _crt_lift(local: int, pa: int, q: int) -> int:
    """The residue mod q that is local mod pa and 1 mod q/pa."""
    rest = q // pa
    if rest == 1:
        return local % q
    # x = local + pa*t with x = 1 mod rest
    t = ((1 - local) * inverse_mod(pa, rest)) % rest
    return (local + pa * t) % q


class UnitGroup:
    """Generators, orders and discrete-log table of (Z/q)*."""

    def __init__(self, q: int):
        self.modulus = q
        gens, orders, comps = [], [], []
        for p, a in factorize(q) if q > 1 else ():
            pa = p**a
            if p == 2:
                if a == 1:
                    continue
                if a == 2:
                    locs = [(pa - 1, 2)]
                else:
                    locs = [(pa - 1, 2), (5, 2 ** (a - 2))]
            else:
                locs = [(_primitive_root(pa, p), pa // p * (p - 1))]
            for g, o in locs:
                comps.append((p, pa))
                gens.append(_crt_lift(g, pa, q))
                orders.append(o)
        self.generators = tuple(gens)
        self.orders = tuple(orders)
        self.components = tuple(comps)
        self.exponent = 1
        for o in orders:
            self.exponent = lcm(self.exponent, o)
        self.logs = self._log_table()

    def _log_table(self) -> np.ndarray:
        q = self.modulus
        table = np.full((q, len(self.generators)), -1, dtype=np.int64)
        if q == 1:
            return np.zeros((1, 0), dtype=np.int64)
        # enumerate all products of generator powers; the map is a bijection
        ranges = [range(o) for o in self.orders]
        for idx in itertools.product(*ranges):
            n = 1
            for g, e in zip(self.generators, idx):
                n = n * pow(g, e, q) % q
            table[n] = idx
        return table


@lru_cache(maxsize=None)
def unit_group(q: int) -> UnitGroup:
    return UnitGroup(q)


class DirichletCharacter:
    __slots__ = ("modulus", "exponents", "__dict__")

    def __init__(self, modulus: int, exponents=()):
        grp = unit_group(modulus)
        exps = tuple(int(e) % o for e, o in zip(exponents, grp.orders))
        if len(exps) != len(grp.orders):
            raise ValueError("exponent vector has the wrong length")
        self.modulus = modulus
        self.exponents = exps

    # identity -----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __repr__(self):
        return f"DirichletCharacter({self.modulus}, {self.exponents})"

    @property
    def group(self) -> UnitGroup:
        return unit_group(self.modulus)

    # exact values -------------------------------------------------------
    @cached_property
    def _numerators(self) -> np.ndarray:
        """chi(n) = e(t[n] / E) with E the group exponent; -1 marks non-units."""
        grp = self.group
        E = grp.exponent
        w = np.array([e * (E // o) for e, o in zip(self.exponents, grp.orders)], dtype=np.int64)
        logs = grp.logs
        t = (logs @ w) % E if len(w) else np.zeros(self.modulus, dtype=np.int64)
        unit = np.gcd(np.arange(self.modulus), self.modulus) == 1
        return np.where(unit, t, -1)

    def angle(self, n: int):
        """Fraction t in [0,1) with chi(n) = exp(2 pi i t), or None when chi(n) = 0."""
        t = int(self._numerators[n % self.modulus])
        if t < 0:
            return None
        return Fraction(t, self.group.exponent)

    def __call__(self, n: int) -> complex:
        t = int(self._numerators[n % self.modulus])
        if t < 0:
            return 0j
        return _root_of_unity(t, self.group.exponent)

    @cached_property
    def values(self) -> np.ndarray:
        """Complex value table indexed by n mod q."""
        t = self._numerators
        E = self.group.exponent
        roots = np.array([_root_of_unity(k, E) for k in range(E)])
        vals = roots[np.maximum(t, 0)]
        vals[t < 0] = 0
        return vals

    # structure ----------------------------------------------------------
    @cached_property
    def order(self) -> int:
        out = 1
        for e, o in zip(self.exponents, self.group.orders):
            out = lcm(out, o // gcd(o, e))
        return out

    @cached_property
    def parity(self) -> int:
        """delta in {0,1} with chi(-1) = (-1)^delta."""
        if self.modulus <= 2:
            return 0
        a = self.angle(-1)
        return 0 if a == 0 else 1

    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @cached_property
    def conductor(self) -> int:
        grp = self.group
        out = 1
        i = 0
        while i < len(grp.orders):
            p, pa = grp.components[i]
            if p == 2 and pa >= 8:
                sign, e5 = self.exponents[i], self.exponents[i + 1]
                o5 = grp.orders[i + 1] // gcd(grp.orders[i + 1], e5)
                if o5 > 1:
                    out *= 2 ** (2 + valuation(o5, 2))
                elif sign:
                    out *= 4
                i += 2
                continue
            e, o = self.exponents[i], grp.orders[i]
            ordc = o // gcd(o, e)
            if ordc > 1:
                out *= 4 if p == 2 else p ** (1 + valuation(ordc, p))
            i += 1
        return out

    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def conj(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, [-e for e in self.exponents])

    def lift(self, m: int) -> "DirichletCharacter":
        """The character mod m (a multiple of q) agreeing with self on units mod m."""
        if m % self.modulus:
            raise ValueError("not a valid inducing modulus")
        if m == self.modulus:
            return self
        return from_angles(m, lambda n: self.angle(n))

    def restrict(self, d: int) -> "DirichletCharacter":
        """The character mod d inducing self; d must be a multiple of the conductor."""
        q = self.modulus
        if q % d or d % self.conductor:
            raise ValueError("modulus is not between conductor and modulus")

        def ang(n):
            m = n
            while gcd(m, q) != 1:
                m += d
            return self.angle(m)

        return from_angles(d, ang)

    def primitive(self) -> "DirichletCharacter":
        return self.restrict(self.conductor)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        m = lcm(self.modulus, other.modulus)
        a, b = self.lift(m), other.lift(m)
        return DirichletCharacter(m, [x + y for x, y in zip(a.exponents, b.exponents)])

    def gauss_sum(self, n: int = 1) -> complex:
        q = self.modulus
        k = np.arange(q)
        return complex(np.sum(self.values * np.exp(2j * np.pi * ((n * k) % q) / q)))

    def label(self) -> str:
        return f"{self.modulus},{character_index(self)}"


def _root_of_unity(t: int, E: int) -> complex:
    f = Fraction(t, E)
    if f.denominator == 1:
        return 1 + 0j
    if f.denominator == 2:
        return -1 + 0j
    if f.denominator == 4:
        return 1j if f.numerator == 1 else -1j
    return cmath.exp(2j * cmath.pi * f)


def from_angles(q: int, angle_fn) -> DirichletCharacter:
    """Build the character mod q whose values on units are e(angle_fn(n))."""
    grp = unit_group(q)
    exps = []
    for g, o in zip(grp.generators, grp.orders):
        a = angle_fn(g)
        if a is None:
            raise ValueError("angle function vanishes on a unit")
        e = Fraction(a) * o
        if e.denominator != 1:
            raise ValueError("values are not those of a character mod q")
        exps.append(int(e) % o)
    return DirichletCharacter(q, exps)


@lru_cache(maxsize=None)
def enumerate_characters(q: int) -> tuple:
    grp = unit_group(q)
    return tuple(DirichletCharacter(q, e) for e in itertools.product(*[range(o) for o in grp.orders]))


@lru_cache(maxsize=None)
def primitive_characters(q: int) -> tuple:
    return tuple(c for c in enumerate_characters(q) if c.is_primitive())


def character_index(chi: DirichletCharacter) -> int:
    return enumerate_characters(chi.modulus).index(chi)


def character(q: int, index: int) -> DirichletCharacter:
    chars = enumerate_characters(q)
    if not 0 <= index < len(chars):
        raise ValueError(f"character index {index} out of range for modulus {q}")
    return chars[index]


def principal(q: int = 1) -> DirichletCharacter:
    return enumerate_characters(q)[0]


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def induce(chi: DirichletCharacter, q: int) -> DirichletCharacter:
    if not chi.is_primitive():
        raise ValueError("inducing character must be primitive")
    return chi.lift(q)


def factor_character(chi: DirichletCharacter, Q: int, R: int):
    """Split chi mod QR into its Q-part and R-part (gcd(Q,R) = 1)."""
    if Q * R != chi.modulus or gcd(Q, R) != 1:
        raise ValueError("Q and R must be coprime with QR equal to the modulus")
    q = chi.modulus

    def part(m):
        # n -> chi(n') with n' = n mod m and n' = 1 mod q/m
        other = q // m

        def ang(n):
            return chi.angle(_crt_pair(n, m, 1, other))

        return from_angles(m, ang)

    return part(Q), part(R)


def _crt_pair(a: int, m: int, b: int, n: int) -> int:
    if m == 1:
        return b % n if n > 1 else 0
    if n == 1:
        return a % m
    t = ((b - a) * inverse_mod(m, n)) % n
    return (a + m * t) % (m * n)


def same_primitive(a: DirichletCharacter, b: DirichletCharacter) -> bool:
    """Whether a and b are induced by the same primitive character."""
    if a.conductor != b.conductor:
        return False
    return a.primitive() == b.primitive()


def gauss_sum(chi: DirichletCharacter) -> complex:
    return chi.gauss_sum()
