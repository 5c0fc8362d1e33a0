"""Cusps of Gamma_0(N), scaling and Atkin-Lehner matrices, Kloosterman sums.

All matrix identities here are exact integer or rational statements.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

from .arith import divisors, euler_phi, factorize, inverse_mod, lcm, units, valuation
from .characters import DirichletCharacter


@dataclass(frozen=True)
class IntegerMatrix2x2:
    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "IntegerMatrix2x2") -> "IntegerMatrix2x2":
        return IntegerMatrix2x2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def act(self, z: complex) -> complex:
        return (self.a * z + self.b) / (self.c * z + self.d)

    def j(self, z: complex) -> complex:
        """Unitary automorphy factor (cz+d)/|cz+d|."""
        v = self.c * z + self.d
        return v / abs(v)

    def adjugate(self) -> "IntegerMatrix2x2":
        return IntegerMatrix2x2(self.d, -self.b, -self.c, self.a)


@dataclass(frozen=True)
class Cusp:
    """The cusp 1/(u f) of Gamma_0(N)."""

    N: int
    f: int
    u: int

    @cached_property
    def width_gcd(self) -> int:
        """(f, N/f)."""
        return gcd(self.f, self.N // self.f)

    @property
    def w(self) -> int:
        return self.u * self.f

    @property
    def Nprime(self) -> int:
        return self.N // self.f

    @property
    def Ndouble(self) -> int:
        return self.Nprime // gcd(self.f, self.Nprime)

    @cached_property
    def split(self):
        """(f0, N0') with f0 | f, N0' | N', f0 N0' = lcm(f, N'), coprime; ties go to f0."""
        return self.splitting("f0")

    def splitting(self, ties: str = "f0"):
        """As split, with primes of equal exponent in f and N' assigned to f0 or to N0'."""
        if ties not in ("f0", "n0"):
            raise ValueError("ties must be 'f0' or 'n0'")
        f0 = n0 = 1
        for p, _ in factorize(self.N):
            ef, en = valuation(self.f, p), valuation(self.Nprime, p)
            if ef > en or (ef == en and ties == "f0"):
                f0 *= p**ef
            else:
                n0 *= p**en
        return f0, n0

    def key(self):
        return (self.f, self.u)

    def __str__(self):
        return f"1/({self.u}*{self.f})"


def lift_residue(r: int, m: int, N: int) -> int:
    """Smallest positive integer congruent to r mod m and coprime to N."""
    u = r % m if m > 1 else 0
    if u == 0:
        u = m
    while gcd(u, N) != 1:
        u += m
    return u


def make_cusp(N: int, f: int, u: int = 1) -> Cusp:
    if N % f:
        raise ValueError("f must divide N")
    m = gcd(f, N // f)
    if gcd(u, m) != 1:
        raise ValueError("u must be a unit modulo (f, N/f)")
    return Cusp(N, f, lift_residue(u, m, N))


@lru_cache(maxsize=None)
def enumerate_cusps(N: int) -> tuple:
    out = []
    for f in divisors(N):
        m = gcd(f, N // f)
        for r in units(m):
            out.append(Cusp(N, f, lift_residue(r, m, N)))
    return tuple(out)


def is_singular(cusp: Cusp, psi: DirichletCharacter) -> bool:
    if psi.modulus != cusp.N:
        raise ValueError("character modulus does not match the level")
    return (cusp.N // cusp.width_gcd) % psi.conductor == 0


def singular_cusps(N: int, psi: DirichletCharacter) -> list:
    return [c for c in enumerate_cusps(N) if is_singular(c, psi)]


def count_singular(N: int, psi: DirichletCharacter) -> int:
    if psi.modulus != N:
        raise ValueError("character modulus does not match the level")
    ns = psi.conductor
    total = 0
    for f in divisors(N):
        m = gcd(f, N // f)
        if (N // ns) % m == 0:
            total += euler_phi(m)
    return total


def stabilizer(cusp: Cusp, t: int = 1) -> IntegerMatrix2x2:
    w, n2 = cusp.w, cusp.Ndouble
    return IntegerMatrix2x2(1 - w * n2 * t, n2 * t, -w * w * n2 * t, 1 + w * n2 * t)


@dataclass(frozen=True)
class ScaledMatrix:
    """integral @ diag(sqrt(scale), 1/sqrt(scale))."""

    integral: IntegerMatrix2x2
    scale: int

    def conjugate(self, g: IntegerMatrix2x2):
        """sigma^-1 g sigma as a 2x2 tuple of Fractions (exact)."""
        m = self.integral
        x = m.adjugate() @ g @ m  # det(m) = 1
        n = self.scale
        return ((Fraction(x.a), Fraction(x.b, n)), (Fraction(x.c * n), Fraction(x.d)))

    def image_of_infinity(self) -> Fraction:
        m = self.integral
        return Fraction(m.a, m.c) if m.c else None

    def act(self, z: complex) -> complex:
        return self.integral.act(z * self.scale)


def scaling_matrix(cusp: Cusp) -> ScaledMatrix:
    return ScaledMatrix(IntegerMatrix2x2(1, 0, cusp.w, 1), cusp.Ndouble)


def atkin_lehner_matrix(Q: int, N: int) -> IntegerMatrix2x2:
    """W_Q = (Q r, t; N u, Q v) with t = 1 mod Q, r = 1 mod N/Q and det Q."""
    if N % Q or gcd(Q, N // Q) != 1:
        raise ValueError("not exact divisor")
    if Q == 1:
        return IntegerMatrix2x2(1, 0, 0, 1)
    R = N // Q
    # r = t = 1, Q v - R u = 1
    v = inverse_mod(Q, R) if R > 1 else 0
    u = (Q * v - 1) // R
    return IntegerMatrix2x2(Q, 1, N * u, Q * v)


def kloosterman(psi: DirichletCharacter, m: int, n: int, c: int) -> complex:
    """S_psi(m, n; c) = sum over units x mod c of psi(x) e((x m + xbar n)/c)."""
    if c <= 0 or c % psi.modulus:
        raise ValueError("c must be a positive multiple of the modulus")
    total = 0j
    for x in units(c):
        xb = inverse_mod(x, c) if c > 1 else 0
        total += psi(x) * cmath.exp(2j * cmath.pi * ((x * m + xb * n) % c) / c)
    return total


def exact_divisors(N: int) -> list:
    return [Q for Q in divisors(N) if gcd(Q, N // Q) == 1]


__all__ = [
    "Cusp",
    "IntegerMatrix2x2",
    "ScaledMatrix",
    "atkin_lehner_matrix",
    "count_singular",
    "enumerate_cusps",
    "exact_divisors",
    "is_singular",
    "kloosterman",
    "lift_residue",
    "make_cusp",
    "scaling_matrix",
    "singular_cusps",
    "stabilizer",
]
