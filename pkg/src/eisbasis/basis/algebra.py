"""Exact coefficient algebra for change-of-basis formulas.

Coefficients live in Q(zeta)[x_p^{+-1}] localised at Euler factors
(1 - c x_p^2), where x_p stands for p^{-s}.  Character values are exact
roots of unity, so identities can be tested with zero residual.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from ..arith import divisors, euler_phi, factorize, lcm


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple:
    """Integer coefficients of Phi_M, lowest degree first."""
    num = [-1] + [0] * (M - 1) + [1]
    for d in divisors(M):
        if d < M:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    return out


def _reduce(vec, M):
    """Remainder of sum vec[j] zeta^j modulo Phi_M (vec has length M)."""
    phi = cyclotomic_polynomial(M)
    n = len(phi) - 1
    v = list(vec)
    for i in range(len(v) - 1, n - 1, -1):
        c = v[i]
        if c:
            for j in range(n + 1):
                v[i - n + j] -= c * phi[j]
    return tuple(v[:n])


class Cyclo:
    """Element of Q(zeta_M) in the power basis reduced modulo Phi_M."""

    __slots__ = ("M", "c")

    def __init__(self, M: int, coeffs):
        self.M = M
        self.c = tuple(Fraction(x) for x in coeffs)

    @classmethod
    def rational(cls, r) -> "Cyclo":
        return cls(1, (Fraction(r),))

    @classmethod
    def root(cls, angle) -> "Cyclo":
        """exp(2 pi i angle) for rational angle."""
        a = Fraction(angle) % 1
        M = a.denominator
        vec = [0] * M
        vec[a.numerator] = 1
        return cls(M, _reduce(vec, M))

    def lift(self, L: int) -> "Cyclo":
        if L == self.M:
            return self
        step = L // self.M
        vec = [Fraction(0)] * L
        for j, x in enumerate(self.c):
            vec[(j * step) % L] += x
        return Cyclo(L, _reduce(vec, L))

    def _common(self, other):
        if not isinstance(other, Cyclo):
            other = Cyclo.rational(other)
        L = lcm(self.M, other.M)
        return self.lift(L), other.lift(L), L

    def __add__(self, other):
        a, b, L = self._common(other)
        return Cyclo(L, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.M, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclo) else Cyclo.rational(-Fraction(other)))

    def __mul__(self, other):
        a, b, L = self._common(other)
        vec = [Fraction(0)] * L
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        vec[(i + j) % L] += x * y
        return Cyclo(L, _reduce(vec, L))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    def conj(self) -> "Cyclo":
        M = self.M
        vec = [Fraction(0)] * M
        for j, x in enumerate(self.c):
            vec[(-j) % M] += x
        return Cyclo(M, _reduce(vec, M))

    def __complex__(self):
        return sum(complex(x) * cmath.exp(2j * math.pi * j / self.M) for j, x in enumerate(self.c) if x) + 0j

    def __repr__(self):
        return f"Cyclo({self.M}, {[str(x) for x in self.c]})"


ZERO = Cyclo.rational(0)
ONE = Cyclo.rational(1)


def char_value(chi, n: int) -> Cyclo:
    """chi(n) as an exact cyclotomic number."""
    a = chi.angle(n)
    return ZERO if a is None else Cyclo.root(a)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


class Poly:
    """Laurent polynomial: monomial (tuple of (variable, exponent)) -> Cyclo."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def const(cls, c) -> "Poly":
        c = c if isinstance(c, Cyclo) else Cyclo.rational(c)
        return cls({(): c})

    @classmethod
    def monomial(cls, mono, c=1) -> "Poly":
        c = c if isinstance(c, Cyclo) else Cyclo.rational(c)
        return cls({tuple(sorted((v, e) for v, e in mono if e)): c})

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = other if isinstance(other, Poly) else Poly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out[m] + c1 * c2 if m in out else c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, values: dict) -> complex:
        total = 0j
        for m, c in self.terms.items():
            v = complex(c)
            for var, e in m:
                v *= values[var] ** e
            total += v
        return total


def s_power(r, sign: int = -1) -> Poly:
    """r^(sign * s) for a positive rational r, as a monomial in the x_p = p^-s."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("base must be positive")
    mono = []
    for p, e in factorize(r.numerator):
        mono.append((p, -sign * e))
    for p, e in factorize(r.denominator):
        mono.append((p, sign * e))
    return Poly.monomial(mono)


class Coefficient:
    """numerator / prod (1 - c_i x_{p_i}^2) with c_i roots of unity (angles)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den=()):
        self.num = num
        self.den = tuple(sorted(den))

    @classmethod
    def const(cls, c) -> "Coefficient":
        return cls(Poly.const(c))

    @staticmethod
    def _factor_poly(f) -> Poly:
        p, ang = f
        return Poly.const(1) - Poly.monomial([(p, 2)], Cyclo.root(ang))

    def _expand(self, target) -> Poly:
        """Numerator over the larger denominator multiset target."""
        rest = list(target)
        for f in self.den:
            rest.remove(f)
        out = self.num
        for f in rest:
            out = out * self._factor_poly(f)
        return out

    @staticmethod
    def _union(a, b):
        out = list(a)
        pool = list(a)
        for f in b:
            if f in pool:
                pool.remove(f)
            else:
                out.append(f)
        return tuple(sorted(out))

    def __add__(self, other):
        if not isinstance(other, Coefficient):
            other = Coefficient.const(other)
        den = self._union(self.den, other.den)
        return Coefficient(self._expand(den) + other._expand(den), den)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, Coefficient):
            other = Coefficient.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Coefficient):
            return Coefficient(self.num * other.num, self.den + other.den)
        return Coefficient(self.num * other, self.den)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def equals(self, other) -> bool:
        return (self - other).is_zero()

    def evaluate(self, s) -> complex:
        s = complex(s)
        primes = {v for m in self.num.terms for v, _ in m} | {p for p, _ in self.den}
        vals = {p: cmath.exp(-s * math.log(p)) for p in primes}
        out = self.num.evaluate(vals)
        for p, ang in self.den:
            out /= 1 - cmath.exp(2j * math.pi * ang) * vals[p] ** 2
        return out

    def __repr__(self):
        return f"Coefficient({len(self.num.terms)} terms / {len(self.den)} factors)"


def euler_ratio(chi, N: int) -> Coefficient:
    """L(2s, chi) / L(2s, chi chi_{0,N}) = prod over p | N with chi(p) != 0 of (1 - chi(p) p^-2s)^-1."""
    den = []
    for p, _ in factorize(N):
        a = chi.angle(p)
        if a is not None:
            den.append((p, a))
    return Coefficient(Poly.const(1), den)


def phi_rational(n: int) -> Fraction:
    return Fraction(1, euler_phi(n))


__all__ = [
    "Coefficient",
    "Cyclo",
    "ONE",
    "Poly",
    "ZERO",
    "char_value",
    "cyclotomic_polynomial",
    "euler_ratio",
    "phi_rational",
    "s_power",
]
