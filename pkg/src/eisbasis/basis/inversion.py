"""The divisor-lattice inversion used to pass from D-functions back to dilates.

omega1, omega2 are completely multiplicative; they are given by their values
on primes (a callable p -> value).  Values may be Fractions for exact work.
"""

from __future__ import annotations

from math import gcd

from ..arith import divisors, factorize, mobius, prime_divisors


def multiplicative_value(omega, n: int):
    out = 1
    for p, e in factorize(n):
        out = out * omega(p) ** e
    return out


def forward_j(omega1, omega2, L: int, K: dict) -> dict:
    """J(g) = sum_{a | g} sum_{b | L/g} mu(a) mu(b) omega2(a) omega1(b) K(b g / a)."""
    J = {}
    for g in divisors(L):
        total = 0
        for a in divisors(g):
            for b in divisors(L // g):
                mu = mobius(a) * mobius(b)
                if mu:
                    total = total + mu * multiplicative_value(omega2, a) * multiplicative_value(omega1, b) * K[b * g // a]
        J[g] = total
    return J


def euler_factor(omega1, omega2, n: int):
    """prod_{p | n} (1 - omega1(p) omega2(p))."""
    out = 1
    for p in prime_divisors(n):
        out = out * (1 - omega1(p) * omega2(p))
    return out


def moebius_invert(omega1, omega2, L: int, J: dict) -> dict:
    """Recover K(B) for all B | L from J."""
    ef = euler_factor(omega1, omega2, L)
    if ef == 0:
        raise ZeroDivisionError("non-invertible")
    K = {}
    for B in divisors(L):
        A = L // B
        total = 0
        for d in divisors(A):
            for e in divisors(B):
                if gcd(d, e) == 1:
                    total = total + multiplicative_value(omega1, d) * multiplicative_value(omega2, e) * J[B * d // e]
        K[B] = total / ef
    return K


def kappa_bruteforce(omega1, omega2, A: int, B: int):
    """sum over r h | B, r g | A, (r, g h) = (g, h) = 1 of mu(g) mu(r)^2 mu(h) (omega1 omega2)(r g h)."""
    total = 0
    for r in divisors(gcd(A, B)):
        if mobius(r) == 0:
            continue
        for g in divisors(A // r):
            if gcd(r, g) != 1 or mobius(g) == 0:
                continue
            for h in divisors(B // r):
                if gcd(r, h) != 1 or gcd(g, h) != 1 or mobius(h) == 0:
                    continue
                n = r * g * h
                total = total + mobius(g) * mobius(h) * multiplicative_value(omega1, n) * multiplicative_value(omega2, n)
    return total


__all__ = ["euler_factor", "forward_j", "kappa_bruteforce", "moebius_invert", "multiplicative_value"]
