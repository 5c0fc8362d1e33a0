"""Small integer helpers shared by every layer."""

from __future__ import annotations

from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple:
    """Prime factorization of |n| as a sorted tuple of (p, e)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> list:
    return [p for p, _ in factorize(n)]


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return tuple(sorted(ds))


def mobius(n: int) -> int:
    out = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        out = -out
    return out


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def inverse_mod(a: int, m: int) -> int:
    if m == 1:
        return 0
    return pow(a, -1, m)


def part(n: int, m: int) -> int:
    """The largest divisor of n supported on the primes of m."""
    out = 1
    for p, e in factorize(n):
        if m % p == 0:
            out *= p**e
    return out


def units(m: int) -> list:
    return [a for a in range(m) if gcd(a, m) == 1] if m > 1 else [0]
