"""Dirichlet L-functions through the Hurwitz zeta function.

L(s, chi) = q^-s sum_{a=1}^q chi(a) zeta(s, a/q), and zeta(s, a) is computed by
Euler-Maclaurin summation, which gives the analytic continuation directly.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from .characters import DirichletCharacter
from .specialfn import PoleError, WindowError, gamma

# B_2, B_4, ..., B_24 divided by (2j)!
_BERN = np.array(
    [
        1 / 6 / 2,
        -1 / 30 / 24,
        1 / 42 / 720,
        -1 / 30 / 40320,
        5 / 66 / 3628800,
        -691 / 2730 / 479001600,
        7 / 6 / 87178291200,
        -3617 / 510 / 20922789888000,
        43867 / 798 / 6402373705728000,
        -174611 / 330 / 2432902008176640000,
        854513 / 138 / 1124000727777607680000,
        -236364091 / 2730 / 620448401733239439360000,
    ]
)

IM_CAP = 60.0


class PrecisionError(ValueError):
    """The requested accuracy cannot be certified."""


def hurwitz_zeta(s, a, drop_pole: bool = False):
    """zeta(s, a) for complex s and real a > 0, broadcasting over arrays.

    With drop_pole the polar part 1/(s-1) is removed, which keeps character
    sums finite at s = 1.
    """
    return _hurwitz(s, a, drop_pole)[0]


def _hurwitz(s, a, drop_pole):
    """Value and the sum of absolute values of the summands (for error estimates)."""
    s = np.asarray(s, dtype=complex)
    a = np.asarray(a, dtype=float)
    s, a = np.broadcast_arrays(s, a)
    if np.any(a <= 0):
        raise ValueError("Hurwitz parameter must be positive")
    if not drop_pole and np.any(s == 1):
        raise PoleError("pole")
    K = len(_BERN)
    M = int(max(0, math.ceil(float(np.max(np.abs(s))) + 2 * K - float(np.min(a)))))
    total = np.zeros(s.shape, dtype=complex)
    mag = np.zeros(s.shape)
    for n in range(M):
        t = np.exp(-s * np.log(a + n))
        total += t
        mag += np.abs(t)
    x = a + M
    lx = np.log(x)
    xs = np.exp(-s * lx)
    if drop_pole:
        near = np.abs(s - 1) < 1e-12
        ss = np.where(near, 2.0, s)
        pole = np.where(near, -lx, np.expm1((1 - ss) * lx) / (ss - 1))
    else:
        pole = x * xs / (s - 1)
    total += pole + xs / 2
    mag += np.abs(pole) + np.abs(xs)
    # Euler-Maclaurin corrections: B_2j/(2j)! (s)_{2j-1} x^{-s-2j+1}
    rising = s.copy()
    term_pow = xs / x
    for j in range(K):
        total += _BERN[j] * rising * term_pow
        rising = rising * (s + 2 * j + 1) * (s + 2 * j + 2)
        term_pow = term_pow / (x * x)
    return total, mag


def _check_s(s: complex):
    if abs(s.imag) > IM_CAP:
        raise PrecisionError("precision")


@lru_cache(maxsize=200000)
def dirichlet_l_with_error(s, chi: DirichletCharacter):
    """L(s, chi) for any character, with a rounding-error estimate."""
    s = complex(s)
    _check_s(s)
    q = chi.modulus
    vals = chi.values
    idx = np.nonzero(vals)[0]
    idx = np.where(idx == 0, q, idx)
    principal_core = chi.conductor == 1
    if principal_core and s == 1:
        raise PoleError("pole")
    z, mag = _hurwitz(s, idx / q, not principal_core)
    total = complex(np.sum(vals[idx % q] * z))
    scale = cmath.exp(-s * math.log(q))
    err = 4e-16 * float(np.sum(mag)) * abs(scale)
    return scale * total, err


def dirichlet_l(s, chi: DirichletCharacter, target: float = 1e-6) -> complex:
    """L(s, chi); raises PrecisionError when the relative error estimate exceeds target."""
    val, err = dirichlet_l_with_error(complex(s), chi)
    if err > target * max(abs(val), 1e-300) and err > 1e-300:
        raise PrecisionError("precision")
    return val


def root_number(chi: DirichletCharacter) -> complex:
    if not chi.is_primitive():
        raise ValueError("root number needs a primitive character")
    return chi.gauss_sum() / (1j**chi.parity * math.sqrt(chi.modulus))


def completed_l(s, chi: DirichletCharacter) -> complex:
    """Lambda(s, chi) = (q/pi)^(s/2) Gamma((s+delta)/2) L(s, chi)."""
    if not chi.is_primitive():
        raise ValueError("completed L-function needs a primitive character")
    s = complex(s)
    q = chi.modulus
    if q == 1 and s in (0, 1):
        raise PoleError("pole")
    d = chi.parity
    return cmath.exp(s / 2 * math.log(q / math.pi)) * gamma((s + d) / 2) * dirichlet_l(s, chi)


__all__ = [
    "PoleError",
    "PrecisionError",
    "WindowError",
    "completed_l",
    "dirichlet_l",
    "dirichlet_l_with_error",
    "hurwitz_zeta",
    "root_number",
]
