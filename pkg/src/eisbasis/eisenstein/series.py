"""Direct (Re s > 1) evaluators: the pair series over (c, d) and the cusp series
over the coset parametrisation (C', D).

Both reduce to the accelerated kernel in `lattice`.  Coprimality (c, d) = 1 is
removed by dividing by L(2s, chi1 chi2).  For the coset series the Moebius
weight of g = gcd(C', D) is grouped by g mod N, and the sum over one residue
class is written with characters as (1/phi(N)) sum_chi conj(chi)(rho) / L(2s, chi).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from ..arith import euler_phi, inverse_mod, units
from ..characters import DirichletCharacter, enumerate_characters, factor_character
from ..lfun import dirichlet_l
from ..modgroup import Cusp, is_singular
from .lattice import DEFAULT_TRUNCATION, TruncationSpec, lattice_kernel
from .pairs import CharacterPair


def _check_point(z: complex):
    if complex(z).imag <= 0:
        raise ValueError("need Im z > 0")


def eval_pair_lattice(pair: CharacterPair, z: complex, s, trunc: TruncationSpec = DEFAULT_TRUNCATION,
                      dilation=1, with_info: bool = False):
    """E_{chi1,chi2}(B z, s) from its defining lattice sum (Re s > 1).

    The characters may be imprimitive.  dilation B is a positive rational.
    """
    _check_point(z)
    s = complex(s)
    B = Fraction(dilation)
    if B <= 0:
        raise ValueError("dilation must be positive")
    zz = complex(z) * float(B) if B.denominator == 1 else complex(z) * B.numerator / B.denominator
    q1, q2, k = pair.q1, pair.q2, pair.k
    y = zz.imag
    W = np.outer(pair.chi1.values, pair.chi2.values)
    kern, info = lattice_kernel(q2 * zz, s, k, W, trunc)
    total = kern
    if q1 == 1:
        total += dirichlet_l(2 * s, pair.chi2)
    val = cmath.exp(s * math.log(q2 * y)) * total / dirichlet_l(2 * s, pair.product())
    if with_info:
        info = dict(info, tail_bound=math.exp(-trunc.decay))
        return val, info
    return val


@lru_cache(maxsize=4096)
def _moebius_class_sums(N: int, s: complex) -> dict:
    """rho -> sum_{g = rho mod N} mu(g) g^-2s for units rho mod N."""
    chars = enumerate_characters(N)
    inv = [1 / dirichlet_l(2 * s, chi) for chi in chars]
    phi = euler_phi(N)
    out = {}
    for rho in units(N):
        out[rho] = sum(chi(rho).conjugate() * v for chi, v in zip(chars, inv)) / phi
    return out


def cusp_character_parts(N: int, psi: DirichletCharacter, cusp: Cusp, ties: str = "f0"):
    """(psi^(f0), psi^(N0')) for the splitting lcm(f, N') = f0 N0'."""
    m = cusp.width_gcd
    f0, n0 = cusp.splitting(ties)
    reduced = psi.restrict(N // m)
    return factor_character(reduced, f0, n0)


def coset_weight_table(N: int, psi: DirichletCharacter, cusp: Cusp, s, ties: str = "f0") -> np.ndarray:
    """Weights W[C mod N', D mod f] of the cusp series after Moebius reduction."""
    f, Np, m, u = cusp.f, cusp.Nprime, cusp.width_gcd, cusp.u
    psi_f0, psi_n0 = cusp_character_parts(N, psi, cusp, ties)
    n0 = psi_n0.modulus
    ubar = inverse_mod(u, n0) if n0 > 1 else 0
    classes = _moebius_class_sums(N, complex(s))
    C = np.arange(Np)
    D = np.arange(f)
    cmask = np.gcd(C, Np) == 1
    dmask = np.gcd(D, f) == 1
    wc = np.array([psi_n0(-ubar * c) for c in C]) * cmask
    wd = np.conj(psi_f0.values[D % psi_f0.modulus]) * dmask
    base = np.outer(wc, wd)
    if m == 1:
        scale = sum(v * psi_n0(rho) * psi_f0(rho).conjugate() for rho, v in classes.items())
        return scale * base
    cinv = np.array([inverse_mod(int(c), m) if cm else 0 for c, cm in zip(C, cmask)])
    table = np.zeros((Np, f), dtype=complex)
    for rho, v in classes.items():
        coef = v * psi_n0(rho) * psi_f0(rho).conjugate()
        if coef == 0:
            continue
        rb2 = inverse_mod(rho, m) ** 2 % m
        cong = ((D[None, :] + rb2 * cinv[:, None] * u) % m) == 0
        table += coef * cong
    return table * base


def eval_cusp_coset(N: int, psi: DirichletCharacter, cusp: Cusp, z: complex, s, k: int = 0,
                    trunc: TruncationSpec = DEFAULT_TRUNCATION, with_info: bool = False):
    """E_{1/(uf)}(z, s, psi) from the coset sum over (C', D) (Re s > 1)."""
    _check_point(z)
    if cusp.N != N:
        raise ValueError("cusp level mismatch")
    if (-1) ** psi.parity != (-1) ** k:
        raise ValueError("parity mismatch: psi(-1) must equal (-1)^k")
    if not is_singular(cusp, psi):
        raise ValueError("cusp not singular")
    z, s = complex(z), complex(s)
    y = z.imag
    W = coset_weight_table(N, psi, cusp, s)
    kern, info = lattice_kernel(cusp.f * z, s, k, W, trunc)
    val = cmath.exp(s * math.log(y)) * (kern * cmath.exp(-s * math.log(cusp.Ndouble)) + (1 if cusp.f == N else 0))
    if with_info:
        return val, dict(info, tail_bound=math.exp(-trunc.decay))
    return val


def eval_cusp_coset_naive(N: int, psi: DirichletCharacter, cusp: Cusp, z: complex, s, k: int = 0, radius: int = 60):
    """Plain truncated coset sum (no acceleration); only for small-scale cross-checks."""
    z, s = complex(z), complex(s)
    y = z.imag
    f, Np, m, u = cusp.f, cusp.Nprime, cusp.width_gcd, cusp.u
    psi_f0, psi_n0 = cusp_character_parts(N, psi, cusp)
    n0 = psi_n0.modulus
    ubar = inverse_mod(u, n0) if n0 > 1 else 0
    total = 0j
    for c in range(1, radius + 1):
        if gcd(c, Np) != 1:
            continue
        cb = inverse_mod(c, m) if m > 1 else 0
        for d in range(-radius * max(f, 1) * 4, radius * max(f, 1) * 4 + 1):
            if gcd(d, f * c) != 1 or (d + cb * u) % m:
                continue
            X = c * f * z + d
            w = psi_n0(-ubar * c) * psi_f0(inverse_mod(d % f, f) if f > 1 else 0)
            total += w * abs(X) ** (-2 * s) * (abs(X) / X) ** k
    return cmath.exp(s * math.log(y)) * (total * cmath.exp(-s * math.log(cusp.Ndouble)) + (1 if f == N else 0))


__all__ = [
    "coset_weight_table",
    "cusp_character_parts",
    "eval_cusp_coset",
    "eval_cusp_coset_naive",
    "eval_pair_lattice",
]
