"""Lattice sums with analytic tail acceleration.

The basic object is

    K(w, s, k; W) = sum_{c >= 1} sum_{d in Z} W[c mod P, d mod Q] h_c(d),
    h_c(x) = |x + c w|^{-2s} (|x + c w| / (x + c w))^k
           = (x + c w)^{-s-k/2} (x + c conj(w))^{-s+k/2},

for Im w > 0 and a periodic weight table W of shape (P, Q).  For each row c
the d-sum is done directly on |d| <= X_c and the two tails are expanded
binomially in c w / d, each power summed exactly with a Hurwitz zeta value.
Rows with c beyond C0 contribute only through the zero frequency of the
d-sum (the other Poisson frequencies decay like exp(-2 pi c Im(w) / Q)); that
zero mode is a closed Gamma expression times c^{1-2s}, and the c-sum of it
over each residue class is again a Hurwitz zeta value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..lfun import hurwitz_zeta
from ..specialfn import WindowError, gamma, rgamma


@dataclass(frozen=True)
class TruncationSpec:
    """Accuracy knobs of the accelerated lattice sum.

    decay: rows with 2 pi c Im(w) / Q > decay keep only their zero mode.
    binomial_terms: number of terms in the tail expansions.
    radius_factor: direct d-range is |d| <= radius_factor * |c w| (at least 8 Q).
    fourier_decay: Fourier terms with 2 pi n y > fourier_decay are dropped.
    tol: target accuracy reported alongside values.
    """

    decay: float = 38.0
    binomial_terms: int = 40
    radius_factor: float = 6.0
    margin: float = 0.02
    fourier_decay: float = 40.0
    tol: float = 1e-10

    def __post_init__(self):
        if self.decay < 20 or self.binomial_terms < 8 or self.radius_factor < 2:
            raise ValueError("truncation too coarse")


DEFAULT_TRUNCATION = TruncationSpec()


def _binomial_series(e: complex, J: int) -> np.ndarray:
    """Coefficients of (1 + t)^(-e) up to t^(J-1)."""
    out = np.empty(J, dtype=complex)
    out[0] = 1
    for j in range(1, J):
        out[j] = out[j - 1] * (-e - j + 1) / j
    return out


def zero_mode(v: float, s: complex, k: int) -> complex:
    """int_R |x + i v|^{-2s} (|x+iv|/(x+iv))^k dx."""
    return (
        (1j) ** (-k)
        * 2
        * math.pi
        * np.exp((1 - 2 * s) * math.log(2 * v))
        * gamma(2 * s - 1)
        * rgamma(s + k / 2)
        * rgamma(s - k / 2)
    )


def lattice_kernel(w: complex, s: complex, k: int, weights, trunc: TruncationSpec = DEFAULT_TRUNCATION):
    """The accelerated sum K(w, s, k; W).  Returns (value, info)."""
    w, s = complex(w), complex(s)
    if w.imag <= 0:
        raise ValueError("need Im w > 0")
    if s.real <= 1 + trunc.margin:
        raise WindowError("outside convergence")
    W = np.asarray(weights, dtype=complex)
    P, Q = W.shape
    v = w.imag
    alpha, beta = s + k / 2, s - k / 2
    J = trunc.binomial_terms
    ba, bb = _binomial_series(alpha, J), _binomial_series(beta, J)
    C0 = max(1, int(math.ceil(trunc.decay * Q / (2 * math.pi * v))))
    if C0 > 20000:
        raise WindowError("point too close to the real axis")
    total = 0j
    jj = np.arange(J)
    for c in range(1, C0 + 1):
        row = W[c % P]
        if not np.any(row):
            continue
        cw = c * w
        R = abs(cw)
        D1 = int(math.ceil(max(trunc.radius_factor * R, 8 * Q, 20)))
        d = np.arange(-D1, D1 + 1)
        wd = row[d % Q]
        nz = wd != 0
        d = d[nz]
        h = np.exp(-alpha * np.log(d + cw) - beta * np.log(d + np.conj(cw)))
        total += np.sum(wd[nz] * h)
        # binomial coefficients of (1 + cw/x)^-alpha (1 + cw conj/x)^-beta
        pa = ba * cw ** jj
        pb = bb * np.conj(cw) ** jj
        coef = np.convolve(pa, pb)[:J]
        active = np.nonzero(row)[0]
        # positive tail: x = d_r + m Q, d_r > D1, d_r = r mod Q
        start_pos = D1 + 1 + ((active - (D1 + 1)) % Q)
        # negative tail: x = -t, t = -r mod Q, t > D1, h(-t) = (-1)^k * (w -> -w)
        start_neg = D1 + 1 + ((-active - (D1 + 1)) % Q)
        sj = 2 * s + jj
        zpos = hurwitz_zeta(sj[:, None], (start_pos / Q)[None, :])
        zneg = hurwitz_zeta(sj[:, None], (start_neg / Q)[None, :])
        qpow = np.exp(-sj * math.log(Q))
        tail_pos = (coef * qpow) @ zpos
        tail_neg = ((coef * (-1.0) ** jj) * qpow) @ zneg
        total += np.sum(row[active] * (tail_pos + (-1) ** k * tail_neg))
    # rows c > C0: zero frequency only
    zm = zero_mode(v, s, k) / Q
    rowsum = W.sum(axis=1)
    for rho in range(P):
        if rowsum[rho] == 0:
            continue
        first = C0 + 1 + ((rho - (C0 + 1)) % P)
        tail = np.exp((1 - 2 * s) * math.log(P)) * complex(hurwitz_zeta(2 * s - 1, first / P))
        total += rowsum[rho] * zm * tail
    info = {"rows": C0, "binomial_terms": J, "decay": trunc.decay}
    return total, info


__all__ = ["DEFAULT_TRUNCATION", "TruncationSpec", "lattice_kernel", "zero_mode"]
