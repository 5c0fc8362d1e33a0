"""Fourier expansion of the completed series E*_{chi1,chi2} for primitive pairs.

Valid for every s in the numeric window (not only Re s > 1), which is what
the functional-equation and Mellin checks rely on.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..arith import divisors
from ..lfun import PrecisionError, dirichlet_l
from ..specialfn import PoleError, gamma, rgamma, whittaker_w
from .lattice import DEFAULT_TRUNCATION, TruncationSpec
from .pairs import CharacterPair


def lambda_coeff(pair: CharacterPair, n: int, s) -> complex:
    """chi2(sgn n) sum_{ab=|n|} chi1(a) conj(chi2)(b) (b/a)^(s-1/2)."""
    if n == 0:
        raise ValueError("n must be nonzero")
    s = complex(s)
    m = abs(n)
    total = 0j
    for a in divisors(m):
        b = m // a
        c = pair.chi1(a) * pair.chi2(b).conjugate()
        if c:
            total += c * cmath.exp((s - 0.5) * math.log(b / a))
    return total * (pair.chi2(-1) if n < 0 else 1)


def _require_primitive(pair: CharacterPair):
    if not pair.is_primitive():
        raise ValueError("Fourier expansion needs primitive characters")


def _tau_factor(pair: CharacterPair, chi) -> complex:
    return (1j) ** (-pair.k) * chi.gauss_sum()


def constant_term_completed(pair: CharacterPair, y: float, s) -> complex:
    """e*_{chi1,chi2}(y, s)."""
    _require_primitive(pair)
    s = complex(s)
    out = 0j
    if pair.q1 == 1:
        # for Re s < 1/4 use the y^(1-s') part of the dual pair at s' = 1 - s
        if s.real >= 0.25:
            out += _first_constant(pair, y, s)
        else:
            out += _second_constant_unfolded(pair.dual(), y, 1 - s)
    if pair.q2 == 1:
        # the reflected form keeps L at Re >= 1/2 for Re s <= 3/4, the unfolded one beyond
        forms = [_second_constant_reflected, _second_constant_unfolded]
        if s.real > 0.75:
            forms.reverse()
        try:
            out += forms[0](pair, y, s)
        except (PoleError, PrecisionError):
            # e.g. a Gamma pole against a trivial zero of L
            out += forms[1](pair, y, s)
    return out


def _first_constant(pair: CharacterPair, y: float, s) -> complex:
    """y^s part of e* (present when q1 = 1)."""
    return (
        cmath.exp(2 * s * math.log(pair.q2) - s * math.log(math.pi) + s * math.log(y))
        / _tau_factor(pair, pair.chi2)
        * gamma(s + pair.k / 2)
        * dirichlet_l(2 * s, pair.chi2)
    )


def _second_constant_reflected(pair: CharacterPair, y: float, s) -> complex:
    """y^(1-s) part of e* in the L(2-2s, conj chi1) form."""
    k = pair.k
    c1 = pair.chi1.conj()
    return (
        cmath.exp((2 - 2 * s) * math.log(pair.q1) - (1 - s) * math.log(math.pi) + (1 - s) * math.log(y))
        / _tau_factor(pair, c1)
        * gamma(1 - s + k / 2)
        * dirichlet_l(2 - 2 * s, c1)
    )


def _second_constant_unfolded(pair: CharacterPair, y: float, s) -> complex:
    """y^(1-s) part of e* written with L(2s-1, chi1) instead of L(2-2s, conj chi1)."""
    k = pair.k
    return (
        cmath.exp(-s * math.log(math.pi) + (1 - 2 * s) * math.log(2) + (1 - s) * math.log(y))
        * 2
        * math.pi
        * gamma(2 * s - 1)
        * rgamma(s - k / 2)
        * dirichlet_l(2 * s - 1, pair.chi1)
    )


def constant_term_reflected(pair: CharacterPair, y: float, s) -> complex:
    """e* with the y^(1-s) part always in the L(2-2s, conj chi1) form."""
    return _constant_term_with(pair, y, s, _second_constant_reflected)


def constant_term_unfolded(pair: CharacterPair, y: float, s) -> complex:
    """e* with the y^(1-s) part always in the L(2s-1, chi1) form."""
    return _constant_term_with(pair, y, s, _second_constant_unfolded)


def _constant_term_with(pair, y, s, second) -> complex:
    _require_primitive(pair)
    s = complex(s)
    out = 0j
    if pair.q1 == 1:
        out += _first_constant(pair, y, s)
    if pair.q2 == 1:
        out += second(pair, y, s)
    return out


def completion_factor(pair: CharacterPair, s) -> complex:
    """(q2/pi)^s Gamma(s + k/2) L(2s, chi1 chi2) / (i^-k tau(chi2))."""
    s = complex(s)
    val = (
        cmath.exp(s * math.log(pair.q2 / math.pi))
        * gamma(s + pair.k / 2)
        * dirichlet_l(2 * s, pair.product())
        / _tau_factor(pair, pair.chi2)
    )
    if val == 0 or not np.isfinite(val):
        raise PoleError("completion factor vanishes or is singular")
    return val


def eval_completed_fourier(pair: CharacterPair, z: complex, s, trunc: TruncationSpec = DEFAULT_TRUNCATION,
                           with_info: bool = False, parts: bool = False):
    """E*_{chi1,chi2}(z, s) by its Fourier expansion.

    parts=True returns (constant term + positive frequencies, negative frequencies) instead.
    """
    _require_primitive(pair)
    z, s = complex(z), complex(s)
    x, y = z.real, z.imag
    if y <= 0:
        raise ValueError("need Im z > 0")
    k = pair.k
    nmax = max(8, int(math.ceil(trunc.fourier_decay / (2 * math.pi * y))))
    ns = np.arange(1, nmax + 1)
    xs = 4 * math.pi * ns * y
    # beyond the Whittaker window the terms are below 1e-12 and are taken as exact zeros
    keep = xs <= 200
    dropped = int(np.count_nonzero(~keep))
    ns, xs = ns[keep], xs[keep]
    mu = s - 0.5
    if len(ns) == 0:
        ns = np.arange(1, 2)
        wplus = wminus = np.zeros(1)
    else:
        wplus = np.asarray(whittaker_w(k / 2, mu, xs))
        wminus = np.asarray(whittaker_w(-k / 2, mu, xs)) if k else wplus
    ratio = gamma(s + k / 2) * rgamma(s - k / 2)
    lam_p = np.array([lambda_coeff(pair, int(n), s) for n in ns])
    lam_m = lam_p * pair.chi2(-1)
    phase = np.exp(2j * math.pi * ns * x)
    plus = constant_term_completed(pair, y, s) + np.sum(lam_p / np.sqrt(ns) * phase * wplus)
    minus = ratio * np.sum(lam_m / np.sqrt(ns) * np.conj(phase) * wminus)
    if parts:
        return complex(plus), complex(minus)
    val = plus + minus
    if with_info:
        tail = abs(lam_p[-1]) * math.exp(-2 * math.pi * (nmax + 1) * y) * (1 + abs(ratio)) * (nmax + 1) ** 4
        return val, {"n_max": int(nmax), "tail_estimate": tail, "underflow": dropped}
    return val


def eval_pair_fourier(pair: CharacterPair, z: complex, s, trunc: TruncationSpec = DEFAULT_TRUNCATION,
                      with_info: bool = False):
    """E_{chi1,chi2}(z, s) = E* / completion factor."""
    cf = completion_factor(pair, s)
    if with_info:
        val, info = eval_completed_fourier(pair, z, s, trunc, with_info=True)
        info["completion_factor"] = abs(cf)
        return val / cf, info
    return eval_completed_fourier(pair, z, s, trunc) / cf


__all__ = [
    "completion_factor",
    "constant_term_completed",
    "constant_term_reflected",
    "constant_term_unfolded",
    "eval_completed_fourier",
    "eval_pair_fourier",
    "lambda_coeff",
]
