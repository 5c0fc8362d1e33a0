"""Gamma, K-Bessel and Whittaker functions of complex order, and the Mellin
transform of the parity-combined Whittaker pair together with its polynomial
recursion.

All numerics are double precision.  The integrals are evaluated with the
trapezoid rule on a double-exponentially decaying integrand, halving the step
until two successive estimates agree.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


class WindowError(ValueError):
    """Arguments outside the supported numeric window."""


class PoleError(ValueError):
    """Evaluation at a pole."""


# ---------------------------------------------------------------------------
# Gamma

_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


_STIRLING = (
    1 / 12, -1 / 360, 1 / 1260, -1 / 1680, 1 / 1188, -691 / 360360, 1 / 156, -3617 / 122400,
)


def _stirling_log(z):
    inv = 1 / z
    inv2 = inv * inv
    acc = 0
    for c in reversed(_STIRLING):
        acc = acc * inv2 + c
    return (z - 0.5) * np.log(z) - z + 0.5 * math.log(2 * math.pi) + acc * inv


def _log_gamma_right(z):
    """log Gamma(z) for Re z >= 0.5 up to a multiple of 2 pi i."""
    big = np.abs(z) >= 12
    out = _lanczos_log(np.where(big, 1.0, z))
    if np.any(big):
        out = np.where(big, _stirling_log(np.where(big, z, 12.0)), out)
    return out


def _lanczos_log(z):
    z = z - 1
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x = x + _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2 * math.pi) + (z + 0.5) * np.log(t) - t + np.log(x)


def _is_nonpositive_integer(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))


def gamma(z):
    """Complex Gamma by the Lanczos approximation with reflection."""
    scalar = np.isscalar(z)
    z = np.asarray(z, dtype=complex)
    if np.any(_is_nonpositive_integer(z)):
        raise PoleError("gamma pole")
    left = z.real < 0.5
    zz = np.where(left, 1 - z, z)
    g = np.exp(_log_gamma_right(zz))
    out = np.where(left, np.pi / (np.sin(np.pi * z) * g), g)
    return complex(out) if scalar else out


def rgamma(z):
    """1/Gamma(z), entire; exactly zero at the poles of Gamma."""
    scalar = np.isscalar(z)
    z = np.asarray(z, dtype=complex)
    poles = _is_nonpositive_integer(z)
    zs = np.where(poles, 0.5, z)
    left = zs.real < 0.5
    zz = np.where(left, 1 - zs, zs)
    g = np.exp(_log_gamma_right(zz))
    out = np.where(left, np.sin(np.pi * zs) * g / np.pi, 1 / g)
    out = np.where(poles, 0, out)
    return complex(out) if scalar else out


# ---------------------------------------------------------------------------
# trapezoid rule with step halving


def _trapezoid(fn, lo, hi, h, tol, max_halvings=9, floor=1e-300):
    """Integrate fn over [lo, hi] on a uniform grid, halving h until the relative
    change (measured against the integral of |fn|, or floor if larger) drops below tol.

    fn takes a 1-d array of nodes and returns an array of shape (nodes, ...).
    Returns (value, abs_integral, estimated_error).
    """
    n = max(2, int(math.ceil((hi - lo) / h)))
    h = (hi - lo) / n
    nodes = lo + h * np.arange(n + 1)
    w = np.ones(n + 1)
    w[0] = w[-1] = 0.5
    vals = fn(nodes)
    total = np.tensordot(w, vals, axes=1)
    absum = np.tensordot(w, np.abs(vals), axes=1)
    est = total * h
    for _ in range(max_halvings):
        mids = nodes[:-1] + h / 2
        mv = fn(mids)
        total = total + mv.sum(axis=0)
        absum = absum + np.abs(mv).sum(axis=0)
        nodes = np.sort(np.concatenate([nodes, mids]))
        h /= 2
        new = total * h
        scale = absum * h
        err = np.max(np.abs(new - est) / np.maximum(scale, floor))
        est = new
        if err < tol / 10:
            return est, scale, err
    raise WindowError("quadrature did not converge")


# ---------------------------------------------------------------------------
# K-Bessel


def bessel_k(nu, x, tol: float = 1e-13):
    """K_nu(x) for complex nu and real x > 0 (x may be an array).

    Uses K_nu(x) = (1/2) int_R exp(-x cosh t + nu t) dt on the horizontal line
    Im t = beta through the saddle, which removes the cancellation that
    otherwise comes with large |Im nu|.
    """
    scalar = np.isscalar(x)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    nu = complex(nu)
    if np.any(x <= 0) or np.any(x > 700) or abs(nu.imag) > 30 or abs(nu.real) > 40:
        raise WindowError("unsupported range")
    tau = nu.imag
    eps = min(0.5, 1.0 / max(abs(tau), 1e-9))
    beta = np.sign(tau) * np.minimum(np.arcsin(np.minimum(abs(tau) / x, 1.0)), np.pi / 2 - eps)
    cb = np.cos(beta)
    # truncation: x cos(beta) (cosh T - 1) - |Re nu| T > 45
    T = np.ones_like(x)
    for _ in range(30):
        T = np.arccosh(1 + (45 + abs(nu.real) * T) / (x * cb))
    T = float(np.max(T))
    width = float(np.min(1 / np.sqrt(x * cb + 1e-12)))
    h0 = min(0.5, width, 0.5 * eps + 0.02)

    def integrand(t):
        tt = t[:, None] + 1j * beta[None, :]
        return np.exp(-x[None, :] * (np.cosh(tt) - 1) + nu * tt)

    val, _, _ = _trapezoid(integrand, -T, T, h0, tol)
    out = 0.5 * np.exp(-x) * val
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# Whittaker W


def _whittaker_integral(kappa: float, mu: complex, x: np.ndarray, tol: float) -> np.ndarray:
    """W via the confluent-U integral; requires Re(1/2 + mu - kappa) > 0."""
    a = 0.5 + mu - kappa
    c = mu + kappa - 0.5
    ra = a.real
    # tau = exp(u - exp(-u)); lower cut where tau^a is negligible, upper where e^-tau is
    lo = -math.log(50.0 / min(ra, 1.0))
    hi = math.log(60.0 + 4 * abs(c))

    def integrand(u):
        tau = np.exp(u - np.exp(-u))
        jac = tau * (1 + np.exp(-u))
        base = np.exp(-tau) * np.exp((a - 1) * np.log(tau)) * jac
        return base[:, None] * np.exp(c * np.log1p(tau[:, None] / x[None, :]))

    val, _, _ = _trapezoid(integrand, lo, hi, 0.25, tol)
    return np.exp(-x / 2 + kappa * np.log(x)) * rgamma(a) * val


def whittaker_w(kappa, mu, y, tol: float = 1e-13):
    """W_{kappa,mu}(y) for half-integral kappa, complex mu, real y > 0."""
    scalar = np.isscalar(y)
    x = np.atleast_1d(np.asarray(y, dtype=float))
    kappa = float(kappa)
    mu = complex(mu)
    if 2 * kappa != round(2 * kappa) or abs(kappa) > 4 or abs(mu.imag) > 30:
        raise WindowError("unsupported range")
    if np.any(x <= 0) or np.any(x > 200):
        raise WindowError("unsupported range")
    if mu.real < 0:
        mu = -mu
    if kappa == 0:
        out = np.sqrt(x / np.pi) * np.asarray(bessel_k(mu, x / 2, tol))
    elif kappa <= mu.real:
        out = _whittaker_integral(kappa, mu, x, tol)
    else:
        # step up from two directly computable orders
        n = int(math.ceil(kappa - mu.real))
        k0 = kappa - n
        wm = _whittaker_integral(k0 - 1, mu, x, tol)
        w0 = _whittaker_integral(k0, mu, x, tol) if k0 != 0 else np.sqrt(x / np.pi) * bessel_k(mu, x / 2, tol)
        k = k0
        for _ in range(n):
            wm, w0 = w0, (x - 2 * k) * w0 - ((k - 0.5) ** 2 - mu * mu) * wm
            k += 1
        out = w0
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# exact bivariate polynomials in (s, beta)


class Poly2:
    """Polynomial in s and beta with Fraction coefficients, {(i, j): c} for c s^i beta^j."""

    def __init__(self, terms=None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def s(cls):
        return cls({(1, 0): 1})

    @classmethod
    def beta(cls):
        return cls({(0, 1): 1})

    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                out[(i + k, j + l)] = out.get((i + k, j + l), 0) + a * b
        return Poly2(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.terms == _as_poly(other).terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def shift(self, ds, dbeta):
        """Substitute s -> s + ds, beta -> beta + dbeta."""
        out = Poly2()
        sp = Poly2.s() + ds
        bp = Poly2.beta() + dbeta
        for (i, j), c in self.terms.items():
            out = out + c * _pow(sp, i) * _pow(bp, j)
        return out

    def div_beta(self):
        """Exact division by beta; raises when beta does not divide."""
        if any(j == 0 for (_, j) in self.terms):
            raise ArithmeticError("polynomial is not divisible by beta")
        return Poly2({(i, j - 1): c for (i, j), c in self.terms.items()})

    def __call__(self, s, beta):
        return sum(complex(c) * s**i * beta**j for (i, j), c in self.terms.items())

    def __repr__(self):
        return f"Poly2({self.format()})"

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = self.terms[(i, j)]
            mono = "*".join(
                m
                for m in (
                    ("s" if i == 1 else f"s^{i}") if i else "",
                    ("beta" if j == 1 else f"beta^{j}") if j else "",
                )
                if m
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _as_poly(v):
    return v if isinstance(v, Poly2) else Poly2.const(v)


def _pow(p, n):
    out = Poly2.const(1)
    for _ in range(n):
        out = out * p
    return out


_PK_CACHE: dict = {}


def phi_polynomial(k: int, eps: int) -> Poly2:
    """The polynomial factor of the Whittaker Mellin transform, by recursion in k."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if not 0 <= k <= 8:
        raise ValueError("k must lie in 0..8")
    key = (k, eps)
    if key in _PK_CACHE:
        return _PK_CACHE[key]
    if k == 0:
        out = Poly2.const(Fraction(1 + eps, 2))
    else:
        s, b = Poly2.s(), Poly2.beta()
        sign_k = (-1) ** k
        up = phi_polynomial(k - 1, eps).shift(Fraction(1, 2), Fraction(1, 2))
        down = phi_polynomial(k - 1, -eps).shift(Fraction(1, 2), Fraction(-1, 2))
        up = up * (1 if eps == -sign_k else (s + b) * Fraction(1, 2))
        down = down * (1 if eps == -1 else (s - b) * Fraction(1, 2))
        # (1 - (k-1)/(2 beta)) up + (1 + (k-1)/(2 beta)) down
        corr = (down - up) * Fraction(k - 1, 2)
        out = up + down + (corr.div_beta() if corr.terms else Poly2())
    _PK_CACHE[key] = out
    return out


def phi_mellin_closed(k: int, eps: int, s, beta) -> complex:
    s, beta = complex(s), complex(beta)
    p = phi_polynomial(k, eps)(s, beta)
    if p == 0:
        return 0j
    a1 = (s + beta + (1 - eps * (-1) ** k) / 2) / 2
    a2 = (s - beta + (1 - eps) / 2) / 2
    return p * gamma(a1) * gamma(a2)


def phi_mellin_numeric(k: int, eps: int, s, beta, tol: float = 1e-11) -> complex:
    """sqrt(pi) int_0^inf (W_{k/2,b}(4y) + eps r W_{-k/2,b}(4y)) y^(s-1/2) dy/y."""
    s, beta = complex(s), complex(beta)
    if s.real <= abs(beta.real):
        raise WindowError("Mellin integral does not converge")
    ratio = gamma(beta + (1 + k) / 2) * rgamma(beta + (1 - k) / 2)
    # integrate in v = log y; algebraic decay at 0 becomes exponential
    rate = s.real - abs(beta.real)
    lo = -45.0 / rate
    hi = math.log(49.5)

    def integrand(v):
        y = np.exp(v)
        w1 = whittaker_w(k / 2, beta, 4 * y, tol=tol / 10)
        w2 = whittaker_w(-k / 2, beta, 4 * y, tol=tol / 10)
        ph = np.exp((s - 0.5) * v)
        return np.stack([w1 * ph, eps * ratio * w2 * ph], axis=1)

    # the two pieces converge separately; for k = 0, eps = -1 they cancel exactly
    val, _, _ = _trapezoid(integrand, lo, hi, 0.5, tol)
    return complex(math.sqrt(math.pi) * (val[0] + val[1]))


def whittaker_recursions(alpha, beta, y):
    """Residuals of the two contiguous relations for 2 beta W_{alpha,beta}(y)/sqrt(y).

    Returns (first, second), each relative to max(1, |lhs|).
    """
    beta = complex(beta)
    lhs = 2 * beta / math.sqrt(y) * whittaker_w(alpha, beta, y)
    rhs1 = whittaker_w(alpha + 0.5, beta + 0.5, y) - whittaker_w(alpha + 0.5, beta - 0.5, y)
    rhs2 = (beta - alpha + 0.5) * whittaker_w(alpha - 0.5, beta + 0.5, y) + (beta + alpha - 0.5) * whittaker_w(
        alpha - 0.5, beta - 0.5, y
    )
    scale = max(1.0, abs(lhs))
    return abs(lhs - rhs1) / scale, abs(lhs - rhs2) / scale
