"""Numerical identities satisfied by E_{chi1,chi2}: automorphy, Hecke action,
functional equation, Mellin transform, Atkin-Lehner and Fricke action, oldform
permutation and holomorphic q-expansions.  Each check returns a report.
"""

from __future__ import annotations

import cmath
import math
from math import gcd

import numpy as np

from ..arith import divisors, part, valuation
from ..characters import DirichletCharacter, principal
from ..lfun import completed_l, dirichlet_l
from ..modgroup import IntegerMatrix2x2, atkin_lehner_matrix, exact_divisors
from ..report import report, timed
from ..specialfn import _trapezoid, gamma, phi_mellin_closed
from .fourier import constant_term_completed, eval_completed_fourier, lambda_coeff
from .pairs import CharacterPair, local_parts
from .series import eval_pair_lattice


def _rel(a, b, scale=None) -> float:
    """|a - b| relative to scale (default max(|a|, |b|)); 0 when both vanish."""
    if scale is None:
        scale = max(abs(a), abs(b))
    return abs(a - b) / max(scale, 1e-300)


def slash(fn, M: IntegerMatrix2x2, z: complex, k: int) -> complex:
    """(f|M)(z) = j(M, z)^-k f(M z) with the unitary factor j."""
    return M.j(z) ** (-k) * fn(M.act(z))


def random_gamma0(N: int, rng, size: int = 9) -> IntegerMatrix2x2:
    """A random element of Gamma_0(N) with small entries."""
    while True:
        c = N * int(rng.integers(-size, size + 1))
        d = int(rng.integers(-size * N, size * N + 1))
        if d == 0 or gcd(c, d) != 1:
            continue
        # a d - b c = 1
        if c == 0:
            if abs(d) != 1:
                continue
            return IntegerMatrix2x2(d, int(rng.integers(-size, size + 1)), 0, d)
        a = pow(d, -1, abs(c)) if abs(c) > 1 else 0
        b = (a * d - 1) // c
        return IntegerMatrix2x2(a, b, c, d)


def gamma0_reduce(N: int, w: complex, max_c: int = 60):
    """(gamma, gamma w) with gamma in Gamma_0(N) raising Im w as far as a small search allows."""
    w = complex(w)
    total = IntegerMatrix2x2(1, 0, 0, 1)
    while True:
        best, best_im = None, w.imag
        for c in range(N, N * max_c + 1, N):
            centre = -c * w.real
            for d in range(math.floor(centre) - 1, math.ceil(centre) + 2):
                if d == 0 or gcd(c, d) != 1:
                    continue
                im = w.imag / abs(c * w + d) ** 2
                if im > best_im * (1 + 1e-12):
                    best, best_im = (c, d), im
        if best is None:
            return total, w
        c, d = best
        a = pow(d, -1, c) if c > 1 else 0
        g = IntegerMatrix2x2(a, (a * d - 1) // c, c, d)
        w = g.act(w)
        # translate back into |Re w| <= 1/2
        n = round(w.real)
        w -= n
        g = IntegerMatrix2x2(1, -n, 0, 1) @ g
        total = g @ total


def eval_reduced(fn, N: int, psi: DirichletCharacter, k: int, w: complex) -> complex:
    """f(w) for f automorphic on Gamma_0(N) of weight k and nebentypus psi, evaluated higher up:
    f(w) = conj psi(d) j(gamma, w)^-k f(gamma w)."""
    g, w2 = gamma0_reduce(N, w)
    return psi(g.d).conjugate() * g.j(complex(w)) ** (-k) * fn(w2)


# ---------------------------------------------------------------- automorphy


def automorphy_residual(pair: CharacterPair, gamma_m: IntegerMatrix2x2, z, s) -> float:
    """|conj psi(d) j(gamma, z)^-k E(gamma z) - E(z)| for gamma in Gamma_0(q1 q2)."""
    N = pair.level
    if gamma_m.det != 1 or gamma_m.c % N:
        raise ValueError("matrix not in Gamma_0(N)")
    psi = pair.nebentypus()

    def E(w):
        return eval_pair_lattice(pair, w, s)

    lhs = psi(gamma_m.d).conjugate() * slash(E, gamma_m, complex(z), pair.k)
    return _rel(lhs, E(z))


def periodicity_residual(pair: CharacterPair, z, s) -> float:
    return _rel(eval_pair_lattice(pair, complex(z) + 1, s), eval_pair_lattice(pair, z, s))


# ---------------------------------------------------------------- Hecke


def hecke_apply(n: int, N: int, psi: DirichletCharacter, fn, z, k: int = 0) -> complex:
    """(T_n f)(z) = n^-1/2 sum_{ad = n, (a, N) = 1} psi(a) sum_{b mod d} f((a z + b)/d)."""
    if k != 0:
        raise ValueError("unsupported weight")
    if n < 1:
        raise ValueError("n must be positive")
    z = complex(z)
    total = 0j
    for a in divisors(n):
        if gcd(a, N) != 1:
            continue
        d = n // a
        for b in range(d):
            total += psi(a) * fn((a * z + b) / d)
    return total / math.sqrt(n)


def hecke_check(pair: CharacterPair, n: int, z, s, tol: float = 1e-7):
    """T_n E = lambda(n, s) E."""
    with timed() as clock:
        N = pair.level

        def E(w):
            return eval_pair_lattice(pair, w, s)

        Tn = hecke_apply(n, N, pair.nebentypus(), E, z, pair.k)
        Ez = E(z)
        # relative to |E(z)| so that the vanishing case p | (q1, q2) is measured too
        res = _rel(Tn, lambda_coeff(pair, n, s) * Ez, abs(Ez))
    return report("hecke", _params(pair, z=z, s=s, n=n), res, tol, clock)


# ---------------------------------------------------------------- functional equation


def coefficient_fe_residual(pair: CharacterPair, s, n_max: int = 20) -> float:
    """max over 0 < |n| <= n_max of |lambda(n, 1-s) - (chi1 chi2)(sgn n) lambda_dual(n, s)|."""
    dual = pair.dual()
    sgn = pair.chi1(-1) * pair.chi2(-1)
    worst = 0.0
    for n in range(-n_max, n_max + 1):
        if n == 0:
            continue
        lhs = lambda_coeff(pair, n, 1 - complex(s))
        rhs = (sgn if n < 0 else 1) * lambda_coeff(dual, n, s)
        worst = max(worst, abs(lhs - rhs))
    return worst


def functional_equation_residual(pair: CharacterPair, z, s) -> float:
    """|E*_{chi1,chi2}(z, s) - E*_{conj chi2, conj chi1}(z, 1 - s)|, relative."""
    s = complex(s)
    a = eval_completed_fourier(pair, z, s)
    b = eval_completed_fourier(pair.dual(), z, 1 - s)
    return _rel(a, b)


def constant_term_symmetry(pair: CharacterPair, y: float, s) -> float:
    s = complex(s)
    return _rel(constant_term_completed(pair, y, 1 - s), constant_term_completed(pair.dual(), y, s))


# ---------------------------------------------------------------- Mellin transform


def mellin_numeric(pair: CharacterPair, s, u, tol: float = 1e-9) -> complex:
    """int_0^oo E*(iy, s) (q1 q2)^(u/2) y^u dy/y by trapezoid in log y."""
    if pair.q1 == 1 or pair.q2 == 1:
        raise ValueError("Mellin transform needs q1, q2 > 1")
    s, u = complex(s), complex(u)
    N = pair.level
    # E*(iy) decays like exp(-2 pi y) at infinity and exp(-2 pi/(N y)) at zero
    lo = math.log(2 * math.pi / (N * 40.0))
    hi = math.log(40.0 / (2 * math.pi))

    def integrand(v):
        out = []
        for t in v:
            y = math.exp(t)
            plus, minus = eval_completed_fourier(pair, 1j * y, s, parts=True)
            w = cmath.exp(u * t)
            out.append(((plus + minus) * w, (abs(plus) + abs(minus)) * abs(w)))
        return np.array(out)

    # when delta3 = 0 the halves cancel and the integrand is rounding noise, so convergence
    # is measured against the size of the halves rather than of their sum
    coarse, _, _ = _trapezoid(integrand, lo, hi, 0.25, 1.0, max_halvings=1)
    val, _, _ = _trapezoid(lambda v: integrand(v)[:, :1], lo, hi, 0.25, tol, floor=abs(coarse[1]))
    return complex(val[0]) * cmath.exp(u / 2 * math.log(N))


def mellin_closed(pair: CharacterPair, s, u) -> complex:
    """delta3 q1^(-s/2) q2^((s-1)/2) Lambda(u+s, chi1) Lambda(u+1-s, conj chi2), for k in {0, 1}."""
    if pair.k not in (0, 1):
        raise ValueError("closed Lambda form needs k in {0, 1}")
    s, u = complex(s), complex(u)
    if pair.delta3 == 0:
        return 0j
    return (
        cmath.exp(-s / 2 * math.log(pair.q1) + (s - 1) / 2 * math.log(pair.q2))
        * completed_l(u + s, pair.chi1)
        * completed_l(u + 1 - s, pair.chi2.conj())
    )


def mellin_phi_form(pair: CharacterPair, s, u) -> complex:
    """The general-k form with Phi_k^{eps2}(u + 1/2, s - 1/2)."""
    s, u = complex(s), complex(u)
    return (
        cmath.exp(u / 2 * math.log(pair.q1 * pair.q2 / math.pi**2))
        / math.sqrt(math.pi)
        * dirichlet_l(u + s, pair.chi1)
        * dirichlet_l(u + 1 - s, pair.chi2.conj())
        * phi_mellin_closed(pair.k, pair.eps2, u + 0.5, s - 0.5)
    )


def mellin_check(pair: CharacterPair, s, u, tol: float = 1e-6):
    with timed() as clock:
        num = mellin_numeric(pair, s, u)
        if pair.k in (0, 1):
            closed = mellin_closed(pair, s, u)
        else:
            closed = mellin_phi_form(pair, s, u)
        res = abs(num - closed) if pair.delta3 == 0 else _rel(num, closed)
    return report("mellin-transform", _params(pair, s=s, u=u), res, tol, clock, delta3=pair.delta3)


# ---------------------------------------------------------------- Atkin-Lehner and Fricke


def atkin_lehner_partner(pair: CharacterPair, Q: int):
    """(c(Q), pair') with E|W_Q = c(Q) E_{pair'}."""
    N = pair.level
    if N % Q or gcd(Q, N // Q) != 1:
        raise ValueError("Q must be an exact divisor of q1 q2")
    R = N // Q
    c1Q, c1R = local_parts(pair.chi1, Q)
    c2Q, c2R = local_parts(pair.chi2, Q)
    new = CharacterPair(c2Q * c1R, c1Q * c2R, pair.k)
    psiQ, psiR = local_parts(pair.nebentypus(), Q)
    q2 = pair.q2
    c = c2Q(-1) * psiQ(part(q2, R)).conjugate() * psiR(part(q2, Q)).conjugate()
    return c, new


def slash_atkin_lehner(pair: CharacterPair, Q: int, z, s, tol: float = 1e-7):
    with timed() as clock:
        N = pair.level
        c, new = atkin_lehner_partner(pair, Q)
        W = atkin_lehner_matrix(Q, N)
        psi = pair.nebentypus()

        def E(w):
            return eval_reduced(lambda v: eval_pair_lattice(pair, v, s), N, psi, pair.k, w)

        lhs = slash(E, W, complex(z), pair.k)
        rhs = c * eval_pair_lattice(new, z, s)
        res = _rel(lhs, rhs)
    return report("atkin-lehner", _params(pair, z=z, s=s, Q=Q), res, tol, clock)


def fricke_plain(pair: CharacterPair, z, s, tol: float = 1e-7):
    """E(-1/(N z)) = psi(-1) j(omega_N, z)^k chi2(-1) E_{chi2,chi1}(z), both by the lattice sum.

    At z = iy this is E(i/(q1 q2 y)) = i^-k chi2(-1) E_{chi2,chi1}(iy).  A generic z
    is used because for k = 0 and two odd characters both sides vanish on the
    imaginary axis.
    """
    with timed() as clock:
        z = complex(z)
        N = pair.level
        omega = IntegerMatrix2x2(0, -1, N, 0)
        lhs = eval_pair_lattice(pair, omega.act(z), s)
        rhs = pair.nebentypus()(-1) * omega.j(z) ** pair.k * pair.chi2(-1) * eval_pair_lattice(pair.swapped(), z, s)
        res = _rel(lhs, rhs)
    return report("fricke", _params(pair, z=z, s=s, form="plain"), res, tol, clock)


def _epsilon(chi: DirichletCharacter) -> complex:
    return chi.gauss_sum() / ((1j) ** chi.parity * math.sqrt(chi.modulus))


def fricke_completed(pair: CharacterPair, y: float, s, tol: float = 1e-7):
    """E*(i/(q1 q2 y)) = q1^(1/2-s) q2^(s-1/2) i^(-k+d1-d2) chi2(-1) eps(chi1) eps(conj chi2) E*_{chi2,chi1}(iy)."""
    with timed() as clock:
        s = complex(s)
        N = pair.level
        lhs = eval_completed_fourier(pair, 1j / (N * y), s)
        const = (
            cmath.exp((0.5 - s) * math.log(pair.q1) + (s - 0.5) * math.log(pair.q2))
            * (1j) ** (-pair.k + pair.chi1.parity - pair.chi2.parity)
            * pair.chi2(-1)
            * _epsilon(pair.chi1)
            * _epsilon(pair.chi2.conj())
        )
        rhs = const * eval_completed_fourier(pair.swapped(), 1j * y, s)
        res = _rel(lhs, rhs)
    return report("fricke", _params(pair, y=y, s=s, form="completed"), res, tol, clock)


# ---------------------------------------------------------------- oldforms


def b_prime(B: int, q: int, M: int) -> int:
    """q^(beta - gamma) B0 where q^beta || M, q^gamma || B, B = q^gamma B0."""
    if M % B:
        raise ValueError("B must divide M")
    beta, gam = valuation(M, q), valuation(B, q)
    return q ** (beta - gam) * (B // q**gam)


def _q_part_sign(chi: DirichletCharacter, q: int) -> complex:
    return local_parts(chi, q)[0](-1)


def _al_prime_power(q: int, N: int) -> int:
    return q ** valuation(N, q)


def oldform_atkin_lehner(chi: DirichletCharacter, M: int, B: int, q: int, z, s, tol: float = 1e-7):
    """(E_{chi,chi}(B z)) | W_q = chi^(q)(-1) E_{chi,chi}(B' z) on Gamma_0(l^2 M)."""
    with timed() as clock:
        ell = chi.modulus
        N = ell * ell * M
        if N % q or M % B:
            raise ValueError("need q | l^2 M and B | M")
        pair = CharacterPair(chi, chi, 0)
        W = atkin_lehner_matrix(_al_prime_power(q, N), N)
        lhs = eval_reduced(lambda v: eval_pair_lattice(pair, v, s, dilation=B), N, principal(N), 0, W.act(complex(z)))
        rhs = _q_part_sign(chi, q) * eval_pair_lattice(pair, z, s, dilation=b_prime(B, q, M))
        res = _rel(lhs, rhs)
    return report("oldform-AL", {"chi": chi.label(), "M": M, "B": B, "q": q, "z": z, "s": s}, res, tol, clock)


def d_atkin_lehner(chi: DirichletCharacter, M: int, g: int, q: int, z, s, tol: float = 1e-7):
    """D_{chi, l g} | W_q = chi^(q)(-1) D_{chi, l g'} with g' the B -> B' image of g."""
    from ..basis.expansions import d_function

    with timed() as clock:
        ell = chi.modulus
        N = ell * ell * M
        if N % q or M % g:
            raise ValueError("need q | l^2 M and g | M")
        psi = principal(N)
        pair = CharacterPair(chi, chi, 0)
        _, d_old = d_function(N, psi, ell * g, pair)
        _, d_new = d_function(N, psi, ell * b_prime(g, q, M), pair)
        W = atkin_lehner_matrix(_al_prime_power(q, N), N)
        lhs = eval_reduced(lambda v: d_old.evaluate(v, s), N, psi, 0, W.act(complex(z)))
        rhs = _q_part_sign(chi, q) * d_new.evaluate(z, s)
        res = _rel(lhs, rhs)
    return report("d-atkin-lehner", {"chi": chi.label(), "M": M, "g": g, "q": q, "z": z, "s": s}, res, tol, clock)


# ---------------------------------------------------------------- holomorphic forms


def holomorphic_qexpansion(pair: CharacterPair, n_max: int) -> list:
    """Exact coefficients [a_1, ..., a_nmax] with a_n = sum_{ab=n} chi1(a) conj(chi2)(b) b^(k-1)."""
    from ..basis.algebra import char_value

    k = pair.k
    if k < 2:
        raise ValueError("holomorphic forms need k >= 2")
    if k == 2 and pair.q1 == 1 and pair.q2 == 1:
        raise ValueError("weight-2 level-1 pole")
    out = []
    for n in range(1, n_max + 1):
        total = char_value(pair.chi1, 1) * 0
        for a in divisors(n):
            b = n // a
            total = total + char_value(pair.chi1, a) * char_value(pair.chi2, b).conj() * (b ** (k - 1))
        out.append(total)
    return out


def holomorphic_normaliser(pair: CharacterPair) -> complex:
    """(q2/2 pi)^k Gamma(k) L(k, chi1 chi2) / (i^-k tau(chi2))."""
    k = pair.k
    return (pair.q2 / (2 * math.pi)) ** k * gamma(k) * dirichlet_l(k, pair.product()) / ((1j) ** (-k) * pair.chi2.gauss_sum())


def holomorphic_check(pair: CharacterPair, z, n_max: int = 60, tol: float = 1e-6):
    """C (q2 y)^(-k/2) E(z, k/2) = delta_{q1=1} C + sum a_n e(nz), lattice side at s = k/2."""
    with timed() as clock:
        z = complex(z)
        k = pair.k
        if k < 3:
            raise ValueError("lattice side needs k >= 3")
        C = holomorphic_normaliser(pair)
        lhs = C * (pair.q2 * z.imag) ** (-k / 2) * eval_pair_lattice(pair, z, k / 2)
        coeffs = holomorphic_qexpansion(pair, n_max)
        q = cmath.exp(2j * math.pi * z)
        rhs = (C if pair.q1 == 1 else 0) + sum(complex(a) * q ** (n + 1) for n, a in enumerate(coeffs))
        res = _rel(lhs, rhs)
    return report("holomorphic-q", _params(pair, z=z, n_max=n_max), res, tol, clock)


def weight_one_proportionality(pair: CharacterPair, n_max: int = 30) -> float:
    """max |lambda(n, 1/2) - lambda_dual(n, 1/2)| for k = 1."""
    if pair.k != 1:
        raise ValueError("weight one only")
    dual = pair.dual()
    return max(abs(lambda_coeff(pair, n, 0.5) - lambda_coeff(dual, n, 0.5)) for n in range(1, n_max + 1))


def _params(pair: CharacterPair, **extra) -> dict:
    out = {"chi1": pair.chi1.label(), "chi2": pair.chi2.label(), "k": pair.k}
    out.update(extra)
    return out


__all__ = [
    "atkin_lehner_partner",
    "automorphy_residual",
    "b_prime",
    "coefficient_fe_residual",
    "constant_term_symmetry",
    "d_atkin_lehner",
    "exact_divisors",
    "fricke_completed",
    "fricke_plain",
    "functional_equation_residual",
    "hecke_apply",
    "hecke_check",
    "holomorphic_check",
    "holomorphic_normaliser",
    "holomorphic_qexpansion",
    "mellin_check",
    "mellin_closed",
    "mellin_numeric",
    "mellin_phi_form",
    "oldform_atkin_lehner",
    "periodicity_residual",
    "random_gamma0",
    "slash",
    "slash_atkin_lehner",
    "weight_one_proportionality",
]
