"""Formal inner product on cusp coordinates and the computations built on it:
orthogonality of the D-family, basis independence, inner products of newform
dilates, and the Eisenstein side of the squarefree-level Kuznetsov formula.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction
from math import gcd, prod

import numpy as np

from ..arith import divisors, euler_phi, factorize, is_squarefree, mobius, prime_divisors, valuation
from ..characters import DirichletCharacter, primitive_characters, principal
from ..eisenstein.fourier import lambda_coeff
from ..eisenstein.pairs import CharacterPair
from ..modgroup import singular_cusps
from ..report import report, timed
from .algebra import Coefficient, Cyclo, Poly, char_value
from .expansions import (
    BasisExpansion,
    PairLabel,
    _check_psi,
    compatible_pairs,
    cusp_to_pairs,
    d_function,
    pairs_to_cusps,
    same_core,
)

FOUR_PI = 4 * math.pi


# ---------------------------------------------------------------- vectors


class EisCoeffVector:
    """Cusp-basis coordinates of an element of the Eisenstein space at fixed s."""

    def __init__(self, level: int, psi: DirichletCharacter, coeffs=None):
        self.level = level
        self.psi = psi
        self.keys = tuple(singular_cusps(level, psi))
        allowed = set(self.keys)
        coeffs = coeffs or {}
        for c in coeffs:
            if c not in allowed:
                raise ValueError(f"{c} is not a singular cusp for this character")
        self.coeffs = {c: complex(coeffs.get(c, 0)) for c in self.keys}

    @classmethod
    def from_expansion(cls, expansion: BasisExpansion, s) -> "EisCoeffVector":
        if any(isinstance(lab, PairLabel) for lab in expansion.terms):
            raise ValueError("expansion is not in cusp coordinates")
        return cls(expansion.level, expansion.psi, expansion.coefficients_at(s))

    @classmethod
    def from_array(cls, level, psi, arr) -> "EisCoeffVector":
        keys = singular_cusps(level, psi)
        return cls(level, psi, dict(zip(keys, arr)))

    def as_array(self) -> np.ndarray:
        return np.array([self.coeffs[c] for c in self.keys], dtype=complex)

    def __add__(self, other):
        _same_space(self, other)
        return EisCoeffVector.from_array(self.level, self.psi, self.as_array() + other.as_array())

    def scaled(self, c) -> "EisCoeffVector":
        return EisCoeffVector.from_array(self.level, self.psi, self.as_array() * c)


def _same_space(v, w):
    if v.level != w.level or v.psi != w.psi:
        raise ValueError("vectors belong to different (level, character) spaces")


def formal_inner_product(v: EisCoeffVector, w: EisCoeffVector) -> complex:
    """4 pi sum over singular cusps of v_a conj(w_a)."""
    _same_space(v, w)
    return FOUR_PI * complex(np.sum(v.as_array() * np.conj(w.as_array())))


# ---------------------------------------------------------------- exact products


def conj_critical(coeff: Coefficient) -> Coefficient:
    """Complex conjugate at s = 1/2 + it: conj(p^-s) = p^-1 (p^-s)^-1."""
    if coeff.den:
        raise ValueError("conjugation on the critical line needs a polynomial coefficient")
    terms = {}
    for mono, c in coeff.num.terms.items():
        scale = Fraction(1)
        new = []
        for p, e in mono:
            scale *= Fraction(p) ** (-e)
            new.append((p, -e))
        terms[tuple(sorted(new))] = c.conj() * Cyclo.rational(scale)
    return Coefficient(Poly(terms))


def exact_formal_product(a: BasisExpansion, b: BasisExpansion) -> Coefficient:
    """(1/4 pi) <a, b>_Eis with s on the critical line, exactly."""
    if a.level != b.level or a.psi != b.psi:
        raise ValueError("expansions belong to different spaces")
    total = Coefficient.const(0)
    for lab, c in a.terms.items():
        if isinstance(lab, PairLabel):
            raise ValueError("expansion is not in cusp coordinates")
        if lab in b.terms:
            total = total + c * conj_critical(b.terms[lab])
    return total


# ---------------------------------------------------------------- D-family


def d_family(N: int, psi: DirichletCharacter, k: int = None) -> list:
    """[(f, pair, cusp-side expansion)] over all f | N and (chi1, chi2) in Psi_f."""
    k = _check_psi(N, psi, k)
    out = []
    for f in divisors(N):
        for pair in compatible_pairs(N, psi, f, k):
            out.append((f, pair, d_function(N, psi, f, pair)[0]))
    return out


def d_orthogonality(N: int, psi: DirichletCharacter, k: int = None) -> dict:
    """Exact Gram matrix check and numeric rank of the D-family over the cusp basis."""
    fam = d_family(N, psi, k)
    ok = True
    for i, (f1, p1, v1) in enumerate(fam):
        for j, (f2, p2, v2) in enumerate(fam):
            if j < i:
                continue
            g = exact_formal_product(v1, v2)
            want = euler_phi(gcd(f1, N // f1)) if i == j else 0
            if not g.equals(Coefficient.const(want)):
                ok = False
    keys = singular_cusps(N, psi)
    mat = np.array([[complex(v.terms[c].num.terms.get((), 0) if c in v.terms else 0) for c in keys] for _, _, v in fam])
    rank = int(np.linalg.matrix_rank(mat)) if len(fam) else 0
    return {"orthogonal": ok, "rank": rank, "size": len(fam), "cusps": len(keys)}


def newform_labels(N: int, psi: DirichletCharacter, k: int = None) -> list:
    """Primitive pairs with q1 q2 | N and chi1 conj(chi2) ~ psi."""
    k = _check_psi(N, psi, k)
    out = []
    for q1 in divisors(N):
        for q2 in divisors(N // q1):
            for c1 in primitive_characters(q1):
                for c2 in primitive_characters(q2):
                    if same_core(c1 * c2.conj(), psi):
                        out.append(CharacterPair(c1, c2, k))
    return out


def oldclass_orthogonality(N: int, psi: DirichletCharacter, k: int = None) -> bool:
    """Dilates of distinct newform pairs are exactly orthogonal on the critical line."""
    labels = newform_labels(N, psi, k)
    exps = {}
    for pair in labels:
        L = N // pair.level
        exps[pair] = [pairs_to_cusps(pair, N, B) for B in divisors(L)]
    for p1, p2 in itertools.combinations(labels, 2):
        for a in exps[p1]:
            for b in exps[p2]:
                b2 = BasisExpansion(b.level, a.psi, b.k, b.terms)
                if not exact_formal_product(a, b2).is_zero():
                    return False
    return True


def dilate_rank(N: int, psi: DirichletCharacter, t: float, k: int = None) -> dict:
    """Numeric rank of all newform dilates at s = 1/2 + it (t != 0)."""
    if t == 0:
        raise ValueError("t = 0 is excluded from rank assertions")
    s = 0.5 + 1j * t
    rows = []
    for pair in newform_labels(N, psi, k):
        for B in divisors(N // pair.level):
            e = pairs_to_cusps(pair, N, B)
            rows.append(EisCoeffVector(N, psi, e.coefficients_at(s)).as_array())
    rank = int(np.linalg.matrix_rank(np.array(rows))) if rows else 0
    return {"rank": rank, "size": len(rows), "cusps": len(singular_cusps(N, psi))}


# ---------------------------------------------------------------- basis independence


def random_hermitian_pairing(N: int, psi: DirichletCharacter, rng):
    """A pairing p(f, F) = <H f, F>_Eis with H a random Hermitian matrix."""
    n = len(singular_cusps(N, psi))
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    H = A + A.conj().T

    def pairing(f: EisCoeffVector, F: EisCoeffVector) -> complex:
        return FOUR_PI * complex(np.sum((H @ f.as_array()) * np.conj(F.as_array())))

    return pairing


def _require_orthogonal(basis, tol):
    for F, G in itertools.combinations(basis, 2):
        g = formal_inner_product(F, G)
        scale = math.sqrt(abs(formal_inner_product(F, F) * formal_inner_product(G, G)))
        if abs(g) > tol * max(scale, 1.0):
            raise ValueError("basis not orthogonal")


def spectral_sums(basis, pairing, f, g):
    """(sum_F p(f,F)/<F,F> F, sum_F p(f,F) conj(p(g,F))/<F,F>)."""
    first = 0
    second = 0j
    for F in basis:
        nF = formal_inner_product(F, F)
        first = first + pairing(f, F) / nF * F.as_array()
        second += pairing(f, F) * pairing(g, F).conjugate() / nF
    return first, second


def basis_independence_check(basis1, basis2, pairing, f, g, tol: float = 1e-10, params=None):
    """Both spectral sums agree across two orthogonal bases."""
    with timed() as clock:
        _require_orthogonal(basis1, 1e-9)
        _require_orthogonal(basis2, 1e-9)
        a1, b1 = spectral_sums(basis1, pairing, f, g)
        a2, b2 = spectral_sums(basis2, pairing, f, g)
        scale = max(1.0, float(np.max(np.abs(a1))), abs(b1))
        res = max(float(np.max(np.abs(a1 - a2))), abs(b1 - b2)) / scale
    return report("basis-independence", params or {}, res, tol, clock)


def cusp_basis(N: int, psi: DirichletCharacter) -> list:
    keys = singular_cusps(N, psi)
    return [EisCoeffVector(N, psi, {c: 1}) for c in keys]


def d_basis(N: int, psi: DirichletCharacter, k: int = None) -> list:
    return [EisCoeffVector.from_expansion(v, 0.5) for _, _, v in d_family(N, psi, k)]


# ---------------------------------------------------------------- inner products of dilates


def _pair_level_check(pair: CharacterPair, N: int, *Bs) -> int:
    if not pair.is_primitive():
        raise ValueError("characters must be primitive")
    if N % pair.level:
        raise ValueError("q1 q2 must divide the level")
    L = N // pair.level
    for B in Bs:
        if B <= 0 or L % B:
            raise ValueError("dilation must divide N/(q1 q2)")
    return L


def local_no_dilation(pair: CharacterPair, p: int) -> Fraction:
    """I^(p)(1, 1)."""
    in1, in2 = pair.q1 % p == 0, pair.q2 % p == 0
    if in1 and in2:
        return 1 - Fraction(1, p)
    if in1 or in2:
        return Fraction(1)
    return 1 + Fraction(1, p)


def a_multiplicative(pair: CharacterPair, n: int, t: float) -> complex:
    """A_{chi1,chi2}(n) at s = 1/2 + it."""
    s = 0.5 + 1j * t
    out = 1 + 0j
    for p, e in factorize(n):
        def lam(j):
            return 0 if j < 0 else lambda_coeff(pair, p**j, s)

        chi0 = 0 if pair.level % p == 0 else 1
        psi_p = pair.chi1(p) * pair.chi2(p).conjugate()
        out *= (lam(e) - psi_p / p * lam(e - 2)) / (p ** (e / 2) * (1 + chi0 / p))
    return out


def inner_product_closed(pair: CharacterPair, B1: int, B2: int, N: int, t: float) -> complex:
    """I(B1, B2; N) from I(1,1;N) and the multiplicative function A."""
    _pair_level_check(pair, N, B1, B2)
    g = gcd(B1, B2)
    i11 = N * float(prod(local_no_dilation(pair, p) for p in prime_divisors(N)))
    return i11 * a_multiplicative(pair, B2 // g, t) * a_multiplicative(pair, B1 // g, t).conjugate()


def inner_product_rsum(pair: CharacterPair, B1: int, B2: int, N: int, t: float) -> complex:
    """I(B1, B2; N) = N sum_{R | L} phi(g_R)/g_R G(B1, R) conj G(B2, R)."""
    L = _pair_level_check(pair, N, B1, B2)
    s = 0.5 + 1j * t
    q1, q2 = pair.q1, pair.q2

    def G(Bi, R):
        total = 0j
        for d in divisors(L // Bi):
            for e in divisors(Bi):
                if gcd(d, e) == 1 and Bi * d == R * e:
                    total += pair.chi1(d) * pair.chi2(e) * cmath.exp(-s * math.log(d * e))
        return total

    total = 0j
    for R in divisors(L):
        gR = gcd(q2 * R, q1 * L // R)
        total += euler_phi(gR) / gR * G(B1, R) * G(B2, R).conjugate()
    return N * total


def inner_product_formal(pair: CharacterPair, B1: int, B2: int, N: int, t: float) -> complex:
    """(1/4 pi) <E(B1 z), E(B2 z)>_Eis via the cusp coordinates of both dilates."""
    _pair_level_check(pair, N, B1, B2)
    s = 0.5 + 1j * t
    v1 = EisCoeffVector.from_expansion(pairs_to_cusps(pair, N, B1), s)
    v2 = EisCoeffVector.from_expansion(pairs_to_cusps(pair, N, B2), s)
    return formal_inner_product(v1, v2) / FOUR_PI


def inner_product_I(pair: CharacterPair, B1: int, B2: int, N: int, t: float) -> dict:
    return {
        "closed": inner_product_closed(pair, B1, B2, N, t),
        "rsum": inner_product_rsum(pair, B1, B2, N, t),
        "formal": inner_product_formal(pair, B1, B2, N, t),
    }


# local algebra in y = p^(-1/2) and w = p^(-it)


def _yw(a: int, b: int = 0, c=1) -> Poly:
    return Poly.monomial([("y", a), ("w", b)], c)


def conj_local(P: Poly) -> Poly:
    """Conjugation for real y and unimodular w."""
    return Poly({tuple(sorted((v, -e if v == "w" else e) for v, e in m)): c.conj() for m, c in P.terms.items()})


def local_lambda(pair: CharacterPair, p: int, j: int) -> Poly:
    """lambda(p^j) at s = 1/2 + it; zero for j < 0."""
    out = Poly()
    for i in range(j + 1):
        c = char_value(pair.chi1, p**i) * char_value(pair.chi2, p ** (j - i)).conj()
        out = out + _yw(0, -(j - 2 * i), c)
    return out


def _local_G(pair, p, Lp, Bi, R) -> Poly:
    out = Poly()
    for d in range(Lp - Bi + 1):
        for e in range(Bi + 1):
            if min(d, e) == 0 and Bi + d - e == R:
                c = char_value(pair.chi1, p**d) * char_value(pair.chi2, p**e)
                out = out + _yw(d + e, d + e, c)
    return out


def local_inner_rsum(pair: CharacterPair, p: int, Lp: int, B1: int, B2: int) -> Poly:
    """I^(p)(p^B1, p^B2) from its definition as a sum over 0 <= R <= Lp."""
    a1, a2 = valuation(pair.q1, p), valuation(pair.q2, p)
    out = Poly()
    for R in range(Lp + 1):
        weight = Poly.const(1) if min(a2 + R, a1 + Lp - R) == 0 else Poly.const(1) - _yw(2)
        out = out + weight * _local_G(pair, p, Lp, B1, R) * conj_local(_local_G(pair, p, Lp, B2, R))
    return out


def local_no_dilation_poly(pair: CharacterPair, p: int) -> Poly:
    in1, in2 = pair.q1 % p == 0, pair.q2 % p == 0
    if in1 and in2:
        return Poly.const(1) - _yw(2)
    if in1 or in2:
        return Poly.const(1)
    return Poly.const(1) + _yw(2)


def local_inner_closed(pair: CharacterPair, p: int, B1: int, B2: int) -> Poly:
    """I^(p)(1,1) A(p^B2') conj A(p^B1') with the Euler denominator cancelled."""
    i11 = local_no_dilation_poly(pair, p)
    chi0 = 0 if pair.level % p == 0 else 1
    psi_p = char_value(pair.chi1, p) * char_value(pair.chi2, p).conj()

    def scaled_a(B):
        if B == 0:
            return i11
        num = (local_lambda(pair, p, B) - _yw(2, 0, psi_p) * local_lambda(pair, p, B - 2)) * _yw(B)
        # for chi0(p) = 1 the factor I^(p)(1,1) equals the denominator 1 + 1/p
        return num if chi0 else num * i11

    m = min(B1, B2)
    b1, b2 = B1 - m, B2 - m
    return scaled_a(b2) if b1 == 0 else conj_local(scaled_a(b1))


def local_prime_power(pair: CharacterPair, p: int, B: int) -> Poly:
    """lambda(p^B) p^(-B/2) - psi(p) lambda(p^(B-2)) p^(-(B+2)/2)."""
    psi_p = char_value(pair.chi1, p) * char_value(pair.chi2, p).conj()
    return local_lambda(pair, p, B) * _yw(B) - _yw(B + 2, 0, psi_p) * local_lambda(pair, p, B - 2)


def _poly_equal(a: Poly, b: Poly) -> bool:
    return (a - b).is_zero()


def local_inner_checks(pair: CharacterPair, N: int) -> dict:
    """Exact local facts for every p | N and 0 <= B1, B2 <= v_p(L)."""
    L = _pair_level_check(pair, N)
    out = {"no_dilation": True, "gcd_invariance": True, "closed_form": True, "prime_power": True}
    for p in prime_divisors(N):
        Lp = valuation(L, p)
        if not _poly_equal(local_inner_rsum(pair, p, Lp, 0, 0), local_no_dilation_poly(pair, p)):
            out["no_dilation"] = False
        for B1 in range(Lp + 1):
            for B2 in range(Lp + 1):
                val = local_inner_rsum(pair, p, Lp, B1, B2)
                m = min(B1, B2)
                if not _poly_equal(val, local_inner_rsum(pair, p, Lp, B1 - m, B2 - m)):
                    out["gcd_invariance"] = False
                if not _poly_equal(val, local_inner_closed(pair, p, B1, B2)):
                    out["closed_form"] = False
        for B in range(1, Lp + 1):
            if not _poly_equal(local_inner_rsum(pair, p, Lp, 0, B), local_prime_power(pair, p, B)):
                out["prime_power"] = False
    return out


# ---------------------------------------------------------------- Kuznetsov, squarefree level


def tau_it(n: int, t: float) -> complex:
    """sum_{ab = n} (a/b)^(it)."""
    return sum(cmath.exp(1j * t * math.log(a / (n // a))) for a in divisors(n))


def nu_index(d: int) -> int:
    """prod_{p | d} (p + 1)."""
    return prod(p + 1 for p in prime_divisors(d))


def _require_squarefree(N):
    if N < 1 or not is_squarefree(N):
        raise ValueError("level must be squarefree")


def _trivial_pair() -> CharacterPair:
    return CharacterPair(principal(1), principal(1), 0)


def sign_functions(N: int) -> list:
    """All multiplicative phi on divisors of N with phi(p) = +-1."""
    primes = prime_divisors(N)
    return [dict(zip(primes, signs)) for signs in itertools.product((1, -1), repeat=len(primes))]


def _phi_value(phi: dict, d: int) -> int:
    return prod(phi[p] for p in prime_divisors(d))


def nu_e_phi(phi: dict, N: int, m: int, t: float) -> complex:
    """m-th coefficient of E_phi normalised by nu_E(1) = 1."""
    return sum(_phi_value(phi, u) * math.sqrt(u) * tau_it(m // u, t) for u in divisors(gcd(m, N)))


def e_phi_norm(phi: dict, N: int, t: float) -> complex:
    """<E_phi, E_phi> = tau(N) <E, E>_N prod_p (1 + phi(p) tau_it(p) sqrt(p) / nu(p))."""
    out = len(divisors(N)) * FOUR_PI * nu_index(N)
    for p in prime_divisors(N):
        out *= 1 + phi[p] * tau_it(p, t) * math.sqrt(p) / (p + 1)
    return out


def kuznetsov_t_phi(N: int, m: int, n: int, t: float) -> complex:
    """T_t(m, n) summed over the Atkin-Lehner sign basis E_phi."""
    _require_squarefree(N)
    total = 0j
    for phi in sign_functions(N):
        total += nu_e_phi(phi, N, m, t) * nu_e_phi(phi, N, n, t).conjugate() / e_phi_norm(phi, N, t)
    return total


def cusp_coefficients_nu(N: int, t: float) -> dict:
    """cusp -> (m -> nu_a(m)) using the cusp-to-pair expansion on the critical line."""
    psi = principal(N)
    s = 0.5 + 1j * t
    out = {}
    for cusp in singular_cusps(N, psi):
        coeffs = cusp_to_pairs(N, psi, cusp, 0).coefficients_at(s)
        out[cusp] = [(lab.dilation, c) for lab, c in coeffs.items()]
    return out


def kuznetsov_t_cusps(N: int, m: int, n: int, t: float) -> complex:
    """T_t(m, n) summed over the orthogonal cusp basis (norm 4 pi each)."""
    _require_squarefree(N)

    def nu_a(terms, r):
        return sum(c * math.sqrt(B) * tau_it(r // B, t) for B, c in terms if r % B == 0)

    total = 0j
    for terms in cusp_coefficients_nu(N, t).values():
        total += nu_a(terms, m) * nu_a(terms, n).conjugate() / FOUR_PI
    return total


def kuznetsov_eisenstein_T(N: int, m: int, n: int, t: float) -> dict:
    return {"phi": kuznetsov_t_phi(N, m, n, t), "cusps": kuznetsov_t_cusps(N, m, n, t)}


def _level_one_dilate(N: int, B: int, t: float) -> EisCoeffVector:
    return EisCoeffVector.from_expansion(pairs_to_cusps(_trivial_pair(), N, B), 0.5 + 1j * t)


def atkin_lehner_pairing(N: int, B: int, t: float) -> dict:
    """(1/4 pi) <E|W_B, E>_N by cusp coordinates against tau_it(B) sqrt(B) nu(N/B)."""
    _require_squarefree(N)
    if N % B:
        raise ValueError("B must divide N")
    val = formal_inner_product(_level_one_dilate(N, B, t), _level_one_dilate(N, 1, t)) / FOUR_PI
    return {"formal": val, "closed": tau_it(B, t) * math.sqrt(B) * nu_index(N // B)}


def e_phi_norm_formal(phi: dict, N: int, t: float) -> complex:
    v = None
    for d in divisors(N):
        w = _level_one_dilate(N, d, t).scaled(_phi_value(phi, d))
        v = w if v is None else v + w
    return formal_inner_product(v, v)


def oldform_sieve(N: int, m: int, n: int, delta, c_ell: dict, inverted: bool = False) -> complex:
    """Divisor-sum skeleton passing between full-level and newform Kuznetsov sides.

    delta(M, m, n) is the caller's level-M quantity; c_ell maps ell to a dict
    d -> c_ell(d).  Only ell supported on primes of L contribute.
    """
    total = 0
    for L in divisors(N):
        M = N // L
        outer = Fraction(mobius(L) if inverted else 1, nu_index(L))
        if outer == 0:
            continue
        lp = set(prime_divisors(L))
        for ell, cd in c_ell.items():
            if not set(prime_divisors(ell)) <= lp:
                continue
            w_ell = Fraction(ell, nu_index(ell) ** 2)
            for (d1, c1), (d2, c2) in itertools.product(cd.items(), repeat=2):
                for u in divisors(gcd(m, L)):
                    for v in divisors(gcd(n, L)):
                        g = gcd(u, v)
                        r = u * v // g**2
                        w_uv = Fraction(u * v, g) * Fraction(mobius(r), nu_index(r))
                        if w_uv == 0:
                            continue
                        for a in divisors(gcd(m // u, u // g)):
                            for b in divisors(gcd(n // v, v // g)):
                                if (m // (a * a)) % g or (n // (b * b)) % g:
                                    continue
                                for e1 in divisors(gcd(d1, m // (a * a * g))):
                                    for e2 in divisors(gcd(d2, n // (b * b * g))):
                                        mm = Fraction(m * d1, a * a * e1 * e1 * g)
                                        nn = Fraction(n * d2, b * b * e2 * e2 * g)
                                        if mm.denominator != 1 or nn.denominator != 1:
                                            continue
                                        total += (
                                            float(outer * w_ell * w_uv)
                                            * c1
                                            * c2
                                            * delta(M, int(mm), int(nn))
                                        )
    return total


__all__ = [
    "EisCoeffVector",
    "FOUR_PI",
    "a_multiplicative",
    "atkin_lehner_pairing",
    "basis_independence_check",
    "conj_critical",
    "conj_local",
    "cusp_basis",
    "d_basis",
    "d_family",
    "d_orthogonality",
    "dilate_rank",
    "e_phi_norm",
    "e_phi_norm_formal",
    "exact_formal_product",
    "formal_inner_product",
    "inner_product_I",
    "inner_product_closed",
    "inner_product_formal",
    "inner_product_rsum",
    "kuznetsov_eisenstein_T",
    "kuznetsov_t_cusps",
    "kuznetsov_t_phi",
    "local_inner_checks",
    "local_inner_closed",
    "local_inner_rsum",
    "local_lambda",
    "local_no_dilation",
    "local_prime_power",
    "newform_labels",
    "nu_e_phi",
    "nu_index",
    "oldclass_orthogonality",
    "oldform_sieve",
    "random_hermitian_pairing",
    "sign_functions",
    "spectral_sums",
    "tau_it",
]
