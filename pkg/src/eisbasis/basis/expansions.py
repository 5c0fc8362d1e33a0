"""Cusp basis <-> newform-pair basis, D-functions and the imprimitive reduction."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..arith import divisors, euler_phi, mobius, units
from ..characters import DirichletCharacter, primitive_characters
from ..eisenstein.pairs import CharacterPair
from ..eisenstein.series import eval_cusp_coset, eval_pair_lattice
from ..modgroup import Cusp, is_singular, lift_residue
from .algebra import Coefficient, Poly, char_value, euler_ratio, s_power


@dataclass(frozen=True)
class PairLabel:
    """E_{chi1,chi2}(B z, s)."""

    pair: CharacterPair
    dilation: int = 1

    def __str__(self):
        return f"E{self.pair.label()}({self.dilation}z)"


@dataclass
class BasisExpansion:
    level: int
    psi: DirichletCharacter
    k: int
    terms: dict = field(default_factory=dict)

    def add(self, label, coeff: Coefficient):
        if label in self.terms:
            coeff = self.terms[label] + coeff
        if coeff.is_zero():
            self.terms.pop(label, None)
        else:
            self.terms[label] = coeff

    def scaled(self, coeff: Coefficient) -> "BasisExpansion":
        out = BasisExpansion(self.level, self.psi, self.k)
        for lab, c in self.terms.items():
            out.add(lab, c * coeff)
        return out

    def __add__(self, other: "BasisExpansion") -> "BasisExpansion":
        out = BasisExpansion(self.level, self.psi, self.k, dict(self.terms))
        for lab, c in other.terms.items():
            out.add(lab, c)
        return out

    def __sub__(self, other: "BasisExpansion") -> "BasisExpansion":
        return self + other.scaled(Coefficient.const(-1))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.terms.values())

    def coefficients_at(self, s) -> dict:
        return {lab: c.evaluate(s) for lab, c in self.terms.items()}

    def evaluate(self, z, s, trunc=None) -> complex:
        """Termwise evaluation by the direct evaluators (Re s > 1)."""
        total = 0j
        for lab, c in self.terms.items():
            total += c.evaluate(s) * evaluate_label(lab, self.level, self.psi, self.k, z, s, trunc)
        return total


def evaluate_label(label, N, psi, k, z, s, trunc=None) -> complex:
    kw = {} if trunc is None else {"trunc": trunc}
    if isinstance(label, PairLabel):
        return _pair_value(label.pair, label.dilation, complex(z), complex(s), trunc)
    return eval_cusp_coset(N, psi, label, z, s, k, **kw)


@lru_cache(maxsize=65536)
def _pair_value(pair, B, z, s, trunc):
    kw = {} if trunc is None else {"trunc": trunc}
    return eval_pair_lattice(pair, z, s, dilation=B, **kw)


@lru_cache(maxsize=None)
def primitive_core(chi: DirichletCharacter) -> DirichletCharacter:
    return chi.primitive()


def same_core(a: DirichletCharacter, b: DirichletCharacter) -> bool:
    return primitive_core(a) == primitive_core(b)


def compatible_pairs(N: int, psi: DirichletCharacter, f: int, k: int):
    """Primitive (chi1 mod q1 | N/f, chi2 mod q2 | f) with chi1 conj(chi2) ~ psi."""
    out = []
    for q1 in divisors(N // f):
        for q2 in divisors(f):
            for c1 in primitive_characters(q1):
                for c2 in primitive_characters(q2):
                    if same_core(c1 * c2.conj(), psi):
                        out.append(CharacterPair(c1, c2, k))
    return out


def _check_psi(N, psi, k):
    if psi.modulus != N:
        raise ValueError("character modulus does not match the level")
    if k is None:
        k = psi.parity
    if (-1) ** psi.parity != (-1) ** k:
        raise ValueError("parity mismatch: psi(-1) must equal (-1)^k")
    return k


def cusp_to_pairs(N: int, psi: DirichletCharacter, cusp: Cusp, k: int = None) -> BasisExpansion:
    """E_{1/(uf)}(z, s, psi) as a combination of E_{chi1,chi2}(B z, s)."""
    k = _check_psi(N, psi, k)
    if cusp.N != N:
        raise ValueError("cusp level mismatch")
    if not is_singular(cusp, psi):
        raise ValueError("cusp not singular")
    f, u, m = cusp.f, cusp.u, cusp.width_gcd
    pref = Coefficient(s_power(f * cusp.Ndouble) * Poly.const(Fraction(1, euler_phi(m))))
    out = BasisExpansion(N, psi, k)
    for pair in compatible_pairs(N, psi, f, k):
        c1, c2, q1, q2 = pair.chi1, pair.chi2, pair.q1, pair.q2
        head = pref * euler_ratio(c1 * c2, N) * char_value(c1, -u).conj()
        for a in divisors(f):
            if gcd(a, q2) != 1 or mobius(a) == 0:
                continue
            for b in divisors(N // f):
                if gcd(b, q1) != 1 or mobius(b) == 0:
                    continue
                val = char_value(c1, b) * char_value(c2, a) * (mobius(a) * mobius(b))
                if val.is_zero():
                    continue
                B = Fraction(b * f, a * q2)
                if B.denominator != 1:
                    raise ArithmeticError("non-integral dilation")
                out.add(PairLabel(pair, int(B)), head * Poly.const(val) * s_power(a * b))
    return out


def _pair_setup(pair: CharacterPair, N: int):
    q1, q2 = pair.q1, pair.q2
    if not pair.is_primitive():
        raise ValueError("characters must be primitive")
    if N % (q1 * q2):
        raise ValueError("q1 q2 must divide the level")
    return N // (q1 * q2), pair.nebentypus().lift(N)


def pairs_to_cusps(pair: CharacterPair, N: int, B: int = 1) -> BasisExpansion:
    """E_{chi1,chi2}(B z, s) as a combination of cusp series E_{1/(uf)}(z, s, psi)."""
    L, psi = _pair_setup(pair, N)
    if L % B:
        raise ValueError("B must divide N/(q1 q2)")
    A = L // B
    c1, c2, q2 = pair.chi1, pair.chi2, pair.q2
    out = BasisExpansion(N, psi, pair.k)
    for d in divisors(A):
        for e in divisors(B):
            if gcd(d, e) != 1:
                continue
            head = char_value(c1, d) * char_value(c2, e)
            if head.is_zero():
                continue
            f = q2 * B * d // e
            m = gcd(f, N // f)
            coeff = Coefficient(Poly.const(head) * s_power(d * e) * s_power(Fraction(N, m), +1))
            for r in units(m):
                u = lift_residue(r, m, N)
                cusp = Cusp(N, f, u)
                if not is_singular(cusp, psi):
                    raise ArithmeticError("expansion produced a non-singular cusp")
                out.add(cusp, coeff * Poly.const(char_value(c1, -u)))
    return out


def admissible_f(pair: CharacterPair, N: int) -> list:
    """The f with (chi1, chi2) in Psi_f: f = q2 g with g | L."""
    L, _ = _pair_setup(pair, N)
    return [pair.q2 * g for g in divisors(L)]


def d_function(N: int, psi: DirichletCharacter, f: int, pair: CharacterPair):
    """D_{chi1,chi2,f}(z, s, psi) as (cusp-side expansion, pair-side expansion)."""
    k = _check_psi(N, psi, pair.k)
    q1, q2 = pair.q1, pair.q2
    if (
        N % f
        or f % q2
        or (N // f) % q1
        or not pair.is_primitive()
        or not same_core(pair.chi1 * pair.chi2.conj(), psi)
    ):
        raise ValueError("pair not admissible for f")
    m = gcd(f, N // f)
    cusp_side = BasisExpansion(N, psi, k)
    for r in units(m):
        u = lift_residue(r, m, N)
        cusp_side.add(Cusp(N, f, u), Coefficient(Poly.const(char_value(pair.chi1, -u))))
    g = f // q2
    L = N // (q1 * q2)
    pref = Coefficient(s_power(Fraction(m, N), +1)) * euler_ratio(pair.chi1 * pair.chi2, N)
    pair_side = BasisExpansion(N, psi, k)
    for a in divisors(g):
        for b in divisors(L // g):
            mu = mobius(a) * mobius(b)
            val = char_value(pair.chi1, b) * char_value(pair.chi2, a) * mu
            if val.is_zero():
                continue
            pair_side.add(PairLabel(pair, b * g // a), pref * Poly.const(val) * s_power(a * b))
    return cusp_side, pair_side


def cusp_from_d(N: int, psi: DirichletCharacter, cusp: Cusp, k: int = None) -> BasisExpansion:
    """E_{1/(uf)} = (1/phi((f,N/f))) sum over Psi_f of conj(chi1)(-u) D_{chi1,chi2,f}, in cusp coordinates."""
    k = _check_psi(N, psi, k)
    f, u, m = cusp.f, cusp.u, cusp.width_gcd
    out = BasisExpansion(N, psi, k)
    for pair in compatible_pairs(N, psi, f, k):
        cusp_side, _ = d_function(N, psi, f, pair)
        w = Coefficient(Poly.const(char_value(pair.chi1, -u).conj() * Fraction(1, euler_phi(m))))
        out = out + cusp_side.scaled(w)
    return out


def substitute(expansion: BasisExpansion, rule) -> BasisExpansion:
    """Replace every label by rule(label) (an expansion) and collect."""
    out = BasisExpansion(expansion.level, expansion.psi, expansion.k)
    for lab, c in expansion.terms.items():
        for lab2, c2 in rule(lab).terms.items():
            out.add(lab2, c * c2)
    return out


def roundtrip_pair(pair: CharacterPair, N: int, B: int) -> BasisExpansion:
    """Thm-7.1 expansion followed by the cusp-to-pair expansion; should return the pair term."""
    fwd = pairs_to_cusps(pair, N, B)
    return substitute(fwd, lambda c: cusp_to_pairs(N, fwd.psi, c, pair.k))


def roundtrip_cusp(N: int, psi: DirichletCharacter, cusp: Cusp, k: int = None) -> BasisExpansion:
    """Cusp-to-pair expansion followed by pairs_to_cusps; should return the cusp term."""
    fwd = cusp_to_pairs(N, psi, cusp, k)
    out = substitute(fwd, lambda lab: pairs_to_cusps(lab.pair, N, lab.dilation))
    out.psi = psi
    return out


def imprimitive_reduce(chi1: DirichletCharacter, chi2: DirichletCharacter, k: int = None) -> BasisExpansion:
    """E_{chi1,chi2} for imprimitive characters as a combination of primitive-pair dilates."""
    if k is None:
        k = (chi1.parity + chi2.parity) % 2
    p1, p2 = primitive_core(chi1), primitive_core(chi2)
    q1, q2 = chi1.modulus, chi2.modulus
    prim = CharacterPair(p1, p2, k)
    N = q1 * q2
    psi = (chi1 * chi2.conj()).lift(N)
    pref = euler_ratio(p1 * p2, N)
    out = BasisExpansion(N, psi, k)
    for a in divisors(q1):
        for b in divisors(q2):
            val = char_value(p1, a) * char_value(p2, b) * (mobius(a) * mobius(b))
            if val.is_zero():
                continue
            B = Fraction(a * q2, b * p2.modulus)
            if B.denominator != 1:
                raise ArithmeticError("non-integral dilation")
            out.add(PairLabel(prim, int(B)), pref * Poly.const(val) * s_power(a * b))
    return out


__all__ = [
    "BasisExpansion",
    "PairLabel",
    "admissible_f",
    "compatible_pairs",
    "cusp_from_d",
    "cusp_to_pairs",
    "d_function",
    "evaluate_label",
    "imprimitive_reduce",
    "pairs_to_cusps",
    "primitive_core",
    "roundtrip_cusp",
    "roundtrip_pair",
    "same_core",
    "substitute",
]
