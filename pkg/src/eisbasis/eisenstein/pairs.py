"""Character pairs (chi1, chi2, k) labelling the series E_{chi1,chi2}."""

from __future__ import annotations

from dataclasses import dataclass

from ..characters import DirichletCharacter, factor_character


@dataclass(frozen=True)
class CharacterPair:
    chi1: DirichletCharacter
    chi2: DirichletCharacter
    k: int = 0

    def __post_init__(self):
        if (-1) ** (self.chi1.parity + self.chi2.parity) != (-1) ** self.k:
            raise ValueError("parity mismatch: chi1(-1) chi2(-1) must equal (-1)^k")

    @property
    def q1(self) -> int:
        return self.chi1.modulus

    @property
    def q2(self) -> int:
        return self.chi2.modulus

    @property
    def level(self) -> int:
        return self.q1 * self.q2

    @property
    def eps1(self) -> int:
        return -1 if self.chi1.parity else 1

    @property
    def eps2(self) -> int:
        return -1 if self.chi2.parity else 1

    @property
    def delta3(self) -> int:
        """0 exactly when k = 0 and both characters are odd."""
        return 0 if (self.k == 0 and self.eps1 == -1 and self.eps2 == -1) else 1

    def is_primitive(self) -> bool:
        return self.chi1.is_primitive() and self.chi2.is_primitive()

    def dual(self) -> "CharacterPair":
        """(conj chi2, conj chi1), the partner under s -> 1 - s."""
        return CharacterPair(self.chi2.conj(), self.chi1.conj(), self.k)

    def swapped(self) -> "CharacterPair":
        return CharacterPair(self.chi2, self.chi1, self.k)

    def nebentypus(self) -> DirichletCharacter:
        """chi1 conj(chi2) as a character mod q1 q2."""
        return (self.chi1 * self.chi2.conj()).lift(self.level)

    def product(self) -> DirichletCharacter:
        return self.chi1 * self.chi2

    def label(self) -> str:
        return f"({self.chi1.label()};{self.chi2.label()};k={self.k})"


def local_parts(chi: DirichletCharacter, Q: int):
    """(chi^(Q), chi^(R)) with Q the part of the modulus supported on primes of Q."""
    from math import gcd

    q = chi.modulus
    qQ = 1
    rest = q
    while gcd(rest, Q) > 1:
        g = gcd(rest, Q)
        qQ *= g
        rest //= g
    return factor_character(chi, qQ, rest)


__all__ = ["CharacterPair", "local_parts"]
