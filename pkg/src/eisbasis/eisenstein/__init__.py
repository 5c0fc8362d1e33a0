"""Eisenstein series evaluators (lattice, coset, Fourier) and the identities they satisfy."""

from .fourier import eval_completed_fourier, eval_pair_fourier, lambda_coeff
from .lattice import DEFAULT_TRUNCATION, TruncationSpec
from .pairs import CharacterPair
from .series import eval_cusp_coset, eval_pair_lattice

__all__ = [
    "CharacterPair",
    "DEFAULT_TRUNCATION",
    "TruncationSpec",
    "eval_completed_fourier",
    "eval_cusp_coset",
    "eval_pair_fourier",
    "eval_pair_lattice",
    "lambda_coeff",
]
