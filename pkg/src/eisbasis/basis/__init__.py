"""Exact change of basis between cusp series, D-functions and primitive-pair dilates."""

from .algebra import Coefficient
from .expansions import (BasisExpansion, PairLabel, cusp_from_d, cusp_to_pairs, d_function, imprimitive_reduce,
                         pairs_to_cusps)
from .inner import EisCoeffVector, formal_inner_product, inner_product_I, kuznetsov_eisenstein_T
from .inversion import moebius_invert

__all__ = [
    "BasisExpansion",
    "Coefficient",
    "EisCoeffVector",
    "PairLabel",
    "cusp_from_d",
    "cusp_to_pairs",
    "d_function",
    "formal_inner_product",
    "imprimitive_reduce",
    "inner_product_I",
    "kuznetsov_eisenstein_T",
    "moebius_invert",
    "pairs_to_cusps",
]
