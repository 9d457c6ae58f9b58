"""Golden-ratio (phi) and Zeckendorf numeration with exact arithmetic.

Computes finite phi-representations of elements of Z[phi], classifies
integers by the parity structure of their exponents, and replays the
related theorems over bounded ranges with a small multi-track DFA engine.
"""

from .classify import (
    ParityProfile,
    is_antipalindromic,
    kimberling_double,
    min_exponent_bracket,
    parity_profile,
    sequence,
    shevelev_member,
    two_odd_pair,
)
from .golden import PhiExpansion, ZPhi, parse, phi_eval, phi_expand, phi_power, render
from .zeck import fib, lucas, lucas_subset_decompose, luc_to_fib, zeck_decode, zeck_encode

__version__ = "0.1.0"

__all__ = [
    "ParityProfile",
    "PhiExpansion",
    "ZPhi",
    "fib",
    "is_antipalindromic",
    "kimberling_double",
    "lucas",
    "lucas_subset_decompose",
    "luc_to_fib",
    "min_exponent_bracket",
    "parity_profile",
    "parse",
    "phi_eval",
    "phi_expand",
    "phi_power",
    "render",
    "sequence",
    "shevelev_member",
    "two_odd_pair",
    "zeck_decode",
    "zeck_encode",
]
