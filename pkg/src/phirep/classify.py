"""Predicates and sequences over the golden-ratio expansions of integers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import OutOfDomain
from .golden import PhiExpansion, ZPhi, phi_eval, phi_expand
from .zeck import lucas

__all__ = [
    "ParityProfile",
    "expansion",
    "is_antipalindromic",
    "kimberling_double",
    "shevelev_member",
    "parity_profile",
    "min_exponent_bracket",
    "two_odd_pair",
    "sequence",
    "SEQUENCE_KINDS",
]


@lru_cache(maxsize=1 << 16)
def expansion(n: int) -> PhiExpansion:
    """Memoized ``phi_expand(n)`` for natural ``n``."""
    return phi_expand(ZPhi(n, 0))


def _require_positive(n: int) -> None:
    if n < 1:
        raise OutOfDomain(f"expected n >= 1, got {n}")


@dataclass(frozen=True)
class ParityProfile:
    even_count: int
    odd_count: int
    min_exponent: int
    odd_exponents: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "even_count": self.even_count,
            "odd_count": self.odd_count,
            "min_exponent": self.min_exponent,
            "odd_exponents": list(self.odd_exponents),
        }


def is_antipalindromic(n: int) -> bool:
    _require_positive(n)
    exps = expansion(n).as_set()
    return all(-k in exps for k in exps)


def kimberling_double(n: int) -> ZPhi:
    """Value of the expansion of ``n`` with every exponent doubled."""
    _require_positive(n)
    return phi_eval(2 * k for k in expansion(n))


def shevelev_member(n: int) -> bool:
    return is_antipalindromic(n)


def parity_profile(n: int) -> ParityProfile:
    _require_positive(n)
    e = expansion(n)
    odd = tuple(sorted(k for k in e if k % 2))
    return ParityProfile(
        even_count=len(e) - len(odd),
        odd_count=len(odd),
        min_exponent=e.min_exponent,
        odd_exponents=odd,
    )


def min_exponent_bracket(n: int) -> int:
    """The ``i >= 1`` with ``L(2i-1) < n <= L(2i+1)``."""
    if n < 2:
        raise OutOfDomain(f"bracket is defined for n >= 2, got {n}")
    i = 1
    while n > lucas(2 * i + 1):
        i += 1
    return i


def two_odd_pair(n: int) -> tuple[int, int] | None:
    p = parity_profile(n)
    if p.odd_count != 2:
        return None
    lo, hi = p.odd_exponents
    return hi, lo


def _member(kind: str, n: int) -> bool:
    if kind == "shevelev":
        return is_antipalindromic(n)
    p = parity_profile(n)
    if kind == "one_even":
        return p.even_count == 1
    if kind == "one_odd":
        return p.odd_count == 1
    if kind == "two_odd":
        return p.odd_count == 2
    raise ValueError(f"unknown sequence kind {kind!r}")


SEQUENCE_KINDS = ("shevelev", "one_even", "one_odd", "two_odd")


def sequence(kind: str, limit: int) -> list[int]:
    if kind not in SEQUENCE_KINDS:
        raise ValueError(f"unknown sequence kind {kind!r}; choose from {SEQUENCE_KINDS}")
    return [n for n in range(1, limit + 1) if _member(kind, n)]
