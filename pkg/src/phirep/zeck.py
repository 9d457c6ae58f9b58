"""Zeckendorf (Fibonacci) and Lucas encodings of natural numbers.

Words are plain ``str`` over ``{'0', '1'}``, most significant digit first.
The rightmost bit of a Zeckendorf word weights F(2); the rightmost bit of a
Lucas word weights L(0).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import AdjacentOnes, NegativeIndex, ParseError

__all__ = [
    "fib",
    "lucas",
    "fib_value",
    "lucas_value",
    "zeck_encode",
    "zeck_decode",
    "is_zeck_word",
    "lucas_subset_decompose",
    "luc_to_fib",
    "luc_to_fib_shifted",
    "shift_right",
]


def _fib_pair(n: int) -> tuple[int, int]:
    """(F(n), F(n+1)) for n >= 0 by fast doubling."""
    if n == 0:
        return 0, 1
    f, g = _fib_pair(n >> 1)
    c = f * (2 * g - f)
    d = f * f + g * g
    if n & 1:
        return d, c + d
    return c, d


@lru_cache(maxsize=8192)
def fib(i: int) -> int:
    """Fibonacci numbers, extended to negative indices by F(-n) = (-1)**(n+1) F(n)."""
    if i < 0:
        v = _fib_pair(-i)[0]
        return v if i % 2 else -v
    return _fib_pair(i)[0]


@lru_cache(maxsize=8192)
def lucas(i: int) -> int:
    if i < 0:
        raise NegativeIndex(f"Lucas index must be non-negative, got {i}")
    if i == 0:
        return 2
    return fib(i - 1) + fib(i + 1)


def _check_bits(w: str) -> None:
    for pos, c in enumerate(w):
        if c not in "01":
            raise ParseError(f"invalid digit {c!r} in {w!r}", pos)


def fib_value(w: str) -> int:
    """Fibonacci-weighted value of any 0/1 word; ``11`` factors are allowed here."""
    _check_bits(w)
    n = len(w)
    return sum(fib(n + 1 - j) for j, c in enumerate(w) if c == "1")


def lucas_value(w: str) -> int:
    _check_bits(w)
    n = len(w)
    return sum(lucas(n - 1 - j) for j, c in enumerate(w) if c == "1")


def is_zeck_word(w: str) -> bool:
    return "11" not in w and all(c in "01" for c in w)


def zeck_encode(n: int) -> str:
    """Greedy Zeckendorf word of ``n`` with no leading zeros; ``0`` -> ``''``."""
    if n < 0:
        raise ValueError(f"cannot encode negative number {n}")
    if n == 0:
        return ""
    i = 2
    while fib(i + 1) <= n:
        i += 1
    bits = []
    for j in range(i, 1, -1):
        f = fib(j)
        if f <= n:
            bits.append("1")
            n -= f
        else:
            bits.append("0")
    return "".join(bits)


def zeck_decode(w: str) -> int:
    _check_bits(w)
    pos = w.find("11")
    if pos >= 0:
        raise AdjacentOnes(f"{w!r} is not a Zeckendorf word", pos)
    return fib_value(w)


def lucas_subset_decompose(m: int, parity: str, min_index: int = 0) -> frozenset[int] | None:
    """Indices of distinct Lucas numbers of one parity class summing to ``m``.

    Both classes are super-increasing (L1 + L3 + ... + L(2k-1) = L(2k) - 2 and
    L0 + L2 + ... + L(2k) = L(2k+1) + 1), so greedy descent finds the unique
    subset when one exists.
    Returns ``None`` when ``m`` has no such decomposition.
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    if m < 0:
        return None
    want = 1 if parity == "odd" else 0
    start = max(min_index, 0)
    if start % 2 != want:
        start += 1
    idx = [start]
    while lucas(idx[-1]) <= m:
        idx.append(idx[-1] + 2)
    chosen = []
    for k in reversed(idx):
        if lucas(k) <= m:
            chosen.append(k)
            m -= lucas(k)
    return frozenset(chosen) if m == 0 else None


def luc_to_fib(w: str) -> str:
    """Zeckendorf word with the same value as the Lucas word ``w``."""
    return zeck_encode(lucas_value(w))


def shift_right(w: str) -> str:
    """Drop the last bit and pad one leading zero, keeping the length."""
    return "0" + w[:-1] if w else ""


def luc_to_fib_shifted(w: str) -> str:
    """Shift-and-correct conversion mirroring the automaton construction.

    Uses L(i) = F(i-1) + F(i+1): one right shift contributes the F(i+1) terms,
    three right shifts the F(i-1) terms, and the two lowest Lucas digits are
    patched by hand (L0 = 2 and the F(1) half of L2).
    """
    _check_bits(w)
    t = shift_right(w)
    u = shift_right(t)
    v = shift_right(u)
    low = 2 if w.endswith("1") else 0
    bit3 = 1 if len(w) >= 3 and w[-3] == "1" else 0
    return zeck_encode(fib_value(t) + fib_value(v) + low + bit3)
