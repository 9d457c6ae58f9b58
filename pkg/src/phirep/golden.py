"""Exact arithmetic in Z[phi] and finite golden-ratio base representations.

An element ``a + b*phi`` is held as a pair of Python ints, so nothing here
ever touches floating point.  Comparisons reduce to integer inequalities
via ``phi = (1 + sqrt 5) / 2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import AdjacentOnes, IterationGuardExceeded, NegativeInput, ParseError
from .zeck import fib

__all__ = [
    "ZPhi",
    "PhiExpansion",
    "zphi_arith",
    "zphi_conjugate",
    "zphi_sign",
    "phi_power",
    "phi_expand",
    "phi_eval",
    "render",
    "parse",
    "PHI",
    "ZERO",
    "ONE",
]


def _sign(a: int, b: int) -> int:
    # value = (u + b*sqrt5) / 2 with u = 2a + b
    u = 2 * a + b
    if b == 0:
        return (u > 0) - (u < 0)
    if b > 0:
        if u >= 0:
            return 1
        d = 5 * b * b - u * u
    else:
        if u <= 0:
            return -1
        d = u * u - 5 * b * b
    return (d > 0) - (d < 0)


@dataclass(frozen=True, slots=True)
class ZPhi:
    """The ring element ``a + b*phi``."""

    a: int = 0
    b: int = 0

    @classmethod
    def coerce(cls, x: "ZPhi | int") -> "ZPhi":
        if isinstance(x, ZPhi):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls(x, 0)
        raise TypeError(f"cannot convert {x!r} to ZPhi")

    @property
    def is_integer(self) -> bool:
        return self.b == 0

    def __add__(self, other: "ZPhi | int") -> "ZPhi":
        if not isinstance(other, (ZPhi, int)):
            return NotImplemented
        o = ZPhi.coerce(other)
        return ZPhi(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "ZPhi":
        return ZPhi(-self.a, -self.b)

    def __sub__(self, other: "ZPhi | int") -> "ZPhi":
        if not isinstance(other, (ZPhi, int)):
            return NotImplemented
        o = ZPhi.coerce(other)
        return ZPhi(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: int) -> "ZPhi":
        return ZPhi.coerce(other) - self

    def __mul__(self, other: "ZPhi | int") -> "ZPhi":
        if not isinstance(other, (ZPhi, int)):
            return NotImplemented
        o = ZPhi.coerce(other)
        # phi^2 = phi + 1
        bd = self.b * o.b
        return ZPhi(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ZPhi":
        if k < 0:
            raise ValueError("negative powers are only defined for units; use phi_power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "ZPhi":
        return ZPhi(self.a + self.b, -self.b)

    def sign(self) -> int:
        return _sign(self.a, self.b)

    def __lt__(self, other: "ZPhi | int") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "ZPhi | int") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "ZPhi | int") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "ZPhi | int") -> bool:
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        coef = {1: "", -1: "-"}.get(self.b, str(self.b))
        if self.a == 0:
            return f"{coef}φ"
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        return f"{self.a}{sign}{'' if mag == 1 else mag}φ"

    def sqrt5_form(self) -> str:
        """Render as ``p + q*sqrt5`` (halves allowed), e.g. ``52-√5``."""
        u, v = 2 * self.a + self.b, self.b
        if u % 2 == 0 and v % 2 == 0:
            p, q = str(u // 2), v // 2
            qs = "" if abs(q) == 1 else str(abs(q))
        else:
            p, q = f"{u}/2", v
            qs = f"{abs(q)}/2"
        if v == 0:
            return p
        return f"{p}{'+' if q > 0 else '-'}{qs}√5"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> "ZPhi":
        return cls(int(obj["a"]), int(obj["b"]))


ZERO = ZPhi(0, 0)
ONE = ZPhi(1, 0)
PHI = ZPhi(0, 1)


def zphi_arith(kind: str, x: ZPhi, y: ZPhi | None = None) -> ZPhi:
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "neg":
        return -x
    raise ValueError(f"unknown ring operation {kind!r}")


def zphi_conjugate(x: ZPhi) -> ZPhi:
    return x.conjugate()


def zphi_sign(x: ZPhi) -> int:
    return x.sign()


@lru_cache(maxsize=4096)
def _power_pair(k: int) -> tuple[int, int]:
    return fib(k - 1), fib(k)


def phi_power(k: int) -> ZPhi:
    """``phi**k`` for any integer k, as ``F(k-1) + F(k)*phi``."""
    return ZPhi(*_power_pair(k))


@dataclass(frozen=True, slots=True)
class PhiExpansion:
    """A finite set of exponents with no two consecutive; stored descending."""

    exponents: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        exps = tuple(sorted(set(self.exponents), reverse=True))
        if len(exps) != len(self.exponents):
            raise ValueError("exponents must be distinct")
        for hi, lo in zip(exps, exps[1:]):
            if hi - lo == 1:
                raise AdjacentOnes(f"exponents {hi} and {lo} are adjacent")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, exponents: Iterable[int]) -> "PhiExpansion":
        return cls(tuple(exponents))

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __contains__(self, k: object) -> bool:
        return k in self.exponents

    @property
    def max_exponent(self) -> int | None:
        return self.exponents[0] if self.exponents else None

    @property
    def min_exponent(self) -> int | None:
        return self.exponents[-1] if self.exponents else None

    def as_set(self) -> frozenset[int]:
        return frozenset(self.exponents)

    def value(self) -> ZPhi:
        return phi_eval(self)

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "string": render(self)}

    @classmethod
    def from_json(cls, obj: dict) -> "PhiExpansion":
        e = cls(tuple(obj["exponents"]))
        if "string" in obj and parse(obj["string"]) != e:
            raise ValueError("exponent list and string form disagree")
        return e


def _le_power(a: int, b: int, k: int) -> bool:
    """phi**k <= a + b*phi"""
    pa, pb = _power_pair(k)
    return _sign(a - pa, b - pb) >= 0


def _top_exponent(a: int, b: int) -> int:
    # bracket lo <= answer < hi by doubling away from 0, then bisect
    if _le_power(a, b, 0):
        lo, hi = 0, 1
        while _le_power(a, b, hi):
            lo, hi = hi, hi * 2
    else:
        lo, hi = -1, 0
        while not _le_power(a, b, lo):
            lo, hi = lo * 2, lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _le_power(a, b, mid):
            lo = mid
        else:
            hi = mid
    return lo


def _next_exponent(a: int, b: int, ceiling: int) -> int:
    """Largest k <= ceiling with phi**k <= x; x is known to be positive."""
    if _le_power(a, b, ceiling):
        return ceiling
    hi, step = ceiling, 1
    lo = ceiling - step
    while not _le_power(a, b, lo):
        hi = lo
        step *= 2
        lo = ceiling - step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _le_power(a, b, mid):
            lo = mid
        else:
            hi = mid
    return lo


def phi_expand(x: ZPhi | int, max_steps: int = 100_000) -> PhiExpansion:
    """Greedy (Bergman) expansion of a non-negative element of Z[phi].

    >>> render(phi_expand(5))
    '1000.1001'
    """
    x = ZPhi.coerce(x)
    a, b = x.a, x.b
    s = _sign(a, b)
    if s < 0:
        raise NegativeInput(f"{x} is negative")
    out: list[int] = []
    if s == 0:
        return PhiExpansion(())
    k = _top_exponent(a, b)
    steps = 0
    while True:
        out.append(k)
        pa, pb = _power_pair(k)
        a, b = a - pa, b - pb
        if a == 0 and b == 0:
            break
        steps += 1
        if steps >= max_steps:
            raise IterationGuardExceeded(f"greedy expansion exceeded {max_steps} steps")
        # remainder < phi**(k-1), so the next exponent is at most k-2
        k = _next_exponent(a, b, k - 2)
    return PhiExpansion(tuple(out))


def phi_eval(e: PhiExpansion | Iterable[int]) -> ZPhi:
    a = b = 0
    for k in e:
        pa, pb = _power_pair(k)
        a += pa
        b += pb
    return ZPhi(a, b)


def render(e: PhiExpansion) -> str:
    """Digit string ``e_t ... e_0 . e_-1 ... e_min``; zero renders as ``0``."""
    exps = e.as_set() if isinstance(e, PhiExpansion) else frozenset(e)
    if not exps:
        return "0"
    top = max(max(exps), 0)
    bottom = min(exps)
    int_part = "".join("1" if k in exps else "0" for k in range(top, -1, -1))
    if bottom >= 0:
        return int_part
    frac = "".join("1" if k in exps else "0" for k in range(-1, bottom - 1, -1))
    return f"{int_part}.{frac}"


_DIGITS = re.compile(r"[01]+(\.[01]*)?\Z")


def parse(s: str) -> PhiExpansion:
    """Inverse of :func:`render`; also accepts a bare trailing point."""
    m = _DIGITS.match(s)
    if not m:
        bad = next((i for i, c in enumerate(s) if c not in "01."), len(s))
        if s.count(".") > 1:
            bad = s.index(".", s.index(".") + 1)
        elif s.startswith("."):
            bad = 0
        raise ParseError(f"malformed digit string {s!r}", bad)
    int_part, _, frac = s.partition(".")
    if len(int_part) > 1 and int_part[0] == "0":
        raise ParseError(f"leading zero in {s!r}", 0)
    if frac.endswith("0"):
        raise ParseError(f"trailing zero in fractional part of {s!r}", len(s) - 1)
    digits = int_part + frac
    pos = digits.find("11")
    if pos >= 0:
        raise AdjacentOnes(f"adjacent ones in {s!r}", pos + (pos >= len(int_part)))
    top = len(int_part) - 1
    exps = [top - i for i, c in enumerate(int_part) if c == "1"]
    exps += [-(i + 1) for i, c in enumerate(frac) if c == "1"]
    return PhiExpansion(tuple(exps))
