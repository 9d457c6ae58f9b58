"""Semantic stand-in for the three-track representation automaton.

``check_phi_rep(n, y, z)`` holds when ``y.reverse(z)`` is the golden-ratio
representation of ``n``: ``y`` carries exponents t..0 most significant first
and ``z`` carries exponents min..-1, so its last digit is exponent -1.
"""

from __future__ import annotations

from ..classify import expansion


def phi_tracks(n: int) -> tuple[str, str]:
    """The unpadded (y, z) pair for ``n``; ``z`` is empty when no negative exponent occurs."""
    e = expansion(n).as_set()
    if not e:
        return "", ""
    top = max(max(e), 0)
    y = "".join("1" if k in e else "0" for k in range(top, -1, -1)).lstrip("0")
    low = min(e)
    z = "".join("1" if k in e else "0" for k in range(low, 0)) if low < 0 else ""
    return y, z


def check_phi_rep(n: int, y: str, z: str) -> bool:
    if any(c not in "01" for c in y + z):
        return False
    want_y, want_z = phi_tracks(n)
    return y.lstrip("0") == want_y and z.lstrip("0") == want_z
