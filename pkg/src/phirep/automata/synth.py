"""Conjecture a DFA from a membership oracle, then check it to a deeper horizon.

The hypothesis is built like an observation table with a fixed experiment
set: access strings are discovered breadth-first, and two strings are the
same state when the oracle agrees on them under every experiment suffix.
Words up to ``depth`` are consulted while building; the result is then
compared with the oracle on every word up to ``depth + margin``.  A return
value is a conjecture verified to that length, not a proof.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Callable

from ..errors import InconsistentConjecture
from .dfa import Alphabet, Dfa, minimize


def zeck_valid(w: str) -> bool:
    return "11" not in w


def _words(max_len: int) -> list[str]:
    return ["".join(p) for n in range(max_len + 1) for p in itertools.product("01", repeat=n)]


def synthesize_from_oracle(
    oracle: Callable[[str], bool],
    depth: int,
    margin: int = 5,
    valid: Callable[[str], bool] = zeck_valid,
    experiment_depth: int | None = None,
) -> Dfa:
    if depth < 1 or margin < 1:
        raise ValueError("depth and margin must be at least 1")
    exp_depth = depth // 2 if experiment_depth is None else experiment_depth
    access_limit = depth - exp_depth
    if access_limit < 0:
        raise ValueError("experiment depth exceeds total depth")

    cache: dict[str, bool] = {}

    def label(w: str) -> bool:
        r = cache.get(w)
        if r is None:
            r = cache[w] = bool(valid(w) and oracle(w))
        return r

    experiments = _words(exp_depth)

    def signature(u: str) -> tuple[bool, ...]:
        return tuple(label(u + v) for v in experiments)

    access = [""]
    index = {signature(""): 0}
    rows: list[tuple[int, int]] = []
    i = 0
    while i < len(access):
        u = access[i]
        row = []
        for a in "01":
            ua = u + a
            sig = signature(ua)
            if sig not in index:
                if len(ua) > access_limit:
                    raise InconsistentConjecture("hypothesis not closed within depth", ua)
                index[sig] = len(access)
                access.append(ua)
            row.append(index[sig])
        rows.append(tuple(row))
        i += 1

    accepting = frozenset(q for q, u in enumerate(access) if label(u))
    conjecture = minimize(Dfa(Alphabet.binary(1), tuple(rows), 0, accepting))
    witness = find_disagreement(conjecture, label, valid, depth + margin)
    if witness is not None:
        raise InconsistentConjecture("conjecture disagrees with oracle", witness)
    return conjecture


def find_disagreement(
    d: Dfa,
    label: Callable[[str], bool],
    valid: Callable[[str], bool],
    max_len: int,
) -> str | None:
    """Shortest-first search for a word up to ``max_len`` where ``d`` and ``label`` differ.

    Only prefix-closed validity is supported: once a prefix is invalid every
    extension is, so it suffices that ``d`` sits in a dead state there.
    """
    live = d.live_states()
    zero, one = d.alphabet.index((0,)), d.alphabet.index((1,))
    level = [("", d.start)]
    for n in range(max_len + 1):
        nxt = []
        for w, q in level:
            if (q in d.accepting) != label(w):
                return w
            if n == max_len:
                continue
            for c, s in (("0", zero), ("1", one)):
                wc, qc = w + c, d.delta[q][s]
                if valid(wc):
                    nxt.append((wc, qc))
                elif qc in live:
                    # some extension of an invalid word would be accepted
                    return wc + _accepting_suffix(d, qc)
        level = nxt
    return None


def _accepting_suffix(d: Dfa, q: int) -> str:
    parent = {q: None}
    queue = deque([q])
    while queue:
        p = queue.popleft()
        if p in d.accepting:
            out = []
            while parent[p] is not None:
                p, c = parent[p]
                out.append(c)
            return "".join(reversed(out))
        for c, s in (("0", 0), ("1", 1)):
            t = d.delta[p][s]
            if t not in parent:
                parent[t] = (p, c)
                queue.append(t)
    return ""
