"""Multi-track finite automata: alphabets, NFAs, DFAs and their algebra.

Atoms are tuples of digits, one per track.  Single-track words may be given
as plain strings (``"0101"``); multi-track words as sequences of tuples.
Every DFA is complete (an explicit dead state absorbs missing moves), so
complement is an accepting-set flip.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from ..errors import AlphabetMismatch, ArityMismatch, BadTrack, ParseError

Atom = tuple[int, ...]
Word = tuple[Atom, ...]


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[Atom, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must be non-empty")
        arities = {len(s) for s in self.symbols}
        if len(arities) != 1 or 0 in arities:
            raise ArityMismatch(f"atoms of differing or zero arity: {sorted(arities)}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def binary(cls, arity: int = 1) -> "Alphabet":
        return cls(tuple(itertools.product((0, 1), repeat=arity)))

    @property
    def arity(self) -> int:
        return len(self.symbols[0])

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, atom: Atom) -> int:
        try:
            return self._index[atom]
        except KeyError:
            raise AlphabetMismatch(f"atom {format_atom(atom)} is not in the alphabet") from None

    def __contains__(self, atom: object) -> bool:
        return atom in self._index

    def zero(self) -> Atom:
        return (0,) * self.arity

    def word(self, w: "str | Iterable[Atom]") -> Word:
        """Normalize a word given as a digit string (arity 1) or atom sequence."""
        if isinstance(w, str):
            if "[" in w:
                return tuple(parse_atoms(w))
            if self.arity != 1:
                raise ArityMismatch(f"plain digit string given for arity-{self.arity} alphabet")
            return tuple((int(c),) for c in w)
        out = tuple(tuple(a) if not isinstance(a, int) else (a,) for a in w)
        for a in out:
            if len(a) != self.arity:
                raise ArityMismatch(f"atom {format_atom(a)} has arity {len(a)}, expected {self.arity}")
        return out

    def to_json(self) -> list[str]:
        return [format_atom(a) for a in self.symbols]

    @classmethod
    def from_json(cls, atoms: list[str]) -> "Alphabet":
        return cls(tuple(parse_atom(a) for a in atoms))


def format_atom(atom: Atom) -> str:
    if len(atom) == 1:
        return str(atom[0])
    return "[" + ",".join(map(str, atom)) + "]"


def format_word(word: Iterable[Atom]) -> str:
    return "".join(format_atom(a) for a in word)


def parse_atom(s: str) -> Atom:
    s = s.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError(f"unterminated atom {s!r}", len(s))
        return tuple(int(p) for p in s[1:-1].split(","))
    return (int(s),)


def parse_atoms(s: str) -> list[Atom]:
    out, i = [], 0
    while i < len(s):
        if s[i] == "[":
            j = s.find("]", i)
            if j < 0:
                raise ParseError(f"unterminated atom in {s!r}", i)
            out.append(parse_atom(s[i : j + 1]))
            i = j + 1
        elif s[i].isdigit():
            out.append((int(s[i]),))
            i += 1
        else:
            raise ParseError(f"unexpected character {s[i]!r}", i)
    return out


def tracks(*words: str) -> Word:
    """Zip digit strings into one multi-track word, left-padding with zeros."""
    n = max((len(w) for w in words), default=0)
    padded = [w.rjust(n, "0") for w in words]
    return tuple(tuple(int(w[i]) for w in padded) for i in range(n))


def split_tracks(word: Sequence[Atom]) -> tuple[str, ...]:
    if not word:
        return ()
    return tuple("".join(str(a[t]) for a in word) for t in range(len(word[0])))


class Nfa:
    """Epsilon-NFA used as an intermediate; built, then determinized."""

    def __init__(self, alphabet: Alphabet) -> None:
        self.alphabet = alphabet
        self.moves: list[dict[int, set[int]]] = []
        self.eps: list[set[int]] = []
        self.starts: set[int] = set()
        self.accepting: set[int] = set()

    def add_state(self) -> int:
        self.moves.append({})
        self.eps.append(set())
        return len(self.moves) - 1

    def add_move(self, p: int, sym: int, q: int) -> None:
        self.moves[p].setdefault(sym, set()).add(q)

    def add_eps(self, p: int, q: int) -> None:
        self.eps[p].add(q)

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            p = stack.pop()
            for q in self.eps[p]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    def determinize(self) -> "Dfa":
        """Subset construction; the empty subset becomes the dead state."""
        nsym = len(self.alphabet)
        start = self.closure(self.starts)
        ids = {start: 0}
        order = [start]
        delta: list[list[int]] = []
        i = 0
        while i < len(order):
            cur = order[i]
            row = []
            for s in range(nsym):
                nxt: set[int] = set()
                for p in cur:
                    nxt.update(self.moves[p].get(s, ()))
                target = self.closure(nxt)
                if target not in ids:
                    ids[target] = len(order)
                    order.append(target)
                row.append(ids[target])
            delta.append(row)
            i += 1
        accepting = frozenset(i for i, ss in enumerate(order) if ss & self.accepting)
        return Dfa(self.alphabet, tuple(map(tuple, delta)), 0, accepting)


class EquivResult(NamedTuple):
    equivalent: bool
    counterexample: Word | None

    def __bool__(self) -> bool:
        return self.equivalent


@dataclass(frozen=True, eq=False)
class Dfa:
    alphabet: Alphabet
    delta: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]

    def __post_init__(self) -> None:
        n, k = len(self.delta), len(self.alphabet)
        if not 0 <= self.start < n:
            raise ValueError("start state out of range")
        for row in self.delta:
            if len(row) != k or any(not 0 <= q < n for q in row):
                raise ValueError("transition table is not total over the alphabet")
        object.__setattr__(self, "accepting", frozenset(self.accepting))

    @property
    def num_states(self) -> int:
        return len(self.delta)

    @property
    def arity(self) -> int:
        return self.alphabet.arity

    def step(self, state: int, atom: Atom) -> int:
        return self.delta[state][self.alphabet.index(atom)]

    def run(self, word: "str | Iterable[Atom]") -> bool:
        q = self.start
        idx = self.alphabet.index
        for atom in self.alphabet.word(word):
            q = self.delta[q][idx(atom)]
        return q in self.accepting

    __call__ = run

    def accepts_tracks(self, *words: str) -> bool:
        """Run on digit strings zipped track-wise with leading-zero padding."""
        if len(words) != self.arity:
            raise ArityMismatch(f"{len(words)} tracks given, automaton has {self.arity}")
        return self.run(tracks(*words))

    def live_states(self) -> frozenset[int]:
        """States from which some accepting state is reachable."""
        rev: list[set[int]] = [set() for _ in self.delta]
        for p, row in enumerate(self.delta):
            for q in row:
                rev[q].add(p)
        seen = set(self.accepting)
        stack = list(seen)
        while stack:
            q = stack.pop()
            for p in rev[q]:
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        return frozenset(seen)

    def is_empty(self) -> bool:
        return self.start not in self.live_states()

    def __eq__(self, other: object) -> bool:
        """Structural equality; use :func:`equiv` for language equality."""
        if not isinstance(other, Dfa):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.delta == other.delta
            and self.start == other.start
            and self.accepting == other.accepting
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.delta, self.start, self.accepting))

    def __repr__(self) -> str:
        return f"Dfa(states={self.num_states}, arity={self.arity}, accepting={len(self.accepting)})"

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet.to_json(),
            "states": self.num_states,
            "start": self.start,
            "accepting": sorted(self.accepting),
            "transitions": [
                {"from": p, "atom": format_atom(a), "to": q}
                for p, row in enumerate(self.delta)
                for a, q in zip(self.alphabet.symbols, row)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Dfa":
        n = obj["states"]
        if "alphabet" in obj:
            alphabet = Alphabet.from_json(obj["alphabet"])
        else:
            atoms = dict.fromkeys(parse_atom(t["atom"]) for t in obj["transitions"])
            alphabet = Alphabet(tuple(sorted(atoms)))
        table: list[list[int | None]] = [[None] * len(alphabet) for _ in range(n)]
        for t in obj["transitions"]:
            table[t["from"]][alphabet.index(parse_atom(t["atom"]))] = t["to"]
        if any(q is None for row in table for q in row):
            raise ValueError("JSON automaton is missing transitions")
        return cls(alphabet, tuple(map(tuple, table)), obj["start"], frozenset(obj["accepting"]))

    def to_dot(self, name: str = "dfa") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
        for q in range(self.num_states):
            shape = "doublecircle" if q in self.accepting else "circle"
            lines.append(f"  {q} [shape={shape}];")
        lines.append(f"  __start -> {self.start};")
        for p, row in enumerate(self.delta):
            grouped: dict[int, list[str]] = {}
            for a, q in zip(self.alphabet.symbols, row):
                grouped.setdefault(q, []).append(format_atom(a))
            for q, labels in grouped.items():
                lines.append(f'  {p} -> {q} [label="{",".join(labels)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _require_same(a: Dfa, b: Dfa) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(
            f"alphabets differ: {a.alphabet.to_json()} vs {b.alphabet.to_json()}"
        )


def _reachable(d: Dfa) -> list[int]:
    order = [d.start]
    seen = {d.start}
    i = 0
    while i < len(order):
        for q in d.delta[order[i]]:
            if q not in seen:
                seen.add(q)
                order.append(q)
        i += 1
    return order


def minimize(d: Dfa) -> Dfa:
    """Hopcroft partition refinement, then breadth-first canonical numbering.

    Two language-equivalent minimal automata come out structurally equal.
    """
    order = _reachable(d)
    old_to_new = {q: i for i, q in enumerate(order)}
    nsym = len(d.alphabet)
    delta = [[old_to_new[d.delta[q][s]] for s in range(nsym)] for q in order]
    n = len(order)
    acc = {old_to_new[q] for q in d.accepting if q in old_to_new}

    inv: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(nsym)]
    for p in range(n):
        for s in range(nsym):
            inv[s][delta[p][s]].append(p)

    blocks: list[set[int]] = [b for b in (acc, set(range(n)) - acc) if b]
    block_of = [0] * n
    for i, b in enumerate(blocks):
        for q in b:
            block_of[q] = i
    work = {min(range(len(blocks)), key=lambda i: len(blocks[i]))} if len(blocks) == 2 else set()

    while work:
        splitter = set(blocks[work.pop()])
        for s in range(nsym):
            pre: dict[int, set[int]] = {}
            for q in splitter:
                for p in inv[s][q]:
                    pre.setdefault(block_of[p], set()).add(p)
            for bi, hit in pre.items():
                blk = blocks[bi]
                if len(hit) == len(blk):
                    continue
                rest = blk - hit
                blocks[bi] = hit
                blocks.append(rest)
                ni = len(blocks) - 1
                for q in rest:
                    block_of[q] = ni
                if bi in work:
                    work.add(ni)
                else:
                    work.add(bi if len(hit) <= len(rest) else ni)

    # canonical BFS renumbering of the quotient
    start = block_of[0]
    ids = {start: 0}
    queue = [start]
    rows: list[tuple[int, ...]] = []
    reps = {}
    for q in range(n):
        reps.setdefault(block_of[q], q)
    i = 0
    while i < len(queue):
        b = queue[i]
        row = []
        for s in range(nsym):
            t = block_of[delta[reps[b]][s]]
            if t not in ids:
                ids[t] = len(queue)
                queue.append(t)
            row.append(ids[t])
        rows.append(tuple(row))
        i += 1
    accepting = frozenset(ids[b] for b in ids if reps[b] in acc)
    return Dfa(d.alphabet, tuple(rows), 0, accepting)


def complement(d: Dfa) -> Dfa:
    return Dfa(d.alphabet, d.delta, d.start, frozenset(range(d.num_states)) - d.accepting)


_OPS = {
    "and": lambda x, y: x and y,
    "or": lambda x, y: x or y,
    "diff": lambda x, y: x and not y,
    "xor": lambda x, y: x != y,
    "iff": lambda x, y: x == y,
}


def product(op: str, a: Dfa, b: Dfa) -> Dfa:
    """Boolean combination (``and``, ``or``, ``diff``, ``xor``, ``iff``) of two DFAs."""
    _require_same(a, b)
    try:
        f = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown product operation {op!r}") from None
    nsym = len(a.alphabet)
    start = (a.start, b.start)
    ids = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row = []
        for s in range(nsym):
            t = (a.delta[p][s], b.delta[q][s])
            if t not in ids:
                ids[t] = len(order)
                order.append(t)
            row.append(ids[t])
        rows.append(tuple(row))
        i += 1
    acc = frozenset(
        i for i, (p, q) in enumerate(order) if f(p in a.accepting, q in b.accepting)
    )
    return minimize(Dfa(a.alphabet, tuple(rows), 0, acc))


def project(d: Dfa, track: int) -> Dfa:
    """Existentially quantify one track away.

    The remaining tracks may be left-padded with zero atoms, so a word is
    accepted when some zero-padded extension of it pairs with a witness.
    """
    k = d.arity
    if k < 2:
        raise BadTrack("projection needs an automaton with at least two tracks")
    if not 0 <= track < k:
        raise BadTrack(f"track {track} out of range for arity {k}")
    drop = lambda a: a[:track] + a[track + 1 :]  # noqa: E731
    reduced = Alphabet(tuple(dict.fromkeys(drop(a) for a in d.alphabet.symbols)))
    nfa = Nfa(reduced)
    for _ in range(d.num_states):
        nfa.add_state()
    for p, row in enumerate(d.delta):
        for a, q in zip(d.alphabet.symbols, row):
            nfa.add_move(p, reduced.index(drop(a)), q)
    nfa.accepting = set(d.accepting)
    zero = reduced.index(reduced.zero()) if reduced.zero() in reduced else None
    starts = {d.start}
    if zero is not None:
        stack = [d.start]
        while stack:
            p = stack.pop()
            for q in nfa.moves[p].get(zero, ()):
                if q not in starts:
                    starts.add(q)
                    stack.append(q)
    nfa.starts = starts
    return minimize(nfa.determinize())


def equiv(a: Dfa, b: Dfa) -> EquivResult:
    """Language equality with a shortest distinguishing word on failure."""
    _require_same(a, b)
    syms = a.alphabet.symbols
    start = (a.start, b.start)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in a.accepting) != (q in b.accepting):
            word = []
            cur = pair
            while parent[cur] is not None:
                cur, s = parent[cur]
                word.append(syms[s])
            return EquivResult(False, tuple(reversed(word)))
        for s in range(len(syms)):
            t = (a.delta[p][s], b.delta[q][s])
            if t not in parent:
                parent[t] = (pair, s)
                queue.append(t)
    return EquivResult(True, None)


def empty(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset())


def universal(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset({0}))


def dumps(d: Dfa) -> str:
    return json.dumps(d.to_json(), sort_keys=True, indent=2) + "\n"
