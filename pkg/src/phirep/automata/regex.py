"""Compiler for a small regular expression dialect over tuple atoms.

Grammar (whitespace ignored)::

    alt    := concat ('|' concat)*
    concat := star*
    star   := base '*'*
    base   := DIGIT | '[' DIGIT (',' DIGIT)* ']' | '(' alt ')' | '()'

``()`` is the empty word.  Concatenation binds tighter than ``|``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import AlphabetMismatch, ArityMismatch, RegexSyntaxError
from .dfa import Alphabet, Atom, Dfa, Nfa, minimize


@dataclass(frozen=True)
class Eps:
    pass


@dataclass(frozen=True)
class Sym:
    atom: Atom


@dataclass(frozen=True)
class Cat:
    parts: tuple


@dataclass(frozen=True)
class Alt:
    options: tuple


@dataclass(frozen=True)
class Star:
    inner: object


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            got = self.peek()
            raise RegexSyntaxError(
                f"expected {ch!r}, found {'end of pattern' if got is None else repr(got)}",
                self.pos,
            )
        self.pos += 1

    def parse(self):
        node = self.alt()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def alt(self):
        options = [self.concat()]
        while self.peek() == "|":
            self.pos += 1
            options.append(self.concat())
        return options[0] if len(options) == 1 else Alt(tuple(options))

    def concat(self):
        parts = []
        while self.peek() not in (None, "|", ")"):
            parts.append(self.star())
        if not parts:
            return Eps()
        return parts[0] if len(parts) == 1 else Cat(tuple(parts))

    def star(self):
        node = self.base()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def base(self):
        ch = self.peek()
        start = self.pos
        if ch is None:
            raise RegexSyntaxError("unexpected end of pattern", self.pos)
        if ch.isdigit():
            self.pos += 1
            return Sym((int(ch),))
        if ch == "[":
            self.pos += 1
            digits = [self._digit()]
            while self.peek() == ",":
                self.pos += 1
                digits.append(self._digit())
            self.expect("]")
            return Sym(tuple(digits))
        if ch == "(":
            self.pos += 1
            if self.peek() == ")":
                self.pos += 1
                return Eps()
            node = self.alt()
            if self.peek() != ")":
                raise RegexSyntaxError("unbalanced parenthesis", start)
            self.pos += 1
            return node
        raise RegexSyntaxError(f"unexpected {ch!r}", self.pos)

    def _digit(self) -> int:
        ch = self.peek()
        if ch is None or not ch.isdigit():
            raise RegexSyntaxError("expected a digit inside atom", self.pos)
        self.pos += 1
        return int(ch)


def parse_regex(pattern: str):
    return _Parser(pattern).parse()


def _check_atoms(node, alphabet: Alphabet, pattern: str) -> None:
    if isinstance(node, Sym):
        if len(node.atom) != alphabet.arity:
            raise ArityMismatch(
                f"atom {list(node.atom)} in {pattern!r} has arity {len(node.atom)}, "
                f"alphabet has arity {alphabet.arity}"
            )
        if node.atom not in alphabet:
            raise AlphabetMismatch(f"atom {list(node.atom)} in {pattern!r} is not in the alphabet")
    elif isinstance(node, Cat):
        for p in node.parts:
            _check_atoms(p, alphabet, pattern)
    elif isinstance(node, Alt):
        for p in node.options:
            _check_atoms(p, alphabet, pattern)
    elif isinstance(node, Star):
        _check_atoms(node.inner, alphabet, pattern)


def thompson(node, alphabet: Alphabet) -> Nfa:
    nfa = Nfa(alphabet)

    def build(n) -> tuple[int, int]:
        s, f = nfa.add_state(), nfa.add_state()
        if isinstance(n, Eps):
            nfa.add_eps(s, f)
        elif isinstance(n, Sym):
            nfa.add_move(s, alphabet.index(n.atom), f)
        elif isinstance(n, Cat):
            cur = s
            for part in n.parts:
                ps, pf = build(part)
                nfa.add_eps(cur, ps)
                cur = pf
            nfa.add_eps(cur, f)
        elif isinstance(n, Alt):
            for opt in n.options:
                os_, of = build(opt)
                nfa.add_eps(s, os_)
                nfa.add_eps(of, f)
        elif isinstance(n, Star):
            is_, if_ = build(n.inner)
            nfa.add_eps(s, is_)
            nfa.add_eps(s, f)
            nfa.add_eps(if_, is_)
            nfa.add_eps(if_, f)
        else:  # pragma: no cover
            raise TypeError(n)
        return s, f

    start, final = build(node)
    nfa.starts = {start}
    nfa.accepting = {final}
    return nfa


def regex_compile(pattern: str, alphabet: Alphabet | None = None) -> Dfa:
    """Compile ``pattern`` to the minimal complete DFA of its language.

    Without an explicit alphabet, the binary alphabet of the arity of the
    first atom is used.
    """
    tree = parse_regex(pattern)
    if alphabet is None:
        alphabet = Alphabet.binary(_first_arity(tree) or 1)
    _check_atoms(tree, alphabet, pattern)
    return minimize(thompson(tree, alphabet).determinize())


def _first_arity(node) -> int | None:
    if isinstance(node, Sym):
        return len(node.atom)
    children = (
        node.parts if isinstance(node, Cat)
        else node.options if isinstance(node, Alt)
        else (node.inner,) if isinstance(node, Star)
        else ()
    )
    for c in children:
        k = _first_arity(c)
        if k:
            return k
    return None
