"""Named automata compiled from fixed regular expressions."""

from __future__ import annotations

from functools import lru_cache

from ..errors import UnknownBuiltin
from .dfa import Alphabet, Dfa
from .regex import regex_compile

_ONEODD = "(()|0|1)(0(0|1))*1((0|1)0)*"
_TWOODD = "(()|0|1)(0(0|1))*1(0|1)(0(0|1))*1((0|1)0)*"

# name -> (pattern, number of tracks)
PATTERNS: dict[str, tuple[str, int]] = {
    "noodd1": ("(()|0)((0|1)0)*", 1),
    "noeven1": ("()|((()|0)((0|1)0)*(0|1))", 1),
    "oneodd1": (_ONEODD, 1),
    "oneeven1": (_ONEODD + "(0|1)", 1),
    "twoodd1": (_TWOODD, 1),
    "twoeven1": (_TWOODD + "(0|1)", 1),
    "largesteven": ("0*1(0|1)((0|1)(0|1))*", 1),
    "isevenlucas": ("0*10|0*100|0*1010(00)*", 1),
    "isevenfib": ("0*1(00)*", 1),
    "end1": ("(0|1)*1", 1),
    "shiftl": ("([0,0]|[0,1][1,1]*[1,0])*", 2),
    "shiftr": ("([0,0]|[1,0][1,1]*[0,1])*(()|[1,0][1,1]*)", 2),
    "fibluc": ("[0,0]*([0,1][0,0][1,0])|([0,1][1,0][0,1][0,0]*)", 2),
    "largest_dig": ("[0,0]*[1,1]([1,0]|[0,0])*", 2),
    "fibmatch": ("([0,0]|[1,0])*[1,1]([0,0]|[1,0])*", 2),
}

NAMES = tuple(PATTERNS)


@lru_cache(maxsize=None)
def builtin(name: str) -> Dfa:
    try:
        pattern, arity = PATTERNS[name]
    except KeyError:
        raise UnknownBuiltin(f"no builtin automaton named {name!r}; known: {', '.join(NAMES)}") from None
    return regex_compile(pattern, Alphabet.binary(arity))
