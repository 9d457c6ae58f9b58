"""Multi-track DFA engine over numeration-system encodings."""

from .builtins import NAMES as BUILTIN_NAMES
from .builtins import PATTERNS, builtin
from .dfa import (
    Alphabet,
    Dfa,
    EquivResult,
    Nfa,
    complement,
    empty,
    equiv,
    format_atom,
    format_word,
    minimize,
    product,
    project,
    split_tracks,
    tracks,
    universal,
)
from .regex import regex_compile
from .represent import check_phi_rep, phi_tracks
from .synth import synthesize_from_oracle

__all__ = [
    "Alphabet",
    "Dfa",
    "EquivResult",
    "Nfa",
    "BUILTIN_NAMES",
    "PATTERNS",
    "builtin",
    "check_phi_rep",
    "complement",
    "empty",
    "equiv",
    "format_atom",
    "format_word",
    "minimize",
    "phi_tracks",
    "product",
    "project",
    "regex_compile",
    "split_tracks",
    "synthesize_from_oracle",
    "tracks",
    "universal",
]
