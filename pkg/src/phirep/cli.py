"""Command-line interface: ``phirep <command> ...``.

Exit status: 0 on success, 1 when a verification claim fails, 2 on usage or
input errors.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from functools import lru_cache
from pathlib import Path

from . import automata as fa
from .classify import (
    SEQUENCE_KINDS,
    expansion,
    is_antipalindromic,
    kimberling_double,
    min_exponent_bracket,
    parity_profile,
    sequence,
    two_odd_pair,
)
from .errors import PhiRepError
from .golden import render
from .verifier import CLAIMS, dumps as dump_reports, run_claims, synthesize_figure
from .zeck import zeck_decode, zeck_encode


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a non-negative decimal integer, got {text!r}")
    return int(text)


def _positive(text: str) -> int:
    n = _natural(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def _number(args) -> int:
    if args.zeck:
        try:
            return zeck_decode(args.value)
        except PhiRepError as e:
            raise UsageError(str(e)) from None
    try:
        return _natural(args.value)
    except argparse.ArgumentTypeError as e:
        raise UsageError(str(e)) from None


def cmd_convert(args) -> int:
    n = _number(args)
    e = expansion(n)
    if args.format == "json":
        _emit_json({"n": str(n), **e.to_json()})
    else:
        print(render(e))
    return 0


def cmd_zeck(args) -> int:
    n = _number(args)
    w = zeck_encode(n)
    if args.format == "json":
        _emit_json({"n": str(n), "zeck": w})
    else:
        print(n if args.zeck else w)
    return 0


def _classification(n: int) -> dict:
    e = expansion(n)
    p = parity_profile(n)
    dbl = kimberling_double(n)
    pair = two_odd_pair(n)
    return {
        "n": str(n),
        "string": render(e),
        "exponents": list(e.exponents),
        "zeck": zeck_encode(n),
        "antipalindromic": is_antipalindromic(n),
        "double": dbl.to_json(),
        "double_text": str(dbl),
        "double_sqrt5": dbl.sqrt5_form(),
        "double_is_integer": dbl.is_integer,
        "profile": p.to_json(),
        "bracket_i": min_exponent_bracket(n) if n >= 2 else None,
        "two_odd_pair": list(pair) if pair else None,
    }


def cmd_classify(args) -> int:
    n = _number(args)
    if n < 1:
        raise UsageError("classify needs n >= 1")
    c = _classification(n)
    if args.format == "json":
        _emit_json(c)
        return 0
    p = c["profile"]
    print(f"n = {n}")
    print(f"phi-representation: {c['string']}")
    print(f"exponents: {' '.join(map(str, c['exponents']))}")
    print(f"zeckendorf: {c['zeck']}")
    print(f"antipalindromic: {'yes (in S)' if c['antipalindromic'] else 'no (not in S)'}")
    tail = "an integer" if c["double_is_integer"] else "not an integer"
    print(f"doubled exponents: {c['double_text']} (= {c['double_sqrt5']}), {tail}")
    print(f"even exponents: {p['even_count']}, odd exponents: {p['odd_count']} {p['odd_exponents']}")
    bracket = f" (bracket i = {c['bracket_i']})" if c["bracket_i"] else ""
    print(f"smallest exponent: {p['min_exponent']}{bracket}")
    if c["two_odd_pair"]:
        print(f"two odd exponents: {tuple(c['two_odd_pair'])}")
    return 0


def cmd_sequence(args) -> int:
    seq = sequence(args.kind, args.limit)
    if args.format == "json":
        _emit_json(seq)
    else:
        for n in seq:
            print(n)
    return 0


def cmd_verify(args) -> int:
    reports = run_claims(
        args.claims,
        max_n=args.max,
        jobs=args.jobs,
        word_length=args.word_length,
        depth=args.depth,
        margin=args.margin,
        lucas_max=args.lucas_max,
    )
    if args.format == "json":
        sys.stdout.write(dump_reports(reports, timing=args.timing))
    else:
        for r in reports:
            line = r.line()
            if args.timing:
                line += f" ({r.elapsed:.2f}s)"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def load_automaton(source: str) -> fa.Dfa:
    """``@file.json``, a builtin name, or a regular expression."""
    if source.startswith("@"):
        return fa.Dfa.from_json(json.loads(Path(source[1:]).read_text()))
    if source in fa.PATTERNS:
        return fa.builtin(source)
    return fa.regex_compile(source)


def _emit_automaton(d: fa.Dfa, fmt: str) -> None:
    if fmt == "json":
        _emit_json(d.to_json())
    elif fmt == "dot":
        sys.stdout.write(d.to_dot())
    else:
        print(f"states: {d.num_states}  start: {d.start}  accepting: {sorted(d.accepting)}")
        atoms = [fa.format_atom(a) for a in d.alphabet.symbols]
        print("state " + " ".join(f"{a:>6}" for a in atoms))
        for q, row in enumerate(d.delta):
            mark = "*" if q in d.accepting else " "
            print(f"{q:>4}{mark} " + " ".join(f"{t:>6}" for t in row))


def cmd_dfa(args) -> int:
    op = args.subop
    fmt = args.format
    if op in ("equiv", "run") and fmt == "dot":
        raise UsageError(f"--format dot is only valid for automaton output, not '{op}'")
    if op == "compile":
        alphabet = fa.Alphabet.binary(args.arity) if args.arity else None
        d = fa.regex_compile(args.pattern, alphabet)
    elif op == "builtin":
        d = fa.builtin(args.name)
    elif op == "complement":
        d = fa.complement(load_automaton(args.a))
    elif op == "minimize":
        d = fa.minimize(load_automaton(args.a))
    elif op == "product":
        d = fa.product(args.op, load_automaton(args.a), load_automaton(args.b))
    elif op == "project":
        d = fa.project(load_automaton(args.a), args.track)
    elif op == "synthesize":
        d = synthesize_figure(args.kind, args.depth, args.margin)
    elif op == "equiv":
        res = fa.equiv(load_automaton(args.a), load_automaton(args.b))
        cex = None if res.equivalent else fa.format_word(res.counterexample)
        if fmt == "json":
            _emit_json({"equivalent": res.equivalent, "counterexample": cex})
        else:
            print("equivalent" if res.equivalent else f"not equivalent; counterexample: {cex or '()'}")
        return 0
    elif op == "run":
        d = load_automaton(args.a)
        ok = d.run(args.word) if args.word != "()" else d.run("" if d.arity == 1 else ())
        if fmt == "json":
            _emit_json({"accepted": ok, "word": args.word})
        else:
            print("accept" if ok else "reject")
        return 0
    else:  # pragma: no cover
        raise UsageError(f"unknown dfa operation {op!r}")
    _emit_automaton(d, fmt)
    return 0


@lru_cache(maxsize=1)
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phirep",
        description="Golden-ratio and Zeckendorf numeration toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def number_cmd(name: str, help_: str, func) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("value", help="decimal integer (or a Zeckendorf word with --zeck)")
        p.add_argument("--zeck", action="store_true", help="read VALUE as a Zeckendorf word")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")
        p.set_defaults(func=func)
        return p

    number_cmd("convert", "golden-ratio representation of n", cmd_convert)
    number_cmd("zeck", "Zeckendorf encoding of n (or decoding with --zeck)", cmd_zeck)
    number_cmd("classify", "membership and exponent-parity facts for n", cmd_classify)

    p = sub.add_parser("sequence", help="members of one of the integer sets up to a limit")
    p.add_argument("kind", choices=SEQUENCE_KINDS)
    p.add_argument("--limit", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", help="replay the theorems over a bounded range")
    p.add_argument("claims", nargs="+", choices=("all",) + CLAIMS, metavar="CLAIM",
                   help=f"'all' or any of: {', '.join(CLAIMS)}")
    p.add_argument("--max", type=_positive, default=100_000, help="upper end of the n range")
    p.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)
    p.add_argument("--word-length", type=_natural, default=14, help="word length for builtin checks")
    p.add_argument("--depth", type=_positive, default=20, help="synthesis depth K")
    p.add_argument("--margin", type=_positive, default=5, help="extra verification depth M")
    p.add_argument("--lucas-max", type=_natural, default=10_000)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dfa", help="automaton operations")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "dot"), default=argparse.SUPPRESS)
    dsub = p.add_subparsers(dest="subop", required=True)
    c = dsub.add_parser("compile", parents=[fmt])
    c.add_argument("pattern")
    c.add_argument("--arity", type=_positive)
    c = dsub.add_parser("builtin", parents=[fmt])
    c.add_argument("name")
    for name in ("complement", "minimize"):
        c = dsub.add_parser(name, parents=[fmt])
        c.add_argument("a", help="@file.json, builtin name, or regex")
    c = dsub.add_parser("product", parents=[fmt])
    c.add_argument("op", choices=("and", "or", "diff", "xor", "iff"))
    c.add_argument("a")
    c.add_argument("b")
    c = dsub.add_parser("project", parents=[fmt])
    c.add_argument("a")
    c.add_argument("--track", type=_natural, required=True)
    c = dsub.add_parser("equiv", parents=[fmt])
    c.add_argument("a")
    c.add_argument("b")
    c = dsub.add_parser("run", parents=[fmt])
    c.add_argument("a")
    c.add_argument("word", help="digit string, or atoms like [0,1][1,0]; () for the empty word")
    c = dsub.add_parser("synthesize", parents=[fmt])
    c.add_argument("kind", choices=("one_even", "one_odd"))
    c.add_argument("--depth", type=_positive, default=20)
    c.add_argument("--margin", type=_positive, default=5)
    p.set_defaults(func=cmd_dfa)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PhiRepError, ValueError, OSError) as e:
        print(f"phirep: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
