"""Batch command-line front end.

Exit status: 0 for a positive verdict, 1 for a negative one, 2 for usage or
parse errors, 3 if a computed witness fails its re-check.
"""

import argparse
import sys

from . import automata as fa
from .automata import Nfa, show_word
from .errors import AlphabetError, CodePropsError, NotSatisfiedError, ParseError
from .functionality import non_functional_witness
from .properties import (FIXED_NAMES, KINDS, INPUT_ALTERING, build_fixed_property,
                         build_trajectory_property, build_transducer_property,
                         check_witness, conjunction, construct_language,
                         maximal_witness, satisfies_witness)
from .textio import read_machine
from .transducers import Transducer, eval_pair
from .udcode import check_ud_witness, ud_is_maximal, ud_satisfies_witness


class _Failure(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


def _load(path, cls):
    try:
        m = read_machine(path)
    except ParseError as e:
        raise _Failure(f"{path}: {e}", 2)
    except OSError as e:
        raise _Failure(f"{path}: {e.strerror}", 2)
    if not isinstance(m, cls):
        kind = "an automaton" if cls is Nfa else "a transducer"
        raise _Failure(f"{path}: expected {kind}", 2)
    return m


def _alphabet(text):
    if text is None:
        return None
    return set(text.split(",")) if "," in text else set(text)


def _property(args, aut=None):
    if not (args.fixed or args.traj or args.trans):
        raise _Failure("a property is required (--fixed, --traj or --trans)", 2)
    kinds = args.kind or [INPUT_ALTERING]
    if len(kinds) not in (1, len(args.trans)):
        raise _Failure("give one --kind, or one per --trans", 2)
    if len(kinds) == 1:
        kinds = kinds * len(args.trans)
    machines = [_load(path, Transducer) for path in args.trans]

    sigma = _alphabet(args.alphabet)
    if sigma is None:
        sigma = set(aut.alphabet) if aut is not None else set()
        for t in machines:
            sigma |= t.input_alphabet | t.output_alphabet
    if not sigma:
        raise _Failure("cannot infer the alphabet; pass --alphabet", 2)

    props = [build_fixed_property(name, sigma) for name in args.fixed]
    props += [build_trajectory_property(expr, sigma) for expr in args.traj]
    props += [build_transducer_property(k, t, sigma) for k, t in zip(kinds, machines)]
    p = props[0]
    for q in props[1:]:
        p = conjunction(p, q)
    return p


def _emit_words(out, words):
    for w in words:
        print(show_word(w), file=out)


def _factors(ws):
    return "[" + ", ".join(show_word(w) for w in ws) + "]"


def cmd_satisfies(args, out):
    a = _load(args.aut, Nfa)
    p = _property(args, a)
    witness = satisfies_witness(p, a)
    if witness is None:
        print("SATISFIED", file=out)
        return 0
    if not check_witness(p, a, witness):
        raise _Failure("internal error: satisfaction witness failed re-check", 3)
    print("NOT SATISFIED", file=out)
    _emit_words(out, witness)
    return 1


def cmd_maximal(args, out):
    a = _load(args.aut, Nfa)
    b = _load(args.universe, Nfa) if args.universe else None
    p = _property(args, a)
    try:
        w = maximal_witness(p, a, b)
    except NotSatisfiedError as e:
        words = ", ".join(show_word(x) for x in e.witness)
        raise _Failure(f"the language does not satisfy the property: {words}", 2)
    if w is None:
        print("MAXIMAL", file=out)
        return 0
    extended = fa.union(a, Nfa.from_words([w], p.alphabet))
    if (fa.accepts(a, w) or (b is not None and not fa.accepts(b, w))
            or satisfies_witness(p, extended) is not None):
        raise _Failure("internal error: maximality witness failed re-check", 3)
    print(f"NOT MAXIMAL witness: {show_word(w)}", file=out)
    return 1


def cmd_functional(args, out):
    t = _load(args.trans, Transducer)
    triple = non_functional_witness(t)
    if triple is None:
        print("FUNCTIONAL", file=out)
        return 0
    w, z, z2 = triple
    if z == z2 or not (eval_pair(t, w, z) and eval_pair(t, w, z2)):
        raise _Failure("internal error: non-functionality witness failed re-check", 3)
    print("NOT FUNCTIONAL", file=out)
    _emit_words(out, triple)
    return 1


def cmd_ud_satisfies(args, out):
    a = fa.eliminate_epsilon(_load(args.aut, Nfa))
    witness = ud_satisfies_witness(a)
    if witness is None:
        print("SATISFIED", file=out)
        return 0
    if not check_ud_witness(a, witness):
        raise _Failure("internal error: UD witness failed re-check", 3)
    print("NOT SATISFIED", file=out)
    print(_factors(witness[0]), file=out)
    print(_factors(witness[1]), file=out)
    return 1


def cmd_ud_maximal(args, out):
    a = fa.eliminate_epsilon(_load(args.aut, Nfa))
    try:
        verdict = ud_is_maximal(a, _alphabet(args.alphabet))
    except NotSatisfiedError as e:
        raise _Failure("the language is not a UD code: "
                       f"{_factors(e.witness[0])} vs {_factors(e.witness[1])}", 2)
    print("MAXIMAL" if verdict else "NOT MAXIMAL", file=out)
    return 0 if verdict else 1


def cmd_construct(args, out):
    a = _load(args.aut, Nfa) if args.aut else None
    p = _property(args, a)
    words = construct_language(p, args.n, args.len, args.max_trials, args.seed)
    _emit_words(out, sorted(words))
    return 0


def _add_property_args(sp):
    g = sp.add_argument_group("property (repeat options to take the conjunction)")
    g.add_argument("--fixed", action="append", default=[], choices=FIXED_NAMES)
    g.add_argument("--traj", action="append", default=[], metavar="EXPR",
                   help="trajectory expression over 0 and 1, e.g. '1*0*1*'")
    g.add_argument("--trans", action="append", default=[], metavar="FILE",
                   help="transducer file describing the property")
    g.add_argument("--kind", action="append", choices=KINDS,
                   help=f"how --trans is read (default {INPUT_ALTERING})")
    g.add_argument("--alphabet", help="symbols, e.g. 'ab' or 'x1,x2'")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="codeprops",
        description="Decide code properties of regular languages, with witnesses.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("satisfies", help="does L(aut) satisfy the property?")
    _add_property_args(sp)
    sp.add_argument("--aut", required=True, metavar="FILE")
    sp.set_defaults(func=cmd_satisfies)

    sp = sub.add_parser("maximal", help="is L(aut) maximal for the property?")
    _add_property_args(sp)
    sp.add_argument("--aut", required=True, metavar="FILE")
    sp.add_argument("--universe", metavar="FILE",
                    help="only consider words of this language (default: all words)")
    sp.set_defaults(func=cmd_maximal)

    sp = sub.add_parser("functional", help="is the transducer functional?")
    sp.add_argument("--trans", required=True, metavar="FILE")
    sp.set_defaults(func=cmd_functional)

    sp = sub.add_parser("ud-satisfies", help="is L(aut) uniquely decipherable?")
    sp.add_argument("--aut", required=True, metavar="FILE")
    sp.set_defaults(func=cmd_ud_satisfies)

    sp = sub.add_parser("ud-maximal", help="is the UD code L(aut) maximal?")
    sp.add_argument("--aut", required=True, metavar="FILE")
    sp.add_argument("--alphabet")
    sp.set_defaults(func=cmd_ud_maximal)

    sp = sub.add_parser("construct", help="randomly build a language with the property")
    _add_property_args(sp)
    sp.add_argument("--aut", metavar="FILE", help="take the alphabet from this automaton")
    sp.add_argument("--n", type=int, required=True, help="number of words wanted")
    sp.add_argument("--len", type=int, required=True, help="length of each word")
    sp.add_argument("--max-trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_construct)
    return parser


def run_query(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return args.func(args, out)
    except _Failure as e:
        print(f"error: {e}", file=err)
        return e.status
    except (CodePropsError, AlphabetError) as e:
        print(f"error: {e}", file=err)
        return 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    return run_query(args)


if __name__ == "__main__":
    sys.exit(main())
