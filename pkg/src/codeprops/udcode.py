"""Unique decipherability: a language ``L`` is a UD code when every word of
``L*`` has exactly one factorization into ``L``-words.

Satisfaction reduces to functionality: a transducer reads a word of ``L*``
and writes, for every position, ``0`` inside a factor and ``1`` at the end
of one. Two different outputs on one input are two factorizations.
"""

from typing import Optional

from . import automata as fa
from .automata import EPS, Nfa
from .errors import NotUDCodeError, UsageError
from .functionality import non_functional_witness
from .transducers import Transducer, run_on_nfa


def _fresh_start(a: Nfa) -> Nfa:
    """Equivalent automaton whose single initial state has no incoming edges."""
    s = a.n_states
    trans = list(a.transitions)
    trans += [(s, lab, q) for i in a.initials for lab, q in a.out[i]]
    finals = set(a.finals) | ({s} if a.initials & a.finals else set())
    return fa.trim(Nfa(s + 1, a.alphabet, trans, [s], finals))


def factorization_transducer(a: Nfa) -> Transducer:
    """Transducer over output ``{0, 1}`` with domain ``L(a)*`` marking factor ends."""
    if a.has_epsilon:
        raise UsageError("the automaton must be free of ε-transitions")
    a = _fresh_start(a)
    trans = []
    for p, sym, q in a.transitions:
        trans.append((p, sym, "0", q))
        if q in a.finals:
            trans += [(p, sym, "1", i) for i in a.initials]
    return Transducer(a.n_states, a.alphabet, {"0", "1"}, trans, a.initials, a.initials)


def decode(w: tuple, marks: tuple) -> list:
    """Split ``w`` at the positions where ``marks`` carries a ``1``."""
    factors, start = [], 0
    for i, m in enumerate(marks):
        if m == "1":
            factors.append(tuple(w[start:i + 1]))
            start = i + 1
    return factors


def ud_satisfies_witness(a: Nfa) -> Optional[tuple]:
    """``None`` if ``L(a)`` is a UD code, else two different factorization lists
    of one word."""
    if a.has_epsilon:
        raise UsageError("the automaton must be free of ε-transitions")
    a = fa.trim(a)
    if a.initials & a.finals:
        return [()], [(), ()]
    if a.n_states == 0:
        return None
    triple = non_functional_witness(factorization_transducer(a))
    if triple is None:
        return None
    w, x, y = triple
    return decode(w, x), decode(w, y)


def check_ud_witness(a: Nfa, witness) -> bool:
    first, second = witness
    return (list(first) != list(second)
            and sum(first, ()) == sum(second, ())
            and all(fa.accepts(a, f) for f in list(first) + list(second)))


def infix_transducer(alphabet, reflexive: bool = True) -> Transducer:
    """Outputs the infixes of its input: with ``reflexive`` every infix,
    including the input itself and the empty word, else proper ones only."""
    if not reflexive:
        from .properties import fixed_transducer
        return fixed_transducer("infix", alphabet)
    sigma = sorted(alphabet)
    trans = []
    for s in sigma:
        trans += [(0, s, EPS, 0), (0, s, s, 1), (1, s, s, 1), (1, s, EPS, 2), (2, s, EPS, 2)]
    return Transducer(3, sigma, sigma, trans, [0], [0, 1, 2])


def ud_is_maximal(a: Nfa, alphabet=None) -> bool:
    """Whether the UD code ``L(a)`` is maximal: the infixes of ``L(a)*``
    must cover every word over the alphabet."""
    witness = ud_satisfies_witness(a)
    if witness is not None:
        raise NotUDCodeError("the language is not a UD code", witness)
    alphabet = frozenset(a.alphabet if alphabet is None else alphabet)
    infixes = run_on_nfa(infix_transducer(alphabet), fa.star(a))
    return fa.is_empty(fa.complement(infixes, alphabet))
