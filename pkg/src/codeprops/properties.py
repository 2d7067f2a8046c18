"""Code-property objects, their conjunction and order, and the decision
procedures for satisfaction and maximality.

A property is described by a transducer ``t`` whose input and output
alphabets coincide, read in one of three ways:

* ``INPUT_ALTERING``: ``L`` satisfies it when ``t(L)`` and ``L`` are disjoint;
* ``ERROR_DETECTING``: no ``L``-word is turned by ``t`` into another ``L``-word;
* ``ERROR_CORRECTING``: distinct ``L``-words have disjoint ``t``-images.

The input-altering / input-preserving nature of ``t`` is taken on trust;
:func:`check_input_preserving` offers a bounded sanity check.
"""

import hashlib
import itertools
import random
from typing import Optional

from . import automata as fa
from .automata import Nfa
from .errors import AlphabetError, NotSatisfiedError, UsageError
from .functionality import non_functional_witness
from .trajectory import parse_trajectory
from .transducers import (Transducer, compose, eval_pair, identity, in_intersection,
                          inverse, nonempty_witness, out_intersection,
                          rational_combine, run_on_nfa, to_standard_form)

INPUT_ALTERING = "input-altering"
ERROR_DETECTING = "error-detecting"
ERROR_CORRECTING = "error-correcting"
KINDS = (INPUT_ALTERING, ERROR_DETECTING, ERROR_CORRECTING)

FIXED_NAMES = ("prefix", "suffix", "infix", "outfix", "hypercode")

# (smaller, larger): every language with the first property has the second.
_FIXED_BELOW = {
    ("hypercode", "infix"), ("hypercode", "outfix"),
    ("infix", "prefix"), ("infix", "suffix"),
    ("outfix", "prefix"), ("outfix", "suffix"),
    ("hypercode", "prefix"), ("hypercode", "suffix"),
}


class CodeProperty:
    __slots__ = ("kind", "transducer", "alphabet", "id_names")

    def __init__(self, kind: str, transducer: Transducer, alphabet, id_names):
        if kind not in KINDS:
            raise UsageError(f"unknown property kind {kind!r}")
        alphabet = frozenset(alphabet)
        if not (transducer.input_alphabet == alphabet == transducer.output_alphabet):
            raise AlphabetError("transducer alphabets must equal the property alphabet")
        id_names = frozenset(id_names)
        if not id_names:
            raise UsageError("a property needs at least one name")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "transducer", to_standard_form(transducer))
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "id_names", id_names)

    def __setattr__(self, name, value):
        raise AttributeError("CodeProperty objects are immutable")

    def __repr__(self):
        return (f"CodeProperty({self.kind}, names={sorted(self.id_names)}, "
                f"alphabet={sorted(self.alphabet)})")

    def __and__(self, other):
        return conjunction(self, other)

    def __le__(self, other):
        return leq(self, other)

    def satisfies(self, a: Nfa) -> bool:
        return satisfies_witness(self, a) is None


def _digest_name(t: Transducer) -> str:
    from .textio import serialize_machine
    text = serialize_machine(to_standard_form(t))
    return "t:" + hashlib.sha256(text.encode()).hexdigest()[:16]


# -- construction ----------------------------------------------------------

def build_transducer_property(kind: str, t: Transducer, alphabet=None) -> CodeProperty:
    """Wrap ``t`` as a property of the given kind.

    Without ``alphabet`` the two alphabets of ``t`` must already agree; with
    it they are widened to ``alphabet`` (which must contain both).
    """
    if alphabet is None:
        if t.input_alphabet != t.output_alphabet:
            raise AlphabetError("input and output alphabets of the transducer differ")
        alphabet = t.input_alphabet
    else:
        alphabet = frozenset(alphabet)
        if not (t.input_alphabet | t.output_alphabet) <= alphabet:
            raise AlphabetError("transducer uses symbols outside the given alphabet")
        t = t._replace(input_alphabet=alphabet, output_alphabet=alphabet)
    return CodeProperty(kind, t, alphabet, {_digest_name(t)})


def _relabel(pattern: Nfa, alphabet) -> Transducer:
    """0-transitions copy a symbol, 1-transitions delete one."""
    trans = []
    for p, lab, q in pattern.transitions:
        for s in alphabet:
            trans.append((p, s, s if lab == "0" else "", q))
    return Transducer(pattern.n_states, alphabet, alphabet, trans,
                      pattern.initials, pattern.finals)


def build_trajectory_property(expr: str, alphabet) -> CodeProperty:
    alphabet = frozenset(alphabet)
    pattern = fa.eliminate_epsilon(parse_trajectory(expr))
    # words with at least one 1, so that the transducer deletes something
    some_one = Nfa(2, {"0", "1"}, [(0, "0", 0), (0, "1", 1), (1, "0", 1), (1, "1", 1)],
                   [0], [1])
    pattern = fa.trim(fa.intersect(pattern, some_one))
    t = _relabel(pattern, sorted(alphabet))
    return CodeProperty(INPUT_ALTERING, t, alphabet, {_digest_name(t)})


def fixed_transducer(name: str, alphabet) -> Transducer:
    """Transducer returning, on input ``w``, the words ``w`` must not coexist with."""
    sigma = sorted(alphabet)

    def copy(p, q):
        return [(p, s, s, q) for s in sigma]

    def delete(p, q):
        return [(p, s, "", q) for s in sigma]

    if name == "prefix":
        trans = copy(0, 0) + delete(0, 1) + delete(1, 1)
        n, finals = 2, [1]
    elif name == "suffix":
        trans = delete(0, 0) + delete(0, 1) + copy(1, 1)
        n, finals = 2, [1]
    elif name == "infix":
        # 0 start; 1 deleting a prefix; 2 copying, nothing deleted yet;
        # 3 copying after a deleted prefix; 4 deleting a suffix
        trans = (delete(0, 1) + copy(0, 2) + delete(1, 1) + copy(1, 3)
                 + copy(2, 2) + delete(2, 4) + copy(3, 3) + delete(3, 4) + delete(4, 4))
        n, finals = 5, [1, 3, 4]
    elif name == "outfix":
        trans = copy(0, 0) + delete(0, 1) + delete(1, 1) + copy(1, 2) + copy(2, 2)
        n, finals = 3, [1, 2]
    elif name == "hypercode":
        trans = copy(0, 0) + delete(0, 1) + copy(1, 1) + delete(1, 1)
        n, finals = 2, [1]
    else:
        raise UsageError(f"unknown fixed property {name!r}; expected one of {FIXED_NAMES}")
    return Transducer(n, sigma, sigma, trans, [0], finals)


def build_fixed_property(name: str, alphabet) -> CodeProperty:
    alphabet = frozenset(alphabet)
    if not alphabet:
        raise AlphabetError("alphabet must be nonempty")
    return CodeProperty(INPUT_ALTERING, fixed_transducer(name, alphabet), alphabet, {name})


# -- hierarchy -------------------------------------------------------------

def normalize_names(names) -> frozenset:
    """Drop each fixed name implied by a strictly smaller fixed name present."""
    names = frozenset(names)
    return frozenset(n for n in names
                     if not any((m, n) in _FIXED_BELOW for m in names))


def _same_alphabet(p, q):
    if p.alphabet != q.alphabet:
        raise AlphabetError("properties are over different alphabets")


def iat_to_ed(t: Transducer) -> Transducer:
    """Channel transducer: input-altering ``t`` plus the identity."""
    sigma = t.input_alphabet | t.output_alphabet
    return rational_combine("union", t, identity(sigma))


def ec_to_ed(t: Transducer) -> Transducer:
    """Relates ``(u, v)`` exactly when ``t(u)`` and ``t(v)`` share a word."""
    return compose(t, inverse(t))


def _as_error_detecting(p: CodeProperty) -> Transducer:
    if p.kind == INPUT_ALTERING:
        return iat_to_ed(p.transducer)
    if p.kind == ERROR_CORRECTING:
        return ec_to_ed(p.transducer)
    return p.transducer


def conjunction(p: CodeProperty, q: CodeProperty) -> CodeProperty:
    _same_alphabet(p, q)
    names = normalize_names(p.id_names | q.id_names)
    if names == p.id_names:
        return p
    if names == q.id_names:
        return q
    if p.kind == q.kind == INPUT_ALTERING:
        t = rational_combine("union", p.transducer, q.transducer)
        return CodeProperty(INPUT_ALTERING, t, p.alphabet, names)
    t = rational_combine("union", _as_error_detecting(p), _as_error_detecting(q))
    return CodeProperty(ERROR_DETECTING, t, p.alphabet, names)


def leq(p: CodeProperty, q: CodeProperty) -> bool:
    """Sound but incomplete containment test: ``True`` means every language
    with property ``p`` also has ``q``; ``False`` is inconclusive, except
    among fixed properties over one alphabet where the answer is exact."""
    _same_alphabet(p, q)
    return normalize_names(p.id_names | q.id_names) == p.id_names


# -- decision procedures ---------------------------------------------------

def _prepare(p: CodeProperty, a: Nfa) -> Nfa:
    if not a.alphabet <= p.alphabet:
        raise AlphabetError("the automaton uses symbols outside the property alphabet")
    return fa.trim(fa.eliminate_epsilon(a))


def satisfies_witness(p: CodeProperty, a: Nfa) -> Optional[tuple]:
    """``None`` when ``L(a)`` satisfies ``p``; otherwise a witness.

    The witness is a pair ``(u, v)`` of distinct words of ``L(a)`` with ``v``
    in ``t(u)``, or for error-correcting properties a triple ``(z, u, v)``
    with ``z`` in both ``t(u)`` and ``t(v)``.
    """
    a = _prepare(p, a)
    t = p.transducer
    if p.kind == INPUT_ALTERING:
        return nonempty_witness(out_intersection(in_intersection(t, a), a))
    if p.kind == ERROR_DETECTING:
        triple = non_functional_witness(out_intersection(in_intersection(t, a), a))
        if triple is None:
            return None
        u, v, w = triple
        return (u, w) if u == v else (u, v)
    return non_functional_witness(out_intersection(inverse(t), a))


def check_witness(p: CodeProperty, a: Nfa, witness) -> bool:
    """Re-validate a satisfaction witness by direct evaluation."""
    t = p.transducer
    if p.kind == ERROR_CORRECTING:
        z, u, v = witness
        return (u != v and fa.accepts(a, u) and fa.accepts(a, v)
                and eval_pair(t, u, z) and eval_pair(t, v, z))
    u, v = witness
    return (u != v and fa.accepts(a, u) and fa.accepts(a, v)
            and (eval_pair(t, u, v) or eval_pair(t, v, u)))


def maximal_witness(p: CodeProperty, a: Nfa, b: Optional[Nfa] = None) -> Optional[tuple]:
    """``None`` when ``L(a)`` is ``p``-maximal within ``L(b)`` (default: all
    words); otherwise a shortest word that can be added to ``L(a)``."""
    a = _prepare(p, a)
    bad = satisfies_witness(p, a)
    if bad is not None:
        raise NotSatisfiedError("the language does not satisfy the property", bad)
    t = p.transducer
    if p.kind == ERROR_CORRECTING:
        t = ec_to_ed(t)
    covered = fa.union(a, fa.union(run_on_nfa(t, a), run_on_nfa(inverse(t), a)))
    free = fa.complement(covered, p.alphabet)
    if b is not None:
        free = fa.intersect(free, fa.eliminate_epsilon(b))
    return fa.shortest_accepted_word(free)


def is_maximal(p: CodeProperty, a: Nfa, b: Optional[Nfa] = None) -> bool:
    return maximal_witness(p, a, b) is None


def check_input_preserving(t: Transducer, max_len: int = 4) -> bool:
    """Bounded check that ``w`` is in ``t(w)`` for domain words up to ``max_len``."""
    from .transducers import project
    dom = project(to_standard_form(t), "input")
    return all(eval_pair(t, w, w) for w in fa.enumerate_words(dom, max_len))


def check_input_altering(t: Transducer, max_len: int = 4) -> bool:
    """Bounded check that ``w`` is never in ``t(w)`` for words up to ``max_len``."""
    sigma = sorted(t.input_alphabet)
    return not any(eval_pair(t, w, w)
                   for k in range(max_len + 1)
                   for w in itertools.product(sigma, repeat=k))


def construct_language(p: CodeProperty, n: int, length: int, max_trials: int = 100,
                       seed=None) -> set:
    """Randomly grow a language of ``length``-long words satisfying ``p``.

    Stops at ``n`` words, when every word of that length is taken, or after
    ``max_trials`` consecutive rejected candidates.
    """
    rng = random.Random(seed)
    sigma = sorted(p.alphabet)
    total = len(sigma) ** length

    def pick():
        return tuple(rng.choice(sigma) for _ in range(length))

    def ok(words):
        return satisfies_witness(p, Nfa.from_words(words, p.alphabet)) is None

    lang = set()
    for _ in range(max_trials):
        w = pick()
        if ok([w]):
            lang.add(w)
            break
    if not lang:
        return lang
    failures = 0
    while len(lang) < n and len(lang) < total and failures < max_trials:
        w = pick()
        while w in lang:
            w = pick()
        if ok(lang | {w}):
            lang.add(w)
            failures = 0
        else:
            failures += 1
    return lang

