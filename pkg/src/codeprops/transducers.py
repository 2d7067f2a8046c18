"""Finite transducers, their product constructions and rational operations.

A transition is ``(p, x, y, q)`` where ``x`` and ``y`` are words (tuples of
symbols). When passing labels, a ``str`` names a single symbol and ``""``
the empty word; any other sequence is taken as a word. A transducer is in
standard form when every label has length at most one. All algorithms below
normalise their operands with :func:`to_standard_form` first.
"""

from collections import deque
from typing import Iterable, Optional

from .automata import EPS, Nfa, as_word, explore_pairs, _useful_states
from .errors import AlphabetError, UsageError


def _label(x) -> tuple:
    if isinstance(x, str):
        return (x,) if x else ()
    return tuple(x)


def _sym(x: tuple) -> str:
    return x[0] if x else EPS


class Transducer:
    """A transducer ``(Q, Sigma, Delta, T, I, F)`` with ``Q = {0, ..., n_states-1}``."""

    __slots__ = ("n_states", "input_alphabet", "output_alphabet", "transitions",
                 "initials", "finals", "_out")

    def __init__(self, n_states: int, input_alphabet: Iterable[str],
                 output_alphabet: Iterable[str], transitions: Iterable[tuple],
                 initials: Iterable[int], finals: Iterable[int]):
        sigma = frozenset(input_alphabet)
        delta = frozenset(output_alphabet)
        if EPS in sigma or EPS in delta:
            raise AlphabetError("the empty label cannot be an alphabet symbol")
        trans = set()
        for p, x, y, q in transitions:
            x, y = _label(x), _label(y)
            if not (0 <= p < n_states and 0 <= q < n_states):
                raise UsageError(f"transition {(p, x, y, q)} uses an undeclared state")
            if not set(x) <= sigma:
                raise AlphabetError(f"input label {x} is not over the input alphabet")
            if not set(y) <= delta:
                raise AlphabetError(f"output label {y} is not over the output alphabet")
            trans.add((p, x, y, q))
        initials = frozenset(initials)
        finals = frozenset(finals)
        if not all(0 <= s < n_states for s in initials | finals):
            raise UsageError("initial and final states must be declared states")
        object.__setattr__(self, "n_states", n_states)
        object.__setattr__(self, "input_alphabet", sigma)
        object.__setattr__(self, "output_alphabet", delta)
        object.__setattr__(self, "transitions", tuple(sorted(trans)))
        object.__setattr__(self, "initials", initials)
        object.__setattr__(self, "finals", finals)
        object.__setattr__(self, "_out", None)

    def __setattr__(self, name, value):
        raise AttributeError("Transducer objects are immutable")

    def _key(self):
        return (self.n_states, self.input_alphabet, self.output_alphabet,
                self.transitions, self.initials, self.finals)

    def __eq__(self, other):
        if not isinstance(other, Transducer):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"Transducer(n_states={self.n_states}, "
                f"input_alphabet={sorted(self.input_alphabet)}, "
                f"output_alphabet={sorted(self.output_alphabet)}, "
                f"transitions={len(self.transitions)}, "
                f"initials={sorted(self.initials)}, finals={sorted(self.finals)})")

    @property
    def out(self):
        if self._out is None:
            out = [[] for _ in range(self.n_states)]
            for p, x, y, q in self.transitions:
                out[p].append((x, y, q))
            object.__setattr__(self, "_out", out)
        return self._out

    @property
    def standard_form(self) -> bool:
        return all(len(x) <= 1 and len(y) <= 1 for _, x, y, _ in self.transitions)

    @property
    def size(self) -> int:
        return self.n_states + sum(1 + len(x) + len(y) for _, x, y, _ in self.transitions)

    @property
    def has_epsilon_input(self) -> bool:
        return any(not x for _, x, _, _ in self.transitions)

    @property
    def has_epsilon_output(self) -> bool:
        return any(not y for _, _, y, _ in self.transitions)

    def with_epsilon_loops(self) -> "Transducer":
        loops = [(p, (), (), p) for p in range(self.n_states)]
        return Transducer(self.n_states, self.input_alphabet, self.output_alphabet,
                          self.transitions + tuple(loops), self.initials, self.finals)

    def _replace(self, **kw) -> "Transducer":
        args = dict(n_states=self.n_states, input_alphabet=self.input_alphabet,
                    output_alphabet=self.output_alphabet,
                    transitions=self.transitions, initials=self.initials,
                    finals=self.finals)
        args.update(kw)
        return Transducer(**args)


def identity(alphabet) -> Transducer:
    """One-state transducer realizing ``{(w, w)}`` over ``alphabet``."""
    alphabet = frozenset(alphabet)
    return Transducer(1, alphabet, alphabet, [(0, a, a, 0) for a in alphabet], [0], [0])


def to_standard_form(t: Transducer) -> Transducer:
    """Split long labels into chains pairing input and output symbols positionally."""
    if t.standard_form:
        return t
    n = t.n_states
    trans = []
    for p, x, y, q in t.transitions:
        k = max(len(x), len(y))
        if k <= 1:
            trans.append((p, x, y, q))
            continue
        chain = [p] + list(range(n, n + k - 1)) + [q]
        n += k - 1
        for i in range(k):
            trans.append((chain[i], x[i:i + 1], y[i:i + 1], chain[i + 1]))
    return t._replace(n_states=n, transitions=trans)


def trim(t: Transducer) -> Transducer:
    succ = [[q for _, _, q in t.out[p]] for p in range(t.n_states)]
    pred = [[] for _ in range(t.n_states)]
    for p, _, _, q in t.transitions:
        pred[q].append(p)
    keep = _useful_states(t.n_states, t.initials, t.finals, succ, pred)
    if len(keep) == t.n_states:
        return t
    m = {old: new for new, old in enumerate(keep)}
    return t._replace(
        n_states=len(keep),
        transitions=[(m[p], x, y, m[q]) for p, x, y, q in t.transitions
                     if p in m and q in m],
        initials=[m[p] for p in t.initials if p in m],
        finals=[m[p] for p in t.finals if p in m])


def inverse(t: Transducer) -> Transducer:
    return Transducer(t.n_states, t.output_alphabet, t.input_alphabet,
                      [(p, y, x, q) for p, x, y, q in t.transitions],
                      t.initials, t.finals)


def project(t: Transducer, side: str = "input") -> Nfa:
    """Domain (``side="input"``) or range (``side="output"``) automaton."""
    t = to_standard_form(t)
    if side == "input":
        return Nfa(t.n_states, t.input_alphabet,
                   [(p, _sym(x), q) for p, x, _, q in t.transitions],
                   t.initials, t.finals)
    if side == "output":
        return Nfa(t.n_states, t.output_alphabet,
                   [(p, _sym(y), q) for p, _, y, q in t.transitions],
                   t.initials, t.finals)
    raise UsageError(f"side must be 'input' or 'output', not {side!r}")


def _side_product(t: Transducer, a: Nfa, side: str):
    """Pair transitions of ``t`` with those of ``a`` on one side of the labels.

    Returns ``(index, edges, seeds)`` over pairs ``(t_state, a_state)``;
    each edge label is the original ``(x, y)`` of the transducer.
    """
    t = to_standard_form(t)
    if side == "input":
        t_eps = t.has_epsilon_input
    else:
        t_eps = t.has_epsilon_output
    if t_eps:
        a = a.with_epsilon_loops()
    if a.has_epsilon:
        t = t.with_epsilon_loops()
    pick = 0 if side == "input" else 1

    by_label = [{} for _ in range(a.n_states)]
    for p, lab, p2 in a.transitions:
        by_label[p].setdefault(lab, []).append(p2)

    def succ(pair):
        q, p = pair
        for x, y, q2 in t.out[q]:
            lab = _sym((x, y)[pick])
            for p2 in by_label[p].get(lab, ()):
                if q2 == q and p2 == p and not x and not y:
                    continue
                yield (x, y), (q2, p2)

    seeds = [(q, p) for q in t.initials for p in a.initials]
    index, edges = explore_pairs(seeds, succ)
    finals = [i for (q, p), i in index.items() if q in t.finals and p in a.finals]
    return t, index, edges, seeds, finals


def in_intersection(t: Transducer, a: Nfa) -> Transducer:
    """Restrict the relation of ``t`` to pairs whose input is in ``L(a)``."""
    t, index, edges, seeds, finals = _side_product(t, a, "input")
    return trim(Transducer(len(index), t.input_alphabet, t.output_alphabet,
                           [(index[s], x, y, index[d]) for s, (x, y), d in edges],
                           [index[s] for s in seeds], finals))


def out_intersection(t: Transducer, a: Nfa) -> Transducer:
    """Restrict the relation of ``t`` to pairs whose output is in ``L(a)``."""
    t, index, edges, seeds, finals = _side_product(t, a, "output")
    return trim(Transducer(len(index), t.input_alphabet, t.output_alphabet,
                           [(index[s], x, y, index[d]) for s, (x, y), d in edges],
                           [index[s] for s in seeds], finals))


def run_on_nfa(t: Transducer, a: Nfa) -> Nfa:
    """Automaton for the union of ``t(w)`` over all ``w`` in ``L(a)``."""
    from .automata import trim as trim_nfa
    t, index, edges, seeds, finals = _side_product(t, a, "input")
    return trim_nfa(Nfa(len(index), t.output_alphabet,
                        [(index[s], _sym(y), index[d]) for s, (x, y), d in edges],
                        [index[s] for s in seeds], finals))


def _word_nfa(w: tuple, alphabet) -> Nfa:
    n = len(w)
    return Nfa(n + 1, alphabet, [(i, w[i], i + 1) for i in range(n)], [0], [n])


def run_on_word(t: Transducer, w) -> Nfa:
    w = as_word(w)
    if not set(w) <= t.input_alphabet:
        return Nfa.empty(t.output_alphabet)
    return run_on_nfa(t, _word_nfa(w, t.input_alphabet))


def eval_pair(t: Transducer, u, v) -> bool:
    """Whether ``(u, v)`` belongs to the relation realized by ``t``."""
    u, v = as_word(u), as_word(v)
    if not (set(u) <= t.input_alphabet and set(v) <= t.output_alphabet):
        return False
    s = in_intersection(t, _word_nfa(u, t.input_alphabet))
    s = out_intersection(s, _word_nfa(v, t.output_alphabet))
    return bool(s.initials) and bool(s.finals)


def nonempty_witness(t: Transducer) -> Optional[tuple]:
    """Label ``(u, v)`` of an accepting path with fewest transitions, or ``None``."""
    t = to_standard_form(t)
    parent = {}
    queue = deque()
    for i in sorted(t.initials):
        parent[i] = None
        queue.append(i)
    found = None
    while queue:
        p = queue.popleft()
        if p in t.finals:
            found = p
            break
        for x, y, q in t.out[p]:
            if q not in parent:
                parent[q] = (p, x, y)
                queue.append(q)
    if found is None:
        return None
    xs, ys = [], []
    p = found
    while parent[p] is not None:
        p, x, y = parent[p]
        xs.append(x)
        ys.append(y)
    u = tuple(s for x in reversed(xs) for s in x)
    v = tuple(s for y in reversed(ys) for s in y)
    return u, v


def compose(t: Transducer, s: Transducer) -> Transducer:
    """Apply ``t`` first, then ``s``: ``{(x, z) : (x, y) in t, (y, z) in s}``."""
    if not t.output_alphabet <= s.input_alphabet:
        raise AlphabetError("output alphabet of the first transducer must be "
                            "contained in the input alphabet of the second")
    t = to_standard_form(t).with_epsilon_loops()
    s = to_standard_form(s).with_epsilon_loops()

    s_by_input = [{} for _ in range(s.n_states)]
    for q, y, z, q2 in s.transitions:
        s_by_input[q].setdefault(y, []).append((z, q2))

    def succ(pair):
        p, q = pair
        for x, y, p2 in t.out[p]:
            for z, q2 in s_by_input[q].get(y, ()):
                if p2 == p and q2 == q and not x and not z:
                    continue
                yield (x, z), (p2, q2)

    seeds = [(p, q) for p in t.initials for q in s.initials]
    index, edges = explore_pairs(seeds, succ)
    finals = [i for (p, q), i in index.items() if p in t.finals and q in s.finals]
    return trim(Transducer(len(index), t.input_alphabet, s.output_alphabet,
                           [(index[a], x, z, index[b]) for a, (x, z), b in edges],
                           [index[a] for a in seeds], finals))


def _disjoint(t: Transducer, s: Transducer):
    k = t.n_states
    shifted = [(p + k, x, y, q + k) for p, x, y, q in s.transitions]
    return k, list(t.transitions) + shifted


def rational_combine(kind: str, t: Transducer, s: Optional[Transducer] = None) -> Transducer:
    """``union``, ``concat``, ``star`` or ``plus`` of transducer relations."""
    binary = kind in ("union", "concat")
    if kind not in ("union", "concat", "star", "plus"):
        raise UsageError(f"unknown rational operation {kind!r}")
    if binary != (s is not None):
        raise UsageError(f"{kind} takes {'two' if binary else 'one'} transducer(s)")
    t = to_standard_form(t)
    if binary:
        s = to_standard_form(s)
        k, trans = _disjoint(t, s)
        sigma = t.input_alphabet | s.input_alphabet
        delta = t.output_alphabet | s.output_alphabet
        n = k + s.n_states
        s_init = [p + k for p in s.initials]
        s_fin = [p + k for p in s.finals]
        if kind == "union":
            return Transducer(n, sigma, delta, trans, list(t.initials) + s_init,
                              list(t.finals) + s_fin)
        trans += [(f, (), (), i) for f in t.finals for i in s_init]
        return Transducer(n, sigma, delta, trans, t.initials, s_fin)
    # star / plus: a fresh hub state that every factor starts from and returns to
    hub = t.n_states
    trans = list(t.transitions)
    trans += [(hub, (), (), i) for i in t.initials]
    trans += [(f, (), (), hub) for f in t.finals]
    finals = [hub] if kind == "star" else list(t.finals)
    return t._replace(n_states=hub + 1, transitions=trans, initials=[hub], finals=finals)
