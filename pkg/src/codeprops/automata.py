"""Nondeterministic finite automata over explicit alphabets.

States are the dense integers ``0..n-1``. A transition label is a symbol
(any non-empty string) or :data:`EPS`, the empty label. Words are tuples
of symbols; every public function also accepts a plain ``str``, which is
read one character per symbol.

Automata are immutable and every operation returns a new machine.
"""

from collections import deque
from typing import Iterable, Optional, Sequence, Union

from .errors import AlphabetError, UsageError

EPS = ""

Word = tuple
WordLike = Union[str, Sequence[str]]


def as_word(w: WordLike) -> tuple:
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def show_word(w) -> str:
    """Human-readable rendering; the empty word is ``@epsilon``."""
    w = as_word(w)
    if not w:
        return "@epsilon"
    if all(len(s) == 1 for s in w):
        return "".join(w)
    return " ".join(w)


class Nfa:
    """An automaton ``(Q, Sigma, T, I, F)`` with ``Q = {0, ..., n_states-1}``."""

    __slots__ = ("n_states", "alphabet", "transitions", "initials", "finals",
                 "_out", "_in")

    def __init__(self, n_states: int, alphabet: Iterable[str],
                 transitions: Iterable[tuple], initials: Iterable[int],
                 finals: Iterable[int]):
        alphabet = frozenset(alphabet)
        if EPS in alphabet:
            raise AlphabetError("the empty label cannot be an alphabet symbol")
        trans = set()
        for p, a, q in transitions:
            if not (0 <= p < n_states and 0 <= q < n_states):
                raise UsageError(f"transition {(p, a, q)} uses an undeclared state")
            if a != EPS and a not in alphabet:
                raise AlphabetError(f"label {a!r} is not in the alphabet")
            trans.add((p, a, q))
        initials = frozenset(initials)
        finals = frozenset(finals)
        if not all(0 <= s < n_states for s in initials | finals):
            raise UsageError("initial and final states must be declared states")
        object.__setattr__(self, "n_states", n_states)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", tuple(sorted(trans)))
        object.__setattr__(self, "initials", initials)
        object.__setattr__(self, "finals", finals)
        object.__setattr__(self, "_out", None)
        object.__setattr__(self, "_in", None)

    def __setattr__(self, name, value):
        raise AttributeError("Nfa objects are immutable")

    def __eq__(self, other):
        if not isinstance(other, Nfa):
            return NotImplemented
        return (self.n_states, self.alphabet, self.transitions, self.initials,
                self.finals) == (other.n_states, other.alphabet,
                                 other.transitions, other.initials, other.finals)

    def __hash__(self):
        return hash((self.n_states, self.alphabet, self.transitions,
                     self.initials, self.finals))

    def __repr__(self):
        return (f"Nfa(n_states={self.n_states}, alphabet={sorted(self.alphabet)}, "
                f"transitions={len(self.transitions)}, "
                f"initials={sorted(self.initials)}, finals={sorted(self.finals)})")

    @property
    def out(self):
        """Outgoing adjacency: ``out[p]`` lists ``(label, q)`` in canonical order."""
        if self._out is None:
            out = [[] for _ in range(self.n_states)]
            for p, a, q in self.transitions:
                out[p].append((a, q))
            object.__setattr__(self, "_out", out)
        return self._out

    @property
    def inc(self):
        if self._in is None:
            inc = [[] for _ in range(self.n_states)]
            for p, a, q in self.transitions:
                inc[q].append((a, p))
            object.__setattr__(self, "_in", inc)
        return self._in

    @property
    def has_epsilon(self) -> bool:
        return any(a == EPS for _, a, _ in self.transitions)

    @property
    def size(self) -> int:
        return self.n_states + len(self.transitions)

    def with_epsilon_loops(self) -> "Nfa":
        loops = [(p, EPS, p) for p in range(self.n_states)]
        return Nfa(self.n_states, self.alphabet, self.transitions + tuple(loops),
                   self.initials, self.finals)

    # constructors

    @classmethod
    def empty(cls, alphabet=()) -> "Nfa":
        return cls(0, alphabet, (), (), ())

    @classmethod
    def universal(cls, alphabet) -> "Nfa":
        alphabet = frozenset(alphabet)
        return cls(1, alphabet, [(0, a, 0) for a in alphabet], [0], [0])

    @classmethod
    def from_words(cls, words: Iterable[WordLike], alphabet=None) -> "Nfa":
        """Trie automaton for a finite language; ε-free, trim and deterministic."""
        words = sorted({as_word(w) for w in words})
        letters = {s for w in words for s in w}
        alphabet = letters if alphabet is None else set(alphabet)
        if not letters <= alphabet:
            raise AlphabetError(f"symbols {sorted(letters - alphabet)} not in alphabet")
        if not words:
            return cls.empty(alphabet)
        node = {(): 0}
        trans, finals = [], set()
        for w in words:
            for i in range(1, len(w) + 1):
                if w[:i] not in node:
                    node[w[:i]] = len(node)
                    trans.append((node[w[:i - 1]], w[i - 1], node[w[:i]]))
            finals.add(node[w])
        return cls(len(node), alphabet, trans, [0], finals)


def _closure(a: Nfa, states) -> frozenset:
    seen = set(states)
    stack = list(seen)
    while stack:
        p = stack.pop()
        for lab, q in a.out[p]:
            if lab == EPS and q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)


def _step(a: Nfa, states, symbol) -> frozenset:
    nxt = {q for p in states for lab, q in a.out[p] if lab == symbol}
    return _closure(a, nxt)


def accepts(a: Nfa, w: WordLike) -> bool:
    current = _closure(a, a.initials)
    for s in as_word(w):
        if s not in a.alphabet:
            return False
        current = _step(a, current, s)
        if not current:
            return False
    return bool(current & a.finals)


def _distance_to_final(a: Nfa) -> list:
    """Minimum number of symbols needed to reach a final state (0-1 BFS)."""
    inf = float("inf")
    dist = [inf] * a.n_states
    dq = deque()
    for f in sorted(a.finals):
        dist[f] = 0
        dq.append(f)
    while dq:
        q = dq.popleft()
        for lab, p in a.inc[q]:
            cost = 0 if lab == EPS else 1
            if dist[q] + cost < dist[p]:
                dist[p] = dist[q] + cost
                if cost:
                    dq.append(p)
                else:
                    dq.appendleft(p)
    return dist


def shortest_accepted_word(a: Nfa) -> Optional[tuple]:
    """Shortest accepted word, smallest in symbol order among the shortest.

    Returns ``None`` when the language is empty.
    """
    dist = _distance_to_final(a)
    start = _closure(a, a.initials)
    d = min((dist[p] for p in start), default=float("inf"))
    if d == float("inf"):
        return None
    current = {p for p in start if dist[p] == d}
    word = []
    while d > 0:
        for s in sorted(a.alphabet):
            nxt = {q for p in current for lab, q in a.out[p]
                   if lab == s and dist[q] == d - 1}
            if nxt:
                break
        word.append(s)
        d -= 1
        current = {q for q in _closure(a, nxt) if dist[q] == d}
    return tuple(word)


def is_empty(a: Nfa) -> bool:
    return shortest_accepted_word(a) is None


def eliminate_epsilon(a: Nfa) -> Nfa:
    if not a.has_epsilon:
        return a
    trans = []
    finals = set()
    for p in range(a.n_states):
        cl = _closure(a, [p])
        if cl & a.finals:
            finals.add(p)
        for r in cl:
            for lab, q in a.out[r]:
                if lab != EPS:
                    trans.append((p, lab, q))
    return Nfa(a.n_states, a.alphabet, trans, a.initials, finals)


def _useful_states(n, initials, finals, out_pairs, in_pairs) -> list:
    def reach(seeds, adj):
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            p = stack.pop()
            for q in adj[p]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return seen
    return sorted(reach(initials, out_pairs) & reach(finals, in_pairs))


def _renumber(keep):
    return {old: new for new, old in enumerate(keep)}


def trim(a: Nfa) -> Nfa:
    succ = [[q for _, q in a.out[p]] for p in range(a.n_states)]
    pred = [[p for _, p in a.inc[q]] for q in range(a.n_states)]
    keep = _useful_states(a.n_states, a.initials, a.finals, succ, pred)
    if len(keep) == a.n_states:
        return a
    m = _renumber(keep)
    trans = [(m[p], lab, m[q]) for p, lab, q in a.transitions
             if p in m and q in m]
    return Nfa(len(keep), a.alphabet, trans,
               [m[p] for p in a.initials if p in m],
               [m[p] for p in a.finals if p in m])


def explore_pairs(seeds, successors):
    """Explore a product graph from ``seeds``.

    ``successors(pair)`` yields ``(label, pair)``. Reachable pairs are
    numbered in sorted (row-major) order. Returns ``(index, edges)`` where
    ``edges`` holds ``(src_pair, label, dst_pair)``.
    """
    seen = set(seeds)
    queue = deque(sorted(seen))
    edges = []
    while queue:
        pair = queue.popleft()
        for lab, nxt in successors(pair):
            edges.append((pair, lab, nxt))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    index = {pair: i for i, pair in enumerate(sorted(seen))}
    return index, edges


def intersect(a: Nfa, b: Nfa) -> Nfa:
    if a.has_epsilon or b.has_epsilon:
        raise UsageError("intersect needs ε-free automata; apply eliminate_epsilon first")

    def succ(pair):
        p, q = pair
        for la, p2 in a.out[p]:
            for lb, q2 in b.out[q]:
                if la == lb:
                    yield la, (p2, q2)

    seeds = [(p, q) for p in a.initials for q in b.initials]
    index, edges = explore_pairs(seeds, succ)
    finals = [i for (p, q), i in index.items() if p in a.finals and q in b.finals]
    return Nfa(len(index), a.alphabet & b.alphabet,
               [(index[s], lab, index[d]) for s, lab, d in edges],
               [index[s] for s in seeds], finals)


def union(a: Nfa, b: Nfa) -> Nfa:
    k = a.n_states
    trans = list(a.transitions) + [(p + k, lab, q + k) for p, lab, q in b.transitions]
    return Nfa(k + b.n_states, a.alphabet | b.alphabet, trans,
               list(a.initials) + [p + k for p in b.initials],
               list(a.finals) + [p + k for p in b.finals])


def star(a: Nfa) -> Nfa:
    s = a.n_states
    trans = list(a.transitions)
    trans += [(s, EPS, i) for i in a.initials]
    trans += [(f, EPS, s) for f in a.finals]
    return Nfa(s + 1, a.alphabet, trans, [s], [s])


def determinize(a: Nfa, alphabet=None) -> Nfa:
    """Subset construction over ``alphabet``, completed with a sink."""
    alphabet = sorted(a.alphabet if alphabet is None else alphabet)
    a = eliminate_epsilon(a)
    start = frozenset(a.initials)
    index = {start: 0}
    order = [start]
    trans = []
    i = 0
    while i < len(order):
        subset = order[i]
        for s in alphabet:
            nxt = frozenset(q for p in subset for lab, q in a.out[p] if lab == s)
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            trans.append((i, s, index[nxt]))
        i += 1
    finals = [index[S] for S in order if S & a.finals]
    return Nfa(len(order), alphabet, trans, [0], finals)


def complement(a: Nfa, alphabet) -> Nfa:
    alphabet = frozenset(alphabet)
    if not a.alphabet <= alphabet:
        raise AlphabetError("complement alphabet must contain the automaton's alphabet")
    d = determinize(a, alphabet)
    return Nfa(d.n_states, alphabet, d.transitions, d.initials,
               set(range(d.n_states)) - d.finals)


def enumerate_words(a: Nfa, n: int) -> set:
    """All accepted words of length at most ``n``."""
    dist = _distance_to_final(a)
    result = set()
    stack = [((), _closure(a, a.initials))]
    symbols = sorted(a.alphabet)
    while stack:
        w, current = stack.pop()
        if current & a.finals:
            result.add(w)
        left = n - len(w)
        if left == 0:
            continue
        for s in symbols:
            nxt = _step(a, current, s)
            if nxt and min(dist[q] for q in nxt) <= left - 1:
                stack.append((w + (s,), nxt))
    return result
