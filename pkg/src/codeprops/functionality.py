"""Functionality test for standard-form transducers, with witnesses.

The transducer is paired with itself on equal inputs (the *square
machine*). A breadth-first pass then attaches to every square state a delay
``(y, y')`` (at least one side empty) describing how far one output runs
ahead of the other, together with the input/outputs of the path that
produced it. The pass stops at the first sign of two different outputs for
one input and turns that into a triple ``(w, z, z')`` with ``z != z'`` and
``z, z'`` both in ``t(w)``.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .automata import _useful_states, explore_pairs
from .transducers import Transducer, to_standard_form

ZERO = "ZERO"
NO_DELAY = ((), ())


@dataclass(frozen=True)
class SquareMachine:
    pairs: tuple            # index -> (p, p')
    transitions: tuple      # (src, (v, x, x'), dst), canonical order
    initials: frozenset
    finals: frozenset
    out: list = field(repr=False, compare=False)

    @property
    def n_states(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return self.n_states + sum(1 + len(v) + len(x) + len(x2)
                                   for _, (v, x, x2), _ in self.transitions)


def build_square_machine(t: Transducer) -> SquareMachine:
    t = to_standard_form(t)
    if t.has_epsilon_input:
        t = t.with_epsilon_loops()

    by_input = [{} for _ in range(t.n_states)]
    for p, v, x, q in t.transitions:
        by_input[p].setdefault(v, []).append((x, q))

    def succ(pair):
        p, p2 = pair
        left, right = by_input[p], by_input[p2]
        for v in sorted(left.keys() & right.keys()):
            for x, q in left[v]:
                for x2, q2 in right[v]:
                    if not (v or x or x2) and (q, q2) == pair:
                        continue
                    yield (v, x, x2), (q, q2)

    seeds = [(i, j) for i in t.initials for j in t.initials]
    index, edges = explore_pairs(seeds, succ)
    finals = {pair for pair in index if pair[0] in t.finals and pair[1] in t.finals}

    order = sorted(index)
    succ_idx = [[] for _ in order]
    pred_idx = [[] for _ in order]
    for a, _, b in edges:
        succ_idx[index[a]].append(index[b])
        pred_idx[index[b]].append(index[a])
    keep = _useful_states(len(order), [index[s] for s in seeds],
                          [index[f] for f in finals], succ_idx, pred_idx)
    kept_pairs = [order[i] for i in keep]
    new = {pair: i for i, pair in enumerate(kept_pairs)}
    trans = sorted({(new[a], lab, new[b]) for a, lab, b in edges
                    if a in new and b in new})
    out = [[] for _ in kept_pairs]
    for a, lab, b in trans:
        out[a].append((lab, b))
    return SquareMachine(
        pairs=tuple(kept_pairs),
        transitions=tuple(trans),
        initials=frozenset(new[s] for s in seeds if s in new),
        finals=frozenset(new[f] for f in finals if f in new),
        out=out)


def next_delay(delay, x: tuple, x2: tuple):
    """Delay after appending outputs ``x`` and ``x2`` to a state with ``delay``."""
    if delay == ZERO:
        return ZERO
    y, y2 = delay
    a, b = y + x, y2 + x2
    k = min(len(a), len(b))
    if a[:k] != b[:k]:
        return ZERO
    return a[k:], b[k:]


def _completion_paths(sq: SquareMachine):
    """Map a state to the label of a shortest path from it to a final state."""
    n = sq.n_states
    inc = [[] for _ in range(n)]
    for a, lab, b in sq.transitions:
        inc[b].append((a, lab))
    nxt = [None] * n
    seen = [False] * n
    queue = deque()
    for f in sorted(sq.finals):
        seen[f] = True
        queue.append(f)
    while queue:
        b = queue.popleft()
        for a, lab in inc[b]:
            if not seen[a]:
                seen[a] = True
                nxt[a] = (lab, b)
                queue.append(a)
    suffix = [None] * n

    def complete(s):
        if suffix[s] is None:
            parts = []
            cur = s
            while nxt[cur] is not None:
                lab, cur = nxt[cur]
                parts.append(lab)
            suffix[s] = tuple(sum((p[i] for p in parts), ()) for i in range(3))
        return suffix[s]

    return complete


@dataclass
class DelayRun:
    """Outcome of the delay propagation, kept for inspection."""
    square: SquareMachine
    witness: Optional[tuple]
    delays: dict            # state -> (y, y')
    paths: dict             # state -> (alpha, beta, beta')
    branch: Optional[str]   # "zero", "final" or "conflict"


def propagate_delays(t: Transducer) -> DelayRun:
    sq = build_square_machine(t)
    complete = _completion_paths(sq)
    delays, paths = {}, {}
    queue = deque()
    for i in sorted(sq.initials):
        delays[i] = NO_DELAY
        paths[i] = ((), (), ())
        queue.append(i)

    def done(witness, branch):
        return DelayRun(sq, witness, delays, paths, branch)

    while queue:
        s = queue.popleft()
        w, z, z2 = paths[s]
        for (v, x, x2), d in sq.out[s]:
            delay = next_delay(delays[s], x, x2)
            wv, zx, zx2 = w + v, z + x, z2 + x2
            if delay == ZERO:
                ws, zs, zs2 = complete(d)
                return done((wv + ws, zx + zs, zx2 + zs2), "zero")
            if d in sq.finals and delay != NO_DELAY:
                return done((wv, zx, zx2), "final")
            if d in delays:
                if delays[d] != delay:
                    ws, zs, zs2 = complete(d)
                    if zx + zs != zx2 + zs2:
                        return done((wv + ws, zx + zs, zx2 + zs2), "conflict")
                    w1, z1, z12 = paths[d]
                    return done((w1 + ws, z1 + zs, z12 + zs2), "conflict")
                continue
            delays[d] = delay
            paths[d] = (wv, zx, zx2)
            queue.append(d)
    return done(None, None)


def non_functional_witness(t: Transducer) -> Optional[tuple]:
    """``(w, z, z')`` with ``z != z'`` both outputs of ``t`` on ``w``, or ``None``."""
    return propagate_delays(t).witness


def is_functional(t: Transducer) -> bool:
    return non_functional_witness(t) is None


def triple_size(triple) -> int:
    return sum(len(w) for w in triple) + len(triple) - 1
