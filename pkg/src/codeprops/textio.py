"""Reading and writing machines in the line-oriented text format.

::

    @NFA 1 * 0          @Transducer 1 * 0
    0 a 0               0 a @epsilon 0
    0 b 1               1 a a 1

The header names the final states, then ``*``, then the initial states.
Rows are ``p a q`` for automata and ``p x y q`` for transducers; the token
``@epsilon`` is the empty label. Every line, including the last, ends with
``\\n``. Blank lines and lines starting with ``#`` are ignored.
"""

from pathlib import Path

from .automata import EPS, Nfa
from .errors import ParseError
from .transducers import Transducer

EPSILON_TOKEN = "@epsilon"
HEADERS = {"@NFA": "nfa", "@Transducer": "transducer"}
MAX_CANONICAL_LEAVES = 2000


def parse_machine(text: str):
    """Parse one automaton or transducer; returns an ``Nfa`` or ``Transducer``."""
    lines = text.split("\n")
    if not text.endswith("\n"):
        raise ParseError("document must end with a line terminator", len(lines))
    lines = lines[:-1]

    header_no = None
    for no, line in enumerate(lines, 1):
        if line.strip() and not line.lstrip().startswith("#"):
            header_no = no
            break
    if header_no is None:
        raise ParseError("missing header", 1)
    tokens = lines[header_no - 1].split()
    if tokens[0] not in HEADERS:
        if tokens[0].startswith("@"):
            raise ParseError(f"unknown directive {tokens[0]!r}", header_no)
        raise ParseError("missing header (@NFA or @Transducer)", header_no)
    kind = HEADERS[tokens[0]]
    if tokens.count("*") != 1:
        raise ParseError("header needs exactly one '*' between final and "
                         "initial states", header_no)
    star = tokens.index("*")
    final_names, initial_names = tokens[1:star], tokens[star + 1:]

    index = {}

    def state(name, no):
        if name.startswith("@") or name == "*":
            raise ParseError(f"invalid state name {name!r}", no)
        if name not in index:
            index[name] = len(index)
        return index[name]

    finals = [state(n, header_no) for n in final_names]
    initials = [state(n, header_no) for n in initial_names]

    arity = 3 if kind == "nfa" else 4
    rows = []
    for no in range(header_no + 1, len(lines) + 1):
        line = lines[no - 1]
        toks = line.split()
        if not toks or toks[0].startswith("#"):
            continue
        if toks[0].startswith("@"):
            raise ParseError(f"unknown directive {toks[0]!r}", no)
        if len(toks) != arity:
            raise ParseError(f"expected {arity} tokens per transition, got {len(toks)}", no)
        for lab in toks[1:-1]:
            if lab.startswith("@") and lab != EPSILON_TOKEN:
                raise ParseError(f"unknown directive {lab!r}", no)
        rows.append((state(toks[0], no), toks[1:-1], state(toks[-1], no)))

    def sym(tok):
        return EPS if tok == EPSILON_TOKEN else tok

    n = len(index)
    if kind == "nfa":
        trans = [(p, sym(lab[0]), q) for p, lab, q in rows]
        alphabet = {a for _, a, _ in trans if a != EPS}
        return Nfa(n, alphabet, trans, initials, finals)
    trans = [(p, sym(x), sym(y), q) for p, (x, y), q in rows]
    sigma = {x for _, x, _, _ in trans if x != EPS}
    delta = {y for _, _, y, _ in trans if y != EPS}
    return Transducer(n, sigma, delta, trans, initials, finals)


def _edges(m):
    if isinstance(m, Nfa):
        return [(p, lab, q) for p, lab, q in m.transitions]
    return [(p, (x, y), q) for p, x, y, q in m.transitions]


def _refine(n, edges, colors):
    while True:
        out = [[] for _ in range(n)]
        inc = [[] for _ in range(n)]
        for p, lab, q in edges:
            out[p].append((lab, colors[q]))
            inc[q].append((lab, colors[p]))
        sigs = [(colors[s], sorted(out[s]), sorted(inc[s])) for s in range(n)]
        ranks = {sig: r for r, sig in enumerate(sorted(set(map(_hashable, sigs))))}
        new = [ranks[_hashable(sig)] for sig in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _hashable(sig):
    c, o, i = sig
    return c, tuple(o), tuple(i)


def canonical_order(m) -> list:
    """A structural state order: isomorphic machines get matching orders."""
    n = m.n_states
    edges = _edges(m)
    colors = [(s in m.initials, s in m.finals) for s in range(n)]
    ranks = {c: r for r, c in enumerate(sorted(set(colors), reverse=True))}
    colors = _refine(n, edges, [ranks[c] for c in colors])

    best = [None, None]
    leaves = [0]

    def key_for(colors):
        order = sorted(range(n), key=lambda s: colors[s])
        pos = {s: i for i, s in enumerate(order)}
        rows = sorted((pos[p], lab, pos[q]) for p, lab, q in edges)
        return (tuple(rows), tuple(sorted(pos[s] for s in m.finals)),
                tuple(sorted(pos[s] for s in m.initials))), order

    def search(colors):
        if leaves[0] >= MAX_CANONICAL_LEAVES:
            return
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        ties = sorted(c for c, k in counts.items() if k > 1)
        if not ties:
            leaves[0] += 1
            key, order = key_for(colors)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        cell = ties[0]
        for s in range(n):
            if colors[s] != cell:
                continue
            # individualize s: it sorts just before the rest of its cell
            split = [2 * c + (0 if (i == s or c != cell) else 1)
                     for i, c in enumerate(colors)]
            search(_refine(n, edges, split))

    search(colors)
    return best[1] if best[1] is not None else list(range(n))


def serialize_machine(m) -> str:
    """Canonical text: equal or isomorphic machines give identical output."""
    # states on no transition and neither initial nor final cannot be
    # written, so they are left out of the numbering
    used = set(m.initials) | set(m.finals)
    for p, _, q in _edges(m):
        used |= {p, q}
    order = [s for s in canonical_order(m) if s in used]
    pos = {s: i for i, s in enumerate(order)}

    def tok(sym):
        return EPSILON_TOKEN if sym == EPS else sym

    if isinstance(m, Nfa):
        head = "@NFA"
        rows = sorted((pos[p], tok(a), pos[q]) for p, a, q in m.transitions)
        body = [f"{p} {a} {q}" for p, a, q in rows]
    else:
        head = "@Transducer"
        if not m.standard_form:
            raise ValueError("only standard-form transducers can be written")
        rows = sorted((pos[p], tok(x[0] if x else EPS), tok(y[0] if y else EPS), pos[q])
                      for p, x, y, q in m.transitions)
        body = [f"{p} {x} {y} {q}" for p, x, y, q in rows]
    fin = [str(pos[s]) for s in sorted(m.finals, key=pos.get)]
    ini = [str(pos[s]) for s in sorted(m.initials, key=pos.get)]
    header = " ".join([head] + fin + ["*"] + ini)
    return "\n".join([header] + body) + "\n"


def read_machine(path):
    return parse_machine(Path(path).read_text())


def write_machine(path, m):
    Path(path).write_text(serialize_machine(m))
