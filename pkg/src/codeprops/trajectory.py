"""Regular expressions over ``{0, 1}`` describing trajectory properties.

Grammar (whitespace ignored)::

    expr   := term ('+' term)*
    term   := factor factor*
    factor := atom '*'*
    atom   := '0' | '1' | '(' expr ')'
"""

from .automata import EPS, Nfa
from .errors import ParseError


class _Builder:
    def __init__(self):
        self.n = 0
        self.trans = []

    def state(self):
        self.n += 1
        return self.n - 1

    def symbol(self, s):
        a, b = self.state(), self.state()
        self.trans.append((a, s, b))
        return a, b

    def concat(self, f, g):
        self.trans.append((f[1], EPS, g[0]))
        return f[0], g[1]

    def union(self, f, g):
        a, b = self.state(), self.state()
        self.trans += [(a, EPS, f[0]), (a, EPS, g[0]), (f[1], EPS, b), (g[1], EPS, b)]
        return a, b

    def star(self, f):
        a, b = self.state(), self.state()
        self.trans += [(a, EPS, f[0]), (f[1], EPS, b), (a, EPS, b), (f[1], EPS, f[0])]
        return a, b


def parse_trajectory(expr: str) -> Nfa:
    """Compile a trajectory expression into an automaton over ``{'0', '1'}``."""
    toks = [c for c in expr if not c.isspace()]
    pos = 0
    b = _Builder()

    def error(msg):
        raise ParseError(f"{msg} at column {pos + 1} in {expr!r}", 1)

    def peek():
        return toks[pos] if pos < len(toks) else None

    def parse_expr():
        nonlocal pos
        f = parse_term()
        while peek() == "+":
            pos += 1
            f = b.union(f, parse_term())
        return f

    def parse_term():
        f = parse_factor()
        while peek() in ("0", "1", "("):
            f = b.concat(f, parse_factor())
        return f

    def parse_factor():
        nonlocal pos
        f = parse_atom()
        while peek() == "*":
            pos += 1
            f = b.star(f)
        return f

    def parse_atom():
        nonlocal pos
        c = peek()
        if c in ("0", "1"):
            pos += 1
            return b.symbol(c)
        if c == "(":
            pos += 1
            f = parse_expr()
            if peek() != ")":
                error("expected ')'")
            pos += 1
            return f
        error("unexpected end of expression" if c is None else f"unexpected {c!r}")

    start, end = parse_expr()
    if pos != len(toks):
        error(f"unexpected {toks[pos]!r}")
    return Nfa(b.n, {"0", "1"}, b.trans, [start], [end])
