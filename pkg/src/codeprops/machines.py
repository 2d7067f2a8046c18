"""Small catalogue of ready-made machines used in the demos and tests."""

from .automata import EPS, Nfa
from .transducers import Transducer


def a_star_b() -> Nfa:
    return Nfa(2, {"a", "b"}, [(0, "a", 0), (0, "b", 1)], [0], [1])


def suffix_transducer(alphabet=("a", "b")) -> Transducer:
    """On input x, outputs every proper suffix of x."""
    sigma = sorted(alphabet)
    trans = []
    for s in sigma:
        trans += [(0, s, EPS, 0), (0, s, EPS, 1), (1, s, s, 1)]
    return Transducer(2, sigma, sigma, trans, [0], [1])


def one_substitution(alphabet=("a", "b")) -> Transducer:
    """Channel that copies its input and substitutes at most one symbol."""
    sigma = sorted(alphabet)
    trans = []
    for s in sigma:
        trans += [(0, s, s, 0), (1, s, s, 1)]
        trans += [(0, s, r, 1) for r in sigma if r != s]
    return Transducer(2, sigma, sigma, trans, [0], [0, 1])


def one_insertion_deletion(alphabet=("a", "b")) -> Transducer:
    """Channel that copies its input and inserts or deletes at most one symbol."""
    sigma = sorted(alphabet)
    trans = []
    for s in sigma:
        trans += [(0, s, s, 0), (1, s, s, 1), (0, s, EPS, 1), (0, EPS, s, 1)]
    return Transducer(2, sigma, sigma, trans, [0], [0, 1])


def quadratic_witness_family(p: int) -> Transducer:
    """Non-functional transducer over {0} whose shortest witness input has
    length lcm(p, p+1).

    One branch copies ``0^(mp)``; the other reads ``0^(n(p+1))`` and writes a
    ``1`` first, so the two outputs only meet on common multiples.
    """
    if p < 1:
        raise ValueError("p must be positive")
    top = list(range(1, p + 1))
    bottom = list(range(p + 1, 2 * p + 2))
    trans = [(0, "0", "0", top[0]), (0, "0", "1", bottom[0])]
    for chain in (top, bottom):
        trans += [(u, "0", "0", v) for u, v in zip(chain, chain[1:])]
        trans.append((chain[-1], "0", "0", chain[0]))
    return Transducer(2 * p + 2, {"0"}, {"0", "1"}, trans, [0], [top[-1], bottom[-1]])
