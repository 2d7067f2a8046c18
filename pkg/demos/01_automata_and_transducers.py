"""
Automata and transducers
========================

Machines are read from the same small text format used on disk. Here we
build the automaton for a*b and the proper-suffix transducer, then run one
through the other.
"""

from codeprops import automata as fa
from codeprops.automata import show_word
from codeprops.textio import parse_machine, serialize_machine
from codeprops.transducers import eval_pair, run_on_nfa, run_on_word

a = parse_machine("@NFA 1 * 0\n0 a 0\n0 b 1\n")
print("accepts aab:", fa.accepts(a, "aab"))
print("words up to length 3:", sorted(show_word(w) for w in fa.enumerate_words(a, 3)))

# On input x the transducer outputs every proper suffix of x
suffix = parse_machine(
    "@Transducer 1 * 0\n"
    "0 a @epsilon 0\n"
    "0 b @epsilon 0\n"
    "0 a @epsilon 1\n"
    "0 b @epsilon 1\n"
    "1 a a 1\n"
    "1 b b 1\n")

outs = fa.enumerate_words(run_on_word(suffix, "ababb"), 5)
print("suffixes of ababb:", sorted(show_word(w) for w in outs))
print("(ab, b) related:", eval_pair(suffix, "ab", "b"))

# Image of a whole language
image = run_on_nfa(suffix, a)
print("proper suffixes of a*b, up to length 3:",
      sorted(show_word(w) for w in fa.enumerate_words(image, 3)))

# Canonical text, independent of how states were named
print(serialize_machine(suffix), end="")
