"""
Uniquely decipherable codes
===========================

A language is a UD code when every concatenation of its words splits back
into words in only one way. Failing languages come with two different
factorizations of the same word.
"""

import itertools

from codeprops.automata import Nfa, show_word
from codeprops.udcode import ud_is_maximal, ud_satisfies_witness


def lang(words):
    return Nfa.from_words(words, {"a", "b"})


def show(w):
    if w is None:
        return "UD"
    return " = ".join("·".join(show_word(f) for f in side) for side in w)


print("{ab, abba, bab}:", show(ud_satisfies_witness(lang(["ab", "abba", "bab"]))))

# Not UD, though every pair is
words = ["a", "ab", "ba"]
print("{a, ab, ba}:", show(ud_satisfies_witness(lang(words))))
for pair in itertools.combinations(words, 2):
    print(f"  {{{', '.join(pair)}}}:", show(ud_satisfies_witness(lang(pair))))

# Maximal UD codes cannot be extended; {aa, ab, b} is a complete prefix code
print("{aa, ab, b} maximal:", ud_is_maximal(lang(["aa", "ab", "b"])))
print("{aa, b} maximal:", ud_is_maximal(lang(["aa", "b"])))
