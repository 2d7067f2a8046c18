"""
Code properties: satisfaction and maximality
============================================

Properties come from fixed names, trajectory expressions, or transducers
(input-altering, error-detecting, error-correcting). Conjunction is ``&``.
"""

from codeprops.automata import Nfa, show_word
from codeprops.machines import a_star_b, one_substitution, suffix_transducer
from codeprops.properties import (ERROR_CORRECTING, ERROR_DETECTING, INPUT_ALTERING,
                                  build_fixed_property, build_trajectory_property,
                                  build_transducer_property, construct_language,
                                  maximal_witness, satisfies_witness)

AB = {"a", "b"}


def show(w):
    return None if w is None else tuple(show_word(x) for x in w)


a = a_star_b()
pcp = build_fixed_property("prefix", AB)
icp = build_trajectory_property("1*0*1*", AB)       # infix codes
scp = build_transducer_property(INPUT_ALTERING, suffix_transducer())
s1dp = build_transducer_property(ERROR_DETECTING, one_substitution())
s1cp = build_transducer_property(ERROR_CORRECTING, one_substitution())

print("a*b prefix code:", show(satisfies_witness(pcp, a)))
print("a*b infix code:", show(satisfies_witness(icp, a)))
print("a*b suffix code:", show(satisfies_witness(scp, a)))
print("a*b prefix and 1-substitution detecting:", show(satisfies_witness(pcp & s1dp, a)))

L = Nfa.from_words(["aab", "abb"], AB)
print("{aab, abb} detects one substitution:", show(satisfies_witness(s1dp, L)))
print("{aab, abb} corrects one substitution:", show(satisfies_witness(s1cp, L)))

# Maximality: can any word be added without breaking the property?
print("a*b prefix-maximal witness:", maximal_witness(pcp, a))
print("{ab} prefix-maximal witness:", show_word(maximal_witness(pcp, Nfa.from_words(["ab"], AB))))

# The fixed properties are ordered; conjunction keeps the stronger one
inf = build_fixed_property("infix", AB)
print("prefix & infix is infix:", (pcp & inf) is inf)

# Random construction of a 1-substitution correcting code of length 5
code = construct_language(s1cp, 6, 5, seed=4)
print("constructed code:", sorted(show_word(w) for w in code))
