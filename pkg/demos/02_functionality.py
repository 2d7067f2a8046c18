"""
Is a transducer functional?
===========================

A transducer is functional when every input has at most one output. When
it is not, the test returns a witness (w, z, z') with two different outputs
z and z' for the same input w.
"""

from codeprops.automata import show_word
from codeprops.functionality import build_square_machine, is_functional, non_functional_witness
from codeprops.machines import one_substitution, quadratic_witness_family, suffix_transducer
from codeprops.transducers import identity


def show(triple):
    return None if triple is None else tuple(show_word(w) for w in triple)


print("identity functional:", is_functional(identity("ab")))
print("suffix transducer witness:", show(non_functional_witness(suffix_transducer())))
print("1-substitution witness:", show(non_functional_witness(one_substitution())))

sq = build_square_machine(suffix_transducer())
print("square machine of the suffix transducer:", sq.n_states, "states,",
      len(sq.transitions), "transitions")

# Two cycles of lengths p and p+1 only produce different outputs on inputs
# whose length both divide, so witnesses grow quadratically with p.
for p in range(1, 6):
    t = quadratic_witness_family(p)
    w, z, z2 = non_functional_witness(t)
    print(f"p={p}: size {t.size:3d}, witness input length {len(w)}")
