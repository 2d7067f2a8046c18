"""Code properties of regular languages: satisfaction and maximality with
witnesses, transducer functionality and unique decipherability."""

from .automata import EPS, Nfa, accepts, complement, eliminate_epsilon, enumerate_words
from .automata import intersect, is_empty, shortest_accepted_word, show_word, star, trim, union
from .errors import (AlphabetError, CodePropsError, NotSatisfiedError, NotUDCodeError,
                     ParseError, UsageError)
from .functionality import build_square_machine, is_functional, non_functional_witness
from .properties import (CodeProperty, build_fixed_property, build_trajectory_property,
                         build_transducer_property, conjunction, construct_language,
                         ec_to_ed, iat_to_ed, is_maximal, leq, maximal_witness,
                         satisfies_witness)
from .textio import parse_machine, read_machine, serialize_machine, write_machine
from .transducers import (Transducer, compose, eval_pair, in_intersection, inverse,
                          nonempty_witness, out_intersection, project, rational_combine,
                          run_on_nfa, run_on_word, to_standard_form)
from .udcode import ud_is_maximal, ud_satisfies_witness

__version__ = "0.1.0"
