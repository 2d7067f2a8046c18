import os
import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from codeprops.automata import Nfa  # noqa: E402
from codeprops.transducers import Transducer  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=600, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

AB = ("a", "b")

ACCEPTANCE_LINES = []


@st.composite
def nfas(draw, alphabet=AB, max_states=4, epsilon=True):
    n = draw(st.integers(1, max_states))
    labels = list(alphabet) + ([""] if epsilon else [])
    trans = draw(st.lists(st.tuples(st.integers(0, n - 1), st.sampled_from(labels),
                                    st.integers(0, n - 1)), max_size=3 * n))
    initials = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
    finals = draw(st.sets(st.integers(0, n - 1), max_size=n))
    return Nfa(n, set(alphabet), trans, initials, finals)


@st.composite
def transducers(draw, alphabet=AB, max_states=4, eps_in=True, eps_out=True):
    n = draw(st.integers(1, max_states))
    ins = list(alphabet) + ([""] if eps_in else [])
    outs = list(alphabet) + ([""] if eps_out else [])
    trans = draw(st.lists(st.tuples(st.integers(0, n - 1), st.sampled_from(ins),
                                    st.sampled_from(outs), st.integers(0, n - 1)),
                          max_size=3 * n))
    initials = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
    finals = draw(st.sets(st.integers(0, n - 1), max_size=n))
    return Transducer(n, set(alphabet), set(alphabet), trans, initials, finals)


def word_sets(alphabet=AB, max_len=3, min_size=1, max_size=4, empty_word=True):
    return st.sets(st.lists(st.sampled_from(alphabet), min_size=0 if empty_word else 1,
                            max_size=max_len).map(tuple),
                   min_size=min_size, max_size=max_size)


@pytest.fixture
def report():
    def add(line):
        ACCEPTANCE_LINES.append(line)
        print(line)
    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
