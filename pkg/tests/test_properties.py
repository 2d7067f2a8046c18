import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from codeprops import automata as fa
from codeprops.automata import Nfa
from codeprops.errors import AlphabetError, NotSatisfiedError, UsageError
from codeprops.machines import a_star_b, one_insertion_deletion, one_substitution, suffix_transducer
from codeprops.properties import (ERROR_CORRECTING, ERROR_DETECTING, FIXED_NAMES,
                                  INPUT_ALTERING, build_fixed_property,
                                  build_trajectory_property, build_transducer_property,
                                  check_input_altering, check_input_preserving,
                                  check_witness, conjunction, construct_language,
                                  ec_to_ed, fixed_transducer, iat_to_ed, is_maximal, leq,
                                  maximal_witness, satisfies_witness)
from codeprops.transducers import eval_pair
from conftest import word_sets
from oracles import (FIXED_RELATIONS, fixed_violation, outputs, relation,
                     trajectory_related, words_upto)

AB = {"a", "b"}


def lang(words):
    return Nfa.from_words(words, AB)


def ia_violation(t, words):
    return any(v in outputs(t, u, len(v)) for u in words for v in words)


def ed_violation(t, words):
    return any(u != v and v in outputs(t, u, len(v)) for u in words for v in words)


def ec_violation(t, words, cap=6):
    return any(u != v and outputs(t, u, cap) & outputs(t, v, cap)
               for u in words for v in words)


@pytest.mark.parametrize("name", FIXED_NAMES)
def test_fixed_transducers_realize_their_relation(name):
    t = fixed_transducer(name, AB)
    rel = FIXED_RELATIONS[name]
    for u in words_upto("ab", 4):
        want = {v for v in words_upto("ab", len(u)) if rel(v, u)}
        assert outputs(t, u, len(u)) == want


@pytest.mark.parametrize("name", FIXED_NAMES)
def test_fixed_transducers_are_input_altering(name):
    assert check_input_altering(fixed_transducer(name, AB), 5)


def test_channels_are_input_preserving():
    assert check_input_preserving(one_substitution())
    assert check_input_preserving(one_insertion_deletion())
    assert not check_input_preserving(suffix_transducer())


def test_trajectory_infix_matches_fixed_infix():
    traj = build_trajectory_property("1*0*1*", AB)
    t = fixed_transducer("infix", AB)
    assert relation(traj.transducer, 4, 4) == relation(t, 4, 4)


@pytest.mark.parametrize("expr", ["1*0*1*", "0*1*", "1*0*", "0*1*0*", "(0+1)*", "1(0+1)*", "(01)*"])
def test_trajectory_relation(expr):
    t = build_trajectory_property(expr, AB).transducer
    for u in words_upto("ab", 4):
        want = {v for v in words_upto("ab", len(u)) if trajectory_related(expr, u, v)}
        assert outputs(t, u, len(u)) == want


def test_a_star_b_prefix_and_substitution():
    p = build_fixed_property("prefix", AB) & build_transducer_property(ERROR_DETECTING, one_substitution())
    assert p.kind == ERROR_DETECTING
    assert satisfies_witness(p, a_star_b()) is None
    assert p.satisfies(a_star_b())


def test_witness_shapes():
    s1dp = build_transducer_property(ERROR_DETECTING, one_substitution())
    s1cp = build_transducer_property(ERROR_CORRECTING, one_substitution())
    a = lang(["aab", "abb"])
    u, v = satisfies_witness(s1dp, a)
    assert {u, v} == {("a", "a", "b"), ("a", "b", "b")}
    z, u, v = satisfies_witness(s1cp, a)
    assert {u, v} == {("a", "a", "b"), ("a", "b", "b")}
    assert check_witness(s1cp, a, (z, u, v))
    scp = build_transducer_property(INPUT_ALTERING, suffix_transducer())
    assert satisfies_witness(scp, a_star_b()) == (("a", "b"), ("b",))


def test_suffix_property_via_transducer_equals_fixed():
    scp = build_transducer_property(INPUT_ALTERING, suffix_transducer())
    fixed = build_fixed_property("suffix", AB)
    assert relation(scp.transducer, 4, 4) == relation(fixed.transducer, 4, 4)


def test_alphabet_errors():
    p = build_fixed_property("prefix", {"a"})
    with pytest.raises(AlphabetError):
        satisfies_witness(p, a_star_b())
    with pytest.raises(AlphabetError):
        conjunction(p, build_fixed_property("suffix", AB))
    with pytest.raises(AlphabetError):
        build_fixed_property("prefix", set())
    with pytest.raises(UsageError):
        build_fixed_property("bifix", AB)
    with pytest.raises(AlphabetError):
        build_transducer_property(INPUT_ALTERING, suffix_transducer(), {"a"})


def test_transducer_property_widening():
    p = build_transducer_property(INPUT_ALTERING, suffix_transducer(["a"]), AB)
    assert p.alphabet == AB
    assert satisfies_witness(p, lang(["ab", "b"])) is None
    assert satisfies_witness(p, lang(["aa", "a"])) is not None


def test_hierarchy_identity():
    pre = build_fixed_property("prefix", AB)
    inf = build_fixed_property("infix", AB)
    assert (pre & inf) is inf
    assert (inf & pre) is inf
    assert inf <= pre and not pre <= inf


def test_conjunction_of_transducer_properties_is_named_by_both():
    a = build_transducer_property(INPUT_ALTERING, suffix_transducer())
    b = build_transducer_property(ERROR_DETECTING, one_substitution())
    c = a & b
    assert c.id_names == a.id_names | b.id_names
    assert (a & a) is a
    assert leq(c, a) and leq(c, b) and not leq(a, b)


def test_iat_to_ed_and_ec_to_ed_relations():
    t = suffix_transducer()
    ed = iat_to_ed(t)
    assert relation(ed, 3, 3) == relation(t, 3, 3) | {(w, w) for w in words_upto("ab", 3)}
    s = one_substitution()
    ec = ec_to_ed(s)
    for u in words_upto("ab", 3):
        for v in words_upto("ab", 3):
            shared = bool(outputs(s, u, 3) & outputs(s, v, 3))
            assert eval_pair(ec, u, v) == shared


def test_prefix_maximality():
    p = build_fixed_property("prefix", AB)
    assert maximal_witness(p, a_star_b()) is None
    assert is_maximal(p, a_star_b())
    w = maximal_witness(p, lang(["ab"]))
    assert w is not None and w != ("a", "b")
    assert not fixed_violation("prefix", [("a", "b"), w])


def test_maximality_requires_satisfaction():
    p = build_fixed_property("suffix", AB)
    with pytest.raises(NotSatisfiedError) as err:
        maximal_witness(p, a_star_b())
    assert err.value.witness == (("a", "b"), ("b",))


def test_maximality_within_universe():
    p = build_fixed_property("prefix", AB)
    universe = Nfa.from_words(["ab", "aa", "ba"], AB)
    w = maximal_witness(p, lang(["ab"]), universe)
    assert w in {("a", "a"), ("b", "a")}
    assert maximal_witness(p, lang(["ab", "aa", "ba"]), universe) is None


def test_error_correcting_maximality():
    p = build_transducer_property(ERROR_CORRECTING, one_substitution())
    # the empty word is far from everything
    assert maximal_witness(p, lang(["aaa", "bbb"])) == ()
    length3 = Nfa.from_words(["".join(w) for w in itertools.product("ab", repeat=3)], AB)
    assert maximal_witness(p, lang(["aaa", "bbb"]), length3) is None
    assert maximal_witness(p, lang(["aaa"]), length3) == ("b", "b", "b")
    w = maximal_witness(p, lang(["aa"]))
    assert not ec_violation(one_substitution(), [("a", "a"), w])


def test_construct_language():
    p = build_fixed_property("prefix", AB)
    got = construct_language(p, 4, 2, seed=3)
    assert got == set(words_upto("ab", 2)) - set(words_upto("ab", 1))
    assert construct_language(p, 3, 3, seed=7) == construct_language(p, 3, 3, seed=7)
    inf = build_fixed_property("infix", {"a"})
    assert construct_language(inf, 5, 3, seed=1) == {("a", "a", "a")}


@given(st.integers(1, 6), st.integers(1, 4), st.integers(0, 10 ** 6),
       st.sampled_from(FIXED_NAMES))
def test_construct_language_satisfies(n, length, seed, name):
    p = build_fixed_property(name, AB)
    got = construct_language(p, n, length, max_trials=20, seed=seed)
    assert 1 <= len(got) <= n
    assert all(len(w) == length for w in got)
    assert satisfies_witness(p, lang(got)) is None


@given(word_sets(), st.sampled_from(FIXED_NAMES))
def test_fixed_satisfaction_matches_oracle(words, name):
    p = build_fixed_property(name, AB)
    a = lang(words)
    w = satisfies_witness(p, a)
    assert (w is None) == (not fixed_violation(name, words))
    if w is not None:
        u, v = w
        assert u in words and v in words and FIXED_RELATIONS[name](v, u)


@given(word_sets(), st.sampled_from(["1*0*1*", "0*1*0*", "(0+1)*", "1*01*"]))
def test_trajectory_satisfaction_matches_oracle(words, expr):
    p = build_trajectory_property(expr, AB)
    w = satisfies_witness(p, lang(words))
    bad = any(trajectory_related(expr, u, v) for u in words for v in words)
    assert (w is None) == (not bad)


@given(word_sets(max_len=4))
def test_channel_properties_match_oracle(words):
    for t in (one_substitution(), one_insertion_deletion()):
        a = lang(words)
        ed = build_transducer_property(ERROR_DETECTING, t)
        ec = build_transducer_property(ERROR_CORRECTING, t)
        w = satisfies_witness(ed, a)
        assert (w is None) == (not ed_violation(t, words))
        if w is not None:
            assert check_witness(ed, a, w)
        w = satisfies_witness(ec, a)
        assert (w is None) == (not ec_violation(t, words))
        if w is not None:
            assert check_witness(ec, a, w)


@given(word_sets(max_len=4))
def test_input_altering_matches_oracle(words):
    t = suffix_transducer()
    p = build_transducer_property(INPUT_ALTERING, t)
    w = satisfies_witness(p, lang(words))
    assert (w is None) == (not ia_violation(t, words))


@given(word_sets(), st.sampled_from(FIXED_NAMES), st.sampled_from(FIXED_NAMES))
def test_conjunction_semantics(words, n1, n2):
    p, q = build_fixed_property(n1, AB), build_fixed_property(n2, AB)
    a = lang(words)
    assert (p & q).satisfies(a) == (p.satisfies(a) and q.satisfies(a))


@given(word_sets(max_len=3))
def test_mixed_conjunction_semantics(words):
    p = build_fixed_property("suffix", AB)
    q = build_transducer_property(ERROR_CORRECTING, one_substitution())
    a = lang(words)
    assert (p & q).satisfies(a) == (p.satisfies(a) and q.satisfies(a))


@given(word_sets(max_len=3, empty_word=False), st.sampled_from(["prefix", "suffix", "infix"]))
def test_maximal_witness_is_extendable_and_shortest(words, name):
    p = build_fixed_property(name, AB)
    if fixed_violation(name, words):
        return
    w = maximal_witness(p, lang(words))
    candidates = [x for x in words_upto("ab", 5)
                  if x not in words and not fixed_violation(name, list(words) + [x])]
    if w is None:
        assert not candidates
    else:
        assert w not in words
        assert not fixed_violation(name, list(words) + [w])
        assert len(w) == min(len(x) for x in candidates)
