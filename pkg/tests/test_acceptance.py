"""Acceptance criteria, one test each. Every test prints a PASS/FAIL line;
the lines are repeated in the terminal summary."""

import io
import itertools
import random
import time
from argparse import Namespace

from codeprops import automata as fa
from codeprops.automata import Nfa
from codeprops.cli import cmd_satisfies, run_query
from codeprops.functionality import non_functional_witness, triple_size
from codeprops.machines import quadratic_witness_family
from codeprops.properties import (ERROR_DETECTING, FIXED_NAMES, build_fixed_property,
                                  build_transducer_property, conjunction, leq,
                                  maximal_witness, satisfies_witness)
from codeprops.textio import parse_machine, serialize_machine
from codeprops.transducers import Transducer, eval_pair
from codeprops.udcode import check_ud_witness, ud_satisfies_witness
from oracles import (fixed_violation, nfa_language, outputs, relation,
                     shortest_nonfunctional_input, words_upto)

AB = {"a", "b"}
A_STAR_B = "@NFA 1 * 0\n0 a 0\n0 b 1\n"
SUFFIX = ("@Transducer 1 * 0\n"
          "0 a @epsilon 0\n"
          "0 b @epsilon 0\n"
          "0 a @epsilon 1\n"
          "0 b @epsilon 1\n"
          "1 a a 1\n"
          "1 b b 1\n")
SUB1 = ("@Transducer 0 1 * 0\n"
        "0 a a 0\n"
        "0 b b 0\n"
        "0 b a 1\n"
        "0 a b 1\n"
        "1 a a 1\n"
        "1 b b 1\n")


def verdict(report, number, title, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    report(f"[{tag}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def lang(words):
    return Nfa.from_words(words, AB)


def test_criterion_1_prefix_and_substitution(report, tmp_path):
    start = time.perf_counter()
    a = parse_machine(A_STAR_B)
    p = conjunction(build_fixed_property("prefix", AB),
                    build_transducer_property(ERROR_DETECTING, parse_machine(SUB1)))
    witness = satisfies_witness(p, a)
    aut, trans = tmp_path / "ab.fado", tmp_path / "s1.fado"
    aut.write_text(A_STAR_B)
    trans.write_text(SUB1)
    q = Namespace(func=cmd_satisfies, aut=str(aut), fixed=["prefix"], traj=[],
                  trans=[str(trans)], kind=["error-detecting"], alphabet=None)
    out = io.StringIO()
    code = run_query(q, out, io.StringIO())
    elapsed = time.perf_counter() - start
    ok = witness is None and code == 0 and out.getvalue() == "SATISFIED\n" and elapsed < 1
    verdict(report, 1, "a*b satisfies prefix & 1-substitution detection", ok,
            f"report {out.getvalue().strip()!r}, {elapsed:.3f}s")


def test_criterion_2_ud_witness(report):
    start = time.perf_counter()
    a = lang(["ab", "abba", "bab"])
    w = ud_satisfies_witness(a)
    elapsed = time.perf_counter() - start
    ok = w is not None and check_ud_witness(a, w) and elapsed < 1
    shown = "" if w is None else " vs ".join("[" + ", ".join("".join(f) for f in side) + "]"
                                           for side in w)
    verdict(report, 2, "{ab, abba, bab} is not UD", ok, f"{shown}, {elapsed:.3f}s")


def test_criterion_3_ud_subsets(report):
    words = ["a", "ab", "ba"]
    whole = ud_satisfies_witness(lang(words))
    # every subset with fewer than three words, the empty one included
    subsets = [s for k in (0, 1, 2) for s in itertools.combinations(words, k)]
    passing = [s for s in subsets if ud_satisfies_witness(lang(s)) is None]
    ok = (whole is not None and check_ud_witness(lang(words), whole)
          and len(subsets) == 7 and passing == subsets)
    verdict(report, 3, "{a, ab, ba} fails UD, its smaller subsets pass", ok,
            f"{len(passing)}/{len(subsets)} subsets UD")


def test_criterion_4_hierarchy(report):
    strict = {("hypercode", "infix"), ("hypercode", "outfix"), ("infix", "prefix"),
              ("infix", "suffix"), ("outfix", "prefix"), ("outfix", "suffix")}
    closure = set(strict)
    closure |= {(a, c) for a, b in strict for b2, c in strict if b == b2}
    expected = closure | {(n, n) for n in FIXED_NAMES}

    props = {n: build_fixed_property(n, AB) for n in FIXED_NAMES}
    got = {(m, n) for m in FIXED_NAMES for n in FIXED_NAMES if leq(props[m], props[n])}

    # semantic check: a counterexample among small languages exists exactly
    # for the pairs missing from the table
    small = [w for w in words_upto("ab", 3) if w]
    langs = [s for k in (1, 2) for s in itertools.combinations(small, k)]
    semantic = {(m, n) for m in FIXED_NAMES for n in FIXED_NAMES
                if not any(not fixed_violation(m, s) and fixed_violation(n, s) for s in langs)}

    conj_ok = True
    for m in FIXED_NAMES:
        for n in FIXED_NAMES:
            c = props[m] & props[n]
            if (m, n) in expected:
                conj_ok &= c is props[m]
            elif (n, m) in expected:
                conj_ok &= c is props[n]
            else:
                conj_ok &= c.id_names == {m, n}
    ident = (props["prefix"] & props["infix"]) is props["infix"]
    ok = got == expected == semantic and conj_ok and ident
    verdict(report, 4, "fixed-property containment table", ok,
            f"{len(strict)} generating relations, {len(closure)} after closure, "
            f"prefix & infix is infix: {ident}")


def _random_transducer(rng):
    n = rng.randint(1, 4)
    labels = ["a", "b", ""]
    trans = [(rng.randrange(n), rng.choice(labels), rng.choice(labels), rng.randrange(n))
             for _ in range(rng.randint(1, 3 * n))]
    initials = rng.sample(range(n), rng.randint(1, n))
    finals = rng.sample(range(n), rng.randint(0, n))
    return Transducer(n, AB, AB, trans, initials, finals)


def test_criterion_5_random_functionality(report):
    rng = random.Random(20240601)
    start = time.perf_counter()
    positives = disagreements = invalid = oversized = 0
    for _ in range(500):
        t = _random_transducer(rng)
        w = non_functional_witness(t)
        ambiguous = shortest_nonfunctional_input(t, 6, 8) is not None
        positives += ambiguous
        if ambiguous and w is None:
            disagreements += 1
        if w is not None:
            x, z, z2 = w
            if z == z2 or not (eval_pair(t, x, z) and eval_pair(t, x, z2)):
                invalid += 1
            if triple_size(w) > 10 * t.size ** 2:
                oversized += 1
    elapsed = time.perf_counter() - start
    ok = disagreements == invalid == oversized == 0 and elapsed < 60
    verdict(report, 5, "500 random transducers vs enumeration oracle", ok,
            f"{positives} oracle-positive, {disagreements} disagreements, "
            f"{invalid} invalid, {oversized} oversized witnesses, {elapsed:.1f}s")


def test_criterion_6_quadratic_family(report):
    details, ok = [], True
    for p, expected in ((2, 6), (3, 12)):
        t = quadratic_witness_family(p)
        w = non_functional_witness(t)
        valid = (w is not None and w[1] != w[2]
                 and eval_pair(t, w[0], w[1]) and eval_pair(t, w[0], w[2]))
        shortest = shortest_nonfunctional_input(t, expected, expected)
        ok &= valid and shortest is not None and len(shortest) == expected
        details.append(f"p={p}: minimal input {len(shortest) if shortest else None}, "
                       f"returned {len(w[0]) if w else None}")
    verdict(report, 6, "quadratic witness family", ok, "; ".join(details))


def test_criterion_7_prefix_maximality(report):
    p = build_fixed_property("prefix", AB)
    a = parse_machine(A_STAR_B)
    maximal = maximal_witness(p, a) is None
    known = nfa_language(a, 6)
    addable = [w for w in words_upto("ab", 5)
               if w not in known and not fixed_violation("prefix", list(known) + [w])]

    one = lang(["ab"])
    w = maximal_witness(p, one)
    candidates = [x for x in words_upto("ab", 5)
                  if x != ("a", "b") and not fixed_violation("prefix", [("a", "b"), x])]
    extended = fa.union(one, Nfa.from_words([w], AB)) if w is not None else one
    ok = (maximal and not addable and w is not None
          and satisfies_witness(p, extended) is None
          and w in candidates and len(w) == min(map(len, candidates)))
    verdict(report, 7, "prefix maximality of a*b and {ab}", ok,
            f"a*b MAXIMAL: {maximal}; {{ab}} witness {''.join(w) if w else w!r}")


def test_criterion_8_satisfaction_sweep(report):
    start = time.perf_counter()
    words = list(words_upto("ab", 3))
    props = {n: build_fixed_property(n, AB) for n in FIXED_NAMES}
    checked = mismatches = 0
    for k in (2, 3):
        for ws in itertools.combinations(words, k):
            a = lang(ws)
            for name, p in props.items():
                w = satisfies_witness(p, a)
                if (w is None) != (not fixed_violation(name, ws)):
                    mismatches += 1
                checked += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and checked == 5 * (105 + 455) and elapsed < 60
    verdict(report, 8, "satisfaction sweep vs word-relation oracle", ok,
            f"{checked} checks, {mismatches} mismatches, {elapsed:.1f}s")


def test_criterion_9_format_round_trip(report):
    a = parse_machine(A_STAR_B)
    t = parse_machine(SUFFIX)
    a2 = parse_machine(serialize_machine(a))
    t2 = parse_machine(serialize_machine(t))
    ok = (nfa_language(a2, 6) == nfa_language(a, 6)
          and relation(t2, 5, 5) == relation(t, 5, 5)
          and serialize_machine(a2) == serialize_machine(a)
          and serialize_machine(t2) == serialize_machine(t))
    verdict(report, 9, "text format round trip", ok)
