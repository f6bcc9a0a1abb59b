from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from varietylab import games as gm
from varietylab.automata import FreeMorphism, all_words
from varietylab.errors import AlphabetError, SizeCapExceeded

D, S = gm.DUPLICATOR, gm.SPOILER
SUCC = gm.Signature(use_order=False, use_successor=True)
ORDER_SUCC = gm.Signature(use_order=True, use_successor=True)
ORDER_MOD2 = gm.Signature(mod_q=2)


def test_worked_game_examples():
    assert gm.ef_winner("aab", "aaab", 2) == S
    assert gm.ef_winner("aaaab", "aaab", 2) == D
    for w1, w2 in (("", "ab"), ("abc", "c"), ("aa", "")):
        assert gm.ef_winner(w1, w2, 0) == D


def test_empty_words():
    assert gm.ef_winner("", "", 3) == D
    assert gm.ef_winner("", "a", 1) == S
    assert gm.ef_winner("", "a", 0) == D


def test_ab_ba_recorded_outputs():
    assert gm.ef_winner("ab", "ba", 1) == D
    assert gm.ef_winner("ab", "ba", 2) == S


def test_signature_parse():
    assert gm.Signature.parse("lt") == gm.ORDER
    assert gm.Signature.parse("<,+1") == ORDER_SUCC
    assert gm.Signature.parse("lt,mod=2") == ORDER_MOD2
    assert gm.Signature.parse("succ") == SUCC
    with pytest.raises(ValueError):
        gm.Signature.parse("lt,foo")
    with pytest.raises(ValueError):
        gm.Signature(use_order=False)
    assert str(gm.Signature(True, True, 3)) == "{<,+1,mod3}"


def test_alphabet_and_pebble_errors():
    with pytest.raises(AlphabetError):
        gm.ef_winner("ab", "ac", 1, alphabet="ab")
    with pytest.raises(ValueError):
        gm.PebbledWord("ab", (3,))
    with pytest.raises(ValueError):
        gm.ef_winner(gm.PebbledWord("ab", (1,)), "ab", 1)


def test_equiv_class_examples():
    assert len(gm.equiv_classes("ab", 0, 4)) == 1
    classes = gm.equiv_classes("a", 1, 6)
    assert sorted(map(sorted, classes)) == [[""], ["a", "aa", "aaa", "aaaa", "aaaaa", "aaaaaa"]]
    depth1 = gm.equiv_classes("ab", 1, 2)
    assert any({"ab", "ba"} <= set(c) for c in depth1)
    depth2 = gm.equiv_classes("ab", 2, 2)
    assert not any({"ab", "ba"} <= set(c) for c in depth2)
    with pytest.raises(SizeCapExceeded):
        gm.equiv_classes("abcd", 1, 2)
    with pytest.raises(SizeCapExceeded):
        gm.equiv_classes("ab", 4, 2)


def test_pumping_examples():
    assert gm.ef_winner("aaa", "aaaa", 2) == D
    assert gm.verify_pumping("a", 2)
    assert gm.ef_winner("ab", "abab", 1) == D
    assert gm.verify_pumping("a", 0)
    with pytest.raises(SizeCapExceeded):
        gm.verify_pumping("ab", 6)


def test_pumping_for_short_words():
    for u in all_words("ab", 2):
        if u:
            for d in range(4):
                assert gm.verify_pumping(u, d), (u, d)


def test_pumping_with_modular_predicates():
    # q divides |u|: the claim carries over
    assert gm.verify_pumping("ab", 3, ORDER_MOD2)
    assert gm.verify_pumping("aa", 2, ORDER_MOD2)
    # q does not divide |u|: Spoiler compares lengths mod 2
    assert not gm.verify_pumping("a", 2, ORDER_MOD2)


def test_successor_regression():
    # abab / baba: depth 0 and 1 agree, depth 2 separates; appending a changes nothing
    recorded = [D, D, S, S]
    assert [gm.ef_winner("abab", "baba", d, SUCC) for d in range(4)] == recorded
    assert [gm.ef_winner("ababa", "babaa", d, SUCC) for d in range(4)] == recorded


def test_pebbled_positions():
    x = gm.PebbledWord("aab", (3,))
    y = gm.PebbledWord("aaab", (4,))
    assert gm.ef_winner(x, y, 1) == D
    assert gm.ef_winner(gm.PebbledWord("ab", (1,)), gm.PebbledWord("ab", (2,)), 0) == S


# --------------------------------------------------------------------------
# properties

SIGS = [gm.ORDER, SUCC, ORDER_SUCC, ORDER_MOD2]


def test_solver_matches_naive_minimax():
    words = [w for w in all_words("ab", 4)]
    for sig in SIGS:
        solver = gm.GameSolver(sig)
        for r in range(3):
            for w1, w2 in combinations(words, 2):
                if len(w1) + len(w2) > 6 and r == 2:
                    continue
                assert solver.winner(w1, w2, r) == gm.naive_winner(w1, w2, r, sig), (sig, w1, w2, r)


@given(st.text("ab", min_size=1, max_size=4), st.text("ab", min_size=1, max_size=4),
       st.integers(1, 2), st.integers(0, 2), st.sampled_from(SIGS))
def test_pebbled_solver_matches_naive(w1, w2, p1, r, sig):
    x = gm.PebbledWord(w1, (min(p1, len(w1)),))
    y = gm.PebbledWord(w2, (min(p1, len(w2)),))
    assert gm.GameSolver(sig).winner(x, y, r) == gm.naive_winner(x, y, r, sig)


def test_equivalence_is_transitive():
    # the relation comes from plain minimax, so transitivity is a real check here
    words = list(all_words("ab", 5))
    for sig in (gm.ORDER, SUCC):
        for d in range(3):
            rel = {(u, v) for u in words for v in words if gm.naive_winner(u, v, d, sig) == D}
            for u, v in rel:
                for w in words:
                    if (v, w) in rel:
                        assert (u, w) in rel, (sig, d, u, v, w)
            solver = gm.GameSolver(sig)
            assert rel == {(u, v) for u in words for v in words if solver.winner(u, v, d) == D}


@given(st.text("ab", max_size=7), st.text("ab", max_size=7), st.integers(0, 3), st.sampled_from(SIGS))
def test_monotone_in_depth_and_symmetric(w1, w2, d, sig):
    solver = gm.GameSolver(sig)
    if solver.winner(w1, w2, d) == S:
        assert solver.winner(w1, w2, d + 1) == S
    assert solver.winner(w1, w2, d) == solver.winner(w2, w1, d)
    assert solver.winner(w1, w1, d) == D


def _equivalent_pairs(solver, d, max_len):
    words = [w for w in all_words("ab", max_len) if w]
    types = {w: solver.word_type(w, d) for w in words}
    return [(u, v) for u, v in combinations(words, 2) if types[u] == types[v]]


def test_congruence_under_letters_and_morphisms():
    solver = gm.GameSolver(gm.ORDER)
    morphisms = [FreeMorphism("ab", "ab", {"a": "ab", "b": "b"}),
                 FreeMorphism("ab", "ab", {"a": "", "b": "ab"}),
                 FreeMorphism("ab", "ab", {"a": "ba", "b": "aab"})]
    pairs = _equivalent_pairs(solver, 2, 6)
    assert pairs
    for u, v in pairs:
        for c in "ab":
            assert solver.winner(u + c, v + c, 2) == D
            assert solver.winner(c + u, c + v, 2) == D
        for f in morphisms:
            assert solver.winner(f(u), f(v), 2) == D


def test_congruence_variants():
    # non-erasing morphisms with successor
    solver = gm.GameSolver(SUCC)
    non_erasing = [FreeMorphism("ab", "ab", {"a": "ab", "b": "b"}, "non-erasing"),
                   FreeMorphism("ab", "ab", {"a": "ba", "b": "aab"}, "non-erasing")]
    pairs = _equivalent_pairs(solver, 1, 6)
    assert pairs
    for u, v in pairs:
        for f in non_erasing:
            assert solver.winner(f(u), f(v), 1) == D
    # length-multiplying morphisms whose image length is a multiple of q
    solver = gm.GameSolver(ORDER_MOD2)
    lm = [FreeMorphism("ab", "ab", {"a": "aa", "b": "ab"}, "length-multiplying"),
          FreeMorphism("ab", "ab", {"a": "ab", "b": "ba"}, "length-multiplying")]
    pairs = _equivalent_pairs(solver, 1, 6)
    assert pairs
    for u, v in pairs:
        for f in lm:
            assert solver.winner(f(u), f(v), 1) == D


def test_unordered_guard():
    with pytest.raises(SizeCapExceeded):
        gm.ef_winner("a" * 200, "a" * 201, 3, SUCC)
