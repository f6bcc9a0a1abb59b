from __future__ import annotations

import random

import numpy as np
import pytest

from varietylab import algebra as alg
from varietylab import automata as au
from varietylab import identities as ids
from varietylab import products as pr
from varietylab.errors import InvalidStructure, SizeCapExceeded, VarietyLabError
from varietylab.oracle import random_dfa

from conftest import lang


def brute_associative(M):
    t = M.table
    n = M.size
    return all(t[t[x, y], z] == t[x, t[y, z]] for x in range(n) for y in range(n) for z in range(n))


def is_commutative(M):
    return bool((M.table == M.table.T).all())


def chain3():
    """{1, e, 0} with e idempotent and 0 a zero."""
    return alg.FiniteMonoid([[0, 1, 2], [1, 1, 2], [2, 2, 2]])


def test_trivial_action_gives_direct_product():
    U, Z2 = alg.u1(), alg.cyclic_group(2)
    P = pr.semidirect_product(U, Z2, pr.trivial_action(Z2, U))
    D = alg.direct_product(U, Z2)
    assert P.size == 4 and is_commutative(P)
    assert alg.divides(P, D) and alg.divides(D, P)
    assert P.pairs[P.identity] == (U.identity, Z2.identity)


def test_nontrivial_action():
    U = alg.u1()
    act = pr.LeftAction(U, U, np.array([[0, 1], [0, 0]]))
    P = pr.semidirect_product(U, U, act)
    assert P.size == 4 and brute_associative(P)
    assert not is_commutative(P)


def test_invalid_action_reports_witness():
    U = alg.u1()
    bad = pr.LeftAction(U, U, np.array([[1, 0], [0, 1]]))    # λ_1 must be the identity map
    law, witness = bad.violation()
    assert witness
    with pytest.raises(InvalidStructure) as exc:
        pr.semidirect_product(U, U, bad)
    assert exc.value.witness is not None


def test_wreath_sizes():
    U, Z2 = alg.u1(), alg.cyclic_group(2)
    W, _ = pr.wreath_product(U, alg.trivial_monoid())
    assert W.size == 2 and alg.divides(U, W) and alg.divides(W, U)
    W, _ = pr.wreath_product(U, U)
    assert W.size == 8 and brute_associative(W)
    W, _ = pr.wreath_product(Z2, Z2)
    assert W.size == 8 and not is_commutative(W)
    with pytest.raises(SizeCapExceeded):
        pr.wreath_product(alg.cyclic_group(3), alg.cyclic_group(12))


def test_block_product_example():
    U, T = alg.u1(), alg.trivial_monoid()
    left = pr.trivial_action(T, U)
    both = pr.BiAction(left, np.array([[0], [1]]))
    B = pr.block_product(U, T, both)
    assert B.size == 2 and brute_associative(B)


def test_la_astar_examples():
    # L = A* over a trivial monoid
    phi = alg.Stamp(("a", "b"), alg.trivial_monoid(), {"a": 0, "b": 0})
    stamp, acc = pr.la_astar_stamp(phi, {0}, "a")
    assert au.equivalent(pr.language_of(stamp, acc), lang("(a+b)*a(a+b)*"))
    stamp, acc = pr.la_astar_stamp(phi, set(), "a")
    assert au.is_empty(pr.language_of(stamp, acc))
    phi, P = alg.syntactic_stamp(lang("b*", "a"))
    stamp, acc = pr.la_astar_stamp(phi, P, "a")
    assert au.equivalent(pr.language_of(stamp, acc), lang("b*a(a+b)*"))
    with pytest.raises(VarietyLabError):
        pr.la_astar_stamp(phi, P, "c")


def test_kal_examples():
    phi = alg.Stamp(("a", "b"), alg.trivial_monoid(), {"a": 0, "b": 0})
    stamp, acc = pr.kal_stamp(phi, {0}, "a", {0})
    assert au.equivalent(pr.language_of(stamp, acc), lang("(a+b)*a(a+b)*"))
    stamp, acc = pr.kal_stamp(phi, set(), "a", {0})
    assert au.is_empty(pr.language_of(stamp, acc))
    K, L = lang("(b*ab*a)*b*"), lang("b*", "a")
    phi, (Ks, Ls) = pr.common_stamp(K, L)
    stamp, acc = pr.kal_stamp(phi, Ks, "a", Ls)
    assert au.equivalent(pr.language_of(stamp, acc), pr.kal_reference(K, "a", L))
    assert au.equivalent(pr.language_of(stamp, acc), lang("(b*ab*a)*b*ab*"))


def test_la_astar_on_random_languages():
    rng = random.Random(7)
    done = 0
    seed = 0
    while done < 20:
        d = random_dfa(seed, rng.randint(1, 4))
        seed += 1
        phi, P = alg.syntactic_stamp(d)
        if phi.monoid.size > 4:
            continue
        a = rng.choice("ab")
        stamp, acc = pr.la_astar_stamp(phi, P, a)
        got = pr.language_of(stamp, acc)
        # minimal DFAs are unique up to the canonical numbering
        assert got == pr.la_astar_reference(au.minimize(d), a)
        done += 1


def test_kal_on_random_languages():
    rng = random.Random(11)
    done = 0
    seed = 0
    while done < 10:
        K = random_dfa(100 + seed, rng.randint(1, 3))
        L = random_dfa(200 + seed, rng.randint(1, 3))
        seed += 1
        phi, (Ks, Ls) = pr.common_stamp(K, L)
        if phi.monoid.size > 3:
            continue
        a = rng.choice("ab")
        stamp, acc = pr.kal_stamp(phi, Ks, a, Ls)
        assert pr.language_of(stamp, acc) == pr.kal_reference(au.minimize(K), a, au.minimize(L))
        done += 1


def test_stamps_are_restricted_to_generated_elements():
    phi, P = alg.syntactic_stamp(lang("(ab)*"))
    stamp, acc = pr.la_astar_stamp(phi, P, "a")
    # every element is the image of its representative word
    for i, w in enumerate(stamp.words):
        assert stamp.image(w) == i
    assert stamp.monoid.size < 2 ** phi.monoid.size * phi.monoid.size


def test_wreath_decompose_direct_product():
    U, Z2 = alg.u1(), alg.cyclic_group(2)
    phi = pr.semidirect_stamp(U, Z2, pr.trivial_action(Z2, U), {"a": (1, 0), "b": (0, 1)})
    dec = pr.wreath_decompose(phi)
    assert dec.psi.monoid.size == 2
    for t in set(dec.psi_of_element.values()):
        assert dec.chi(t, "a") == dec.chi(0, "a")


def test_wreath_decompose_la_astar():
    phi, P = alg.syntactic_stamp(lang("(ab)*"))
    stamp, _ = pr.la_astar_stamp(phi, P, "b")
    dec = pr.wreath_decompose(stamp)
    assert dec.psi.monoid.size == phi.monoid.size
    rng = random.Random(3)
    for _ in range(200):
        w = "".join(rng.choice("ab") for _ in range(rng.randint(0, 8)))
        assert dec.check_word(w)
    with pytest.raises(VarietyLabError):
        pr.wreath_decompose(phi)


def test_wreath_decompose_nontrivial_action():
    U = alg.u1()
    act = pr.LeftAction(U, U, np.array([[0, 1], [0, 0]]))
    phi = pr.semidirect_stamp(U, U, act, {"a": (1, 0), "b": (0, 1), "c": (1, 1)})
    pr.wreath_decompose(phi, max_len=5)


def test_semidirect_products_of_small_monoids_are_associative_and_aperiodic():
    aperiodic = [alg.u1(), chain3(), alg.trivial_monoid()]
    for S in aperiodic:
        for T in aperiodic:
            for act in pr.all_actions(T, S, limit=20_000):
                P = pr.semidirect_product(S, T, act)
                assert brute_associative(P)
                assert alg.is_H_trivial(P) and ids.satisfies(P, "x^w = x x^w")
    # a group factor breaks aperiodicity
    Z2 = alg.cyclic_group(2)
    P = pr.semidirect_product(alg.u1(), Z2, pr.trivial_action(Z2, alg.u1()))
    assert not alg.is_H_trivial(P)


def test_block_actions_are_validated():
    U = alg.u1()
    left = pr.LeftAction(U, U, np.array([[0, 1], [0, 0]]))
    with pytest.raises(InvalidStructure):
        pr.BiAction(left, np.array([[0, 1], [1, 1]])).validate()
