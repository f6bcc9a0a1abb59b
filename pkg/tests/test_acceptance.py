"""Acceptance criteria, one test each.

Every test records a one-line verdict in ``RESULTS``; the terminal summary
hook in conftest prints them after the run.  Running this file directly
prints the same lines without pytest.
"""

from __future__ import annotations

import time

import pytest

from varietylab import algebra as alg
from varietylab import automata as au
from varietylab import games as gm
from varietylab import identities as ids
from varietylab import oracle
from varietylab import products as pr
from varietylab import varieties as var
from varietylab.errors import SizeCapExceeded

RESULTS: dict[int, str] = {}


def lang(regex, extra=""):
    return au.compile(au.parse_regex(regex, tuple(extra)))


def record(n, title, failures, elapsed, limit=None):
    ok = not failures and (limit is None or elapsed < limit)
    budget = f" (limit {limit:g} s)" if limit else ""
    note = "" if not failures else f"; first failure: {failures[0]}"
    RESULTS[n] = f"criterion {n} {'PASS' if ok else 'FAIL'}: {title} in {elapsed:.2f} s{budget}{note}"
    return ok


# --------------------------------------------------------------------------


def criterion_1():
    failures = []

    def expect(cond, what):
        if not cond:
            failures.append(what)

    expect(var.classify(lang("(ab)*")).star_free is True, "(ab)* star_free")
    expect(var.classify(lang("(aa)*")).star_free is False, "(aa)* not star_free")

    j1 = lang("(a+b)*a(a+b)*b(a+b)* + (a+b)*b(a+b)*a(a+b)*", "c")
    expect(var.classify(j1).j1 is True, "contains a and b, no c: j1")
    M = alg.syntactic_stamp(j1)[0].monoid
    expect(ids.satisfies(M, "xy = yx") and ids.satisfies(M, "x^2 = x"), "J1 identities on Synt")

    some_a = lang("(a+b)*a(a+b)*")
    for d, want in ((some_a, True), (au.complement(some_a), False)):
        stamp, P = alg.syntactic_stamp(d)
        ordered = var.is_member("J+", stamp, P)
        pattern = var.forbidden_pattern_sigma1(d)
        expect(ordered == pattern == want and var.classify(d).sigma1 is want, f"sigma1 {want}")

    expect(var.classify(lang("a(a+b)*")).first_letter is True, "a(a+b)* in K1")
    expect(var.classify(lang("c*a(a+b+c)*")).first_letter is False, "c*a(a+b+c)* not in K1")

    even = lang("(aa)*")
    erased = au.inverse_image(even, au.FreeMorphism("ab", "a", {"a": "a", "b": ""}))
    for d, want in ((even, True), (erased, False)):
        stamp, P = alg.syntactic_stamp(d)
        verdict = var.decide("QA", stamp, P)      # runs both deciders and requires agreement
        expect(verdict.member is want and verdict.structural is want, f"QA {want}")

    expect(gm.ef_winner("aab", "aaab", 2) == gm.SPOILER, "ef aab/aaab")
    expect(gm.ef_winner("aaaab", "aaab", 2) == gm.DUPLICATOR, "ef aaaab/aaab")
    return failures


def _no_nontrivial_subgroup(M):
    for m in range(M.size):
        seq, x = [], m
        while x not in seq:
            seq.append(x)
            x = M.mul(x, m)
        if len(seq) - seq.index(x) != 1:
            return False
    return True


def criterion_2():
    failures = []
    J = var.lookup("J")
    for seed in range(300):
        d = oracle.random_dfa(seed, 1 + seed % 6)
        stamp, P = alg.syntactic_stamp(d)
        M = stamp.monoid
        j_ids = var.is_member("J", stamp, P)
        j_alt = var._identity_check(J, stamp, P, "alternate")[0] is None
        r_ids = var.is_member("R", stamp, P)
        l_ids = var.is_member("L", stamp, P)
        checks = {
            "J identities vs J-trivial": j_ids == alg.is_J_trivial(M, stamp.generators),
            "J identity pairs": j_ids == j_alt,
            "R identity vs R-trivial": r_ids == alg.is_R_trivial(M, stamp.generators),
            "A identity vs no subgroup": var.is_member("A", stamp, P) == _no_nontrivial_subgroup(M),
            "R and L vs J": (r_ids and l_ids) == j_ids,
        }
        failures += [f"seed {seed}: {k}" for k, ok in checks.items() if not ok]
    return failures


def criterion_3():
    failures = []
    for seed in range(100):
        d = oracle.random_dfa(seed, 1 + seed % 5)
        stamp, _ = alg.syntactic_stamp(d)
        if oracle.stamp_isomorphism(oracle.syntactic_monoid_bruteforce(d), stamp) is None:
            failures.append(f"brute force seed {seed}")
    done, seed = 0, 0
    while done < 20:
        d = oracle.random_dfa(1000 + seed, 1 + seed % 4)
        letter = "ab"[seed % 2]
        seed += 1
        phi, P = alg.syntactic_stamp(d)
        if phi.monoid.size > 4:
            continue
        stamp, acc = pr.la_astar_stamp(phi, P, letter)
        if pr.language_of(stamp, acc) != pr.la_astar_reference(au.minimize(d), letter):
            failures.append(f"la_astar seed {seed - 1}")
        done += 1
    done, seed = 0, 0
    while done < 10:
        K = oracle.random_dfa(2000 + seed, 1 + seed % 3)
        L = oracle.random_dfa(3000 + seed, 1 + (seed // 3) % 3)
        letter = "ab"[seed % 2]
        seed += 1
        phi, (Ks, Ls) = pr.common_stamp(K, L)
        if phi.monoid.size > 3:
            continue
        stamp, acc = pr.kal_stamp(phi, Ks, letter, Ls)
        if pr.language_of(stamp, acc) != pr.kal_reference(au.minimize(K), letter, au.minimize(L)):
            failures.append(f"kal seed {seed - 1}")
        done += 1
    return failures


def criterion_4():
    return [f"{u}, d={d}" for u in ("a", "b", "ab", "aa") for d in (1, 2, 3)
            if not gm.verify_pumping(u, d, gm.ORDER)]


def criterion_5():
    failures = []
    for seed in range(50):
        stamp, _ = oracle.random_stamp(seed, 1 + seed % 6, 2)
        M = stamp.monoid
        r = alg.rho_image(stamp)
        K = alg.minimal_ideal(M)
        if M.mul(r, r) != r or r not in K:
            failures.append(f"seed {seed}: rho not an idempotent of the minimal ideal")
        if alg.has_zero(M) and K != {r}:
            failures.append(f"seed {seed}: rho is not the zero")
    return failures


def criterion_6():
    failures = []
    if var.density_class(lang("a*b*")) != "sparse":
        failures.append("a*b* not sparse")
    if oracle.count_table(lang("a*b*"), 60) != [n + 1 for n in range(61)]:
        failures.append("a*b* counts")
    if var.density_class(lang("a*")) != "slender":
        failures.append("a* not slender")
    if var.density_class(lang("(a+b)*")) != "exponential":
        failures.append("(a+b)* not exponential")
    if oracle.count_table(lang("(a+b)*"), 60) != [2 ** n for n in range(61)]:
        failures.append("(a+b)* counts")
    expected = {"bounded": ("finite", "slender"), "polynomial": ("sparse",), "exponential": ("exponential",)}
    for seed in range(50):
        d = oracle.random_dfa(5000 + seed, 1 + seed % 5)
        bucket = oracle.growth_bucket(d, 20, 60)
        if bucket == "ambiguous":
            continue
        cls = var.density_class(d)
        if cls not in expected[bucket]:
            failures.append(f"seed {seed}: {cls} vs growth {bucket}")
    return failures


def criterion_7():
    failures = []
    found, seed = 0, 0
    while found < 30:
        d = au.minimize(oracle.random_dfa(7000 + seed, 1 + seed % 5))
        seed += 1
        if not var.classify(d).star_free:
            continue
        found += 1
        for w in au.all_words("ab", 2):
            for q in (au.left_quotient(d, w), au.right_quotient(d, w)):
                if not var.classify(q).star_free:
                    failures.append(f"seed {seed - 1}: quotient by {w!r}")
    erase = au.FreeMorphism("ab", "a", {"a": "a", "b": ""})
    even = lang("(aa)*")
    if not (var.classify(even).qa and not var.classify(au.inverse_image(even, erase)).qa):
        failures.append("erasing counterexample not reproduced")
    lm = au.FreeMorphism("ab", "ab", {"a": "ab", "b": "ba"}, "length-multiplying")
    found, seed = 0, 0
    while found < 10:
        d = oracle.random_dfa(8000 + seed, 1 + seed % 5)
        seed += 1
        try:
            r = var.classify(d)
        except SizeCapExceeded:
            continue
        if r.qa is not True:
            continue
        found += 1
        if var.classify(au.inverse_image(d, lm)).qa is not True:
            failures.append(f"seed {seed - 1}: QA lost under a->ab, b->ba")
    return failures


CRITERIA = [
    (1, "worked examples reproduced exactly", criterion_1, 5.0),
    (2, "cross-decider agreement on 300 random monoids", criterion_2, 60.0),
    (3, "oracle equivalence (brute force, LaA*, KaL)", criterion_3, 60.0),
    (4, "pumping claim for u in {a,b,ab,aa}, d in 1..3", criterion_4, None),
    (5, "rho image idempotent in the minimal ideal on 50 stamps", criterion_5, None),
    (6, "density classes match the counting oracle", criterion_6, None),
    (7, "Eilenberg closure spot checks", criterion_7, None),
]


@pytest.mark.parametrize("n, title, check, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(n, title, check, limit):
    start = time.perf_counter()
    failures = check()
    elapsed = time.perf_counter() - start
    ok = record(n, title, failures, elapsed, limit)
    print(RESULTS[n])
    assert ok, RESULTS[n]


if __name__ == "__main__":
    for n, title, check, limit in CRITERIA:
        start = time.perf_counter()
        fails = check()
        record(n, title, fails, time.perf_counter() - start, limit)
        print(RESULTS[n])
