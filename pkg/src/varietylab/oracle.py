"""Brute-force verifiers, kept independent of the algebra fast paths.

Nothing here uses the compiled kernels or transformation composition:
monoids are built by running words through automata.
"""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np

from . import automata as au
from .algebra import AcceptingSubset, FiniteMonoid, Stamp, syntactic_stamp
from .errors import VarietyLabError

MAX_COUNT_LENGTH = 200
MAX_SUBWORD_K = 4
MAX_CONSISTENCY_LENGTH = 12


class OracleRefusal(VarietyLabError, ValueError):
    """Raised when a brute-force oracle would not be exhaustive."""


def _transformation(d: au.Dfa, word: str) -> tuple:
    return tuple(d.run(word, q) for q in range(d.states))


def syntactic_monoid_bruteforce(d: au.Dfa, max_len: int | None = None) -> FiniteMonoid:
    """Group words of length ≤ max_len by their action on the minimal DFA.

    Words are extended layer by layer from one representative per action,
    so the search covers every action reachable within ``max_len``.  The
    table is filled by running concatenated representatives.  Labels are
    the representative words (shortest, then lexicographic).
    """
    m = au.minimize(d)
    bound = m.states ** 2
    if max_len is None:
        max_len = bound
    if max_len < bound:
        raise OracleRefusal(f"max_len {max_len} is below the completeness bound {bound}")
    letters = sorted(m.alphabet)
    reps = {_transformation(m, ""): ""}
    layer = [""]
    for _ in range(max_len):
        nxt = []
        for u in layer:
            for a in letters:
                w = u + a
                key = _transformation(m, w)
                if key not in reps:
                    reps[key] = w
                    nxt.append(w)
        if not nxt:
            break
        layer = nxt
    words = sorted(reps.values(), key=lambda w: (len(w), w))
    index = {_transformation(m, w): i for i, w in enumerate(words)}
    table = [[index[_transformation(m, u + v)] for v in words] for u in words]
    return FiniteMonoid(table, 0, labels=[w or "1" for w in words])


def stamp_isomorphism(M: FiniteMonoid, stamp: Stamp) -> dict | None:
    """Isomorphism from ``M`` (labelled by representative words) onto ``stamp.monoid``.

    The candidate sends each element to the image of its label under the
    stamp; it is returned only if it is a bijective morphism.
    """
    if M.labels is None or M.size != stamp.monoid.size:
        return None
    f = {i: stamp.image("" if w == "1" else w) for i, w in enumerate(M.labels)}
    if len(set(f.values())) != M.size:
        return None
    if f[M.identity] != stamp.monoid.identity:
        return None
    src = M.table
    dst = stamp.monoid.table
    fa = np.array([f[i] for i in range(M.size)])
    if not np.array_equal(fa[src], dst[np.ix_(fa, fa)]):
        return None
    return f


def count_words(d: au.Dfa, n: int) -> int:
    """Exact number of accepted words of length n."""
    if n < 0 or n > MAX_COUNT_LENGTH:
        raise OracleRefusal(f"n must be in 0..{MAX_COUNT_LENGTH}")
    return count_table(d, n)[n]


def count_table(d: au.Dfa, n: int) -> list[int]:
    """Counts for every length 0..n (Python integers, no overflow)."""
    if n > MAX_COUNT_LENGTH:
        raise OracleRefusal(f"n must be at most {MAX_COUNT_LENGTH}")
    ways = [0] * d.states
    ways[d.initial] = 1
    out = []
    for _ in range(n + 1):
        out.append(sum(ways[q] for q in d.accepting))
        nxt = [0] * d.states
        for q, c in enumerate(ways):
            if c:
                for p in d.delta[q]:
                    nxt[p] += c
        ways = nxt
    return out


GROWTH_BUCKETS = ("bounded", "polynomial", "exponential", "ambiguous")


def growth_bucket(d: au.Dfa, lo: int = 20, hi: int = 60) -> str:
    """Growth of the counts read off lengths lo..hi.

    ``bounded``: no count in the upper half exceeds the maximum of the lower
    half.  ``exponential``: cumulative counts grow by at least 1.2^(hi-mid).
    ``polynomial``: unbounded but cumulative growth at most (hi/mid)^6.
    Anything in between is ``ambiguous``.
    """
    counts = count_table(d, hi)
    mid = (lo + hi) // 2
    low_max = max(counts[lo:mid + 1])
    high_max = max(counts[mid:hi + 1])
    if high_max <= low_max:
        return "bounded"
    s_mid = sum(counts[:mid + 1])
    s_hi = sum(counts[:hi + 1])
    ratio = s_hi / s_mid if s_mid else float("inf")
    if ratio >= 1.2 ** (hi - mid):
        return "exponential"
    if ratio <= (hi / mid) ** 6:
        return "polynomial"
    return "ambiguous"


def random_dfa(seed, states: int, letters: int = 2) -> au.Dfa:
    """Uniform random complete DFA (deterministic in ``seed``)."""
    rng = random.Random(seed)
    alphabet = tuple("abcdefghijklmnopqrstuvwxyz"[:letters])
    delta = [[rng.randrange(states) for _ in alphabet] for _ in range(states)]
    accepting = {q for q in range(states) if rng.random() < 0.5}
    return au.Dfa(alphabet, states, 0, frozenset(accepting), delta)


def random_transition_monoid(seed, states: int = 6, letters: int = 2,
                             max_size: int | None = None) -> tuple[FiniteMonoid, Stamp]:
    """Syntactic monoid of a random DFA, with its stamp."""
    if states > 6 or letters > 2:
        raise OracleRefusal("random monoids are drawn from at most 6 states and 2 letters")
    stamp, _ = random_stamp(seed, states, letters, max_size)
    return stamp.monoid, stamp


def random_stamp(seed, states: int = 6, letters: int = 2,
                 max_size: int | None = None) -> tuple[Stamp, AcceptingSubset]:
    d = random_dfa(seed, states, letters)
    if max_size is None:
        return syntactic_stamp(d)
    return syntactic_stamp(d, max_size)


def subword_vector(w: str, k: int) -> frozenset:
    """All (scattered) subwords of w of length at most k, including ε."""
    if k > MAX_SUBWORD_K:
        raise OracleRefusal(f"k must be at most {MAX_SUBWORD_K}")
    out = set()
    for j in range(min(k, len(w)) + 1):
        out.update("".join(c) for c in combinations(w, j))
    return frozenset(out)


def piecewise_consistency(d: au.Dfa, k: int, max_len: int) -> bool:
    """Whether membership is constant on words sharing their subwords up to length k."""
    if k > MAX_SUBWORD_K or max_len > MAX_CONSISTENCY_LENGTH:
        raise OracleRefusal(f"k ≤ {MAX_SUBWORD_K} and max_len ≤ {MAX_CONSISTENCY_LENGTH} required")
    seen: dict = {}
    for w in au.all_words(d.alphabet, max_len):
        key = subword_vector(w, k)
        member = d.accepts(w)
        if seen.setdefault(key, member) != member:
            return False
    return True


def left_zero_semigroup(n: int):
    """Semigroup on n elements with st = s."""
    from .algebra import FiniteSemigroup

    return FiniteSemigroup([[i] * n for i in range(n)])
