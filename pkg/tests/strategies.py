"""Hypothesis strategies shared by the property suites."""

from __future__ import annotations

from hypothesis import strategies as st

from varietylab import automata as au

LETTERS = "ab"


def regex_nodes(letters: str = LETTERS, depth: int = 5):
    leaves = st.one_of(
        st.sampled_from([au.Letter(c) for c in letters]),
        st.just(au.Epsilon()),
        st.just(au.Empty()),
    )

    def extend(children):
        pair = st.lists(children, min_size=2, max_size=3).map(tuple)
        return st.one_of(
            pair.map(au.Union),
            pair.map(au.Concat),
            pair.map(au.Intersection),
            children.map(au.Star),
            children.map(au.Complement),
        )

    return st.recursive(leaves, extend, max_leaves=depth * 2)


@st.composite
def dfas(draw, max_states: int = 5, letters: str = LETTERS):
    n = draw(st.integers(1, max_states))
    delta = [[draw(st.integers(0, n - 1)) for _ in letters] for _ in range(n)]
    accepting = draw(st.sets(st.integers(0, n - 1)))
    return au.Dfa(tuple(letters), n, 0, frozenset(accepting), delta)


words = st.text(alphabet=LETTERS, max_size=6)


def _capped_stamp(seed: int, cap: int):
    from varietylab.errors import SizeCapExceeded
    from varietylab.oracle import random_stamp
    try:
        return random_stamp(seed, 1 + seed % 5, 2, cap)
    except SizeCapExceeded:
        return None


def small_stamps(cap: int = 400):
    """Syntactic stamps of random DFAs over {a, b}, skipping monoids above ``cap``."""
    return st.integers(0, 10_000).map(lambda s: _capped_stamp(s, cap)).filter(lambda sp: sp is not None)
