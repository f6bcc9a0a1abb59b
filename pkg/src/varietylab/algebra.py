"""Finite monoids and semigroups given by multiplication tables.

Also: ordered monoids, stamps (surjective morphisms A* → M), transition and
syntactic monoids of automata, ω-powers, Green's relations, the minimal
ideal, the stable semigroup and the image of the ρ_A sequence.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import kernels
from .automata import Dfa, minimize
from .errors import InvalidStructure, SizeCapExceeded

DEFAULT_MAX_MONOID = 1_000_000
DEFAULT_DIVIDES_CAP = 8


def _readonly(table) -> np.ndarray:
    arr = np.array(table, dtype=np.int32, copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidStructure(f"multiplication table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise InvalidStructure("empty table")
    if arr.min() < 0 or arr.max() >= n:
        raise InvalidStructure("table entry out of range")
    arr.flags.writeable = False
    return arr


def _associativity_witness(t: np.ndarray):
    n = t.shape[0]
    chunk = max(1, 4_000_000 // (n * n))
    for start in range(0, n, chunk):
        a = np.arange(start, min(n, start + chunk))
        left = t[t[a][:, :, None], np.arange(n)[None, None, :]]   # (ab)c
        right = t[a[:, None, None], t[None, :, :]]               # a(bc)
        diff = left != right
        if diff.any():
            i, j, k = np.argwhere(diff)[0]
            return int(a[i]), int(j), int(k)
    return None


class FiniteSemigroup:
    """Finite semigroup as an ``n × n`` table of element indices.

    ``labels`` optionally names elements (e.g. by representative words);
    ``embedding`` records the monoid indices when the semigroup was cut out
    of a larger monoid.
    """

    def __init__(self, table, *, labels: Sequence[str] | None = None,
                 embedding: Sequence[int] | None = None, check: bool = True):
        self.table = _readonly(table)
        self.labels = tuple(labels) if labels is not None else None
        self.embedding = tuple(int(x) for x in embedding) if embedding is not None else None
        if check:
            w = _associativity_witness(self.table)
            if w is not None:
                raise InvalidStructure("table is not associative", w)

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.size

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, items: Iterable[int], start: int | None = None) -> int:
        it = iter(items)
        acc = start if start is not None else next(it)
        for x in it:
            acc = int(self.table[acc, x])
        return acc

    def power(self, m: int, k: int) -> int:
        if k < 1:
            raise ValueError("semigroup powers start at 1")
        x = m
        for _ in range(k - 1):
            x = int(self.table[x, m])
        return x

    @cached_property
    def _power_data(self):
        t = self.table
        n = self.size
        omega = np.empty(n, dtype=np.int32)
        period = np.empty(n, dtype=np.int32)
        index = np.empty(n, dtype=np.int32)
        for m in range(n):
            seen = {}
            x, k = m, 1
            while x not in seen:
                seen[x] = k
                x = int(t[x, m])
                k += 1
            i = seen[x]
            p = k - i
            e = m
            for _ in range(p * math.ceil(i / p) - 1):
                e = int(t[e, m])
            omega[m], period[m], index[m] = e, p, i
        for arr in (omega, period, index):
            arr.flags.writeable = False
        return omega, period, index

    @property
    def omega_table(self) -> np.ndarray:
        return self._power_data[0]

    @property
    def period_table(self) -> np.ndarray:
        return self._power_data[1]

    @property
    def index_table(self) -> np.ndarray:
        return self._power_data[2]

    def __eq__(self, other):
        return type(self) is type(other) and np.array_equal(self.table, other.table) and \
            getattr(self, "identity", None) == getattr(other, "identity", None)

    def __hash__(self):
        return hash((self.size, self.table.tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size})"


class FiniteMonoid(FiniteSemigroup):
    """Finite monoid: a semigroup table plus the index of its identity."""

    def __init__(self, table, identity: int = 0, *, labels: Sequence[str] | None = None,
                 check: bool = True):
        super().__init__(table, labels=labels, check=check)
        self.identity = int(identity)
        if not 0 <= self.identity < self.size:
            raise InvalidStructure("identity index out of range")
        if check:
            row = self.table[self.identity]
            col = self.table[:, self.identity]
            ar = np.arange(self.size)
            bad = np.flatnonzero((row != ar) | (col != ar))
            if bad.size:
                raise InvalidStructure("identity element does not act trivially", (int(bad[0]),))

    def power(self, m: int, k: int) -> int:
        return self.identity if k == 0 else super().power(m, k)

    def canonical(self) -> "FiniteMonoid":
        """Relabelled copy whose identity is element 0."""
        if self.identity == 0:
            return self
        perm = np.arange(self.size)
        perm[0], perm[self.identity] = self.identity, 0  # new -> old
        inv = np.argsort(perm)
        table = inv[self.table[np.ix_(perm, perm)]]
        labels = [self.labels[i] for i in perm] if self.labels else None
        return FiniteMonoid(table, 0, labels=labels, check=False)

    @classmethod
    def from_function(cls, elements: Sequence, mul, one) -> "FiniteMonoid":
        """Table of ``mul`` over ``elements``; the identity ``one`` becomes index 0."""
        elements = [one] + [x for x in elements if x != one]
        index = {x: i for i, x in enumerate(elements)}
        table = [[index[mul(x, y)] for y in elements] for x in elements]
        return cls(table, 0, labels=[str(x) for x in elements])


@dataclass(frozen=True, eq=False)
class OrderedMonoid:
    """A monoid with a compatible partial order; ``leq[x, y]`` means x ≤ y."""

    monoid: FiniteMonoid
    leq: np.ndarray

    def __post_init__(self):
        leq = np.array(self.leq, dtype=bool, copy=True)
        leq.flags.writeable = False
        object.__setattr__(self, "leq", leq)

    def check(self, generators: Iterable[int] | None = None) -> None:
        """Raise :class:`InvalidStructure` unless ``leq`` is a compatible partial order.

        Compatibility is tested against ``generators`` when given (enough for
        a generating set) and against every element otherwise.
        """
        leq, t = self.leq, self.monoid.table
        n = self.monoid.size
        if leq.shape != (n, n):
            raise InvalidStructure("order matrix has the wrong shape")
        if not leq.diagonal().all():
            raise InvalidStructure("order is not reflexive", (int(np.flatnonzero(~leq.diagonal())[0]),))
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            raise InvalidStructure("order is not antisymmetric", tuple(int(v) for v in np.argwhere(both)[0]))
        f = leq.astype(np.float32)
        trans = (f @ f) > 0
        if (trans & ~leq).any():
            raise InvalidStructure("order is not transitive", tuple(int(v) for v in np.argwhere(trans & ~leq)[0]))
        gens = range(n) if generators is None else generators
        for s in gens:
            row, col = t[s], t[:, s]
            if (leq & ~leq[np.ix_(row, row)]).any() or (leq & ~leq[np.ix_(col, col)]).any():
                raise InvalidStructure("order is not compatible with multiplication", (int(s),))


# --------------------------------------------------------------------------
# stamps


@dataclass(frozen=True, eq=False)
class Stamp:
    """Surjective morphism A* → M given by the images of the letters.

    ``words[m]`` is a shortest word mapped to ``m`` (length-then-lex first).
    ``action`` optionally records how each element acts on the states of an
    automaton (row ``m`` maps state ``q`` to ``q·m``) with ``initial`` its
    start state; the syntactic order uses it when available.
    """

    alphabet: tuple
    monoid: FiniteMonoid
    gen_image: Mapping[str, int]
    words: tuple | None = None
    action: np.ndarray | None = None
    initial: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "gen_image", {a: int(self.gen_image[a]) for a in self.alphabet})
        if set(self.gen_image) != set(self.alphabet):
            raise InvalidStructure("every letter needs an image")
        if self.words is None:
            words = _shortest_words(self.monoid, self.alphabet, self.gen_image)
            if any(w is None for w in words):
                missing = words.index(None)
                raise InvalidStructure("stamp is not surjective", (missing,))
            object.__setattr__(self, "words", tuple(words))

    def image(self, word: Iterable[str]) -> int:
        m = self.monoid
        acc = m.identity
        for a in word:
            acc = int(m.table[acc, self.gen_image[a]])
        return acc

    @property
    def generators(self) -> list[int]:
        return [self.gen_image[a] for a in self.alphabet]


@dataclass(frozen=True, eq=False)
class AcceptingSubset:
    """Image η(L) ⊆ M of a language recognized by ``stamp``."""

    stamp: Stamp
    subset: frozenset

    def __post_init__(self):
        object.__setattr__(self, "subset", frozenset(int(x) for x in self.subset))
        if any(not 0 <= x < self.stamp.monoid.size for x in self.subset):
            raise InvalidStructure("accepting subset has elements outside the monoid")

    def accepts(self, word: Iterable[str]) -> bool:
        return self.stamp.image(word) in self.subset


def _shortest_words(M: FiniteMonoid, alphabet: Sequence[str], gen_image: Mapping[str, int]):
    words: list = [None] * M.size
    words[M.identity] = ""
    queue = deque([M.identity])
    letters = sorted(alphabet)
    while queue:
        x = queue.popleft()
        for a in letters:
            y = int(M.table[x, gen_image[a]])
            if words[y] is None:
                words[y] = words[x] + a
                queue.append(y)
    return words


def stamp_from_monoid(M: FiniteMonoid, gen_image: Mapping[str, int]) -> Stamp:
    return Stamp(tuple(sorted(gen_image)), M, gen_image)


def transition_monoid(d: Dfa, max_size: int = DEFAULT_MAX_MONOID) -> tuple[FiniteMonoid, Stamp]:
    """Transition monoid of ``d`` (element 0 is the identity map) and its stamp."""
    k = len(d.alphabet)
    gens = np.array([[d.delta[q][i] for q in range(d.states)] for i in range(k)],
                    dtype=np.int32).reshape(k, d.states)
    result = kernels.transformation_closure(gens, max_size)
    if result is None:
        raise SizeCapExceeded(f"transition monoid has more than {max_size} elements")
    elements, right, parent, letter = result
    table = kernels.cayley_table(right, parent, letter)
    n = elements.shape[0]
    words = [""] * n
    for j in range(1, n):
        words[j] = words[parent[j]] + d.alphabet[letter[j]]
    # BFS tree words are shortest; ties follow the DFA's alphabet order
    gen_image = {a: int(right[0, i]) for i, a in enumerate(d.alphabet)}
    M = FiniteMonoid(table, 0, labels=[w or "1" for w in words], check=False)
    elements.flags.writeable = False
    stamp = Stamp(d.alphabet, M, gen_image, words=tuple(words), action=elements, initial=d.initial)
    return M, stamp


def syntactic_stamp(d: Dfa, max_size: int = DEFAULT_MAX_MONOID) -> tuple[Stamp, AcceptingSubset]:
    """Syntactic stamp of L(d) and the accepting image η(L)."""
    m = minimize(d)
    _, stamp = transition_monoid(m, max_size)
    P = {x for x in range(stamp.monoid.size) if int(stamp.action[x, m.initial]) in m.accepting}
    return stamp, AcceptingSubset(stamp, frozenset(P))


def stamp_dfa(stamp: Stamp, subset: Iterable[int]) -> Dfa:
    """Automaton with states M reading letters by right multiplication (not minimized)."""
    M = stamp.monoid
    delta = [[int(M.table[x, stamp.gen_image[a]]) for a in stamp.alphabet] for x in range(M.size)]
    return Dfa(stamp.alphabet, M.size, M.identity, frozenset(subset), delta)


def _future_inclusion(delta: np.ndarray, final: np.ndarray) -> np.ndarray:
    """``incl[p, p']`` iff every word accepted from p is accepted from p'."""
    bad = final[:, None] & ~final[None, :]
    while True:
        new = bad.copy()
        for g in range(delta.shape[1]):
            col = delta[:, g]
            new |= bad[np.ix_(col, col)]
        if (new == bad).all():
            return ~bad
        bad = new


def syntactic_order(stamp: Stamp, P: AcceptingSubset | Iterable[int], *, check: bool = True) -> OrderedMonoid:
    """Order m₁ ≤ m₂ iff every context (s, t) with s·m₂·t ∈ P has s·m₁·t ∈ P."""
    subset = P.subset if isinstance(P, AcceptingSubset) else frozenset(P)
    M = stamp.monoid
    gens = stamp.generators
    action = stamp.action
    q0 = stamp.initial
    if action is not None:
        # states reached from q0 by the action, and a final set saturating P
        reach = action[:, q0]
        final_of = {}
        saturated = True
        for m in range(M.size):
            q, inside = int(reach[m]), m in subset
            if final_of.setdefault(q, inside) != inside:
                saturated = False
                break
        if not saturated:
            action = None
    if action is None:
        action = np.ascontiguousarray(M.table.T)      # regular right representation
        q0 = M.identity
        final_of = {int(M.table[q0, m]): m in subset for m in range(M.size)}
    nq = action.shape[1]
    final = np.zeros(nq, dtype=bool)
    for q, f in final_of.items():
        final[q] = f
    delta = np.stack([action[g] for g in gens], axis=1) if gens else np.zeros((nq, 0), dtype=np.int32)
    incl = _future_inclusion(delta, final)
    states = np.array(sorted(final_of), dtype=np.int64)
    A = action[:, states]                              # (n, |reachable states|)
    n = M.size
    leq = np.empty((n, n), dtype=bool)
    chunk = max(1, 8_000_000 // max(1, n * len(states)))
    for start in range(0, n, chunk):
        rows = A[start:start + chunk]                  # candidate m1
        # m1 <= m2 iff for all q: incl[q·m2, q·m1]
        leq[start:start + chunk] = incl[A[None, :, :], rows[:, None, :]].all(axis=2)
    om = OrderedMonoid(M, leq)
    if check:
        om.check(gens)
    return om


# --------------------------------------------------------------------------
# ω-powers, idempotents, Green's relations


def omega_power(M: FiniteSemigroup, m: int) -> int:
    """The unique idempotent among m, m², m³, …"""
    return int(M.omega_table[m])


def omega_offset_power(M: FiniteSemigroup, m: int, k: int) -> int:
    """m^(ω+k) = e·m^(k mod p), with e = m^ω and p the period of m."""
    e = int(M.omega_table[m])
    for _ in range(k % int(M.period_table[m])):
        e = int(M.table[e, m])
    return e


def idempotents(M: FiniteSemigroup) -> frozenset:
    t = M.table
    return frozenset(int(x) for x in np.flatnonzero(t[np.arange(M.size), np.arange(M.size)] == np.arange(M.size)))


@dataclass(frozen=True)
class GreenClasses:
    R: tuple
    L: tuple
    J: tuple
    H: tuple


def _scc_labels(n: int, edges_from: np.ndarray, edges_to: np.ndarray) -> np.ndarray:
    graph = coo_matrix((np.ones(len(edges_from), dtype=np.int8), (edges_from, edges_to)), shape=(n, n)).tocsr()
    return connected_components(graph, directed=True, connection="strong")[1]


def _partition(labels: np.ndarray) -> tuple:
    groups: dict = {}
    for x, lab in enumerate(labels.tolist()):
        groups.setdefault(lab, []).append(x)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def _green_labels(M: FiniteSemigroup, generators: Sequence[int] | None):
    n = M.size
    t = M.table
    gens = np.arange(n) if generators is None else np.asarray(list(generators), dtype=np.int64)
    src = np.repeat(np.arange(n), len(gens))
    right_to = t[:, gens].reshape(-1)
    left_to = t[gens, :].T.reshape(-1)
    r = _scc_labels(n, src, right_to)
    l = _scc_labels(n, src, left_to)
    j = _scc_labels(n, np.concatenate([src, src]), np.concatenate([right_to, left_to]))
    return r, l, j


def green_classes(M: FiniteSemigroup, generators: Sequence[int] | None = None) -> GreenClasses:
    """R, L, J and H partitions of a finite monoid.

    x R y iff xM = yM, computed as strongly connected components of the
    right Cayley graph; ``generators`` (a monoid generating set) shrinks the
    graph, all elements are used otherwise.  Only valid for monoids: a
    semigroup without identity needs the S¹ ideals.
    """
    r, l, j = _green_labels(M, generators)
    h = np.unique(np.stack([r, l], axis=1), axis=0, return_inverse=True)[1].reshape(-1)
    return GreenClasses(_partition(r), _partition(l), _partition(j), _partition(h))


def _trivial(labels: np.ndarray) -> bool:
    return len(np.unique(labels)) == len(labels)


def is_J_trivial(M: FiniteMonoid, generators=None) -> bool:
    return _trivial(_green_labels(M, generators)[2])


def is_R_trivial(M: FiniteMonoid, generators=None) -> bool:
    return _trivial(_green_labels(M, generators)[0])


def is_L_trivial(M: FiniteMonoid, generators=None) -> bool:
    return _trivial(_green_labels(M, generators)[1])


def is_H_trivial(M: FiniteMonoid, generators=None) -> bool:
    """No nontrivial subgroup (aperiodicity), via H-classes."""
    return all(len(c) == 1 for c in green_classes(M, generators).H)


# --------------------------------------------------------------------------
# subsemigroups of a stamp


def _sub_semigroup(M: FiniteMonoid, elements: Sequence[int], labels=None) -> FiniteSemigroup:
    elements = sorted(elements)
    index = {x: i for i, x in enumerate(elements)}
    sub = M.table[np.ix_(elements, elements)]
    table = np.vectorize(index.__getitem__, otypes=[np.int32])(sub) if sub.size else sub
    return FiniteSemigroup(table, labels=labels, embedding=elements, check=False)


def semigroup_closure(M: FiniteSemigroup, seeds: Iterable[int], multipliers: Iterable[int] | None = None) -> set:
    """Products of one or more elements of ``seeds`` (closure under right multiplication)."""
    seeds = set(int(s) for s in seeds)
    mult = sorted(seeds if multipliers is None else set(multipliers))
    found = set(seeds)
    queue = deque(seeds)
    while queue:
        x = queue.popleft()
        for g in mult:
            y = int(M.table[x, g])
            if y not in found:
                found.add(y)
                queue.append(y)
    return found


def syntactic_semigroup(stamp: Stamp) -> FiniteSemigroup:
    """φ(A⁺) as a standalone semigroup (``embedding`` maps back into M)."""
    elems = semigroup_closure(stamp.monoid, stamp.generators)
    labels = [stamp.words[x] or "1" for x in sorted(elems)]
    return _sub_semigroup(stamp.monoid, elems, labels)


def power_images(stamp: Stamp) -> tuple[list[frozenset], int, int]:
    """Sets φ(A¹), φ(A²), … up to the first repetition.

    Returns ``(sets, index, period)`` with ``sets[k - 1] = φ(Aᵏ)`` for
    ``1 ≤ k < index + period`` and φ(A^(k+period)) = φ(Aᵏ) for k ≥ index.
    """
    t = stamp.monoid.table
    gens = sorted(set(stamp.generators))
    current = frozenset(gens)
    seen = {}
    sets = []
    k = 1
    while current not in seen:
        seen[current] = k
        sets.append(current)
        current = frozenset(int(t[x, g]) for x in current for g in gens)
        k += 1
    index = seen[current]
    return sets, index, k - index


def stable_semigroup(stamp: Stamp) -> tuple[int, FiniteSemigroup]:
    """Least s > 0 with φ(Aˢ) = φ(A²ˢ), and φ(Aˢ) as a semigroup."""
    sets, index, period = power_images(stamp)
    if not stamp.alphabet:
        s = 1
        elems = {stamp.monoid.identity}
    else:
        s = period * math.ceil(index / period)   # index <= s < index + period
        elems = sets[s - 1]
    labels = [stamp.words[x] or "1" for x in sorted(elems)]
    return s, _sub_semigroup(stamp.monoid, elems, labels)


# --------------------------------------------------------------------------
# ideals and ρ_A


def minimal_ideal(M: FiniteSemigroup) -> frozenset:
    """The minimal two-sided ideal MzM, z being the product of all elements."""
    t = M.table
    z = M.product(range(M.size))
    row = np.unique(t[z])                     # zM
    K = np.unique(t[:, row])                  # M(zM)
    if isinstance(M, FiniteMonoid):
        K = np.union1d(K, row)
    return frozenset(int(x) for x in K)


def has_zero(M: FiniteSemigroup) -> bool:
    return len(minimal_ideal(M)) == 1


def _length_lex(alphabet: Sequence[str]):
    n = 0
    while True:
        for t in itertools.product(sorted(alphabet), repeat=n):
            yield "".join(t)
        n += 1


def rho_image(stamp: Stamp) -> int:
    """Image of ρ_A: iterate m ← (m·φ(v_n)·m)^ω from m = 1.

    v_n = u_1⋯u_n for u_1, u_2, … the words in length-lex order.  Stops at
    the first repeated value that is an idempotent of the minimal ideal.
    """
    M = stamp.monoid
    K = minimal_ideal(M)
    m = M.identity
    v = M.identity
    for u in _length_lex(stamp.alphabet):
        v = M.mul(v, stamp.image(u))
        nxt = omega_power(M, M.mul(M.mul(m, v), m))
        if nxt == m and m in K and M.mul(m, m) == m:
            return m
        m = nxt


# --------------------------------------------------------------------------
# products and division


def direct_product(M: FiniteMonoid, N: FiniteMonoid) -> FiniteMonoid:
    """Componentwise product; pair (i, j) is element ``i*|N| + j`` before relabelling."""
    a, b = M.size, N.size
    i = np.arange(a * b) // b
    j = np.arange(a * b) % b
    table = M.table[i[:, None], i[None, :]] * b + N.table[j[:, None], j[None, :]]
    labels = [f"({x},{y})" for x, y in zip(i.tolist(), j.tolist())]
    P = FiniteMonoid(table, M.identity * b + N.identity, labels=labels, check=False)
    return P.canonical()


def submonoid_generated(M: FiniteMonoid, gens: Iterable[int]) -> frozenset:
    return frozenset(semigroup_closure(M, set(gens) | {M.identity}))


def _all_submonoids(N: FiniteMonoid) -> list[frozenset]:
    found = {frozenset({N.identity})}
    frontier = list(found)
    while frontier:
        nxt = []
        for sub in frontier:
            for x in range(N.size):
                if x not in sub:
                    bigger = submonoid_generated(N, sub | {x})
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def _surjective_morphism(N: FiniteMonoid, sub: frozenset, M: FiniteMonoid) -> dict | None:
    # pick a generating set of sub, greedily
    gens: list[int] = []
    span = frozenset({N.identity})
    for x in sorted(sub):
        if x not in span:
            gens.append(x)
            span = submonoid_generated(N, gens)
    for images in itertools.product(range(M.size), repeat=len(gens)):
        f = {N.identity: M.identity}
        queue = deque([N.identity])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for g, img in zip(gens, images):
                y = N.mul(x, g)
                val = M.mul(f[x], img)
                if y in f:
                    if f[y] != val:
                        ok = False
                        break
                else:
                    f[y] = val
                    queue.append(y)
        if not ok or len(set(f.values())) != M.size:
            continue
        if all(f[N.mul(x, y)] == M.mul(f[x], f[y]) for x in sub for y in sub):
            return f
    return None


def divides(M: FiniteMonoid, N: FiniteMonoid, cap: int = DEFAULT_DIVIDES_CAP) -> bool:
    """Whether M is a quotient of a submonoid of N (exhaustive; oracle scale only)."""
    if N.size > cap:
        raise SizeCapExceeded(f"divides is oracle-scale only: |N| = {N.size} exceeds cap {cap}")
    for sub in _all_submonoids(N):
        if len(sub) >= M.size and _surjective_morphism(N, sub, M) is not None:
            return True
    return False


# --------------------------------------------------------------------------
# named small monoids


def u1() -> FiniteMonoid:
    """U₁ = {1, 0} under multiplication (identity is index 0)."""
    return FiniteMonoid([[0, 1], [1, 1]], 0, labels=["1", "0"])


def cyclic_group(n: int) -> FiniteMonoid:
    return FiniteMonoid([[(i + j) % n for j in range(n)] for i in range(n)], 0,
                        labels=[f"g{i}" if i else "1" for i in range(n)])


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid([[0]], 0, labels=["1"])
