"""Semidirect, wreath and block products, and the stamps recognizing LaA* and KaL."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Hashable

import numpy as np

from . import automata as au
from .algebra import AcceptingSubset, FiniteMonoid, Stamp, stamp_dfa
from .errors import InvalidStructure, SizeCapExceeded, VarietyLabError

DEFAULT_WREATH_CAP = 100_000
# dense tables beyond this many entries are refused
MAX_TABLE_ENTRIES = 64_000_000


def _check_table_size(n: int) -> None:
    if n * n > MAX_TABLE_ENTRIES:
        raise SizeCapExceeded(f"a {n}-element multiplication table is too large to build")


# --------------------------------------------------------------------------
# actions


@dataclass(frozen=True, eq=False)
class LeftAction:
    """``table[t, s]`` is t·s, the action of T on S."""

    T: FiniteMonoid
    S: FiniteMonoid
    table: np.ndarray

    def __post_init__(self):
        tab = np.asarray(self.table, dtype=np.int32)
        if tab.shape != (self.T.size, self.S.size):
            raise InvalidStructure(f"left action table must have shape {(self.T.size, self.S.size)}")
        tab.flags.writeable = False
        object.__setattr__(self, "table", tab)

    def __call__(self, t: int, s: int) -> int:
        return int(self.table[t, s])

    def violation(self):
        """First law violation as ``(law, witness)``, or ``None``."""
        lam, S, T = self.table, self.S.table, self.T.table
        if ((lam < 0) | (lam >= self.S.size)).any():
            return "range", tuple(int(v) for v in np.argwhere((lam < 0) | (lam >= self.S.size))[0])
        bad = np.argwhere(lam[:, self.S.identity] != self.S.identity)
        if bad.size:
            return "t·1 = 1", (int(bad[0, 0]),)
        bad = np.argwhere(lam[self.T.identity] != np.arange(self.S.size))
        if bad.size:
            return "1·s = s", (int(bad[0, 0]),)
        for t in range(self.T.size):
            # t·(ss') = (t·s)(t·s')
            lhs = lam[t][S]
            rhs = S[np.ix_(lam[t], lam[t])]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                return "t·(ss') = (t·s)(t·s')", (t, int(bad[0, 0]), int(bad[0, 1]))
            # (tt')·s = t·(t'·s)
            lhs = lam[T[t]]
            rhs = lam[t][lam]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                return "(tt')·s = t·(t'·s)", (t, int(bad[0, 0]), int(bad[0, 1]))
        return None

    def validate(self) -> "LeftAction":
        found = self.violation()
        if found is not None:
            raise InvalidStructure(f"left action violates {found[0]}", found[1])
        return self


def trivial_action(T: FiniteMonoid, S: FiniteMonoid) -> LeftAction:
    return LeftAction(T, S, np.tile(np.arange(S.size, dtype=np.int32), (T.size, 1)))


@dataclass(frozen=True, eq=False)
class BiAction:
    """A left action of T on S and a right action ``right[s, t]`` = s·t that commute."""

    left: LeftAction
    right: np.ndarray

    def __post_init__(self):
        tab = np.asarray(self.right, dtype=np.int32)
        if tab.shape != (self.S.size, self.T.size):
            raise InvalidStructure(f"right action table must have shape {(self.S.size, self.T.size)}")
        tab.flags.writeable = False
        object.__setattr__(self, "right", tab)

    @property
    def S(self):
        return self.left.S

    @property
    def T(self):
        return self.left.T

    def violation(self):
        found = self.left.violation()
        if found is not None:
            return found
        rho, lam, S, T = self.right, self.left.table, self.S.table, self.T.table
        if ((rho < 0) | (rho >= self.S.size)).any():
            return "range", tuple(int(v) for v in np.argwhere((rho < 0) | (rho >= self.S.size))[0])
        bad = np.argwhere(rho[self.S.identity] != self.S.identity)
        if bad.size:
            return "1·t = 1", (int(bad[0, 0]),)
        bad = np.argwhere(rho[:, self.T.identity] != np.arange(self.S.size))
        if bad.size:
            return "s·1 = s", (int(bad[0, 0]),)
        for t in range(self.T.size):
            col = rho[:, t]
            bad = np.argwhere(col[S] != S[np.ix_(col, col)])
            if bad.size:
                return "(ss')·t = (s·t)(s'·t)", (int(bad[0, 0]), int(bad[0, 1]), t)
            # s·(tt') = (s·t)·t'
            bad = np.argwhere(rho[:, T[t]] != rho[col])
            if bad.size:
                return "s·(tt') = (s·t)·t'", (int(bad[0, 0]), t, int(bad[0, 1]))
            # t·(s·t') = (t·s)·t'
            bad = np.argwhere(lam[t][rho] != rho[lam[t]])
            if bad.size:
                return "t·(s·t') = (t·s)·t'", (t, int(bad[0, 0]), int(bad[0, 1]))
        return None

    def validate(self) -> "BiAction":
        found = self.violation()
        if found is not None:
            raise InvalidStructure(f"bi-action violates {found[0]}", found[1])
        return self


# --------------------------------------------------------------------------
# products with their component structure retained


@dataclass(frozen=True, eq=False)
class ProductData:
    """How a product monoid is built: element i is the pair ``pairs[i]``.

    ``s_mul``/``s_one`` give the first factor's multiplication and identity
    (first components may be arbitrary hashable values), ``act(t, s)`` the
    left action, and ``ract(s, t)`` the right action of block products.
    """

    kind: str
    pairs: tuple
    T: FiniteMonoid
    s_mul: Callable
    s_one: Hashable
    act: Callable
    ract: Callable | None = None

    def multiply(self, x, y):
        (s, t), (s2, t2) = x, y
        if self.kind == "block":
            first = self.s_mul(self.ract(s, t2), self.act(t, s2))
        else:
            first = self.s_mul(s, self.act(t, s2))
        return first, self.T.mul(t, t2)


class ProductMonoid(FiniteMonoid):
    """A finite monoid that remembers it is a semidirect or block product."""

    def __init__(self, table, identity: int, data: ProductData, **kwargs):
        super().__init__(table, identity, **kwargs)
        self.data = data

    @property
    def pairs(self):
        return self.data.pairs


def semidirect_product(S: FiniteMonoid, T: FiniteMonoid, act: LeftAction, check: bool = True) -> ProductMonoid:
    """S ∗ T on pairs with (s,t)(s',t') = (s·(t·s'), tt'); element (s,t) has index s·|T| + t."""
    if act.S is not S and act.S != S or act.T is not T and act.T != T:
        raise InvalidStructure("action does not match the factors")
    act.validate()
    nS, nT = S.size, T.size
    n = nS * nT
    _check_table_size(n)
    s = np.repeat(np.arange(nS), nT)
    t = np.tile(np.arange(nT), nS)
    first = S.table[s[:, None], act.table[t[:, None], s[None, :]]]
    second = T.table[t[:, None], t[None, :]]
    table = first * nT + second
    data = ProductData("semidirect", tuple(zip(s.tolist(), t.tolist())), T,
                       S.mul, S.identity, act.__call__)
    return ProductMonoid(table, S.identity * nT + T.identity, data, check=check)


def block_product(S: FiniteMonoid, T: FiniteMonoid, act: BiAction, check: bool = True) -> ProductMonoid:
    """S ⋈ T with (s,t)(s',t') = ((s·t')(t·s'), tt')."""
    act.validate()
    nS, nT = S.size, T.size
    n = nS * nT
    _check_table_size(n)
    s = np.repeat(np.arange(nS), nT)
    t = np.tile(np.arange(nT), nS)
    left = act.right[s[:, None], t[None, :]]
    right = act.left.table[t[:, None], s[None, :]]
    table = S.table[left, right] * nT + T.table[t[:, None], t[None, :]]
    data = ProductData("block", tuple(zip(s.tolist(), t.tolist())), T, S.mul, S.identity,
                       act.left.__call__, lambda x, y: int(act.right[x, y]))
    return ProductMonoid(table, S.identity * nT + T.identity, data, check=check)


def direct_power(U: FiniteMonoid, k: int) -> FiniteMonoid:
    """U^k with coordinates as base-|U| digits (coordinate 0 least significant)."""
    n = U.size ** k
    _check_table_size(n)
    idx = np.arange(n)
    digits = [(idx // U.size ** x) % U.size for x in range(k)]
    table = np.zeros((n, n), dtype=np.int64)
    for x in range(k):
        table += U.table[digits[x][:, None], digits[x][None, :]] * U.size ** x
    one = sum(U.identity * U.size ** x for x in range(k))
    return FiniteMonoid(table.astype(np.int32), one, check=False)


def wreath_product(U: FiniteMonoid, T: FiniteMonoid, cap: int = DEFAULT_WREATH_CAP) -> tuple[ProductMonoid, LeftAction]:
    """U ∘ T = U^T ∗ T with t acting by (t·f)(x) = f(xt)."""
    size = U.size ** T.size * T.size
    if size > cap:
        raise SizeCapExceeded(f"wreath product would have {size} elements (cap {cap})")
    S = direct_power(U, T.size)
    f = np.arange(S.size)
    digits = np.stack([(f // U.size ** x) % U.size for x in range(T.size)])   # digits[x, f]
    weights = U.size ** np.arange(T.size)
    lam = np.empty((T.size, S.size), dtype=np.int64)
    for t in range(T.size):
        lam[t] = (digits[T.table[:, t]] * weights[:, None]).sum(axis=0)
    act = LeftAction(T, S, lam)
    return semidirect_product(S, T, act), act


# --------------------------------------------------------------------------
# stamps into products, restricted to the generated submonoid


def generated_stamp(alphabet, images: dict, multiply, one, data_kind=None, T=None, s_mul=None,
                    s_one=None, act=None, ract=None) -> Stamp:
    """Close letter images under ``multiply`` and return the stamp onto what they generate.

    Element 0 is the identity; elements follow breadth-first discovery.
    """
    alphabet = tuple(sorted(alphabet))
    index = {one: 0}
    elems = [one]
    right = []
    head = 0
    while head < len(elems):
        x = elems[head]
        row = []
        for a in alphabet:
            y = multiply(x, images[a])
            j = index.get(y)
            if j is None:
                j = index[y] = len(elems)
                elems.append(y)
            row.append(j)
        right.append(row)
        head += 1
    n = len(elems)
    _check_table_size(n)
    table = np.array([[index[multiply(x, y)] for y in elems] for x in elems], dtype=np.int32)
    gen_image = {a: index[images[a]] for a in alphabet}
    if data_kind is None:
        M = FiniteMonoid(table, 0, check=False)
    else:
        data = ProductData(data_kind, tuple(elems), T, s_mul, s_one, act, ract)
        M = ProductMonoid(table, 0, data, check=False)
    return Stamp(alphabet, M, gen_image)


def _zero_set_action(T: FiniteMonoid, coords: list, shift) -> dict:
    """For each t, the map Z ↦ {c : shift(c, t) ∈ Z} on zero sets of U₁^coords."""
    out = {}
    for t in range(T.size):
        pre = [(c, shift(c, t)) for c in coords]
        out[t] = pre
    return out


def la_astar_stamp(phi: Stamp, P: AcceptingSubset | frozenset, a: str) -> tuple[Stamp, AcceptingSubset]:
    """Stamp into U₁^T ∗ T recognizing L·a·A*, where L = φ⁻¹(P).

    A first component in U₁^T is stored as the frozenset of coordinates
    equal to 0; multiplying is union and t·Z = {x : xt ∈ Z}.
    """
    if a not in phi.alphabet:
        raise VarietyLabError(f"letter {a!r} is not in the alphabet")
    subset = frozenset(P.subset if isinstance(P, AcceptingSubset) else P)
    T = phi.monoid
    coords = list(range(T.size))
    pre = _zero_set_action(T, coords, lambda x, t: int(T.table[x, t]))

    def act(t, Z):
        return frozenset(c for c, image in pre[t] if image in Z)

    def s_mul(Z1, Z2):
        return Z1 | Z2

    def multiply(x, y):
        return s_mul(x[0], act(x[1], y[0])), T.mul(x[1], y[1])

    images = {b: (subset if b == a else frozenset(), phi.gen_image[b]) for b in phi.alphabet}
    one = (frozenset(), T.identity)
    stamp = generated_stamp(phi.alphabet, images, multiply, one, "semidirect", T, s_mul,
                            frozenset(), act)
    accept = frozenset(i for i, (Z, _) in enumerate(stamp.monoid.pairs) if T.identity in Z)
    return stamp, AcceptingSubset(stamp, accept)


def kal_stamp(phi: Stamp, K: AcceptingSubset | frozenset, a: str,
              L: AcceptingSubset | frozenset) -> tuple[Stamp, AcceptingSubset]:
    """Stamp into U₁^(T×T) ⋈ T recognizing K·a·L for K = φ⁻¹(K_subset), L = φ⁻¹(L_subset).

    Coordinate (x, y) of the first component is 0 once some factorization
    u·a·v has x·φ(u) in the image of K and φ(v)·y in the image of L.
    """
    if a not in phi.alphabet:
        raise VarietyLabError(f"letter {a!r} is not in the alphabet")
    Kset = frozenset(K.subset if isinstance(K, AcceptingSubset) else K)
    Lset = frozenset(L.subset if isinstance(L, AcceptingSubset) else L)
    T = phi.monoid
    n = T.size
    coords = [(x, y) for x in range(n) for y in range(n)]
    left_pre = _zero_set_action(T, coords, lambda c, t: (int(T.table[c[0], t]), c[1]))
    right_pre = _zero_set_action(T, coords, lambda c, t: (c[0], int(T.table[t, c[1]])))

    def act(t, Z):
        return frozenset(c for c, image in left_pre[t] if image in Z)

    def ract(Z, t):
        return frozenset(c for c, image in right_pre[t] if image in Z)

    def s_mul(Z1, Z2):
        return Z1 | Z2

    def multiply(p, q):
        return s_mul(ract(p[0], q[1]), act(p[1], q[0])), T.mul(p[1], q[1])

    marked = frozenset((x, y) for x in range(n) for y in range(n) if x in Kset and y in Lset)
    images = {b: (marked if b == a else frozenset(), phi.gen_image[b]) for b in phi.alphabet}
    one = (frozenset(), T.identity)
    stamp = generated_stamp(phi.alphabet, images, multiply, one, "block", T, s_mul,
                            frozenset(), act, ract)
    target = (T.identity, T.identity)
    accept = frozenset(i for i, (Z, _) in enumerate(stamp.monoid.pairs) if target in Z)
    return stamp, AcceptingSubset(stamp, accept)


def semidirect_stamp(S: FiniteMonoid, T: FiniteMonoid, act: LeftAction, images: dict) -> Stamp:
    """Stamp onto the submonoid of S ∗ T generated by letter images given as (s, t) pairs."""
    act.validate()

    def multiply(x, y):
        return S.mul(x[0], act(x[1], y[0])), T.mul(x[1], y[1])

    return generated_stamp(tuple(images), {a: tuple(map(int, v)) for a, v in images.items()},
                           multiply, (S.identity, T.identity), "semidirect", T, S.mul,
                           S.identity, act.__call__)


# --------------------------------------------------------------------------
# reference automata and verification


def language_of(stamp: Stamp, subset: AcceptingSubset | frozenset) -> au.Dfa:
    sub = subset.subset if isinstance(subset, AcceptingSubset) else subset
    return au.minimize(stamp_dfa(stamp, sub))


def _letter_then_anything(alphabet, a: str) -> au.Dfa:
    k = len(alphabet)
    delta = [[1 if b == a else 2 for b in alphabet], [1] * k, [2] * k]
    return au.Dfa(tuple(alphabet), 3, 0, {1}, delta)


def _single_letter(alphabet, a: str) -> au.Dfa:
    k = len(alphabet)
    delta = [[1 if b == a else 2 for b in alphabet], [2] * k, [2] * k]
    return au.Dfa(tuple(alphabet), 3, 0, {1}, delta)


def la_astar_reference(L: au.Dfa, a: str) -> au.Dfa:
    return au.minimize(au.concatenate(L, _letter_then_anything(L.alphabet, a)))


def kal_reference(K: au.Dfa, a: str, L: au.Dfa) -> au.Dfa:
    return au.minimize(au.concatenate(au.concatenate(K, _single_letter(K.alphabet, a)), L))


# --------------------------------------------------------------------------
# wreath product principle


@dataclass(frozen=True, eq=False)
class WreathDecomposition:
    """φ(w) = (χ(σ(w)), ψ(w)) for a stamp into a semidirect product."""

    psi: Stamp
    psi_of_element: dict
    chi_table: dict
    data: ProductData
    phi: Stamp

    def sigma(self, word: str) -> list:
        """Letters (ψ(prefix), a) over the alphabet T × A."""
        out = []
        prefix = self.psi.monoid.identity
        for a in word:
            out.append((self.psi_of_element[prefix], a))
            prefix = self.psi.monoid.mul(prefix, self.psi.gen_image[a])
        return out

    def chi(self, t: int, a: str):
        return self.chi_table[(t, a)]

    def first_component(self, word: str):
        acc = self.data.s_one
        for t, a in self.sigma(word):
            acc = self.data.s_mul(acc, self.chi(t, a))
        return acc

    def check_word(self, word: str) -> bool:
        s, t = self.data.pairs[self.phi.image(word)]
        return s == self.first_component(word) and t == self.psi_of_element[self.psi.image(word)]

    def check(self, max_len: int = 5) -> None:
        for w in au.all_words(self.phi.alphabet, max_len):
            if not self.check_word(w):
                raise InvalidStructure(f"wreath product factorization fails on {w!r}", (w,))


def wreath_decompose(phi: Stamp, max_len: int = 5) -> WreathDecomposition:
    """Split a stamp into a semidirect product S ∗ T along the wreath product principle.

    ψ is the second projection (onto the submonoid of T it reaches) and
    χ(t, a) = t·s_a.  The factorization is checked on all words up to
    ``max_len``.
    """
    data = getattr(phi.monoid, "data", None)
    if data is None or data.kind != "semidirect":
        raise VarietyLabError("stamp target carries no semidirect product structure")
    T = data.T
    second = {a: data.pairs[phi.gen_image[a]][1] for a in phi.alphabet}
    psi = generated_stamp(phi.alphabet, second, T.mul, T.identity)
    # generated_stamp renumbers; recover the T element of each ψ element
    psi_of_element = {i: T.product((second[a] for a in w), T.identity) for i, w in enumerate(psi.words)}
    chi_table = {(t, a): data.act(t, data.pairs[phi.gen_image[a]][0])
                 for t in set(psi_of_element.values()) for a in phi.alphabet}
    dec = WreathDecomposition(psi, psi_of_element, chi_table, data, phi)
    dec.check(max_len)
    return dec


def all_actions(T: FiniteMonoid, S: FiniteMonoid, limit: int = 10_000):
    """Every valid left action of T on S, for tiny monoids (at most ``limit`` candidates)."""
    total = S.size ** (S.size * T.size)
    if total > limit:
        raise SizeCapExceeded(f"{total} candidate action tables exceed the limit {limit}")
    for flat in iproduct(range(S.size), repeat=S.size * T.size):
        act = LeftAction(T, S, np.array(flat).reshape(T.size, S.size))
        if act.violation() is None:
            yield act


def common_stamp(*dfas: au.Dfa) -> tuple[Stamp, list[AcceptingSubset]]:
    """One stamp recognizing every given language (transition monoid of their product)."""
    from .algebra import transition_monoid

    alphabet = tuple(sorted(set().union(*(d.alphabet for d in dfas))))
    dfas = [au.extend_alphabet(d, alphabet) if d.alphabet != alphabet else d for d in dfas]
    start = tuple(d.initial for d in dfas)
    index = {start: 0}
    states = [start]
    delta = []
    head = 0
    while head < len(states):
        cur = states[head]
        row = []
        for i in range(len(alphabet)):
            nxt = tuple(d.delta[q][i] for d, q in zip(dfas, cur))
            if nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
            row.append(index[nxt])
        delta.append(row)
        head += 1
    product_dfa = au.Dfa(alphabet, len(states), 0, frozenset(), delta)
    _, stamp = transition_monoid(product_dfa)
    subsets = []
    for k, d in enumerate(dfas):
        sub = {m for m in range(stamp.monoid.size) if states[int(stamp.action[m, 0])][k] in d.accepting}
        subsets.append(AcceptingSubset(stamp, frozenset(sub)))
    return stamp, subsets
