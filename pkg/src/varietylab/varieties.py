"""Catalog of pseudovarieties with membership deciders, and language classification."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, fields

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import automata as au
from .algebra import (
    AcceptingSubset,
    FiniteSemigroup,
    Stamp,
    has_zero,
    idempotents,
    is_H_trivial,
    is_J_trivial,
    is_L_trivial,
    is_R_trivial,
    minimal_ideal,
    stable_semigroup,
    syntactic_order,
    syntactic_semigroup,
    syntactic_stamp,
)
from .errors import InternalInconsistency, SizeCapExceeded
from .identities import (
    Counterexample,
    parse_identity,
    semigroup_counterexample,
    stamp_counterexample,
)

CARRIERS = ("monoid", "ordered-monoid", "semigroup", "stamp-C_ne", "stamp-C_lm", "structural")


@dataclass(frozen=True)
class VarietyDef:
    name: str
    carrier: str
    identities: tuple = ()
    alternate: tuple = ()
    structural: str | None = None
    note: str = ""

    @property
    def interpretation(self) -> str:
        return {"semigroup": "semigroup", "stamp-C_ne": "C_ne", "stamp-C_lm": "C_lm"}.get(self.carrier, "plain")

    def parsed(self, which: str = "identities"):
        return [parse_identity(s, self.interpretation) for s in getattr(self, which)]


_REGISTRY = (
    VarietyDef("J1", "monoid", ("xy = yx", "x^2 = x"), structural="commutative_idempotent",
               note="idempotent and commutative monoids; languages determined by their letter set"),
    VarietyDef("J", "monoid", ("(xy)^w x = (xy)^w", "y(xy)^w = (xy)^w"),
               alternate=("(xy)^w = (yx)^w", "x x^w = x^w"), structural="J_trivial",
               note="J-trivial monoids; piecewise testable languages"),
    VarietyDef("A", "monoid", ("x^w = x x^w",), structural="aperiodic",
               note="aperiodic monoids; star-free and FO[<] languages"),
    VarietyDef("G", "monoid", ("x^w = 1",), structural="group", note="finite groups"),
    VarietyDef("Com", "monoid", ("xy = yx",), structural="commutative", note="commutative monoids"),
    VarietyDef("J1vG", "monoid", ("x^(w+1) = x", "x^w y^w = y^w x^w"),
               note="join of J1 and G"),
    VarietyDef("R", "monoid", ("(xy)^w x = (xy)^w",), structural="R_trivial", note="R-trivial monoids"),
    VarietyDef("L", "monoid", ("y(xy)^w = (xy)^w",), structural="L_trivial", note="L-trivial monoids"),
    VarietyDef("DA", "monoid", ("(xyz)^w z (xyz)^w = (xyz)^w",),
               note="two-variable FO[<] and unambiguous polynomials"),
    VarietyDef("K", "semigroup", ("x^w y = x^w",), structural="idempotents_left_zero",
               note="reverse definite semigroups"),
    VarietyDef("D", "semigroup", ("y x^w = x^w",), structural="idempotents_right_zero",
               note="definite semigroups"),
    VarietyDef("LI", "semigroup", ("x^w y x^w = x^w",), structural="locally_trivial",
               note="locally trivial semigroups, join of K and D"),
    VarietyDef("Nilpotent", "semigroup", structural="nilpotent",
               note="unique idempotent, which is a zero"),
    VarietyDef("J+", "ordered-monoid", ("x <= 1",), structural="identity_is_maximum",
               note="Sigma_1[<] languages"),
    VarietyDef("PolIneq", "ordered-monoid", ("x^w y x^w <= x^w",),
               note="the inequality defining polynomial closure, checked on its own"),
    VarietyDef("K1", "stamp-C_ne", ("xy = x",),
               note="membership decided by the first letter"),
    VarietyDef("QA", "stamp-C_lm", ("(x^(w-1)y)^w = (x^(w-1)y)^(w+1)",), structural="stable_aperiodic",
               note="quasiaperiodic stamps; FO[<, mod] languages"),
    VarietyDef("Zero", "monoid", structural="has_zero", note="languages with zero"),
)

_BY_NAME = {v.name.lower(): v for v in _REGISTRY}
_ALIASES = {"j₁": "j1", "j^+": "j+", "jplus": "j+", "k₁": "k1", "nil": "nilpotent", "j1∨g": "j1vg"}


def registry() -> list[VarietyDef]:
    return list(_REGISTRY)


def lookup(name: str) -> VarietyDef:
    key = name.lower()
    key = _ALIASES.get(key, key)
    if key not in _BY_NAME:
        raise KeyError(f"unknown variety {name!r}; known: {', '.join(v.name for v in _REGISTRY)}")
    return _BY_NAME[key]


# --------------------------------------------------------------------------
# structural deciders


def _semigroup_of(stamp: Stamp) -> FiniteSemigroup:
    return syntactic_semigroup(stamp)


def _left_zero_idempotents(S: FiniteSemigroup) -> bool:
    return all((S.table[e] == e).all() for e in idempotents(S))


def _right_zero_idempotents(S: FiniteSemigroup) -> bool:
    return all((S.table[:, e] == e).all() for e in idempotents(S))


def _locally_trivial(S: FiniteSemigroup) -> bool:
    t = S.table
    return all((t[t[e], e] == e).all() for e in idempotents(S))


def _nilpotent(S: FiniteSemigroup) -> bool:
    ids = idempotents(S)
    if len(ids) != 1:
        return False
    (z,) = ids
    return bool((S.table[z] == z).all() and (S.table[:, z] == z).all())


def _structural(kind: str, stamp: Stamp, P: AcceptingSubset | None) -> bool:
    M = stamp.monoid
    gens = stamp.generators
    t = M.table
    if kind == "commutative":
        return bool((t == t.T).all())
    if kind == "commutative_idempotent":
        return bool((t == t.T).all() and (t.diagonal() == np.arange(M.size)).all())
    if kind == "J_trivial":
        return is_J_trivial(M, gens)
    if kind == "R_trivial":
        return is_R_trivial(M, gens)
    if kind == "L_trivial":
        return is_L_trivial(M, gens)
    if kind == "aperiodic":
        return is_H_trivial(M, gens)
    if kind == "group":
        return idempotents(M) == {M.identity}
    if kind == "has_zero":
        return has_zero(M)
    if kind == "stable_aperiodic":
        _, S = stable_semigroup(stamp)
        return bool((S.period_table == 1).all())
    if kind in ("idempotents_left_zero", "idempotents_right_zero", "locally_trivial", "nilpotent"):
        S = _semigroup_of(stamp)
        return {"idempotents_left_zero": _left_zero_idempotents,
                "idempotents_right_zero": _right_zero_idempotents,
                "locally_trivial": _locally_trivial,
                "nilpotent": _nilpotent}[kind](S)
    if kind == "identity_is_maximum":
        if P is None:
            raise ValueError("ordered varieties need the accepting subset")
        order = syntactic_order(stamp, P)
        return bool(order.leq[:, M.identity].all())
    raise ValueError(f"unknown structural decider {kind!r}")


def structural_member(name: str, stamp: Stamp, P: AcceptingSubset | None = None) -> bool:
    v = lookup(name)
    if v.structural is None:
        raise ValueError(f"{v.name} has no structural decider")
    return _structural(v.structural, stamp, P)


# --------------------------------------------------------------------------
# membership


@dataclass(frozen=True)
class Verdict:
    member: bool
    failed_identity: str | None = None
    counterexample: Counterexample | None = None
    structural: bool | None = None

    def __bool__(self):
        return self.member


def _identity_check(v: VarietyDef, stamp: Stamp, P: AcceptingSubset | None, which="identities"):
    order = None
    if v.carrier == "ordered-monoid":
        if P is None:
            raise ValueError(f"{v.name} is an ordered variety: pass the accepting subset")
        order = syntactic_order(stamp, P)
    for ident in v.parsed(which):
        if v.carrier == "semigroup":
            S = syntactic_semigroup(stamp)
            found = semigroup_counterexample(S, ident)
            if found is not None and S.embedding is not None:
                emb = S.embedding
                found = Counterexample({k: emb[x] for k, x in found.assignment.items()},
                                       emb[found.lhs], emb[found.rhs])
        else:
            found = stamp_counterexample(stamp, ident, order)
        if found is not None:
            return str(ident), found
    return None, None


def decide(name: str, stamp: Stamp, P: AcceptingSubset | None = None) -> Verdict:
    """Membership with its evidence: the first failing identity and assignment.

    Assignments in the counterexample are monoid element indices.  For QA
    the structural test also runs and must agree.
    """
    v = lookup(name)
    if v.identities:
        failed, found = _identity_check(v, stamp, P)
        member = failed is None
        structural = None
        if v.name == "QA":
            structural = _structural("stable_aperiodic", stamp, P)
            if structural != member:
                raise InternalInconsistency(
                    f"QA deciders disagree: C_lm identity says {member}, stable semigroup says {structural}")
        return Verdict(member, failed, found, structural)
    return Verdict(_structural(v.structural, stamp, P))


def is_member(name: str, stamp: Stamp, P: AcceptingSubset | None = None) -> bool:
    return decide(name, stamp, P).member


# --------------------------------------------------------------------------
# automaton-level deciders


def forbidden_pattern_sigma1(d: au.Dfa) -> bool:
    """True iff no states q₁, q₂ = q₁·v and word w have q₁·w accepting, q₂·w not."""
    m = au.minimize(d)
    succ = [set(row) for row in m.delta]
    seeds = set()
    for q1 in range(m.states):          # all states of a minimal DFA are accessible
        seen = {q1}
        queue = deque([q1])
        while queue:
            p = queue.popleft()
            for r in succ[p]:
                if r not in seen:
                    seen.add(r)
                    queue.append(r)
        seeds.update((q1, q2) for q2 in seen)
    seen_pairs = set(seeds)
    queue = deque(seeds)
    while queue:
        p, q = queue.popleft()
        if p in m.accepting and q not in m.accepting:
            return False
        for i in range(len(m.alphabet)):
            nxt = (m.delta[p][i], m.delta[q][i])
            if nxt not in seen_pairs:
                seen_pairs.add(nxt)
                queue.append(nxt)
    return True


def factor_language(alphabet, u: str) -> au.Dfa:
    """DFA for A*uA*."""
    alphabet = tuple(alphabet)
    k = len(alphabet)
    universe = au.Dfa(alphabet, 1, 0, {0}, [[0] * k])
    word = au.Dfa(alphabet, len(u) + 2, 0, {len(u)},
                  [[i + 1 if i < len(u) and a == u[i] else len(u) + 1 for a in alphabet]
                   for i in range(len(u) + 2)])
    return au.concatenate(au.concatenate(universe, au.minimize(word)), universe)


def is_dense(d: au.Dfa, stamp_and_subset=None) -> tuple[bool, str | None]:
    """Dense iff η(L) meets the minimal ideal; otherwise a verified witness u with L ∩ A*uA* = ∅."""
    stamp, P = stamp_and_subset or syntactic_stamp(d)
    K = minimal_ideal(stamp.monoid)
    if P.subset & K:
        return True, None
    witness = min((stamp.words[k] for k in K), key=lambda w: (len(w), w))
    if witness == "" and stamp.alphabet:
        witness = stamp.alphabet[0]
    m = au.minimize(d)
    if not au.is_empty(au.intersection(m, factor_language(m.alphabet, witness))):
        raise InternalInconsistency(f"non-density witness {witness!r} occurs as a factor of an accepted word")
    return False, witness


DENSITY_CLASSES = ("finite", "slender", "sparse", "exponential")


def _trim(m: au.Dfa) -> list[int]:
    rev: dict[int, set] = {q: set() for q in range(m.states)}
    for q in range(m.states):
        for p in m.delta[q]:
            rev[p].add(q)
    coacc = set(m.accepting)
    queue = deque(coacc)
    while queue:
        p = queue.popleft()
        for q in rev[p]:
            if q not in coacc:
                coacc.add(q)
                queue.append(q)
    return sorted(coacc)    # every state of a minimal DFA is accessible


def density_class(d: au.Dfa) -> str:
    """finite / slender / sparse / exponential from the cycle structure of the trim minimal DFA."""
    m = au.minimize(d)
    trim = _trim(m)
    if not trim:
        return "finite"
    pos = {q: i for i, q in enumerate(trim)}
    src, dst = [], []
    for q in trim:
        for p in m.delta[q]:          # one edge per letter: parallel edges are distinct words
            if p in pos:
                src.append(pos[q])
                dst.append(pos[p])
    n = len(trim)
    graph = coo_matrix((np.ones(len(src)), (src, dst)), shape=(n, n)).tocsr()
    _, comp = connected_components(graph, directed=True, connection="strong")
    size = np.bincount(comp, minlength=comp.max() + 1)
    internal = np.zeros_like(size)
    for s, t in zip(src, dst):
        if comp[s] == comp[t]:
            internal[comp[s]] += 1
    if (internal > size).any():
        return "exponential"
    cyclic = {c for c in range(len(size)) if internal[c] > 0}
    if not cyclic:
        return "finite"
    # slender iff no path leads from one cycle to a different one
    succ: dict[int, set] = {c: set() for c in range(len(size))}
    for s, t in zip(src, dst):
        if comp[s] != comp[t]:
            succ[comp[s]].add(comp[t])
    for c in cyclic:
        seen, queue = set(), deque(succ[c])
        while queue:
            x = queue.popleft()
            if x in seen:
                continue
            seen.add(x)
            if x in cyclic:
                return "sparse"
            queue.extend(succ[x])
    return "slender"


# --------------------------------------------------------------------------
# classification report

UNAVAILABLE = "unavailable"


@dataclass
class ClassificationReport:
    j1: bool | str
    piecewise_testable: bool | str
    star_free: bool | str
    group: bool | str
    sigma1: bool | str
    first_letter: bool | str
    qa: bool | str
    r_trivial: bool | str
    l_trivial: bool | str
    da: bool | str
    has_zero: bool | str
    dense: bool | str
    density_class: str

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.as_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "ClassificationReport":
        obj = json.loads(text)
        names = [f.name for f in fields(cls)]
        if list(obj) != names:
            raise ValueError(f"report keys must be exactly {names} in order")
        return cls(**obj)

    def check_invariants(self) -> None:
        def known(*vals):
            return all(isinstance(v, bool) for v in vals)

        def implies(a, b, what):
            if known(a, b) and a and not b:
                raise InternalInconsistency(f"report violates {what}")

        implies(self.j1, self.piecewise_testable, "j1 => piecewise_testable")
        implies(self.piecewise_testable, self.star_free, "piecewise_testable => star_free")
        implies(self.sigma1, self.star_free, "sigma1 => star_free")
        if known(self.r_trivial, self.l_trivial, self.piecewise_testable):
            if (self.r_trivial and self.l_trivial) != self.piecewise_testable:
                raise InternalInconsistency("report violates R and L = J")


def classify(d: au.Dfa, max_size: int | None = None) -> ClassificationReport:
    """Run every language-level decider on L(d).

    Fields needing the syntactic monoid become ``"unavailable"`` when it
    exceeds ``max_size``.
    """
    from .algebra import DEFAULT_MAX_MONOID

    pattern = forbidden_pattern_sigma1(d)
    dclass = density_class(d)
    try:
        stamp, P = syntactic_stamp(d, max_size or DEFAULT_MAX_MONOID)
    except SizeCapExceeded:
        u = UNAVAILABLE
        return ClassificationReport(u, u, u, u, pattern, u, u, u, u, u, u, u, dclass)

    def member(name):
        return is_member(name, stamp, P)

    sigma1 = member("J+")
    if sigma1 != pattern:
        raise InternalInconsistency(
            f"Sigma_1 deciders disagree: ordered identity says {sigma1}, forbidden pattern says {pattern}")
    report = ClassificationReport(
        j1=member("J1"),
        piecewise_testable=member("J"),
        star_free=member("A"),
        group=member("G"),
        sigma1=sigma1,
        first_letter=member("K1"),
        qa=member("QA"),
        r_trivial=member("R"),
        l_trivial=member("L"),
        da=member("DA"),
        has_zero=member("Zero"),
        dense=is_dense(d, (stamp, P))[0],
        density_class=dclass,
    )
    report.check_invariants()
    return report

