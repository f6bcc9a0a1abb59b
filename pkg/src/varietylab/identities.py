"""ω-terms, identities and their satisfaction in finite carriers.

Terms are built from single-letter variables, the constant ``1``,
concatenation and offset ω-powers ``t^(ω+k)``.  An identity ``u = v`` or
``u <= v`` holds in a carrier when it holds under every assignment of the
variables; variables are shared between the two sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import kernels
from .algebra import (
    FiniteMonoid,
    FiniteSemigroup,
    OrderedMonoid,
    Stamp,
    omega_offset_power,
    power_images,
    semigroup_closure,
)
from .errors import ParseError

OP_VAR, OP_ONE, OP_MUL, OP_POW = 0, 1, 2, 3

RELATIONS = ("equal", "leq")
INTERPRETATIONS = ("plain", "semigroup", "C_ne", "C_lm")


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class One:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Concat:
    items: tuple

    def __post_init__(self):
        if not self.items:
            raise ValueError("empty concatenation")

    def __str__(self):
        return "".join(_wrap(t) if isinstance(t, Concat) else str(t) for t in self.items)


@dataclass(frozen=True)
class OmegaOffset:
    """The exponent ω+k (k may be negative)."""

    k: int = 0

    def __str__(self):
        if self.k == 0:
            return "w"
        return f"(w{'+' if self.k > 0 else '-'}{abs(self.k)})"


@dataclass(frozen=True)
class Power:
    base: object
    exponent: OmegaOffset

    def __str__(self):
        base = _wrap(self.base) if isinstance(self.base, (Concat, Power)) else str(self.base)
        return f"{base}^{self.exponent}"


def _wrap(t) -> str:
    return f"({t})"


def omega(t, k: int = 0) -> Power:
    return Power(t, OmegaOffset(k))


def variables(t) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Concat):
        return set().union(*(variables(x) for x in t.items))
    if isinstance(t, Power):
        return variables(t.base)
    return set()


def has_one(t) -> bool:
    if isinstance(t, One):
        return True
    if isinstance(t, Concat):
        return any(has_one(x) for x in t.items)
    if isinstance(t, Power):
        return has_one(t.base)
    return False


@dataclass(frozen=True)
class Identity:
    lhs: object
    rhs: object
    relation: str = "equal"
    interpretation: str = "plain"

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}")
        if self.interpretation not in INTERPRETATIONS:
            raise ValueError(f"interpretation must be one of {INTERPRETATIONS}")

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(variables(self.lhs) | variables(self.rhs)))

    def __str__(self):
        return f"{self.lhs} {'=' if self.relation == 'equal' else '<='} {self.rhs}"


class _IdentityParser:
    def __init__(self, text: str):
        self.tokens = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.end = len(text)
        self.pos = 0

    def peek(self, ahead: int = 0):
        i = self.pos + ahead
        return self.tokens[i][1] if i < len(self.tokens) else None

    def fail(self, message):
        off = self.tokens[self.pos][0] if self.pos < len(self.tokens) else self.end
        raise ParseError(message, off)

    def expect(self, c):
        if self.peek() != c:
            self.fail(f"expected {c!r}")
        self.pos += 1

    def identity(self):
        lhs = self.term()
        if self.peek() == "=":
            self.pos += 1
            relation = "equal"
        elif self.peek() == "<" and self.peek(1) == "=":
            self.pos += 2
            relation = "leq"
        else:
            self.fail("expected '=' or '<='")
        rhs = self.term()
        if self.peek() is not None:
            self.fail(f"unexpected {self.peek()!r}")
        return lhs, rhs, relation

    def starts_atom(self):
        c = self.peek()
        return c is not None and (c == "1" or c == "(" or "a" <= c <= "z")

    def term(self):
        if not self.starts_atom():
            self.fail("expected a term")
        items = []
        while self.starts_atom():
            items.extend(self.factor())
        return items[0] if len(items) == 1 else Concat(tuple(items))

    def factor(self) -> list:
        base = self.atom()
        if self.peek() != "^":
            return [base]
        self.pos += 1
        c = self.peek()
        if c == "w":
            self.pos += 1
            return [Power(base, OmegaOffset(0))]
        if c == "(":
            self.pos += 1
            self.expect("w")
            sign = self.peek()
            if sign not in ("+", "-"):
                self.fail("expected '+' or '-'")
            self.pos += 1
            k = self.number()
            self.expect(")")
            return [Power(base, OmegaOffset(k if sign == "+" else -k))]
        if c is not None and c.isdigit():
            n = self.number()
            if n < 1:
                self.fail("integer exponents start at 1")
            return [base] * n
        self.fail("expected an exponent")

    def number(self) -> int:
        digits = ""
        while self.peek() is not None and self.peek().isdigit():
            digits += self.peek()
            self.pos += 1
        if not digits:
            self.fail("expected a number")
        return int(digits)

    def atom(self):
        c = self.peek()
        if c == "1":
            self.pos += 1
            return One()
        if c == "(":
            self.pos += 1
            t = self.term()
            self.expect(")")
            return t
        self.pos += 1
        return Var(c)


def parse_term(text: str):
    p = _IdentityParser(text)
    t = p.term()
    if p.peek() is not None:
        p.fail(f"unexpected {p.peek()!r}")
    return t


def parse_identity(text: str, interpretation: str = "plain") -> Identity:
    """Parse ``u = v`` or ``u <= v``; ``x^w``, ``x^(w-1)``, ``x^(w+1)``, ``x^2``."""
    lhs, rhs, relation = _IdentityParser(text).identity()
    return Identity(lhs, rhs, relation, interpretation)


# --------------------------------------------------------------------------
# evaluation


def eval_term(M: FiniteSemigroup, t, assignment: Mapping[str, int]) -> int:
    """Value of ``t`` in ``M`` under ``assignment`` (structural recursion)."""
    if isinstance(t, Var):
        try:
            return int(assignment[t.name])
        except KeyError:
            raise KeyError(f"variable {t.name!r} is not assigned") from None
    if isinstance(t, One):
        if not isinstance(M, FiniteMonoid):
            raise ValueError("the constant 1 has no value in a semigroup")
        return M.identity
    if isinstance(t, Concat):
        return M.product(eval_term(M, x, assignment) for x in t.items)
    if isinstance(t, Power):
        return omega_offset_power(M, eval_term(M, t.base, assignment), t.exponent.k)
    raise TypeError(f"not a term: {t!r}")


def compile_term(t, names: tuple[str, ...]) -> np.ndarray:
    """Stack program for the kernels: rows of (opcode, argument)."""
    out: list[tuple[int, int]] = []

    def emit(x):
        if isinstance(x, Var):
            out.append((OP_VAR, names.index(x.name)))
        elif isinstance(x, One):
            out.append((OP_ONE, 0))
        elif isinstance(x, Concat):
            emit(x.items[0])
            for y in x.items[1:]:
                emit(y)
                out.append((OP_MUL, 0))
        else:
            emit(x.base)
            out.append((OP_POW, x.exponent.k))

    emit(t)
    return np.array(out, dtype=np.int32).reshape(-1, 2)


@dataclass(frozen=True)
class Counterexample:
    """Assignment under which an identity fails; ``length`` is set for C_lm checks."""

    assignment: dict
    lhs: int
    rhs: int
    length: int | None = None

    def describe(self, labels=None) -> str:
        def name(m):
            return f"{m} [{labels[m]}]" if labels else str(m)

        parts = [f"{v} -> {name(m)}" for v, m in sorted(self.assignment.items())]
        tail = f" (letter images of length {self.length})" if self.length is not None else ""
        return ", ".join(parts) + f"; lhs = {name(self.lhs)}, rhs = {name(self.rhs)}" + tail


def _search(M: FiniteSemigroup, identity: Identity, domain, leq) -> Counterexample | None:
    names = identity.variables
    domain = np.asarray(sorted(set(int(x) for x in domain)), dtype=np.int32)
    one = M.identity if isinstance(M, FiniteMonoid) else -1
    idx = kernels.find_identity_failure(
        M.table, M.omega_table, M.period_table, one,
        compile_term(identity.lhs, names), compile_term(identity.rhs, names),
        len(names), domain, leq,
    )
    if idx < 0:
        return None
    assignment = {}
    for v in reversed(names):
        idx, r = divmod(idx, len(domain))
        assignment[v] = int(domain[r])
    return Counterexample(assignment, eval_term(M, identity.lhs, assignment),
                          eval_term(M, identity.rhs, assignment))


def _carrier(M):
    if isinstance(M, OrderedMonoid):
        return M.monoid, M.leq
    return M, None


def _order_for(identity: Identity, leq):
    if identity.relation == "leq":
        if leq is None:
            raise ValueError("an ordered identity needs an ordered carrier")
        return leq
    return None


def counterexample(M: FiniteMonoid | OrderedMonoid, identity: Identity) -> Counterexample | None:
    """First failing assignment over all elements of M, or ``None``."""
    monoid, leq = _carrier(M)
    return _search(monoid, identity, range(monoid.size), _order_for(identity, leq))


def satisfies(M: FiniteMonoid | OrderedMonoid, identity: Identity | str) -> bool:
    """Exhaustive check over every assignment of variables to elements of M."""
    if isinstance(identity, str):
        identity = parse_identity(identity)
    return counterexample(M, identity) is None


def semigroup_counterexample(S: FiniteSemigroup, identity: Identity) -> Counterexample | None:
    if has_one(identity.lhs) or has_one(identity.rhs):
        raise ValueError("semigroup identities cannot use the constant 1")
    if identity.relation == "leq":
        raise ValueError("ordered semigroup identities are not supported")
    return _search(S, identity, range(S.size), None)


def semigroup_satisfies(S: FiniteSemigroup, identity: Identity | str) -> bool:
    if isinstance(identity, str):
        identity = parse_identity(identity, "semigroup")
    return semigroup_counterexample(S, identity) is None


def stamp_counterexample(stamp: Stamp, identity: Identity, order: OrderedMonoid | None = None,
                         interpretation: str | None = None) -> Counterexample | None:
    """Check a C-identity on a stamp.

    C_ne: variables range independently over φ(A⁺).  C_lm: for each k up to
    the index plus period of the sequence φ(Aᵏ), all variables range over
    φ(Aᵏ).  ``plain`` and ``semigroup`` fall back to the monoid and φ(A⁺).
    """
    interp = interpretation or identity.interpretation
    M = stamp.monoid
    leq = _order_for(identity, order.leq if order is not None else None)
    if interp == "plain":
        return _search(M, identity, range(M.size), leq)
    if interp in ("semigroup", "C_ne"):
        return _search(M, identity, semigroup_closure(M, stamp.generators), leq)
    if interp == "C_lm":
        if not stamp.alphabet:
            return None
        sets, _, _ = power_images(stamp)
        for k, dom in enumerate(sets, start=1):
            found = _search(M, identity, dom, leq)
            if found is not None:
                return Counterexample(found.assignment, found.lhs, found.rhs, k)
        return None
    raise ValueError(f"unknown interpretation {interp!r}")


def stamp_satisfies(stamp: Stamp, identity: Identity | str, order: OrderedMonoid | None = None,
                    interpretation: str | None = None) -> bool:
    if isinstance(identity, str):
        identity = parse_identity(identity, interpretation or "plain")
    return stamp_counterexample(stamp, identity, order, interpretation) is None
