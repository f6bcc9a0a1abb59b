"""Regular expressions and complete deterministic automata.

Every :class:`Dfa` produced here is complete (it carries an explicit sink when
needed) and the public constructors return minimal automata whose states are
numbered in breadth-first discovery order from the initial state.  Two
minimal automata therefore recognize the same language exactly when they
compare equal.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetError, ParseError

__all__ = [
    "Empty", "Epsilon", "Letter", "Union", "Concat", "Star", "Complement",
    "Intersection", "Regex", "Dfa", "FreeMorphism",
    "parse_regex", "to_string", "compile", "minimize", "left_quotient",
    "right_quotient", "inverse_image", "union", "intersection", "complement",
    "difference", "concatenate", "star", "is_empty", "accepts", "equivalent",
    "extend_alphabet", "all_words", "dfa_from_json", "dfa_to_json",
]


# --------------------------------------------------------------------------
# Regex AST


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Union:
    items: tuple

    def __post_init__(self):
        if not self.items:
            raise ValueError("union needs at least one operand")


@dataclass(frozen=True)
class Concat:
    items: tuple

    def __post_init__(self):
        if not self.items:
            raise ValueError("concatenation needs at least one operand")


@dataclass(frozen=True)
class Intersection:
    items: tuple

    def __post_init__(self):
        if not self.items:
            raise ValueError("intersection needs at least one operand")


@dataclass(frozen=True)
class Star:
    child: object


@dataclass(frozen=True)
class Complement:
    child: object


def _letters(node) -> set[str]:
    if isinstance(node, Letter):
        return {node.symbol}
    if isinstance(node, (Union, Concat, Intersection)):
        return set().union(*(_letters(c) for c in node.items))
    if isinstance(node, (Star, Complement)):
        return _letters(node.child)
    return set()


@dataclass(frozen=True)
class Regex:
    """A regex tree together with the alphabet it is interpreted over.

    The alphabet is the set of letters occurring in the tree plus any extra
    declared letters; complements are taken relative to it.
    """

    node: object
    alphabet: tuple = field(default=())

    def __post_init__(self):
        letters = _letters(self.node) | set(self.alphabet)
        object.__setattr__(self, "alphabet", tuple(sorted(letters)))

    def __str__(self):
        return to_string(self.node)


_UNION, _INTER, _CONCAT, _STAR, _ATOM = range(5)


def _prec(node) -> int:
    if isinstance(node, Union) and len(node.items) > 1:
        return _UNION
    if isinstance(node, Intersection) and len(node.items) > 1:
        return _INTER
    if isinstance(node, Concat) and len(node.items) > 1:
        return _CONCAT
    if isinstance(node, (Union, Intersection, Concat)):
        return _prec(node.items[0])
    if isinstance(node, Star):
        return _STAR
    return _ATOM


def to_string(node) -> str:
    """Print a regex node in the grammar accepted by :func:`parse_regex`."""
    if isinstance(node, Regex):
        node = node.node
    if isinstance(node, Empty):
        return "0"
    if isinstance(node, Epsilon):
        return "1"
    if isinstance(node, Letter):
        return node.symbol

    def wrap(child, level):
        s = to_string(child)
        return f"({s})" if _prec(child) < level else s

    if isinstance(node, Union):
        return "+".join(wrap(c, _UNION + 1) for c in node.items)
    if isinstance(node, Intersection):
        return "&".join(wrap(c, _INTER + 1) for c in node.items)
    if isinstance(node, Concat):
        return "".join(wrap(c, _CONCAT + 1) for c in node.items)
    if isinstance(node, Star):
        return wrap(node.child, _STAR) + "*"
    if isinstance(node, Complement):
        return "~" + wrap(node.child, _ATOM)
    raise TypeError(f"not a regex node: {node!r}")


class _RegexParser:
    # expr := term ("+" term)* ; term := inter ("&" inter)* ; inter := factor+
    # factor := atom ("*")* ; atom := letter | "1" | "0" | "~" atom | "(" expr ")"

    def __init__(self, text: str):
        self.tokens = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.end = len(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def offset(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else self.end

    def take(self):
        c = self.peek()
        self.pos += 1
        return c

    def fail(self, message):
        raise ParseError(message, self.offset())

    def parse(self):
        node = self.expr()
        if self.peek() is not None:
            self.fail(f"unexpected {self.peek()!r}")
        return node

    def expr(self):
        items = [self.term()]
        while self.peek() == "+":
            self.take()
            items.append(self.term())
        return items[0] if len(items) == 1 else Union(tuple(items))

    def term(self):
        items = [self.inter()]
        while self.peek() == "&":
            self.take()
            items.append(self.inter())
        return items[0] if len(items) == 1 else Intersection(tuple(items))

    def starts_atom(self):
        c = self.peek()
        return c is not None and (c in "10~(\\" or "a" <= c <= "z")

    def inter(self):
        if not self.starts_atom():
            self.fail("expected an expression" if self.peek() is None else f"unexpected {self.peek()!r}")
        items = []
        while self.starts_atom():
            items.append(self.factor())
        return items[0] if len(items) == 1 else Concat(tuple(items))

    def factor(self):
        node = self.atom()
        while self.peek() == "*":
            self.take()
            node = Star(node)
        return node

    def atom(self):
        c = self.peek()
        if c is None:
            self.fail("unexpected end of input")
        if c == "\\":
            self.fail("unknown escape")
        if "a" <= c <= "z":
            self.take()
            return Letter(c)
        if c == "1":
            self.take()
            return Epsilon()
        if c == "0":
            self.take()
            return Empty()
        if c == "~":
            self.take()
            return Complement(self.atom())
        if c == "(":
            self.take()
            node = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return node
        self.fail(f"unexpected {c!r}")


def parse_regex(text: str, extra_alphabet: Iterable[str] = ()) -> Regex:
    """Parse ``text``; letters in ``extra_alphabet`` join the alphabet."""
    for a in extra_alphabet:
        if len(a) != 1 or not "a" <= a <= "z":
            raise AlphabetError(f"letters are single characters a-z, got {a!r}")
    return Regex(_RegexParser(text).parse(), tuple(extra_alphabet))


# --------------------------------------------------------------------------
# DFA


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton.

    ``delta[q][i]`` is the successor of state ``q`` on ``alphabet[i]``.
    """

    alphabet: tuple
    states: int
    initial: int
    accepting: frozenset
    delta: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise AlphabetError("repeated letter in alphabet")
        if self.states < 1:
            raise ValueError("a DFA has at least one state")
        if not 0 <= self.initial < self.states:
            raise ValueError("initial state out of range")
        if any(not 0 <= q < self.states for q in self.accepting):
            raise ValueError("accepting state out of range")
        if len(self.delta) != self.states:
            raise ValueError("delta must have one row per state")
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise ValueError("delta must be complete")
            if any(not 0 <= p < self.states for p in row):
                raise ValueError("transition target out of range")

    def letter_index(self, a: str) -> int:
        try:
            return self.alphabet.index(a)
        except ValueError:
            raise AlphabetError(f"symbol {a!r} not in alphabet {self.alphabet}") from None

    def step(self, q: int, a: str) -> int:
        return self.delta[q][self.letter_index(a)]

    def run(self, word: Iterable[str], q: int | None = None) -> int:
        q = self.initial if q is None else q
        for a in word:
            q = self.delta[q][self.letter_index(a)]
        return q

    def accepts(self, word: Iterable[str]) -> bool:
        return self.run(word) in self.accepting


def accepts(d: Dfa, word: Iterable[str]) -> bool:
    return d.accepts(word)


def _explore(alphabet, start, step, is_final) -> Dfa:
    """Build a DFA from an implicit one by BFS over hashable states."""
    index = {start: 0}
    order = [start]
    delta = []
    queue = deque([start])
    while queue:
        s = queue.popleft()
        row = []
        for a in alphabet:
            t = step(s, a)
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            row.append(index[t])
        delta.append(row)
    accepting = {i for i, s in enumerate(order) if is_final(s)}
    return Dfa(alphabet, len(order), 0, accepting, delta)


def minimize(d: Dfa) -> Dfa:
    """Minimal complete DFA, states renumbered in BFS order from the initial state."""
    # reachable part
    reach = {d.initial}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for p in d.delta[q]:
            if p not in reach:
                reach.add(p)
                queue.append(p)
    # Moore refinement
    block = {q: int(q in d.accepting) for q in reach}
    nblocks = len(set(block.values()))
    while True:
        sig = {q: (block[q],) + tuple(block[p] for p in d.delta[q]) for q in reach}
        ids: dict = {}
        new = {q: ids.setdefault(sig[q], len(ids)) for q in sorted(reach)}
        if len(ids) == nblocks:
            break
        block, nblocks = new, len(ids)
    rep = {}
    for q in sorted(reach):
        rep.setdefault(block[q], q)
    return _explore(
        d.alphabet,
        block[d.initial],
        lambda b, a: block[d.step(rep[b], a)],
        lambda b: rep[b] in d.accepting,
    )


def extend_alphabet(d: Dfa, alphabet: Iterable[str]) -> Dfa:
    """Same language viewed over a larger alphabet; new letters lead to a rejecting sink."""
    alphabet = tuple(sorted(set(alphabet) | set(d.alphabet)))
    if alphabet == d.alphabet:
        return d
    sink = d.states
    delta = []
    for q in range(d.states):
        delta.append([d.step(q, a) if a in d.alphabet else sink for a in alphabet])
    delta.append([sink] * len(alphabet))
    return minimize(Dfa(alphabet, d.states + 1, d.initial, d.accepting, delta))


def _check_same_alphabet(d1: Dfa, d2: Dfa):
    if d1.alphabet != d2.alphabet:
        raise AlphabetError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")


def _product(d1: Dfa, d2: Dfa, final) -> Dfa:
    _check_same_alphabet(d1, d2)
    return minimize(_explore(
        d1.alphabet,
        (d1.initial, d2.initial),
        lambda s, a: (d1.step(s[0], a), d2.step(s[1], a)),
        lambda s: final(s[0] in d1.accepting, s[1] in d2.accepting),
    ))


def union(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x or y)


def intersection(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x and y)


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x and not y)


def complement(d: Dfa) -> Dfa:
    flipped = set(range(d.states)) - d.accepting
    return minimize(Dfa(d.alphabet, d.states, d.initial, flipped, d.delta))


def concatenate(d1: Dfa, d2: Dfa) -> Dfa:
    """DFA for the concatenation L(d1)·L(d2) (subset construction on d2)."""
    _check_same_alphabet(d1, d2)

    def seed(q1, rest):
        return frozenset(rest | {d2.initial}) if q1 in d1.accepting else frozenset(rest)

    def step(s, a):
        q1 = d1.step(s[0], a)
        return q1, seed(q1, {d2.step(q, a) for q in s[1]})

    return minimize(_explore(
        d1.alphabet,
        (d1.initial, seed(d1.initial, set())),
        step,
        lambda s: bool(s[1] & d2.accepting),
    ))


def star(d: Dfa) -> Dfa:
    """DFA for L(d)*."""
    start = "start"

    def step(s, a):
        current = {d.initial} if s == start else s
        nxt = {d.step(q, a) for q in current}
        if nxt & d.accepting:
            nxt.add(d.initial)
        return frozenset(nxt)

    return minimize(_explore(
        d.alphabet, start, step, lambda s: s == start or bool(s & d.accepting)
    ))


def _basic(alphabet: tuple, kind: str, symbol: str | None = None) -> Dfa:
    k = len(alphabet)
    if kind == "empty":
        return Dfa(alphabet, 1, 0, (), [[0] * k])
    if kind == "epsilon":
        return minimize(Dfa(alphabet, 2, 0, {0}, [[1] * k, [1] * k]))
    # letter: 0 --symbol--> 1 (accepting), everything else to sink 2
    row0 = [1 if a == symbol else 2 for a in alphabet]
    return Dfa(alphabet, 3, 0, {1}, [row0, [2] * k, [2] * k])


def _compile_node(node, alphabet: tuple) -> Dfa:
    if isinstance(node, Empty):
        return _basic(alphabet, "empty")
    if isinstance(node, Epsilon):
        return _basic(alphabet, "epsilon")
    if isinstance(node, Letter):
        return _basic(alphabet, "letter", node.symbol)
    if isinstance(node, Complement):
        return complement(_compile_node(node.child, alphabet))
    if isinstance(node, Star):
        return star(_compile_node(node.child, alphabet))
    parts = [_compile_node(c, alphabet) for c in node.items]
    op = {Union: union, Intersection: intersection, Concat: concatenate}[type(node)]
    result = parts[0]
    for p in parts[1:]:
        result = op(result, p)
    return minimize(result)


def compile(r: Regex | str) -> Dfa:  # noqa: A001 - mirrors the re module naming
    """Minimal complete DFA over the regex alphabet."""
    if isinstance(r, str):
        r = parse_regex(r)
    return _compile_node(r.node, r.alphabet)


def left_quotient(d: Dfa, w: Sequence[str]) -> Dfa:
    """DFA for w⁻¹L: start where ``w`` leads."""
    q = d.run(w)
    return minimize(Dfa(d.alphabet, d.states, q, d.accepting, d.delta))


def right_quotient(d: Dfa, w: Sequence[str]) -> Dfa:
    """DFA for Lw⁻¹: accept in states from which ``w`` reaches acceptance."""
    for a in w:
        d.letter_index(a)
    final = {q for q in range(d.states) if d.run(w, q) in d.accepting}
    return minimize(Dfa(d.alphabet, d.states, d.initial, final, d.delta))


def is_empty(d: Dfa) -> bool:
    return not minimize(d).accepting


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    return minimize(d1) == minimize(d2)


MORPHISM_CLASSES = ("arbitrary", "non-erasing", "length-multiplying", "length-preserving")


@dataclass(frozen=True)
class FreeMorphism:
    """Morphism A* → B* given by letter images.

    ``kind`` is the declared class; construction fails if an image breaks it.
    """

    source: tuple
    target: tuple
    images: dict
    kind: str = "arbitrary"

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "images", {a: str(w) for a, w in dict(self.images).items()})
        if self.kind not in MORPHISM_CLASSES:
            raise ValueError(f"unknown morphism class {self.kind!r}")
        if set(self.images) != set(self.source):
            raise AlphabetError("every source letter needs exactly one image")
        for w in self.images.values():
            if any(b not in self.target for b in w):
                raise AlphabetError(f"image {w!r} leaves the target alphabet")
        lengths = {len(w) for w in self.images.values()}
        if self.kind != "arbitrary" and 0 in lengths:
            raise ValueError(f"{self.kind} morphism maps a letter to the empty word")
        if self.kind == "length-multiplying" and len(lengths) > 1:
            raise ValueError("length-multiplying images must share one length")
        if self.kind == "length-preserving" and lengths - {1}:
            raise ValueError("length-preserving images must be single letters")

    def __call__(self, word: Iterable[str]) -> str:
        return "".join(self.images[a] for a in word)

    def satisfies(self, kind: str) -> bool:
        """Whether the images happen to fall in morphism class ``kind``."""
        lengths = {len(w) for w in self.images.values()}
        if kind == "arbitrary":
            return True
        if 0 in lengths:
            return False
        if kind == "non-erasing":
            return True
        if kind == "length-multiplying":
            return len(lengths) <= 1
        return lengths <= {1}


def inverse_image(d: Dfa, f: FreeMorphism) -> Dfa:
    """DFA over f's source alphabet recognizing f⁻¹(L(d))."""
    if tuple(f.target) != d.alphabet:
        raise AlphabetError(f"morphism target {f.target} differs from DFA alphabet {d.alphabet}")
    source = tuple(sorted(f.source))
    delta = [[d.run(f.images[a], q) for a in source] for q in range(d.states)]
    return minimize(Dfa(source, d.states, d.initial, d.accepting, delta))


def all_words(alphabet: Sequence[str], max_len: int, min_len: int = 0) -> Iterator[str]:
    """Words in length-then-lexicographic order."""
    for n in range(min_len, max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


def dfa_to_json(d: Dfa) -> str:
    return json.dumps({
        "alphabet": list(d.alphabet),
        "states": d.states,
        "initial": d.initial,
        "accepting": sorted(d.accepting),
        "delta": [list(r) for r in d.delta],
    })


def dfa_from_json(text: str) -> Dfa:
    try:
        obj = json.loads(text)
        return Dfa(obj["alphabet"], obj["states"], obj["initial"], obj["accepting"], obj["delta"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad DFA JSON: {exc}") from exc
