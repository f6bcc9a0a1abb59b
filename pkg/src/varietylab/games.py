"""Ehrenfeucht–Fraïssé games on words.

The solver computes, for each position, a canonical game type: two pebbled
words get the same depth-r type exactly when Duplicator survives r more
rounds.  With the order relation available the type of a word splits along
its pebbles, so types are computed per pebble-free segment and shared across
every word in one solver run.  Without order, types are computed over whole
pebble configurations, which is only feasible for short words.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .automata import all_words
from .errors import AlphabetError, SizeCapExceeded

DUPLICATOR = "Duplicator"
SPOILER = "Spoiler"

MAX_CLASS_ALPHABET = 3
MAX_CLASS_LENGTH = 10
MAX_CLASS_DEPTH = 3
MAX_PUMPING_LENGTH = 64
# positions^(rounds+1) budget for signatures without order
MAX_UNORDERED_WORK = 5_000_000


@dataclass(frozen=True)
class Signature:
    use_order: bool = True
    use_successor: bool = False
    mod_q: int | None = None

    def __post_init__(self):
        if self.mod_q is not None and self.mod_q < 2:
            raise ValueError("mod_q must be at least 2")
        if not (self.use_order or self.use_successor or self.mod_q):
            raise ValueError("a signature needs at least one of <, +1, mod q")

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse a comma list such as ``lt``, ``lt,succ``, ``lt,mod=3`` or ``<,+1``."""
        order = succ = False
        q = None
        for part in text.replace(" ", "").split(","):
            if part in ("<", "lt"):
                order = True
            elif part in ("+1", "succ"):
                succ = True
            elif part.startswith("mod") and part[3:].lstrip("=").isdigit():
                q = int(part[3:].lstrip("="))
            elif part:
                raise ValueError(f"unknown relation {part!r} in signature")
        return cls(order, succ, q)

    def __str__(self):
        parts = (["<"] if self.use_order else []) + (["+1"] if self.use_successor else [])
        if self.mod_q:
            parts.append(f"mod{self.mod_q}")
        return "{" + ",".join(parts) + "}"


ORDER = Signature()


@dataclass(frozen=True)
class PebbledWord:
    """A word with pebbles at 1-based positions."""

    word: str
    pebbles: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "pebbles", tuple(int(p) for p in self.pebbles))
        for p in self.pebbles:
            if not 1 <= p <= len(self.word):
                raise ValueError(f"pebble {p} outside 1..{len(self.word)}")


def _as_pebbled(w) -> PebbledWord:
    return w if isinstance(w, PebbledWord) else PebbledWord(str(w))


def atomic_type(pw: PebbledWord, sig: Signature) -> tuple:
    """All atomic facts among the pebbles of ``pw``."""
    ps = pw.pebbles
    unary = tuple((pw.word[p - 1], p % sig.mod_q if sig.mod_q else 0) for p in ps)
    binary = tuple(
        (ps[i] == ps[j],
         sig.use_order and ps[i] < ps[j],
         sig.use_successor and ps[j] == ps[i] + 1)
        for i in range(len(ps)) for j in range(len(ps)) if i != j
    )
    return unary, binary


class GameSolver:
    """Type computations memoized for one signature; reuse it across many words."""

    def __init__(self, sig: Signature = ORDER):
        self.sig = sig
        self._intern: dict = {}
        self._segment_memo: dict = {}

    def _id(self, obj) -> int:
        return self._intern.setdefault(obj, len(self._intern))

    # ordered signatures: types of pebble-free segments
    def segment_type(self, seg: str, offset: int, left_bound: bool, right_bound: bool, r: int) -> int:
        sig = self.sig
        q = sig.mod_q
        offset = offset % q if q else 0
        if not sig.use_successor:
            left_bound = right_bound = False
        if r == 0:
            return 0
        key = (seg, offset, left_bound, right_bound, r)
        hit = self._segment_memo.get(key)
        if hit is not None:
            return hit
        n = len(seg)
        moves = set()
        for i in range(n):
            moves.add((
                seg[i],
                (offset + i + 1) % q if q else 0,
                left_bound and i == 0,
                right_bound and i == n - 1,
                self.segment_type(seg[:i], offset, left_bound, True, r - 1),
                self.segment_type(seg[i + 1:], offset + i + 1, True, right_bound, r - 1),
            ))
        t = self._id(("seg", frozenset(moves)))
        self._segment_memo[key] = t
        return t

    # any signature: types of whole pebble configurations
    def configuration_type(self, pw: PebbledWord, r: int, memo: dict | None = None) -> int:
        memo = {} if memo is None else memo
        key = (pw.pebbles, r)
        if key in memo:
            return memo[key]
        atom = self._id(("atom", atomic_type(pw, self.sig)))
        if r == 0:
            t = atom
        else:
            subs = frozenset(
                self.configuration_type(PebbledWord(pw.word, pw.pebbles + (p,)), r - 1, memo)
                for p in range(1, len(pw.word) + 1)
            )
            t = self._id(("conf", atom, subs))
        memo[key] = t
        return t

    def word_type(self, w, r: int) -> int:
        pw = _as_pebbled(w)
        if not self.sig.use_order:
            n = len(pw.word)
            if (n + 1) ** (r + 1) > MAX_UNORDERED_WORK:
                raise SizeCapExceeded(
                    f"games without order on length {n} at depth {r} exceed the solver budget")
            return self.configuration_type(pw, r)
        # split at the pebbles; facts among pebbles go in separately
        atom = atomic_type(pw, self.sig)
        cuts = sorted(set(pw.pebbles))
        bounds = [0] + cuts + [len(pw.word) + 1]
        parts = []
        for k in range(len(bounds) - 1):
            lo, hi = bounds[k], bounds[k + 1]
            parts.append(self.segment_type(pw.word[lo:hi - 1], lo, lo > 0, hi <= len(pw.word), r))
        return self._id(("word", atom, tuple(parts)))

    def winner(self, w1, w2, rounds: int) -> str:
        if rounds < 0:
            raise ValueError("rounds must be non-negative")
        a, b = _as_pebbled(w1), _as_pebbled(w2)
        if len(a.pebbles) != len(b.pebbles):
            raise ValueError("both words must carry the same number of pebbles")
        same = self.word_type(a, rounds) == self.word_type(b, rounds)
        return DUPLICATOR if same else SPOILER


def _check_alphabet(words, alphabet):
    if alphabet is None:
        return
    allowed = set(alphabet)
    for w in words:
        extra = set(_as_pebbled(w).word) - allowed
        if extra:
            raise AlphabetError(f"letters {sorted(extra)} are not in the alphabet {sorted(allowed)}")


def ef_winner(w1, w2, rounds: int, sig: Signature = ORDER, alphabet=None) -> str:
    """Winner of the r-round game on two (possibly pebbled) words."""
    _check_alphabet((w1, w2), alphabet)
    return GameSolver(sig).winner(w1, w2, rounds)


def equiv_classes(alphabet, depth: int, max_len: int, sig: Signature = ORDER) -> list[list[str]]:
    """Partition of all words of length ≤ max_len by Duplicator wins at ``depth``."""
    alphabet = sorted(set(alphabet))
    if len(alphabet) > MAX_CLASS_ALPHABET or max_len > MAX_CLASS_LENGTH or depth > MAX_CLASS_DEPTH:
        raise SizeCapExceeded(
            f"equivalence classes are limited to {MAX_CLASS_ALPHABET} letters, "
            f"length {MAX_CLASS_LENGTH} and depth {MAX_CLASS_DEPTH}")
    solver = GameSolver(sig)
    classes: dict[int, list[str]] = {}
    for w in all_words(alphabet, max_len):
        classes.setdefault(solver.word_type(w, depth), []).append(w)
    return list(classes.values())


def verify_pumping(u: str, d: int, sig: Signature = ORDER) -> bool:
    """Whether u^(2^d - 1) and u^(2^d) are indistinguishable in d rounds."""
    if len(u) * 2 ** d > MAX_PUMPING_LENGTH:
        raise SizeCapExceeded(f"|u|·2^d must be at most {MAX_PUMPING_LENGTH}")
    return ef_winner(u * (2 ** d - 1), u * 2 ** d, d, sig) == DUPLICATOR


def naive_winner(w1, w2, rounds: int, sig: Signature = ORDER) -> str:
    """Plain minimax over all moves, including moves onto pebbled positions.

    Exponential; intended as an independent check on tiny inputs.
    """
    a, b = _as_pebbled(w1), _as_pebbled(w2)

    def spoiler_wins(x: PebbledWord, y: PebbledWord, r: int) -> bool:
        if atomic_type(x, sig) != atomic_type(y, sig):
            return True
        if r == 0:
            return False
        for this, other, flip in ((x, y, False), (y, x, True)):
            for p in range(1, len(this.word) + 1):
                moved = PebbledWord(this.word, this.pebbles + (p,))
                survived = False
                for p2 in range(1, len(other.word) + 1):
                    reply = PebbledWord(other.word, other.pebbles + (p2,))
                    pair = (reply, moved) if flip else (moved, reply)
                    if not spoiler_wins(*pair, r - 1):
                        survived = True
                        break
                if not survived:
                    return True
        return False

    return SPOILER if spoiler_wins(a, b, rounds) else DUPLICATOR


def all_pebbled(word: str, k: int):
    """Every placement of k pebbles (1-based, repetitions allowed) on ``word``."""
    for ps in product(range(1, len(word) + 1), repeat=k):
        yield PebbledWord(word, ps)
