"""Text formats: ``.mtab`` monoid tables, ``.act`` action tables, fixtures."""

from __future__ import annotations

import json

import numpy as np

from .algebra import FiniteMonoid, OrderedMonoid, Stamp
from .errors import ParseError
from .products import BiAction, LeftAction


class FormatError(ParseError):
    """Malformed file content; ``position`` is the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(message.rstrip() + f" (line {line})", None)
        self.position = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", no) from None


# --------------------------------------------------------------------------
# .mtab


class MonoidFile:
    """Contents of a ``.mtab`` file."""

    def __init__(self, monoid: FiniteMonoid, generators: dict | None = None, leq=None):
        self.monoid = monoid
        self.generators = dict(generators or {})
        self.leq = None if leq is None else np.asarray(leq, dtype=bool)

    @property
    def ordered(self) -> OrderedMonoid:
        """The stored order; without ``le`` lines this is equality."""
        leq = np.eye(self.monoid.size, dtype=bool) if self.leq is None else self.leq
        return OrderedMonoid(self.monoid, leq)

    @property
    def stamp(self) -> Stamp | None:
        return Stamp(tuple(sorted(self.generators)), self.monoid, self.generators) if self.generators else None


def read_mtab(text: str, check: bool = True) -> MonoidFile:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty monoid file", 1)
    no, first = lines[0]
    if len(first) != 1:
        raise FormatError("first line must be the element count", no)
    n = _int(first[0], no)
    if n < 1 or len(lines) < n + 2:
        raise FormatError(f"expected {n} table rows and an identity line", no)
    rows = []
    for no, toks in lines[1:n + 1]:
        row = [_int(t, no) for t in toks]
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise FormatError(f"table row must hold {n} indices in 0..{n - 1}", no)
        rows.append(row)
    identity = None
    gens = {}
    pairs = []
    for no, toks in lines[n + 1:]:
        key = toks[0]
        if key == "identity" and len(toks) == 2:
            identity = _int(toks[1], no)
        elif key == "gen" and len(toks) == 3 and len(toks[1]) == 1:
            gens[toks[1]] = _int(toks[2], no)
        elif key == "le" and len(toks) == 3:
            pairs.append((_int(toks[1], no), _int(toks[2], no)))
        else:
            raise FormatError(f"unrecognized line {' '.join(toks)!r}", no)
        values = [int(t) for t in toks[1:] if t.lstrip("-").isdigit()]
        if any(not 0 <= v < n for v in values):
            raise FormatError("element index out of range", no)
    if identity is None:
        raise FormatError("missing identity line", lines[-1][0])
    M = FiniteMonoid(rows, identity, check=check)
    leq = None
    if pairs:
        leq = np.eye(n, dtype=bool)
        for i, j in pairs:
            leq[i, j] = True
    return MonoidFile(M, gens, leq)


def write_mtab(M: FiniteMonoid, generators: dict | None = None, leq=None) -> str:
    """Serialize with the identity moved to index 0 (generators and order follow)."""
    if M.identity != 0:
        swap = np.arange(M.size)
        swap[0], swap[M.identity] = M.identity, 0     # swap is its own inverse
        M = M.canonical()
        generators = {a: int(swap[x]) for a, x in (generators or {}).items()}
        if leq is not None:
            leq = np.asarray(leq, dtype=bool)[np.ix_(swap, swap)]
    out = [str(M.size)]
    out.extend(" ".join(str(int(x)) for x in row) for row in M.table)
    out.append(f"identity {M.identity}")
    for a in sorted(generators or {}):
        out.append(f"gen {a} {generators[a]}")
    if leq is not None:
        leq = np.asarray(leq, dtype=bool)
        out.extend(f"le {i} {j}" for i, j in zip(*np.nonzero(leq)) if i != j)
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# .act


def read_action(text: str, S: FiniteMonoid, T: FiniteMonoid) -> LeftAction | BiAction:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty action file", 1)
    no, head = lines[0]
    if len(head) != 4 or head[0] != "S" or head[2] != "T":
        raise FormatError("header must be 'S <n> T <m>'", no)
    n, m = _int(head[1], no), _int(head[3], no)
    if (n, m) != (S.size, T.size):
        raise FormatError(f"header sizes {n}, {m} do not match the monoids ({S.size}, {T.size})", no)
    lam = np.full((m, n), -1, dtype=np.int32)
    rho = np.full((n, m), -1, dtype=np.int32)
    has_right = False
    for no, toks in lines[1:]:
        if len(toks) != 4 or toks[0] not in ("act", "ract"):
            raise FormatError(f"unrecognized line {' '.join(toks)!r}", no)
        a, b, c = (_int(t, no) for t in toks[1:])
        if toks[0] == "act":
            if not (0 <= a < m and 0 <= b < n and 0 <= c < n):
                raise FormatError("index out of range", no)
            lam[a, b] = c
        else:
            if not (0 <= a < n and 0 <= b < m and 0 <= c < n):
                raise FormatError("index out of range", no)
            rho[a, b] = c
            has_right = True
    if (lam < 0).any():
        t, s = np.argwhere(lam < 0)[0]
        raise FormatError(f"missing 'act {t} {s}' line", len(text.splitlines()))
    left = LeftAction(T, S, lam)
    if not has_right:
        return left
    if (rho < 0).any():
        s, t = np.argwhere(rho < 0)[0]
        raise FormatError(f"missing 'ract {s} {t}' line", len(text.splitlines()))
    return BiAction(left, rho)


def write_action(act: LeftAction | BiAction) -> str:
    left = act.left if isinstance(act, BiAction) else act
    out = [f"S {left.S.size} T {left.T.size}"]
    out.extend(f"act {t} {s} {int(left.table[t, s])}"
               for t in range(left.T.size) for s in range(left.S.size))
    if isinstance(act, BiAction):
        out.extend(f"ract {s} {t} {int(act.right[s, t])}"
                   for s in range(act.S.size) for t in range(act.T.size))
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# fixtures


def read_fixtures(text: str) -> list[dict]:
    """JSON lines with keys id, input, operation, output, provenance."""
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc.msg}", no) from None
        missing = {"input", "operation", "output"} - set(obj)
        if missing:
            raise FormatError(f"fixture lacks {sorted(missing)}", no)
        out.append(obj)
    return out
