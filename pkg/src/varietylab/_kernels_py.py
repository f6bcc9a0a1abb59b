"""Pure-Python implementations of the hot loops.

Same signatures and results as the compiled ``_kernels`` extension; used when
the extension is not built or ``VARIETYLAB_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

import numpy as np

OP_VAR, OP_ONE, OP_MUL, OP_POW = 0, 1, 2, 3


def transformation_closure(gens, cap):
    """Breadth-first closure of transformations under right multiplication.

    ``gens`` is a (k, q) int array; row ``i`` is the map of generator ``i``.
    Element 0 of the result is the identity map.  Returns ``(elements,
    right, parent, letter)`` or ``None`` when more than ``cap`` elements
    appear.  ``right[x, i]`` is the index of ``x`` followed by generator
    ``i``; ``parent``/``letter`` give a BFS tree of shortest words.
    """
    arr = np.asarray(gens, dtype=np.int32)
    q = arr.shape[1] if arr.ndim == 2 else 0
    gens = [tuple(int(v) for v in row) for row in arr.reshape(-1, q)] if arr.size else []
    k = arr.shape[0] if arr.ndim == 2 else 0
    ident = tuple(range(q))
    index = {ident: 0}
    elements = [ident]
    parent = [-1]
    letter = [-1]
    right = []
    head = 0
    while head < len(elements):
        x = elements[head]
        row = []
        for i, g in enumerate(gens):
            y = tuple(g[s] for s in x)
            j = index.get(y)
            if j is None:
                if len(elements) >= cap:
                    return None
                j = index[y] = len(elements)
                elements.append(y)
                parent.append(head)
                letter.append(i)
            row.append(j)
        right.append(row)
        head += 1
    n = len(elements)
    return (
        np.array(elements, dtype=np.int32).reshape(n, q),
        np.array(right, dtype=np.int32).reshape(n, k),
        np.array(parent, dtype=np.int32),
        np.array(letter, dtype=np.int32),
    )


def cayley_table(right, parent, letter):
    """Full multiplication table from the right Cayley graph.

    Column ``j`` follows the BFS word of ``j`` from every row element, so
    ``table[i, j] = right[table[i, parent[j]], letter[j]]``.
    """
    right = np.asarray(right)
    n = right.shape[0]
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n, dtype=np.int32)
    for j in range(1, n):
        table[:, j] = right[table[:, parent[j]], letter[j]]
    return table


def _eval(prog, table, omega, period, one, values):
    stack = []
    for op, arg in prog:
        if op == OP_VAR:
            stack.append(values[arg])
        elif op == OP_ONE:
            stack.append(one)
        elif op == OP_MUL:
            b = stack.pop()
            a = stack.pop()
            stack.append(table[a][b])
        else:
            m = stack.pop()
            x = omega[m]
            for _ in range(arg % period[m]):
                x = table[x][m]
            stack.append(x)
    return stack[0]


def find_identity_failure(table, omega, period, one, prog_l, prog_r, nvars, domain, leq):
    """Index of the first assignment violating lhs = rhs (or lhs <= rhs).

    Assignments enumerate ``domain ** nvars`` in lexicographic order with the
    last variable varying fastest.  Returns -1 if none fails.  ``leq`` is a
    boolean matrix for ordered identities, or ``None`` for equalities.
    """
    table = np.asarray(table).tolist()
    omega = np.asarray(omega).tolist()
    period = np.asarray(period).tolist()
    prog_l = [tuple(int(v) for v in p) for p in np.asarray(prog_l).reshape(-1, 2)]
    prog_r = [tuple(int(v) for v in p) for p in np.asarray(prog_r).reshape(-1, 2)]
    domain = [int(v) for v in np.asarray(domain)]
    order = None if leq is None else np.asarray(leq, dtype=bool).tolist()
    size = len(domain)
    if size == 0 and nvars > 0:
        return -1
    digits = [0] * nvars
    values = [domain[0] if size else 0] * nvars
    count = 0
    while True:
        lhs = _eval(prog_l, table, omega, period, one, values)
        rhs = _eval(prog_r, table, omega, period, one, values)
        if (lhs != rhs) if order is None else not order[lhs][rhs]:
            return count
        count += 1
        v = nvars - 1
        while v >= 0:
            digits[v] += 1
            if digits[v] < size:
                values[v] = domain[digits[v]]
                break
            digits[v] = 0
            values[v] = domain[0]
            v -= 1
        if v < 0:
            return -1
