from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from varietylab import kernels
from varietylab.identities import compile_term, parse_identity

from strategies import dfas, small_stamps

cython_missing = kernels.COMPILED is None
needs_cython = pytest.mark.skipif(cython_missing, reason="compiled kernels not built")

PY = kernels.get_backend("python")


def _gens(d):
    return np.array([[d.delta[q][i] for q in range(d.states)] for i in range(len(d.alphabet))],
                    dtype=np.int32)


def test_backend_selection():
    assert kernels.BACKEND in ("python", "cython")
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


def test_pure_python_forced_by_environment():
    env = dict(os.environ, VARIETYLAB_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", "import varietylab; print(varietylab.BACKEND)"],
                          capture_output=True, text=True, env=env)
    assert proc.stdout.strip() == "python"


@needs_cython
@given(dfas(max_states=5))
def test_closure_and_table_agree(d):
    cy = kernels.get_backend("cython")
    a = PY.transformation_closure(_gens(d), 10_000)
    b = cy.transformation_closure(_gens(d), 10_000)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)
    assert np.array_equal(PY.cayley_table(*a[1:]), cy.cayley_table(*b[1:]))


@needs_cython
def test_closure_cap_agrees():
    gens = np.array([[1, 2, 0, 3], [1, 0, 2, 3], [3, 1, 2, 3]], dtype=np.int32)
    cy = kernels.get_backend("cython")
    assert PY.transformation_closure(gens, 5) is None and cy.transformation_closure(gens, 5) is None


IDENTITIES = ["(xy)^w x = (xy)^w", "x^w = x x^w", "(x^(w-1)y)^w = (x^(w-1)y)^(w+1)",
              "x^w y x^w <= x^w", "xy = yx", "(xyz)^w z (xyz)^w = (xyz)^w", "x <= 1"]


@needs_cython
@given(small_stamps(40), st.sampled_from(IDENTITIES), st.data())
def test_identity_search_agrees(sp, text, data):
    cy = kernels.get_backend("cython")
    stamp, _ = sp
    M = stamp.monoid
    ident = parse_identity(text)
    names = ident.variables
    prog_l, prog_r = compile_term(ident.lhs, names), compile_term(ident.rhs, names)
    domain = np.array(sorted(data.draw(st.sets(st.integers(0, M.size - 1), min_size=1))), dtype=np.int32)
    leq = None
    if ident.relation == "leq":
        leq = data.draw(st.sampled_from([np.eye(M.size, dtype=bool), np.ones((M.size, M.size), dtype=bool)]))
    args = (M.table, M.omega_table, M.period_table, M.identity, prog_l, prog_r, len(names), domain, leq)
    assert PY.find_identity_failure(*args) == cy.find_identity_failure(*args)
