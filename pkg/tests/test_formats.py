from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given

from varietylab import algebra as alg
from varietylab import formats as fm
from varietylab import products as pr

from conftest import stamp_of
from strategies import small_stamps

U1_TEXT = """\
2
0 1
1 1
identity 0
gen a 0
gen b 1
le 1 0
"""


def test_read_mtab_example():
    mf = fm.read_mtab(U1_TEXT)
    assert mf.monoid.size == 2 and mf.monoid.identity == 0
    assert mf.generators == {"a": 0, "b": 1}
    assert mf.leq.tolist() == [[True, False], [True, True]]
    assert mf.stamp.image("ab") == 1
    assert fm.write_mtab(mf.monoid, mf.generators, mf.leq) == U1_TEXT


def test_write_moves_identity_to_zero():
    M = alg.FiniteMonoid([[0, 0], [0, 1]], identity=1)
    text = fm.write_mtab(M, {"a": 0}, np.array([[True, True], [False, True]]))
    mf = fm.read_mtab(text)
    assert mf.monoid.identity == 0
    assert mf.generators == {"a": 1}
    assert mf.leq.tolist() == [[True, False], [True, True]]


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("2\n0 1\n1 1\n", 1),
    ("2\n0 1\n1 x\nidentity 0\n", 3),
    ("2\n0 1\n1 2\nidentity 0\n", 3),
    ("2\n0 1\n1 1\nidentity 0\nbogus 1\n", 5),
    ("2\n0 1\n1 1\nidentity 5\n", 4),
])
def test_mtab_errors_carry_line_numbers(text, line):
    with pytest.raises(fm.FormatError) as exc:
        fm.read_mtab(text)
    assert exc.value.position == line


def test_mtab_rejects_non_monoid():
    with pytest.raises(Exception):
        fm.read_mtab("2\n1 0\n0 0\nidentity 0\n")


@given(small_stamps(50))
def test_mtab_round_trip(sp):
    stamp, P = sp
    order = alg.syntactic_order(stamp, P)
    text = fm.write_mtab(stamp.monoid, stamp.gen_image, order.leq)
    mf = fm.read_mtab(text)
    assert np.array_equal(mf.monoid.table, stamp.monoid.table)
    assert mf.generators == stamp.gen_image
    assert np.array_equal(mf.ordered.leq, order.leq)
    assert fm.write_mtab(mf.monoid, mf.generators, mf.leq) == text


def test_action_round_trip():
    U = alg.u1()
    act = pr.LeftAction(U, U, np.array([[0, 1], [0, 0]]))
    text = fm.write_action(act)
    assert text.splitlines()[0] == "S 2 T 2"
    again = fm.read_action(text, U, U)
    assert np.array_equal(again.table, act.table)
    both = pr.BiAction(pr.trivial_action(U, U), np.array([[0, 1], [1, 1]]))
    again = fm.read_action(fm.write_action(both), U, U)
    assert isinstance(again, pr.BiAction) and np.array_equal(again.right, both.right)


def test_action_errors():
    U = alg.u1()
    with pytest.raises(fm.FormatError):
        fm.read_action("S 3 T 2\n", U, U)
    with pytest.raises(fm.FormatError):
        fm.read_action("S 2 T 2\nact 0 0 0\n", U, U)
    with pytest.raises(fm.FormatError) as exc:
        fm.read_action("S 2 T 2\nact 0 0 9\n", U, U)
    assert exc.value.position == 2


def test_fixture_reader():
    rows = [{"id": "x1", "input": {"regex": "a"}, "operation": "synt_size", "output": 3,
             "provenance": "hand"}]
    text = "\n".join(json.dumps(r) for r in rows) + "\n\n"
    assert fm.read_fixtures(text) == rows
    with pytest.raises(fm.FormatError) as exc:
        fm.read_fixtures('{"input": 1}\n')
    assert exc.value.position == 1
    with pytest.raises(fm.FormatError):
        fm.read_fixtures("{nope\n")


def test_synt_of_ab_star_serializes():
    stamp, P = stamp_of("(ab)*")
    text = fm.write_mtab(stamp.monoid, stamp.gen_image)
    assert text.startswith("6\n") and "identity 0" in text
