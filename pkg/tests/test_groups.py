import pytest

from wimanedge.groups import (alternating_group, a5_table, group_closure, hurwitz_solve, monodromy_check, perm,
                              s5_table, symmetric_group)


def test_orders():
    assert symmetric_group(5).order == 120 and alternating_group(5).order == 60
    assert group_closure([perm("(12345)"), perm("(25)(34)")]).order == 10


def test_class_sizes():
    assert [c.size for c in s5_table().classes] == [1, 10, 15, 20, 20, 30, 24]
    assert [c.size for c in a5_table().classes] == [1, 15, 20, 12, 12]


@pytest.mark.parametrize("table", [s5_table, a5_table])
def test_orthogonality(table):
    assert table().orthogonality() == (True, True)


def test_decompositions():
    s5 = s5_table()
    assert s5.decompose(s5.wedge2(s5.chars["W"])) == {"E": 1, "V*sgn": 1}
    assert s5.decompose(s5.sym2(s5.chars["E"])) == {"1": 1, "sgn": 1, "V": 1, "W": 2, "W*sgn": 1}
    a5 = a5_table()
    assert a5.decompose(s5.restrict(s5.chars["E"], a5)) == {"I": 1, "I'": 1}
    assert a5.inner(a5.sym2(a5.chars["I"]), a5.chars["1"]) == 1


def test_tensor_with_sign():
    s5 = s5_table()
    assert s5.tensor(s5.chars["V"], s5.chars["sgn"]) == s5.chars["V*sgn"]


def test_hurwitz():
    s = sorted(x.as_tuple([2, 3, 4, 6]) for x in hurwitz_solve(120, range(2, 7)) if not x.counts.get(5))
    assert s == [(0, 2, 1, 0), (1, 0, 1, 1)]
    assert [x.as_tuple([2, 3, 5]) for x in hurwitz_solve(60, (2, 3, 5))] == [(3, 1, 0)]
    assert hurwitz_solve(360, range(2, 7)) == []


def test_monodromy_triple():
    a, b, c = perm("(123)(45)"), perm("(1245)"), perm("(14)(23)")
    rl, lr, order = monodromy_check(a, b, c)
    assert (rl or lr) and order == 120


def test_permutation_algebra():
    g, h = perm("(123)"), perm("(345)")
    assert (g * h).order() == 5
    assert g.sign() == 1 and perm("(12)").sign() == -1
