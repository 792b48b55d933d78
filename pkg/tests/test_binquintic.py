from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from wimanedge.binquintic import (PRINTED_CONE_BASIS, clebsch_invariants, cone_monomials, discriminant,
                                  discriminant_membership, interpolate_relation, invariant_space,
                                  isobaric_monomials, lower_op, quintic_from_roots, raise_op, transform, variable,
                                  weighted_exponents)

quintics = st.lists(st.integers(-6, 6), min_size=6, max_size=6).map(lambda c: [Fraction(v) for v in c])


@st.composite
def unimodular(draw):
    a, b, c = draw(st.integers(-3, 3)), draw(st.integers(-3, 3)), draw(st.integers(-3, 3))
    # (a b; c d) with ad - bc = 1, built from elementary moves
    m = ((1, a), (0, 1))
    for e in (((1, 0), (b, 1)), ((1, c), (0, 1))):
        m = tuple(tuple(sum(m[i][k] * e[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    return m


def test_operators_on_variables():
    assert raise_op(variable(0)) == variable(1)
    for i in range(6):
        comm = raise_op(lower_op(variable(i))) - lower_op(raise_op(variable(i)))
        assert comm == variable(i).scale(2 * i - 5)


def test_isobaric_slices_match_partition_count():
    # monomials of degree d and weight w in a0..a5 = partitions of w into at most d parts of size <= 5
    for d, w in ((4, 10), (8, 20)):
        n = sum(1 for p in sympy.utilities.iterables.partitions(w, k=5) if sum(p.values()) <= d)
        assert len(isobaric_monomials(d, w)) == n


def test_kernel_dimensions():
    assert {d: len(invariant_space(d)) for d in (2, 4, 6, 8, 12)} == {2: 0, 4: 1, 6: 0, 8: 2, 12: 3}


def test_invariants_killed_by_both_operators():
    for d, p in clebsch_invariants().items():
        assert raise_op(p).is_zero() and lower_op(p).is_zero()
        assert p.degree == d and p.weight == 5 * d // 2


@given(quintics, unimodular())
def test_sl2_invariance(f, m):
    g = transform(f, m)
    for p in clebsch_invariants().values():
        assert p(g) == p(f)


def test_discriminant_matches_sympy():
    x = sympy.symbols("x")
    a = sympy.symbols("a0:6")
    ref = sympy.Poly(sympy.discriminant(sum(a[i] * x ** (5 - i) for i in range(6)), x), *a)
    D = discriminant()
    mine = {e: c for e, c in D.terms().items()}
    theirs = {m: Fraction(int(c)) for m, c in zip(ref.monoms(), ref.coeffs())}
    assert mine == theirs


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_discriminant_vanishes_on_double_roots(r):
    assert discriminant()(quintic_from_roots([r[0]] + r)) == 0


def test_discriminant_in_span_frozen():
    al, be = discriminant_membership()
    assert (al, be) == (Fraction(-46875), Fraction(50000))


def test_i18_relation():
    exps, sol, ok = interpolate_relation(seed=3)
    assert len(exps) == len(weighted_exponents()) == 12
    assert sol is not None and ok


def test_cone_monomials():
    assert sorted(cone_monomials()) == sorted(PRINTED_CONE_BASIS)
    assert len(cone_monomials()) == 7
