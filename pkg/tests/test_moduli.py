import pytest
from hypothesis import assume, given, strategies as st

from wimanedge.exactfield import get_field
from wimanedge.groups import Permutation, symmetric_group
from wimanedge.moduli import (Moebius, ProjPoint, StableTuple, catalogue, catalogue_rows, check_row, cross_ratio,
                              forgetful, forgetful_vector, moebius_from_three, moebius_witness, row_tuple,
                              small_a5_orbit_census, stabilizer, zero_dim_strata)

Q = get_field("Q")
ints = st.integers(-12, 12)
points = st.one_of(ints.map(lambda v: ProjPoint.of(Q, v)), st.just(ProjPoint.of(Q, "inf")))
maps = st.tuples(ints, ints, ints, ints).filter(lambda m: m[0] * m[3] - m[1] * m[2]).map(
    lambda m: Moebius(*(Q(v) for v in m)))
perms = st.permutations([1, 2, 3, 4, 5]).map(lambda p: Permutation(tuple(p)))


@given(st.lists(points, min_size=4, max_size=4, unique=True), maps)
def test_cross_ratio_is_moebius_invariant(pts, m):
    assert cross_ratio(*pts) == cross_ratio(*[m(p) for p in pts])


@given(st.lists(points, min_size=3, max_size=3, unique=True), st.lists(points, min_size=3, max_size=3, unique=True))
def test_moebius_from_three(src, dst):
    m = moebius_from_three(src, dst)
    assert [m(p) for p in src] == dst
    assert m * m.inverse() == Moebius(Q.one, Q.zero, Q.zero, Q.one)


def test_cross_ratio_normalization():
    pts = [ProjPoint.of(Q, v) for v in (0, "inf", 1)]
    assert cross_ratio(*pts, ProjPoint.of(Q, 7)) == 7


def test_unstable_tuple_rejected():
    with pytest.raises(ValueError):
        StableTuple.of(Q, (1, 1, 1, 2, 3))


@pytest.mark.parametrize("row", catalogue_rows(), ids=lambda r: r.name)
def test_catalogue_row(row):
    r = check_row(row)
    assert r.ok, (row.name, r.stab.order, r.orbit)


@given(perms)
def test_stabilizer_conjugation(tau):
    # t o tau is stabilized by tau^-1 Stab(t) tau
    t = row_tuple(catalogue_rows()[3])
    st_t = stabilizer(t).group.elements
    st_u = stabilizer(t.permuted(tau)).group.elements
    assert {tau.inverse() * s * tau for s in st_t} == set(st_u)


@given(perms)
def test_witness_convention(sigma):
    t = row_tuple(catalogue_rows()[7])
    rho = moebius_witness(t, sigma)
    if rho is not None:
        assert all(rho(t(i)) == t(sigma(i)) for i in range(1, 6))


def test_generic_tuple_has_trivial_stabilizer():
    t = StableTuple.of(Q, (0, 1, "inf", 7, 11))
    assert stabilizer(t).order == 1


def test_orbit_stabilizer_over_all_rows():
    for r in catalogue():
        assert r.orbit * r.stab.order == symmetric_group(5).order


def test_small_orbit_census():
    assert small_a5_orbit_census() == {"S3ev": (10, 10), "D8": (15,), "C6": (20,), "D10": (6, 6)}


def test_forgetful_example():
    assert [forgetful((1, 2, 3, 1, 2), i) for i in range(1, 6)] == [
        (2, 1, 1, 2), (1, 2, 1, 2), (1, 2, 1, 2), (1, 2, 1, 2), (1, 2, 2, 1)]


def test_forgetful_on_tuples():
    t = StableTuple.of(Q, (0, "inf", 1, 5, 3))
    out = forgetful(t, 5)
    assert out[3] == ProjPoint.of(Q, 5)
    assert forgetful(StableTuple.of(Q, (0, 1, 0, 2, 1)), 4) == (1, 2, 1, 2)


def test_strata_are_separated():
    strata = zero_dim_strata()
    assert len(strata) == 15
    assert len({forgetful_vector(s) for s in strata}) == 15


@given(st.lists(points, min_size=4, max_size=4, unique=True))
def test_cross_ratio_permutation_symmetry(pts):
    a, b, c, d = pts
    assume(len({a, b, c, d}) == 4)
    assert cross_ratio(a, b, c, d) == cross_ratio(b, a, d, c)
