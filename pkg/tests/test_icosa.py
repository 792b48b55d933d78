import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import elements
from wimanedge.icosa import (act, axes, axes_character, build_group, conic_through, element_order, expected_series,
                             express_phi15_squared, generators, germ_map, invariance_scalar, invariant_form,
                             matrix_closure, molien_coefficients, order_profile, orbit_of_line, restrict_to_conic,
                             reynolds, reynolds_rank, stabilizer_order)
from wimanedge.exactfield import get_field
from wimanedge.mpoly import MPoly, jacobian_det, monomials_of_degree

K = get_field("Q(sqrt5)")
PHI = (1 + 5 ** 0.5) / 2


def _float(m):
    return np.array([[v.coeffs[0] + v.coeffs[1] * PHI for v in row] for row in m], dtype=float)


def _numeric_invariant_dim(d):
    """Rank of the fixed space of the two generators on degree-d monomials, in floats."""
    monos = monomials_of_degree(3, d)
    rng = np.random.default_rng(1)
    pts = rng.normal(size=(2 * len(monos) + 10, 3))
    pts /= np.linalg.norm(pts, axis=1)[:, None]
    ev = np.array([[np.prod(p ** np.array(e)) for e in monos] for p in pts])
    blocks = []
    for g in generators():
        gp = pts @ _float(g).T
        img = np.array([[np.prod(p ** np.array(e)) for e in monos] for p in gp])
        # coefficients c with F(g x) = F(x) at all sample points
        blocks.append(img - ev)
    A = np.vstack(blocks)
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[0] < 1e-12:
        return len(monos)
    return int(np.sum(sv < 1e-9 * sv[0]))


def test_group_structure():
    g = build_group()
    assert len(g) == 60 and order_profile(g) == {1: 1, 2: 15, 3: 20, 5: 24}
    assert len(matrix_closure(generators())) == 60
    for m in g:
        f = _float(m)
        assert np.allclose(f.T @ f, np.eye(3))


@pytest.mark.parametrize("d", range(0, 13))
def test_reynolds_rank_matches_numeric_oracle_and_molien(d):
    mol = molien_coefficients(12)
    assert reynolds_rank(d) == _numeric_invariant_dim(d) == mol[d] == expected_series(12)[d]


def test_series_frozen_values():
    exp = expected_series(30)
    assert [exp[d] for d in (2, 6, 10, 15, 30)] == [1, 2, 3, 1, 13]


coeffs = elements("Q(sqrt5)")
deg2 = st.lists(coeffs, min_size=6, max_size=6).map(
    lambda c: MPoly(K, 3, dict(zip(monomials_of_degree(3, 2), c))))


@settings(max_examples=10)
@given(deg2)
def test_reynolds_is_invariant_and_idempotent(F):
    R = reynolds(F)
    assert all(act(R, g) == R for g in generators())
    assert reynolds(R) == R
    assert R.proportional_to(invariant_form(2)) is not None or R.is_zero()


def test_invariant_forms():
    for d in (2, 6, 10, 15):
        F = invariant_form(d)
        assert F.homogeneous_degree() == d
        assert all(invariance_scalar(F, g) == 1 for g in generators())
    assert len(invariant_form(15)) == 28


def test_jacobian_frozen_scalar():
    J = jacobian_det([invariant_form(2), invariant_form(6), invariant_form(10)])
    assert J.proportional_to(invariant_form(15)) == K([-52, -84])


def test_phi15_squared_frozen():
    exps, sol, r, _ = express_phi15_squared()
    assert len(exps) == 13 and r == 13
    got = {e: c for e, c in zip(exps, sol) if c}
    assert len(got) == 10
    assert got[(0, 0, 3)] == K([75258725, -46512450])
    assert got[(9, 2, 0)] == K([114628, 185472])


def test_axis_orbits():
    for kind, stab in (("vertex", 10), ("face", 6), ("edge", 4)):
        v = axes(kind)[0]
        assert stabilizer_order(v) == stab
        assert len(orbit_of_line(v)) == 60 // stab == len(axes(kind))


def test_axes_character():
    assert axes_character() == (6, 2, 0, 1, 1)


def test_conic_facts():
    pts = list(axes("vertex"))
    assert conic_through(pts) == []
    assert len(conic_through(pts[:5])) == 1
    r = restrict_to_conic(invariant_form(10))
    assert r.degree == 20 and r.is_squarefree()
    assert restrict_to_conic(invariant_form(2)).is_zero()


def test_element_orders_of_generators():
    assert sorted(element_order(g) for g in generators()) == [2, 5]


def test_germ_jacobian():
    f = germ_map()
    z1, z2 = MPoly.gens(f[0].field, 2)
    assert jacobian_det(f) == -(z1 * z2 * (9 * z1 * z2 - 4))
