import sympy
from hypothesis import given, strategies as st

from wimanedge.exactfield import get_field, nf_embed
from wimanedge.mpoly import MPoly
from wimanedge.pencil import (CYCLIC, FUNDAMENTAL_POINTS, SIGN_X, SWAP_XY, PencilParam, base_points,
                              branch_tangent_contact, cremona, cremona_square_common_factor, generators, member,
                              pencil_membership, projection_jacobian, reducible_member_matches,
                              signed_permutation_group, singular_points_among, golden_candidates,
                              tangent_cone, verify_symmetry)

K = get_field("Q(zeta15)")
x, y, z = sympy.symbols("x y z")
W_SYM = x**6 + y**6 + z**6 + (x**2 + y**2 + z**2) * (x**4 + y**4 + z**4) - 12 * x**2 * y**2 * z**2
D_SYM = (x**2 - y**2) * (y**2 - z**2) * (x**2 - z**2)
SIGMA = [-x**2 + y**2 + z**2 + x*y + x*z + y*z, x**2 - y**2 + z**2 + x*y + x*z + y*z,
         x**2 + y**2 - z**2 + x*y + x*z + y*z]


def _sub(F, comps):
    return sympy.expand(F.subs(dict(zip((x, y, z), comps)), simultaneous=True))


def test_cremona_cofactors_against_sympy():
    qw, rw = sympy.div(_sub(W_SYM, SIGMA), W_SYM, x, y, z)
    qd, rd = sympy.div(_sub(D_SYM, SIGMA), D_SYM, x, y, z)
    assert rw == 0 and rd == 0
    assert sympy.factor(qw) == 64 * ((x + y) * (y + z) * (x + z)) ** 2
    # P o sigma picks up the opposite sign: sigma is odd
    assert sympy.simplify(qd / qw) == -1
    for p in ((1, 0), (0, 1)):
        assert verify_symmetry(PencilParam.of(*p, K), cremona(K)).ok


def test_cremona_is_an_involution_up_to_a_cubic():
    x3 = MPoly.gens(K, 3)
    q = cremona_square_common_factor(K)
    assert q == 8 * (x3[0] + x3[1]) * (x3[1] + x3[2]) * (x3[0] + x3[2])


@given(st.integers(-9, 9), st.integers(-9, 9))
def test_even_symmetries_fix_every_member(a, b):
    if a == b == 0:
        return
    p = PencilParam.of(a, b, K)
    for g in (CYCLIC, SIGN_X):
        r = verify_symmetry(p, g)
        assert r.ok and r.scalar == 1


@given(st.integers(1, 9), st.integers(1, 9))
def test_transposition_swaps_conjugate_members(a, b):
    p = PencilParam.of(a, b, K)
    r = verify_symmetry(p, SWAP_XY)
    assert not r.ok and r.image == p.conjugate()


def test_sign_character_on_invariant_members():
    for p in (PencilParam.of(1, 0, K), PencilParam.of(0, 1, K)):
        chars = {g.matrix: verify_symmetry(p, g).scalar for g in signed_permutation_group()}
        assert set(map(int, (c.to_fraction() for c in chars.values()))) <= {1, -1}
    assert verify_symmetry(PencilParam.of(0, 1, K), SWAP_XY).scalar == -1


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_membership_roundtrip(a, b):
    if a == b == 0:
        return
    p = PencilParam.of(a, b, K)
    assert pencil_membership(member(p).form) == p


def test_base_points_and_fundamental_nodes():
    W, D = generators(K)
    for pt in base_points(K):
        assert not W.evaluate(pt) and not D.evaluate(pt)
    for pt in FUNDAMENTAL_POINTS:
        assert not W.evaluate(pt) and not any(g.evaluate(pt) for g in W.gradient())


def test_tangent_cones_are_a_bijection():
    idx = [tangent_cone(PencilParam.of(1, 0, K), pt).pair_index for pt in FUNDAMENTAL_POINTS]
    assert sorted(idx) == [0, 1, 2, 3]


def test_branch_tangent_contact_is_three():
    # frozen: the node absorbs 3 of the 6 intersections, three simple base points carry the rest
    lc = branch_tangent_contact(K)
    assert lc.node_multiplicity == 3
    assert [m for _, m in lc.residual_points] == [1, 1, 1]
    assert all(on_curve and not on_line for on_line, on_curve in lc.printed_points_on_line.values())


def test_reducible_members():
    ms = reducible_member_matches(K)
    assert sorted(m.sign for m in ms) == [-1, 1]
    assert all(m.scalar == K(1) / 2 for m in ms)


def test_golden_singular_members():
    s5 = nf_embed("sqrt5", K)
    for sign in (1, -1):
        found = singular_points_among(PencilParam(K.one, 5 * s5 * sign), golden_candidates(K))
        assert len(found) == 6


def test_projection_jacobian_is_a_member():
    jf = projection_jacobian(K)
    assert jf.param == PencilParam(K.one, -5 * nf_embed("sqrt5", K))
    assert jf.scalar == 1
