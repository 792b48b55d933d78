from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from wimanedge.exactfield import get_field
from wimanedge.mpoly import (BinaryForm, MPoly, PolyMap, jacobian_det, local_intersection_multiplicity,
                             restrict_to_line, smoothness_certificate, sylvester_resultant)
from wimanedge.pencil import FUNDAMENTAL_POINTS, generators

Q = get_field("Q")
X, Y, Z = MPoly.gens(Q, 3)
coeff = st.integers(-5, 5)
terms = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), coeff, max_size=6)
polys = terms.map(lambda t: MPoly(Q, 3, t))
linear = st.lists(coeff, min_size=3, max_size=3).map(lambda c: X.scale(c[0]) + Y.scale(c[1]) + Z.scale(c[2]))


def to_sympy(f: MPoly):
    x, y, z = sympy.symbols("x y z")
    return sum(sympy.Rational(c.to_fraction()) * x ** e[0] * y ** e[1] * z ** e[2] for e, c in f.terms.items())


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(polys, polys)
def test_divide_exact_inverts_multiplication(a, b):
    if b:
        assert (a * b).divide_exact(b) == a


@given(polys, st.lists(linear, min_size=3, max_size=3), st.lists(linear, min_size=3, max_size=3))
def test_substitution_composes(f, g, h):
    # f(g(h)) computed two ways
    gh = [gi.substitute(h) for gi in g]
    assert f.substitute(g).substitute(h) == f.substitute(gh)


@given(st.lists(st.lists(coeff, min_size=3, max_size=3), min_size=3, max_size=3))
def test_jacobian_of_linear_map_is_its_determinant(rows):
    comps = [X.scale(r[0]) + Y.scale(r[1]) + Z.scale(r[2]) for r in rows]
    det = sympy.Matrix(rows).det()
    assert jacobian_det(comps) == MPoly.constant(Q, 3, int(det))


def test_polymap_composition():
    m = PolyMap([Y, Z, X])
    assert m.compose(m).compose(m).components == [X, Y, Z]


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=5), st.lists(st.integers(-6, 6), min_size=2, max_size=5))
def test_resultant_matches_sympy(a, b):
    if not a[-1] or not b[-1]:
        return
    t = sympy.symbols("t")
    pa = sum(c * t ** i for i, c in enumerate(a))
    pb = sum(c * t ** i for i, c in enumerate(b))
    assert sylvester_resultant(a, b, Q) == int(sympy.resultant(pa, pb, t))


def test_restriction_to_line():
    F = X ** 2 + Y * Z
    b = restrict_to_line(F, (1, 0, 0), (0, 1, 1))
    assert b == BinaryForm(Q, (Q(1), Q(0), Q(1)))


def test_intersection_multiplicities():
    assert local_intersection_multiplicity(Y * Z - X ** 2, Y, (0, 0, 1)) == 2
    # cusp y^2 = x^3 against its tangent y = 0: multiplicity 3
    assert local_intersection_multiplicity(Y ** 2 * Z - X ** 3, Y, (0, 0, 1)) == 3
    # two nodal cubics sharing the node with distinct tangents: 2*2
    assert local_intersection_multiplicity(Y ** 2 * Z - X ** 2 * (X + Z), X * Y * Z + X ** 3 + Y ** 3, (0, 0, 1)) == 4


def test_pencil_generators_meet_with_total_36():
    k = get_field("Q(zeta15)")
    W, D = generators(k)
    fund = [local_intersection_multiplicity(W, D, tuple(k(v) for v in p)) for p in FUNDAMENTAL_POINTS]
    assert fund == [6, 6, 6, 6]


def test_smoothness_certificates():
    assert smoothness_certificate(X ** 2 + Y ** 2 + Z ** 2).verdict == "smooth"
    W, _ = generators(Q)
    assert smoothness_certificate(W, FUNDAMENTAL_POINTS).verdict == "smooth-off-points"
    # the Fermat sextic is smooth outright
    assert smoothness_certificate(X ** 6 + Y ** 6 + Z ** 6).verdict == "smooth"


def test_binary_form_roots():
    s, t = MPoly.gens(Q, 2)
    b = BinaryForm.from_mpoly((s - t) ** 3 * (s + 2 * t))
    assert b.root_multiplicity((1, 1)) == 3
    assert b.root_multiplicity((2, -1)) == 1
    assert not b.is_squarefree()
    sq = BinaryForm.from_mpoly(((s - t) * (s + 3 * t)) ** 2)
    assert sq.square_root() is not None


def test_exact_rational_coefficients():
    f = X.scale(Fraction(1, 3)) * 3
    assert f == X
