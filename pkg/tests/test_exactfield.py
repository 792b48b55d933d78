import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from conftest import elements
from wimanedge.exactfield import (CONSTANTS, FieldMismatchError, MissingConstantError, cyclotomic_polynomial,
                                  get_field, nf_arith, nf_embed, nf_make)

K15 = "Q(zeta15)"


@given(elements(K15), elements(K15), elements(K15))
def test_ring_axioms_zeta15(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a + 0 == a


@given(elements("Q(sqrt5)"))
def test_inverse(a):
    if a:
        assert a * a.inverse() == 1
        assert (a / a) == 1


@given(elements(K15), elements(K15))
def test_complex_embedding_is_a_homomorphism(a, b):
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6 * (1 + abs(a.to_complex() * b.to_complex()))


@pytest.mark.parametrize("n", [3, 5, 15, 20])
def test_cyclotomic_matches_sympy(n):
    x = sympy.symbols("x")
    want = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert cyclotomic_polynomial(n) == [int(c) for c in want]


def test_named_constants():
    k = get_field(K15)
    s5, r3, z3 = nf_embed("sqrt5", k), nf_embed("sqrtm3", k), nf_embed("zeta3", k)
    assert s5 ** 2 == 5 and r3 ** 2 == -3 and z3 ** 3 == 1 and z3 != 1
    g, gc = nf_embed("golden", k), nf_embed("goldenConj", k)
    assert g + gc == 1 and g * gc == -1 and g - gc == s5
    assert abs(s5.to_complex() - 5 ** 0.5) < 1e-12
    assert abs(r3.to_complex() - cmath.sqrt(-3)) < 1e-12


def test_every_registered_constant_has_the_right_value():
    for (name, _), v in CONSTANTS.items():
        c = v.to_complex()
        want = {"sqrt5": 5 ** 0.5, "sqrtm3": cmath.sqrt(-3), "i": 1j,
                "golden": (1 + 5 ** 0.5) / 2, "goldenConj": (1 - 5 ** 0.5) / 2}.get(name)
        if want is not None:
            assert abs(c - want) < 1e-12, name
        elif name.startswith("zeta"):
            n = int(name[4:])
            assert abs(c - cmath.exp(2j * cmath.pi / n)) < 1e-12, name


def test_missing_constant_and_mismatch():
    with pytest.raises(MissingConstantError):
        nf_embed("sqrtm3", get_field("Q(i)"))
    with pytest.raises(FieldMismatchError):
        get_field("Q(i)").gen + get_field("Q(zeta3)").gen


def test_nf_make_and_arith():
    gold = nf_make([-1, -1, 1])
    a = gold.gen
    assert nf_arith(a, a, "mul") == a + 1
    assert nf_arith(a, a + 1, "div") * (a + 1) == a
    with pytest.raises(ValueError):
        nf_make([1, 0, 2])


def test_field_lookup_aliases():
    assert get_field("q(zeta15)") == get_field("Q(zeta15)")
    with pytest.raises(KeyError):
        get_field("Q(zeta7)")


def test_coefficients_are_exact():
    k = get_field("Q(sqrt5)")
    v = k([Fraction(1, 3), Fraction(-2, 7)])
    assert v.coeffs == (Fraction(1, 3), Fraction(-2, 7))
