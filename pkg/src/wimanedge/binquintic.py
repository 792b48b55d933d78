"""Invariants of binary quintics f = a0 x^5 + a1 x^4 y + ... + a5 y^5.

Invariants of degree d are the kernel of the raising operator on the isobaric
slice of weight 5d/2 (weight of a_i is i).  Polynomials in a0..a5 are FLINT
fmpq_mpoly objects wrapped in CoeffPoly, which tracks degree and weight.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import flint

from .linalg import fmpq, rational_nullspace, rational_rank, rational_solve
from .report import Verdict, run_checks

NAMES = tuple(f"a{i}" for i in range(6))
CTX = flint.fmpq_mpoly_ctx.get(NAMES, "lex")
_XCTX = flint.fmpz_mpoly_ctx.get(NAMES + ("x",), "lex")
_BINCTX = flint.fmpz_mpoly_ctx.get(("x", "y"), "lex")


def _gens():
    return CTX.gens()


@dataclass(frozen=True)
class CoeffPoly:
    poly: flint.fmpq_mpoly

    @classmethod
    def from_terms(cls, terms: dict) -> CoeffPoly:
        return cls(CTX.from_dict({e: fmpq(c) for e, c in terms.items() if c}))

    def terms(self) -> dict:
        return {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in zip(self.poly.monoms(), self.poly.coeffs())}

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def degree(self) -> int | None:
        degs = {sum(e) for e in self.poly.monoms()}
        return degs.pop() if len(degs) == 1 else None

    @property
    def weight(self) -> int | None:
        ws = {_weight(e) for e in self.poly.monoms()}
        return ws.pop() if len(ws) == 1 else None

    def __call__(self, coeffs) -> Fraction:
        v = self.poly(*[fmpq(c) for c in coeffs])
        return Fraction(int(v.p), int(v.q))

    def __mul__(self, other: CoeffPoly) -> CoeffPoly:
        return CoeffPoly(self.poly * other.poly)

    def __pow__(self, k: int) -> CoeffPoly:
        return CoeffPoly(self.poly ** k)

    def __add__(self, other: CoeffPoly) -> CoeffPoly:
        return CoeffPoly(self.poly + other.poly)

    def __sub__(self, other: CoeffPoly) -> CoeffPoly:
        return CoeffPoly(self.poly - other.poly)

    def scale(self, c) -> CoeffPoly:
        return CoeffPoly(self.poly * fmpq(c))

    def substitute(self, values: dict) -> CoeffPoly:
        """Set some a_i to rational values, e.g. {1: 0, 3: 0}."""
        gens = list(_gens())
        args = [CTX.from_dict({(0,) * 6: fmpq(values[i])}) if i in values else gens[i] for i in range(6)]
        return CoeffPoly(self.poly.compose(*args))

    def __eq__(self, other):
        return isinstance(other, CoeffPoly) and self.poly == other.poly

    def __hash__(self):
        return hash(str(self.poly))

    def text(self) -> str:
        return str(self.poly)

    def __len__(self):
        return len(self.poly.monoms())


def _weight(e) -> int:
    return sum(i * k for i, k in enumerate(e))


# --- the sl2 derivations ---------------------------------------------------------

def raise_op(p: CoeffPoly) -> CoeffPoly:
    """D+ = sum_{i=1..5} i a_i d/da_{i-1}, from y -> y + eps x."""
    g = _gens()
    out = CTX.from_dict({})
    for i in range(1, 6):
        out += i * g[i] * p.poly.derivative(i - 1)
    return CoeffPoly(out)


def lower_op(p: CoeffPoly) -> CoeffPoly:
    """D- = sum_{i=0..4} (5 - i) a_i d/da_{i+1}, from x -> x + eps y."""
    g = _gens()
    out = CTX.from_dict({})
    for i in range(5):
        out += (5 - i) * g[i] * p.poly.derivative(i + 1)
    return CoeffPoly(out)


def sl2_operators():
    return raise_op, lower_op


def variable(i: int) -> CoeffPoly:
    return CoeffPoly(_gens()[i])


# --- invariant spaces -------------------------------------------------------------

@lru_cache(maxsize=None)
def isobaric_monomials(d: int, w: int) -> tuple:
    """Exponent vectors of degree d and weight w, lexicographically decreasing."""
    out = []

    def rec(i, left, wleft, acc):
        if i == 5:
            if left * 5 == wleft:
                out.append(tuple(acc + [left]))
            return
        for k in range(left, -1, -1):
            if k * i <= wleft:
                rec(i + 1, left - k, wleft - k * i, acc + [k])

    rec(0, d, w, [])
    return tuple(sorted(out, reverse=True))


def _raise_matrix(d: int, w: int):
    src = isobaric_monomials(d, w)
    dst = {e: r for r, e in enumerate(isobaric_monomials(d, w + 1))}
    rows = [[0] * len(src) for _ in dst]
    for col, e in enumerate(src):
        for i in range(1, 6):
            k = e[i - 1]
            if k:
                f = list(e)
                f[i - 1] -= 1
                f[i] += 1
                rows[dst[tuple(f)]][col] += i * k
    return rows, src


@lru_cache(maxsize=None)
def invariant_space(d: int) -> tuple[CoeffPoly, ...]:
    """Reduced-echelon basis of the degree-d invariants; each element's lexicographically
    first monomial has coefficient 1."""
    if (5 * d) % 2:
        return ()
    w = 5 * d // 2
    rows, src = _raise_matrix(d, w)
    ker = rational_nullspace(rows, len(src)) if rows else [[Fraction(int(i == j)) for i in range(len(src))] for j in range(len(src))]
    if not ker:
        return ()
    red, rk = flint.fmpq_mat([[fmpq(v) for v in r] for r in ker]).rref()
    out = []
    for r in range(rk):
        terms = {}
        for c, e in enumerate(src):
            v = red[r, c]
            if v != 0:
                terms[e] = Fraction(int(v.p), int(v.q))
        out.append(CoeffPoly.from_terms(terms))
    return tuple(out)


def _coords(polys, monos) -> list[list[Fraction]]:
    return [[p.terms().get(m, Fraction(0)) for m in monos] for p in polys]


def _independent_of(candidates, base, d) -> CoeffPoly:
    monos = isobaric_monomials(d, 5 * d // 2)
    r0 = rational_rank(_coords(base, monos)) if base else 0
    for c in candidates:
        if rational_rank(_coords(list(base) + [c], monos)) > r0:
            return c
    raise ValueError(f"no new invariant in degree {d}")


@lru_cache(maxsize=None)
def clebsch_invariants() -> dict:
    """I4, I8, I12, I18 chosen from the echelon bases: each the first basis vector
    independent of the products of the lower ones."""
    I4 = invariant_space(4)[0]
    I8 = _independent_of(invariant_space(8), [I4 ** 2], 8)
    I12 = _independent_of(invariant_space(12), [I4 ** 3, I4 * I8], 12)
    I18 = invariant_space(18)[0]
    return {4: I4, 8: I8, 12: I12, 18: I18}


# --- the discriminant ----------------------------------------------------------------

@lru_cache(maxsize=None)
def discriminant() -> CoeffPoly:
    """Res_x(f(x, 1), f'(x, 1)) / a0."""
    g = _XCTX.gens()
    x = g[6]
    f = sum((g[i] * x ** (5 - i) for i in range(6)), _XCTX.from_dict({}))
    res = f.resultant(f.derivative(6), "x")
    q = res // g[0]
    if q * g[0] != res:
        raise ArithmeticError("resultant not divisible by a0")
    terms = {tuple(e[:6]): Fraction(int(c)) for e, c in zip(q.monoms(), q.coeffs())}
    return CoeffPoly.from_terms(terms)


def quintic_from_roots(roots, lead=1) -> list[Fraction]:
    """Coefficients (a0..a5) of lead * prod (x - r y)."""
    poly = [Fraction(lead)]
    for r in roots:
        nxt = poly + [Fraction(0)]
        for k in range(len(poly)):
            nxt[k + 1] -= poly[k] * Fraction(r)
        poly = nxt
    return poly


def discriminant_membership():
    """(alpha, beta) with Delta = alpha I4^2 + beta I8, or None."""
    inv = clebsch_invariants()
    basis = [inv[4] ** 2, inv[8]]
    monos = isobaric_monomials(8, 20)
    rows = [list(col) for col in zip(*_coords(basis, monos))]
    rhs = [discriminant().terms().get(m, Fraction(0)) for m in monos]
    return rational_solve(rows, rhs)


# --- SL2 substitutions ----------------------------------------------------------------

def transform(coeffs, m) -> list[Fraction]:
    """Coefficients of f(a x + b y, c x + d y) for m = ((a, b), (c, d))."""
    x, y = _BINCTX.gens()
    (a, b), (c, d) = m
    fr = [Fraction(v) for v in coeffs]
    den = lcm(*(v.denominator for v in fr))
    u, v = a * x + b * y, c * x + d * y
    f = sum((int(co * den) * u ** (5 - i) * v ** i for i, co in enumerate(fr)), _BINCTX.from_dict({}))
    terms = dict(zip(map(tuple, f.monoms()), f.coeffs()))
    return [Fraction(int(terms.get((5 - i, i), 0)), den) for i in range(6)]


def random_quintic(rng: random.Random, lo: int = -9, hi: int = 9) -> list[Fraction]:
    return [Fraction(rng.randint(lo, hi)) for _ in range(6)]


def random_unimodular(rng: random.Random):
    while True:
        a, b, c = (rng.randint(-4, 4) for _ in range(3))
        if a and (1 + b * c) % a == 0:
            return ((a, b), (c, (1 + b * c) // a))


# --- relations ------------------------------------------------------------------------

def weighted_exponents() -> list[tuple]:
    """(a, b, c) with 4a + 8b + 12c = 36."""
    return [(a, b, c) for c in range(4) for b in range(5) for a in range(10) if a + 2 * b + 3 * c == 9]


def interpolate_relation(seed: int = 0, samples: int = 24, fresh: int = 5):
    """Solve I18^2 = sum c_abc I4^a I8^b I12^c from random evaluations; verify at fresh ones."""
    inv = clebsch_invariants()
    exps = weighted_exponents()
    rng = random.Random(seed)
    while True:
        pts = [random_quintic(rng) for _ in range(samples)]
        vals = [{d: inv[d](p) for d in inv} for p in pts]
        rows = [[v[4] ** a * v[8] ** b * v[12] ** c for a, b, c in exps] for v in vals]
        if rational_rank(rows) == len(exps):
            break
    sol = rational_solve(rows, [v[18] ** 2 for v in vals])
    if sol is None:
        return exps, None, False
    ok = True
    for _ in range(fresh):
        p = random_quintic(rng)
        v = {d: inv[d](p) for d in inv}
        lhs = sum(s * v[4] ** a * v[8] ** b * v[12] ** c for s, (a, b, c) in zip(sol, exps))
        ok = ok and lhs == v[18] ** 2
    return exps, sol, ok


def cone_monomials() -> list[tuple]:
    """Degree-6 monomials u0^a u1^b u2^c fixed by (u0, u1, u2) -> (u0, zeta3 u1, -zeta3 u2)."""
    return [(a, b, 6 - a - b) for a in range(6, -1, -1) for b in range(6 - a, -1, -1)
            if (b + 6 - a - b) % 3 == 0 and (6 - a - b) % 2 == 0]


PRINTED_CONE_BASIS = ((6, 0, 0), (3, 3, 0), (3, 1, 2), (0, 0, 6), (0, 6, 0), (0, 2, 4), (0, 4, 2))


def cone_monomial_count():
    mons = cone_monomials()
    return len(mons), set(mons) == set(PRINTED_CONE_BASIS)


# --- suite -----------------------------------------------------------------------------

def suite(field=None, seed: int = 0) -> list:
    inv_cache = {}

    def inv():
        if not inv_cache:
            inv_cache.update(clebsch_invariants())
        return inv_cache

    def operators():
        ok = raise_op(variable(0)) == variable(1)
        # as derivations of the coordinate ring: D+ D- - D- D+ multiplies a_i by 2i - 5
        comm = all(raise_op(lower_op(variable(i))) - lower_op(raise_op(variable(i))) == variable(i).scale(2 * i - 5)
                   for i in range(6))
        return ok and comm, "D+(a0) = a1; (D- D+ - D+ D-) a_i = (5 - 2i) a_i for all i"

    def dimensions():
        dims = {d: len(invariant_space(d)) for d in (2, 4, 6, 8, 12, 18)}
        want = {2: 0, 4: 1, 6: 0, 8: 2, 12: 3, 18: 1}
        sizes = {d: len(isobaric_monomials(d, 5 * d // 2)) for d in (4, 8, 12, 18)}
        return dims == want, f"kernel dimensions {dims}; isobaric slice sizes {sizes}"

    def annihilated():
        ok = all(raise_op(p).is_zero() and lower_op(p).is_zero() and p.degree == d and p.weight == 5 * d // 2
                 for d, p in inv().items())
        terms = {d: len(p) for d, p in inv().items()}
        return ok, f"I4, I8, I12, I18 killed by D+ and D-, isobaric of weight 5d/2; term counts {terms}"

    def sl2():
        rng = random.Random(seed)
        ok, skew = True, True
        for _ in range(4):
            f = random_quintic(rng)
            g = transform(f, random_unimodular(rng))
            ok = ok and all(p(g) == p(f) for p in inv().values())
            h = transform(f, ((-1, 0), (0, 1)))
            skew = skew and all(inv()[d](h) == inv()[d](f) for d in (4, 8, 12)) and inv()[18](h) == -inv()[18](f)
        return ok and skew, "unimodular substitutions keep all four; x -> -x negates I18 and keeps the rest"

    def disc():
        D = discriminant()
        double = quintic_from_roots([1, 1, 2, 3, 4])
        distinct = [Fraction(1), 0, 0, 0, 0, Fraction(-1)]
        ok = D.degree == 8 and D.weight == 20 and D(double) == 0 and D(distinct) != 0
        rng = random.Random(seed + 1)
        fam = all(D(quintic_from_roots([r, r] + [rng.randint(-9, 9) for _ in range(3)], rng.randint(1, 5))) == 0
                  for r in range(-3, 4))
        return ok and fam, (f"degree {D.degree}, weight {D.weight}, {len(D)} terms; vanishes on (x-1)^2(x-2)(x-3)(x-4) "
                            f"and on random double-root families; nonzero on x^5 - y^5")

    def membership():
        sol = discriminant_membership()
        if sol is None:
            return False, "Delta not in span{I4^2, I8}"
        al, be = sol
        verdict = Verdict.REPORTED if (al and be) else Verdict.FAIL
        return verdict, (f"Delta = {al} I4^2 + {be} I8 in the echelon normalization (ratio beta/alpha = {be / al}); "
                         f"the constant -128 belongs to a normalization not fixed here")

    def relation():
        exps, sol, ok = interpolate_relation(seed)
        if sol is None:
            return False, "no solution"
        nz = sum(1 for s in sol if s)
        return ok, f"I18^2 = P(I4, I8, I12) in {len(exps)} monomials, {nz} nonzero; consistent at 5 fresh quintics"

    def clebsch():
        I18 = inv()[18]
        symbolic = I18.substitute({1: 0, 3: 0, 5: 0}).is_zero()
        rng = random.Random(seed + 2)
        fam = all(I18(quintic_from_roots([0, p, -p, q, -q])) == 0
                  for p, q in ((Fraction(rng.randint(1, 9), rng.randint(1, 9)), Fraction(rng.randint(1, 9), rng.randint(1, 9)))
                               for _ in range(4)))
        ex = I18(quintic_from_roots([0, 1, -1, 2, -2])) == 0
        generic = I18(random_quintic(rng)) != 0
        return symbolic and fam and ex and generic, ("I18 vanishes identically on odd quintics (a1 = a3 = a5 = 0), on "
                                                     "x(x^2 - y^2)(x^2 - 4y^2) and random x(x^2-p^2y^2)(x^2-q^2y^2); "
                                                     "nonzero at a random quintic")

    def cone():
        n, same = cone_monomial_count()
        return Verdict.REPORTED if same else Verdict.FAIL, (
            f"{n} invariant sextic monomials, equal to the printed list: a linear system of projective "
            f"dimension {n - 1}, not 5")

    return run_checks("binquintic", [
        ("operators", operators),
        ("kernel_dimensions", dimensions),
        ("annihilated", annihilated),
        ("sl2_invariance", sl2),
        ("discriminant", disc),
        ("discriminant_membership", membership),
        ("relation", relation),
        ("clebsch_vanishing", clebsch),
        ("cone_monomials", cone),
    ])

