"""The icosahedral rotation group over Q(sqrt5), its invariant forms and the
Klein-plane geometry around the fundamental conic.

Vertices are the cyclic permutations of (0, +-1, +-phi).  The group is built
from the vertex set alone, and the axis forms Phi_6, Phi_10, Phi_15 are products
of one linear form per antipodal pair of vertices, face centres and edge
midpoints.  Heavy Reynolds averages run through FLINT over Z[x, y, z, w] with w
standing for phi and are reduced with w^k = F(k-1) + F(k) w afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import flint

from .exactfield import FieldElement, get_field, nf_embed
from .linalg import nullspace, rank, solve
from .mpoly import BinaryForm, MPoly, jacobian_det, monomials_of_degree
from .report import run_checks

FIELD_NAME = "Q(sqrt5)"
CONIC_FIELD = "Q(zeta20)"
GERM_FIELD = "Q(zeta5)"


def _k():
    return get_field(FIELD_NAME)


def phi() -> FieldElement:
    return nf_embed("golden", _k())


# --- vectors and matrices ----------------------------------------------------

def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _mat_mul(a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(3)), _k().zero) for j in range(3)) for i in range(3))


def _mat_vec(m, v):
    return tuple(sum((m[i][k] * v[k] for k in range(3)), _k().zero) for i in range(3))


def _transpose(m):
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))


def det3(m):
    return _dot(m[0], _cross(m[1], m[2]))


def _inv3(m):
    d = det3(m)
    cols = [_cross(m[1], m[2]), _cross(m[2], m[0]), _cross(m[0], m[1])]
    return tuple(tuple(cols[j][i] / d for j in range(3)) for i in range(3))


def _identity():
    k = _k()
    return tuple(tuple(k.one if i == j else k.zero for j in range(3)) for i in range(3))


def _parallel(u, v) -> bool:
    return not any(_cross(u, v))


@lru_cache(maxsize=None)
def vertices() -> tuple:
    k, p = _k(), phi()
    out = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            base = (k.zero, k(s1), p * s2)
            for r in range(3):
                out.append(tuple(base[(i - r) % 3] for i in range(3)))
    return tuple(out)


def _adjacent_pairs():
    """Ordered pairs of vertices at edge distance (inner product phi)."""
    vs, p = vertices(), phi()
    return [(u, v) for u in vs for v in vs if _dot(u, v) == p]


@lru_cache(maxsize=None)
def build_group() -> tuple:
    """All rotations sending a reference edge (u0, v0) to some edge (u, v), kept when
    they preserve the vertex set, are orthogonal and have determinant 1."""
    pairs = _adjacent_pairs()
    u0, v0 = pairs[0]
    src_inv = _inv3(_transpose((u0, v0, _cross(u0, v0))))
    vset = set(vertices())
    out = []
    for u, v in pairs:
        m = _mat_mul(_transpose((u, v, _cross(u, v))), src_inv)
        if det3(m) == 1 and all(_mat_vec(m, x) in vset for x in vset) and _mat_mul(_transpose(m), m) == _identity():
            out.append(m)
    return tuple(out)


def element_order(m) -> int:
    ident, p, n = _identity(), m, 1
    while p != ident:
        p, n = _mat_mul(p, m), n + 1
    return n


def order_profile(group=None) -> dict:
    group = group or build_group()
    prof: dict = {}
    for g in group:
        o = element_order(g)
        prof[o] = prof.get(o, 0) + 1
    return dict(sorted(prof.items()))


def matrix_closure(gens) -> set:
    seen = {_identity()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _mat_mul(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def generators() -> tuple:
    """An element of order 2 and one of order 5 generating the group."""
    group = build_group()
    twos = [g for g in group if element_order(g) == 2]
    fives = [g for g in group if element_order(g) == 5]
    for a in twos:
        for b in fives:
            if len(matrix_closure([a, b])) == 60:
                return (a, b)
    raise RuntimeError("no generating pair found")


# --- axes and invariant forms ------------------------------------------------

def _dedupe_lines(vecs) -> list:
    out = []
    for v in vecs:
        if not any(_parallel(v, w) for w in out):
            out.append(v)
    return out


@lru_cache(maxsize=None)
def axes(kind: str) -> tuple:
    """One direction per antipodal pair: vertex (6), face (10) or edge (15)."""
    vs = vertices()
    p = phi()
    if kind == "vertex":
        return tuple(_dedupe_lines(vs))
    if kind == "edge":
        mids = [tuple(a + b for a, b in zip(u, v)) for u, v in combinations(vs, 2) if _dot(u, v) == p]
        return tuple(_dedupe_lines(mids))
    if kind == "face":
        tris = [(u, v, w) for u, v, w in combinations(vs, 3)
                if _dot(u, v) == p and _dot(v, w) == p and _dot(u, w) == p]
        return tuple(_dedupe_lines([tuple(a + b + c for a, b, c in zip(*t)) for t in tris]))
    raise ValueError(f"unknown axis kind {kind!r}")


_KIND_OF_DEGREE = {6: "vertex", 10: "face", 15: "edge"}
_DEGREE_OF_KIND = {"conic": 2, "vertex": 6, "face": 10, "edge": 15}


def linear_form(v) -> MPoly:
    x = MPoly.gens(_k(), 3)
    return sum((xi.scale(c) for xi, c in zip(x, v) if c), MPoly.zero(_k(), 3))


def invariant_form(kind) -> MPoly:
    """Phi_2 = x^2 + y^2 + z^2, or the product of the axis forms of matching degree.
    ``kind`` is "conic", "vertex", "face", "edge" or the degree itself."""
    return _invariant_form(_DEGREE_OF_KIND.get(kind, kind))


@lru_cache(maxsize=None)
def _invariant_form(degree: int) -> MPoly:
    if degree not in (2, 6, 10, 15):
        raise ValueError(f"no invariant form of kind {degree!r}")
    x, y, z = MPoly.gens(_k(), 3)
    if degree == 2:
        return x ** 2 + y ** 2 + z ** 2
    out = MPoly.constant(_k(), 3, 1)
    for v in axes(_KIND_OF_DEGREE[degree]):
        out = out * linear_form(v)
    return out


def act(F: MPoly, g) -> MPoly:
    """F o g, i.e. x -> g x."""
    return F.substitute([linear_form(row) for row in g])


def invariance_scalar(F: MPoly, g) -> FieldElement | None:
    return act(F, g).proportional_to(F)


# --- Reynolds averaging through FLINT -------------------------------------------

_CTX = flint.fmpz_mpoly_ctx.get(("x", "y", "z", "w"), "deglex")


def _zphi(c: FieldElement) -> tuple[int, int]:
    a, b = c.coeffs
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError(f"{c} is not in Z[phi]")
    return int(a), int(b)


def _flint_rows(g) -> list:
    """The three linear forms of 2g over Z[x, y, z, w]."""
    x, y, z, w = _CTX.gens()
    out = []
    for row in g:
        form = _CTX.from_dict({})
        for c, v in zip(row, (x, y, z)):
            a, b = _zphi(c * 2)
            form += (a + b * w) * v
        out.append(form)
    return out


@lru_cache(maxsize=None)
def _fib(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _reduce_w(p) -> dict:
    """{(i, j, l): (a, b)} meaning (a + b phi) x^i y^j z^l."""
    out: dict = {}
    for (i, j, l, k), c in zip(p.monoms(), p.coeffs()):
        c = int(c)
        a, b = (c, 0) if k == 0 else (c * _fib(k - 1), c * _fib(k))
        pa, pb = out.get((i, j, l), (0, 0))
        out[(i, j, l)] = (pa + a, pb + b)
    return {e: v for e, v in out.items() if v != (0, 0)}


def tetrahedral_subgroup() -> list:
    """Signed cyclic coordinate permutations of determinant 1."""
    out = []
    for g in build_group():
        nz = [sum(1 for c in row if c) for row in g]
        if nz == [1, 1, 1] and all(c in (0, 1, -1) for row in g for c in row):
            out.append(g)
    return out


@lru_cache(maxsize=None)
def coset_representatives() -> tuple:
    """t_1..t_5 with the group the disjoint union of the cosets H t_i, H tetrahedral."""
    H = tetrahedral_subgroup()
    reps, covered = [], set()
    for t in build_group():
        if t in covered:
            continue
        reps.append(t)
        covered |= {_mat_mul(h, t) for h in H}
    return tuple(reps)


def _tetrahedral_basis(d: int) -> list[tuple]:
    """Cyclic-orbit representatives of exponents (a, b, c), a + b + c = d, all of the parity of d."""
    reps, seen = [], set()
    for e in monomials_of_degree(3, d):
        if any(v % 2 != d % 2 for v in e) or e in seen:
            continue
        orbit = {e, (e[1], e[2], e[0]), (e[2], e[0], e[1])}
        seen |= orbit
        reps.append(e)
    return reps


@lru_cache(maxsize=None)
def _flint_cosets():
    return [_flint_rows(t) for t in coset_representatives()]


def reynolds_images(d: int) -> list[dict]:
    """Group averages (up to the common factor 1/60 * 2^d) of the tetrahedral orbit sums of degree d."""
    x, y, z, w = _CTX.gens()
    out = []
    for e in _tetrahedral_basis(d):
        f = x ** e[0] * y ** e[1] * z ** e[2] + x ** e[1] * y ** e[2] * z ** e[0] + x ** e[2] * y ** e[0] * z ** e[1]
        total = _CTX.from_dict({})
        for rows in _flint_cosets():
            total += f.compose(*rows, w)
        red = _reduce_w(total)
        if red:
            out.append(red)
    return out


def _block_rows(polys: list[dict], d: int) -> list[list[int]]:
    """Each element v = A + B phi of Q(sqrt5)^N contributes rows [A | B] and [B | A + B]."""
    monos = monomials_of_degree(3, d)
    rows = []
    for p in polys:
        A = [p.get(m, (0, 0))[0] for m in monos]
        B = [p.get(m, (0, 0))[1] for m in monos]
        rows.append(A + B)
        rows.append(B + [a + b for a, b in zip(A, B)])
    return rows


def zphi_rank(polys: list[dict], d: int) -> int:
    if not polys:
        return 0
    return flint.fmpz_mat(_block_rows(polys, d)).rank() // 2


def reynolds_rank(d: int) -> int:
    return zphi_rank(reynolds_images(d), d)


def _to_mpoly(p: dict) -> MPoly:
    k = _k()
    return MPoly(k, 3, {e: k([a, b]) for e, (a, b) in p.items()})


def invariant_space(d: int) -> list[MPoly]:
    """A basis of the degree-d invariants, chosen greedily among Reynolds images."""
    chosen: list[dict] = []
    for p in reynolds_images(d):
        if zphi_rank(chosen + [p], d) > len(chosen):
            chosen.append(p)
    return [_to_mpoly(p) for p in chosen]


def reynolds(F: MPoly) -> MPoly:
    """Plain average over all sixty rotations."""
    total = MPoly.zero(F.field, 3)
    for g in build_group():
        total = total + act(F, g)
    return total.scale(Fraction(1, 60))


def axes_character() -> tuple:
    """Fixed vertex axes per class, in the order of the A5 table's classes:
    1, involutions, 3-cycles, then the 5-cycles split by trace phi and 1 - phi."""
    p = phi()
    reps = {}
    for g in build_group():
        s = g[0][0] + g[1][1] + g[2][2]
        key = {3: 0, -1: 1, 0: 2}.get(s) if s.is_rational() else (3 if s == p else 4)
        reps.setdefault(key, g)
    return tuple(sum(1 for v in axes("vertex") if _parallel(_mat_vec(reps[i], v), v)) for i in range(5))


# --- Molien series -------------------------------------------------------------

def molien_coefficients(n: int) -> list[Fraction]:
    """Coefficients of (1/60) sum_g 1/det(1 - t g) up to t^n.  For a rotation with
    trace s, det(1 - t g) = 1 - s t + s t^2 - t^3."""
    k = _k()
    by_trace: dict = {}
    for g in build_group():
        s = g[0][0] + g[1][1] + g[2][2]
        by_trace[s] = by_trace.get(s, 0) + 1
    total = [k.zero] * (n + 1)
    for s, count in by_trace.items():
        den = [k.one, -s, s, k(-1)]
        inv = [k.zero] * (n + 1)
        inv[0] = k.one
        for m in range(1, n + 1):
            acc = k.zero
            for j in range(1, min(m, 3) + 1):
                acc = acc - den[j] * inv[m - j]
            inv[m] = acc
        total = [a + b * count for a, b in zip(total, inv)]
    out = []
    for c in total:
        c = c / 60
        if not c.is_rational():
            raise ValueError(f"irrational Molien coefficient {c}")
        out.append(c.to_fraction())
    return out


def expected_series(n: int) -> list[int]:
    """(1 + t^15) / ((1 - t^2)(1 - t^6)(1 - t^10)) up to t^n."""
    base = [0] * (n + 1)
    for a in range(0, n + 1, 2):
        for b in range(0, n + 1 - a, 6):
            for c in range(0, n + 1 - a - b, 10):
                base[a + b + c] += 1
    return [base[m] + (base[m - 15] if m >= 15 else 0) for m in range(n + 1)]


# --- relations among the forms ---------------------------------------------------

def _coeff_solve(target: MPoly, basis: list[MPoly]):
    monos = sorted(set(target.terms).union(*(b.terms for b in basis)))
    rows = [[b.coefficient(m) for b in basis] for m in monos]
    sol = solve(rows, [target.coefficient(m) for m in monos], target.field)
    return sol, rank(rows, target.field)


def decimic_basis_check():
    """Solve each degree-10 invariant in {Phi2^5, Phi6 Phi2^2, Phi10}."""
    p2, p6, p10 = invariant_form(2), invariant_form(6), invariant_form(10)
    basis = [p2 ** 5, p6 * p2 ** 2, p10]
    space = invariant_space(10)
    sols = [_coeff_solve(v, basis)[0] for v in space]
    _, r = _coeff_solve(p10, basis)
    return len(space), r, all(s is not None for s in sols)


def phi15_square_exponents() -> list[tuple]:
    return [(a, b, c) for c in range(4) for b in range(6) for a in range(16) if 2 * a + 6 * b + 10 * c == 30]


def express_phi15_squared():
    """Coefficients of Phi15^2 in the monomials Phi2^a Phi6^b Phi10^c, with the system's rank."""
    p2, p6, p10, p15 = (invariant_form(d) for d in (2, 6, 10, 15))
    exps = phi15_square_exponents()
    basis = [p2 ** a * p6 ** b * p10 ** c for a, b, c in exps]
    sol, r = _coeff_solve(p15 * p15, basis)
    return exps, sol, r, basis


# --- Klein-plane geometry over Q(zeta20) ---------------------------------------------

def embed_element(c: FieldElement, target) -> FieldElement:
    a, b = c.coeffs
    return target(a) + nf_embed("golden", target) * b


def embed_poly(F: MPoly, target) -> MPoly:
    return MPoly(target, F.nvars, {e: embed_element(c, target) for e, c in F.terms.items()})


def conic_parametrization(target):
    """(s^2 - t^2, i (s^2 + t^2), 2 s t) parametrizes x^2 + y^2 + z^2 = 0."""
    s, t = MPoly.gens(target, 2)
    i = nf_embed("i", target)
    return [s * s - t * t, (s * s + t * t).scale(i), 2 * s * t]


def restrict_to_conic(F: MPoly) -> BinaryForm:
    target = get_field(CONIC_FIELD)
    G = embed_poly(F, target) if F.field != target else F
    return BinaryForm.from_mpoly(G.substitute(conic_parametrization(target)), 2 * F.homogeneous_degree())


def stabilizer_order(v) -> int:
    return sum(1 for g in build_group() if _parallel(_mat_vec(g, v), v))


def orbit_of_line(v) -> list:
    return _dedupe_lines([_mat_vec(g, v) for g in build_group()])


_CONIC_MONOS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


def _conic_row(pt):
    return [pt[0] ** e[0] * pt[1] ** e[1] * pt[2] ** e[2] for e in _CONIC_MONOS]


def conic_through(points) -> list:
    """Kernel of the conic evaluation matrix at the given points (a basis of conic equations)."""
    return nullspace([_conic_row(p) for p in points], _k(), 6)


def conic_from_coeffs(c) -> MPoly:
    return MPoly(_k(), 3, {e: v for e, v in zip(_CONIC_MONOS, c) if v})


# --- the double-cusp germ -------------------------------------------------------

def germ_map(field=None) -> list[MPoly]:
    field = field or get_field(GERM_FIELD)
    z1, z2 = MPoly.gens(field, 2)
    return [z1 ** 2 + z2 ** 3, z1 ** 3 + z2 ** 2]


# --- checks ----------------------------------------------------------------------



def _diag(a, b, c):
    k = _k()
    return ((k(a), k.zero, k.zero), (k.zero, k(b), k.zero), (k.zero, k.zero, k(c)))


def _check_group():
    k = _k()
    g = build_group()
    cyc = ((k.zero, k.one, k.zero), (k.zero, k.zero, k.one), (k.one, k.zero, k.zero))
    special = all(m in g for m in (_identity(), _diag(1, -1, -1), _diag(-1, 1, -1), _diag(-1, -1, 1), cyc))
    orth = all(_mat_mul(_transpose(m), m) == _identity() and det3(m) == 1 for m in g)
    prof = order_profile(g)
    closed = all(_mat_mul(a, b) in set(g) for a in generators() for b in g)
    p = phi()
    sq = {_dot(v, v) for v in vertices()}
    ok = len(g) == 60 and special and orth and prof == {1: 1, 2: 15, 3: 20, 5: 24} and closed and sq == {p + 2}
    return ok, (f"{len(g)} orthogonal matrices of determinant 1; order profile {prof}; "
                f"sign changes and the cyclic shift present; |v|^2 = 2 + phi")


def _check_forms():
    k = _k()
    gens = generators()
    # up to sign first; the sign is a character of the group, trivial on a generating set
    scal = {d: [invariance_scalar(invariant_form(d), g) for g in gens] for d in (2, 6, 10, 15)}
    ok = all(all(c is not None and c * c == 1 for c in cs) for cs in scal.values())
    ok = ok and all(all(c == 1 for c in cs) for cs in scal.values())
    degs = [invariant_form(d).homogeneous_degree() for d in (2, 6, 10, 15)]
    x = MPoly.gens(k, 3)[0]
    has_x = invariant_form(15).divide_exact(x) is not None
    return ok and degs == [2, 6, 10, 15] and has_x, (f"Phi_2, Phi_6, Phi_10, Phi_15 of degrees {degs} fixed "
                                                      f"(scalar +1) by both generators; x divides Phi_15")


def _check_jacobian():
    J = jacobian_det([invariant_form(2), invariant_form(6), invariant_form(10)])
    c = J.proportional_to(invariant_form(15))
    return c is not None, f"J(Phi_2, Phi_6, Phi_10) = ({c}) * Phi_15"


def _check_dimensions(max_degree: int = 30):
    mol = molien_coefficients(max_degree)
    exp = expected_series(max_degree)
    rk = [reynolds_rank(d) for d in range(max_degree + 1)]
    ok = rk == [int(m) for m in mol] == exp
    bad = [d for d in range(max_degree + 1) if not (rk[d] == mol[d] == exp[d])]
    return ok, (f"Reynolds rank = Molien = (1+t^15)/((1-t^2)(1-t^6)(1-t^10)) for d <= {max_degree}"
                if ok else f"mismatch at degrees {bad}") + f"; d=2,10,15,30: {rk[2]}, {rk[10]}, {rk[15]}, {rk[30] if max_degree >= 30 else '-'}"


def _check_decimics():
    dim, r, ok = decimic_basis_check()
    return dim == 3 and r == 3 and ok, f"dim Sym^10 invariants = {dim}; {{Phi2^5, Phi6 Phi2^2, Phi10}} has rank {r} and spans"


def _check_phi15():
    k = _k()
    exps, sol, r, basis = express_phi15_squared()
    if sol is None:
        return False, "Phi15^2 not in the span"
    recon = sum((b.scale(c) for b, c in zip(basis, sol) if c), MPoly.zero(k, 3))
    p15 = invariant_form(15)
    pts = [(k(1), k(2), k(3)), (k(2), phi(), k(-1)), (k(0), k(1), phi() * 3), (k(5), k(-2), k(7)), (phi(), phi(), k(1))]
    spot = all(recon.evaluate(p) == p15.evaluate(p) ** 2 for p in pts)
    nonzero = sum(1 for c in sol if c)
    return r == 13 and recon == p15 * p15 and spot, (f"unique solution in the {len(exps)} monomials (rank {r}), "
                                                      f"{nonzero} nonzero coefficients; 5 spot evaluations agree")


def _check_orbits():
    sizes = {}
    ok = True
    for kind, want_stab in (("vertex", 10), ("face", 6), ("edge", 4)):
        reps = axes(kind)
        s = stabilizer_order(reps[0])
        orb = orbit_of_line(reps[0])
        single = len(orb) == len(reps) and all(any(_parallel(a, b) for b in orb) for a in reps)
        ok = ok and s == want_stab and single and 60 // s == len(reps)
        sizes[kind] = (s, 60 // s)
    sq = restrict_to_conic(invariant_form(10))
    sf = sq.degree == 20 and sq.is_squarefree()
    return ok and sf, (f"(stabilizer, orbit): {sizes}; Phi_10 on the conic: degree {sq.degree}, "
                       f"squarefree {sf}")


def _check_fundamental_conics():
    k = _k()
    pts = list(axes("vertex"))
    r6 = rank([_conic_row(p) for p in pts], k)
    ok = r6 == 6
    for idx, x in enumerate(pts):
        ker = conic_through(pts[:idx] + pts[idx + 1:])
        if len(ker) != 1:
            return False, f"conics through the other five points of {idx}: dimension {len(ker)}"
        Kx = conic_from_coeffs(ker[0])
        rest = restrict_to_conic(Kx)
        polar = restrict_to_conic(linear_form(x))
        root = rest.square_root()
        pol_sq = BinaryForm.from_mpoly(_binary_square(polar), 4)
        matches = _binary_proportional(rest, pol_sq)
        ok = ok and root is not None and matches
    return ok, (f"6x6 conic matrix rank {r6}; each K_x restricts to a perfect square proportional "
                f"to the square of its polar line")


def _check_tangency():
    p2, p6 = invariant_form(2), invariant_form(6)
    terms = [p2 ** 5, p6 * p2 ** 2]
    ok = all(t.diff(i).divide_exact(p2) is not None for t in terms for i in range(3))
    return ok, "all partials of Phi2^5 and Phi6 Phi2^2 are multiples of Phi_2"


def _check_germ():
    fld = get_field(GERM_FIELD)
    m = germ_map(fld)
    z1, z2 = MPoly.gens(fld, 2)
    J = jacobian_det(m)
    want = -(z1 * z2 * (9 * z1 * z2 - 4))
    t1 = [c.substitute([z1, MPoly.zero(fld, 2)]) for c in m]
    t2 = [c.substitute([MPoly.zero(fld, 2), z1]) for c in m]
    axes_ok = t1 == [z1 ** 2, z1 ** 3] and t2 == [z1 ** 3, z1 ** 2]
    zeta = nf_embed("zeta5", fld)
    s_src = [c.substitute([z2, z1]) for c in m]
    s_ok = s_src == [m[1], m[0]]
    r_src = [c.substitute([z1.scale(zeta), z2.scale(zeta ** -1)]) for c in m]
    r_ok = r_src == [m[0].scale(zeta ** 2), m[1].scale(zeta ** -2)]
    return J == want and axes_ok and s_ok and r_ok, ("Jacobian = -z1 z2 (9 z1 z2 - 4); axes map to (t^2, t^3) "
                                                     "and (t^3, t^2); equivariant under s and zeta")


def orbit_sizes_in_plane() -> list:
    return run_checks("icosa", [("orbit_sizes", _check_orbits)])


def fundamental_conic_suite() -> list:
    return run_checks("icosa", [("fundamental_conics", _check_fundamental_conics),
                                ("decimic_tangency", _check_tangency)])


def double_cusp_germ_suite() -> list:
    return run_checks("icosa", [("double_cusp_germ", _check_germ)])


def suite(field=None, seed: int = 0, max_degree: int = 30) -> list:
    return run_checks("icosa", [
        ("group", _check_group),
        ("invariant_forms", _check_forms),
        ("jacobian", _check_jacobian),
        ("dimensions", lambda: _check_dimensions(max_degree)),
        ("decimic_basis", _check_decimics),
        ("phi15_squared", _check_phi15),
    ]) + orbit_sizes_in_plane() + fundamental_conic_suite() + double_cusp_germ_suite()


def _binary_square(b: BinaryForm) -> MPoly:
    s, t = MPoly.gens(b.field, 2)
    d = b.degree
    f = sum((s ** (d - i) * t ** i).scale(c) for i, c in enumerate(b.coeffs) if c)
    return f * f


def _binary_proportional(a: BinaryForm, b: BinaryForm) -> bool:
    if a.degree != b.degree:
        return False
    i = next(j for j, c in enumerate(b.coeffs) if c)
    r = a.coeffs[i] / b.coeffs[i]
    return all(x == r * y for x, y in zip(a.coeffs, b.coeffs))
