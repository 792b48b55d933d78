"""The pencil of A5-invariant plane sextics with nodes at four fundamental points.

Members are F = lam*W + mu*D with
    W = x^6 + y^6 + z^6 + (x^2+y^2+z^2)(x^4+y^4+z^4) - 12 x^2 y^2 z^2
    D = (x^2-y^2)(y^2-z^2)(x^2-z^2),
so (1:0) is the Wiman sextic and (0:1) the six lines through pairs of
fundamental points.  Everything is computed exactly over a field holding the
needed constants; Q(zeta15) holds all of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import permutations, product

from .exactfield import FieldElement, NumberField, get_field, nf_embed
from .linalg import solve
from .mpoly import (MPoly, PolyMap, affine_germ, jacobian_det,
                    local_intersection_multiplicity, restrict_to_line,
                    smoothness_certificate)
from .report import Verdict, require_constants, run_checks

DEFAULT_FIELD = "Q(zeta15)"

FUNDAMENTAL_POINTS = ((-1, 1, 1), (1, -1, 1), (1, 1, -1), (1, 1, 1))


@lru_cache(maxsize=None)
def generators(field: NumberField) -> tuple[MPoly, MPoly]:
    """The symmetric sextic W and the product D of three differences of squares."""
    x, y, z = MPoly.gens(field, 3)
    s2 = x ** 2 + y ** 2 + z ** 2
    s4 = x ** 4 + y ** 4 + z ** 4
    w = x ** 6 + y ** 6 + z ** 6 + s2 * s4 - 12 * x ** 2 * y ** 2 * z ** 2
    d = (x ** 2 - y ** 2) * (y ** 2 - z ** 2) * (x ** 2 - z ** 2)
    return w, d


@dataclass(frozen=True, eq=False)
class PencilParam:
    lam: FieldElement
    mu: FieldElement

    def __post_init__(self):
        if not self.lam and not self.mu:
            raise ValueError("(0:0) is not a pencil parameter")
        if self.lam.field != self.mu.field:
            raise ValueError("parameter coordinates live in different fields")

    @classmethod
    def of(cls, lam, mu, field: NumberField) -> PencilParam:
        return cls(field(lam), field(mu))

    @property
    def field(self) -> NumberField:
        return self.lam.field

    def __eq__(self, other):
        return isinstance(other, PencilParam) and self.lam * other.mu == self.mu * other.lam

    def __hash__(self):
        return hash(self.normalized())

    def normalized(self) -> tuple:
        if self.lam:
            return (self.field.one, self.mu / self.lam)
        return (self.field.zero, self.field.one)

    def conjugate(self) -> PencilParam:
        """The parameter (lam : -mu)."""
        return PencilParam(self.lam, -self.mu)

    def __str__(self):
        a, b = self.normalized()
        return f"({a}:{b})"


@dataclass(frozen=True)
class PencilMember:
    param: PencilParam
    form: MPoly


def member(p: PencilParam) -> PencilMember:
    w, d = generators(p.field)
    return PencilMember(p, w.scale(p.lam) + d.scale(p.mu))


def pencil_membership(G: MPoly) -> PencilParam | None:
    """Solve G = lam*W + mu*D in coefficient space."""
    if G.nvars != 3 or not G or G.homogeneous_degree() != 6:
        return None
    w, d = generators(G.field)
    monos = sorted(set(w.terms) | set(d.terms) | set(G.terms))
    rows = [[w.coefficient(m), d.coefficient(m)] for m in monos]
    sol = solve(rows, [G.coefficient(m) for m in monos], G.field)
    if sol is None:
        return None
    return PencilParam(*sol)


# --- symmetries ---------------------------------------------------------------

@dataclass(frozen=True)
class SymmetryElement:
    kind: str                       # "linear" or "cremona"
    label: str
    matrix: tuple | None = None
    map: PolyMap | None = dc_field(default=None, compare=False)

    def apply(self, F: MPoly) -> MPoly:
        if self.kind == "cremona":
            return self.map(F)
        x = MPoly.gens(F.field, 3)
        comps = []
        for row in self.matrix:
            comp = MPoly.zero(F.field, 3)
            for c, v in zip(row, x):
                if c:
                    comp = comp + v.scale(c)
            comps.append(comp)
        return F.substitute(comps)

    def compose(self, other: SymmetryElement) -> SymmetryElement:
        """The linear map x -> self(other(x))."""
        a, b = self.matrix, other.matrix
        m = tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))
        return SymmetryElement("linear", f"{self.label}*{other.label}", _projective_canonical(m))


def _projective_canonical(m: tuple) -> tuple:
    first = next(v for row in m for v in row if v)
    return m if first > 0 else tuple(tuple(-v for v in row) for row in m)


def signed_permutation(perm, signs=(1, 1, 1), label: str | None = None) -> SymmetryElement:
    """x_i -> signs[i] * x_perm[i]."""
    m = tuple(tuple(signs[i] if j == perm[i] else 0 for j in range(3)) for i in range(3))
    return SymmetryElement("linear", label or f"perm{tuple(perm)}signs{tuple(signs)}", _projective_canonical(m))


def signed_permutation_group() -> list[SymmetryElement]:
    """The 24 projective classes of signed permutation matrices."""
    out = []
    for perm in permutations(range(3)):
        for s2, s3 in product((1, -1), repeat=2):
            out.append(signed_permutation(perm, (1, s2, s3)))
    return out


CYCLIC = signed_permutation((1, 2, 0), label="cyclic")
SWAP_XY = signed_permutation((1, 0, 2), label="swap_xy")
SIGN_X = signed_permutation((0, 1, 2), (-1, 1, 1), label="sign_x")
SIGNED_PERMUTATION_GENERATORS = (CYCLIC, SWAP_XY, SIGN_X)


@lru_cache(maxsize=None)
def cremona(field: NumberField) -> SymmetryElement:
    x, y, z = MPoly.gens(field, 3)
    e = x * y + x * z + y * z
    comps = [-x ** 2 + y ** 2 + z ** 2 + e, x ** 2 - y ** 2 + z ** 2 + e, x ** 2 + y ** 2 - z ** 2 + e]
    return SymmetryElement("cremona", "sigma", None, PolyMap(comps))


@dataclass(frozen=True)
class SymmetryResult:
    ok: bool
    scalar: FieldElement | None = None      # linear case: F o g = scalar * F
    cofactor: MPoly | None = None           # Cremona case: F o sigma = cofactor * F
    image: PencilParam | None = None        # member that F o g lands on, when not F itself


def verify_symmetry(p: PencilParam, g: SymmetryElement) -> SymmetryResult:
    F = member(p).form
    G = g.apply(F)
    if g.kind == "linear":
        c = G.proportional_to(F)
        if c is not None:
            return SymmetryResult(True, scalar=c)
        return SymmetryResult(False, image=pencil_membership(G))
    H = G.divide_exact(F)
    if H is not None:
        return SymmetryResult(True, cofactor=H)
    # identify the member F o sigma lands on after removing the common cofactor
    w, _ = generators(p.field)
    H0 = g.apply(w).divide_exact(w)
    image = pencil_membership(G.divide_exact(H0)) if H0 is not None else None
    return SymmetryResult(False, image=image)


def cremona_square_common_factor(field: NumberField) -> MPoly | None:
    """sigma o sigma = q * identity; returns q, or None if it is not a multiple of the identity."""
    s = cremona(field).map
    ss = s.compose(s)
    x = MPoly.gens(field, 3)
    q = ss.components[0].divide_exact(x[0])
    if q is None:
        return None
    if any(c != v * q for c, v in zip(ss.components, x)):
        return None
    return q


# --- base locus, tangent cones, singular members ------------------------------

def base_points(field: NumberField) -> list[tuple]:
    """The twelve points (r:+-1:+-1), (+-1:r:+-1), (+-1:+-1:r) with r = sqrt(-3)."""
    r = nf_embed("sqrtm3", field)
    pts = []
    for a, b in product((1, -1), repeat=2):
        pts += [(r, field(a), field(b)), (field(a), r, field(b)), (field(a), field(b), r)]
    return pts


def tangent_line_pairs(field: NumberField, eps: FieldElement | None = None) -> list[tuple[MPoly, MPoly]]:
    """The four pairs (x + s eps y + t eps^2 z)(x + s eps^2 y + t eps z), s, t = +-1."""
    if eps is None:
        eps = nf_embed("zeta3", field)
    x, y, z = MPoly.gens(field, 3)
    pairs = []
    for s, t in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        l1 = x + y.scale(s * eps) + z.scale(t * eps ** 2)
        l2 = x + y.scale(s * eps ** 2) + z.scale(t * eps)
        pairs.append((l1, l2))
    return pairs


@dataclass(frozen=True)
class TangentCone:
    point: tuple
    quadric: MPoly          # lowest-order part of the local equation, in (u, v)
    pair_index: int | None  # index into tangent_line_pairs, if one matches
    scalar: FieldElement | None
    nondegenerate: bool


def tangent_cone(p: PencilParam, pt) -> TangentCone:
    """Quadratic tangent cone of a member at a fundamental point, matched against the line pairs."""
    if tuple(pt) not in FUNDAMENTAL_POINTS:
        raise ValueError(f"{pt} is not a fundamental point")
    fld = p.field
    germ = affine_germ(member(p).form, pt)
    low = min(sum(e) for e in germ.terms)
    if low != 2:
        raise ValueError(f"lowest order {low} at {pt}: not a double point")
    quad = germ.homogeneous_part(2)
    a, b, c = quad.coefficient((2, 0)), quad.coefficient((1, 1)), quad.coefficient((0, 2))
    match, scalar = None, None
    for i, (l1, l2) in enumerate(tangent_line_pairs(fld)):
        cone = affine_germ(l1, pt) * affine_germ(l2, pt)
        if cone.homogeneous_degree() != 2:
            continue
        s = quad.proportional_to(cone)
        if s is not None:
            match, scalar = i, s
    return TangentCone(tuple(pt), quad, match, scalar, bool(b * b - 4 * a * c))


def singular_points_among(p: PencilParam, candidates) -> list[tuple]:
    """Candidates (deduplicated projectively) where F and its gradient vanish."""
    F = member(p).form
    grads = F.gradient()
    out = []
    for pt in candidates:
        if any(_same_point(pt, q) for q in out):
            continue
        if not F.evaluate(pt) and not any(g.evaluate(pt) for g in grads):
            out.append(pt)
    return out


def golden_candidates(field: NumberField) -> list[tuple]:
    """Points with one zero coordinate, one coordinate 1 and one in {+-lam, +-lam'},
    in every arrangement, plus the printed (0:0:lam)."""
    lam, lamc = nf_embed("golden", field), nf_embed("goldenConj", field)
    vals = [lam, -lam, lamc, -lamc]
    pts = []
    for c in vals:
        for zero_pos, one_pos in permutations(range(3), 2):
            pt = [None] * 3
            pt[zero_pos] = field.zero
            pt[one_pos] = field.one
            pt[3 - zero_pos - one_pos] = c
            pts.append(tuple(pt))
    pts.append((field.zero, field.zero, lam))
    return pts


def printed_singular_points(field: NumberField, conj: bool = False) -> list[tuple]:
    """The six points listed for the singular member, with lam <-> lam' swapped if conj."""
    lam, lamc = nf_embed("golden", field), nf_embed("goldenConj", field)
    if conj:
        lam, lamc = lamc, lam
    o, z = field.one, field.zero
    return [(z, z, lam), (z, o, -lam), (o, z, lamc), (o, z, -lamc), (o, lam, z), (o, -lam, z)]


def reducible_product(field: NumberField, eps: FieldElement) -> MPoly:
    x, y, z = MPoly.gens(field, 3)
    e2 = eps ** 2
    lines = [x + y.scale(s * eps) + z.scale(t * e2) for s, t in ((1, 1), (1, -1), (-1, 1), (-1, -1))]
    conic = x ** 2 + (y ** 2).scale(e2) + (z ** 2).scale(eps)
    out = conic
    for l in lines:
        out = out * l
    return out


def reducible_components(field: NumberField, eps: FieldElement) -> list[MPoly]:
    x, y, z = MPoly.gens(field, 3)
    e2 = eps ** 2
    lines = [x + y.scale(s * eps) + z.scale(t * e2) for s, t in ((1, 1), (1, -1), (-1, 1), (-1, -1))]
    return lines + [x ** 2 + (y ** 2).scale(e2) + (z ** 2).scale(eps)]


@dataclass(frozen=True)
class ReducibleMatch:
    eps: FieldElement
    sign: int                # member (1 : sign*sqrt(-3))
    scalar: FieldElement     # product = scalar * member


def reducible_member_matches(field: NumberField) -> list[ReducibleMatch]:
    """All (eps, sign) with the four-lines-times-conic product proportional to member(1 : sign*sqrt(-3))."""
    z3 = nf_embed("zeta3", field)
    r = nf_embed("sqrtm3", field)
    found = []
    for eps in (z3, z3 ** 2):
        prod_ = reducible_product(field, eps)
        for sign in (1, -1):
            c = prod_.proportional_to(member(PencilParam(field.one, r * sign)).form)
            if c is not None:
                found.append(ReducibleMatch(eps, sign, c))
    return found


def _cross(p, q):
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def _same_point(p, q) -> bool:
    return not any(_cross(p, q))


def fundamental_points_on_components(field: NumberField, eps: FieldElement) -> dict:
    """For the reducible product: which components pass through each fundamental point,
    and whether any line-line intersection is fundamental."""
    comps = reducible_components(field, eps)
    through = {pt: [i for i, c in enumerate(comps) if not c.evaluate(pt)] for pt in FUNDAMENTAL_POINTS}
    line_meets = []
    for i in range(4):
        for j in range(i + 1, 4):
            li = [comps[i].coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
            lj = [comps[j].coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
            line_meets.append(_cross(li, lj))
    fundamental_line_meets = [q for q in line_meets
                              if any(_same_point(q, [field(v) for v in pt]) for pt in FUNDAMENTAL_POINTS)]
    return {"through": through, "fundamental_line_meets": fundamental_line_meets}


# --- the branch-tangent contact -------------------------------------------------

@dataclass(frozen=True)
class LineContact:
    node_multiplicity: int
    residual_points: list          # (point, multiplicity) on the line, away from the node
    printed_points_on_line: dict   # printed point -> (on line, on curve)


def branch_tangent_contact(field: NumberField) -> LineContact:
    """Meet the Wiman sextic with x + eps y + eps^2 z = 0 through the node (1:1:1)."""
    eps = nf_embed("zeta3", field)
    r = nf_embed("sqrtm3", field)
    o = field.one
    node = (o, o, o)
    q = (field.zero, -eps, o)
    w, _ = generators(field)
    form = restrict_to_line(w, node, q)
    node_mult = form.root_multiplicity((1, 0))
    line = [o, eps, eps ** 2]

    def on_line(pt):
        return not sum((a * b for a, b in zip(line, pt)), field.zero)

    def param_of(pt):
        # pt = s*node + t*q, read off from the x and z coordinates
        s = pt[0]
        t = pt[2] - s
        return (s, t)

    residual = []
    for pt in base_points(field):
        if on_line(pt):
            residual.append((pt, form.root_multiplicity(param_of(pt))))
    printed = {}
    for pt in ((o, r, o), (o, -o, r)):
        printed[pt] = (on_line(pt), not w.evaluate(pt))
    return LineContact(node_mult, residual, printed)


# --- the Jacobian of the Klein-plane projection ------------------------------

def projection_cubics(field: NumberField) -> tuple[MPoly, MPoly, MPoly]:
    lam, lc = nf_embed("golden", field), nf_embed("goldenConj", field)
    x, y, z = MPoly.gens(field, 3)
    f0 = (-x ** 3 + y ** 3 + z ** 3 - (x ** 2 * y).scale(lam) - (x ** 2 * z).scale(lc)
          + (x * y ** 2).scale(lc) - (y ** 2 * z).scale(lam) + (x * z ** 2).scale(lam) - (y * z ** 2).scale(lc))
    f1 = ((x ** 3).scale(lc) + (y ** 3).scale(lam) - (x ** 2 * y).scale(lam + 1)
          - (y ** 2 * x).scale(lc + 1) + x * z ** 2 + y * z ** 2)
    f2 = ((y ** 3).scale(lam) + z ** 3 - (x ** 2 * y).scale(lam + 1) - (x ** 2 * z).scale(lc)
          - (y ** 2 * z).scale(lam) + y * z ** 2)
    return f0, f1, f2


@dataclass(frozen=True)
class JacobianFinding:
    jacobian: MPoly
    param: PencilParam | None
    scalar: FieldElement | None          # J = scalar * member(param)
    residual_vs_printed: MPoly           # J - c * member(1 : 5 sqrt5), c matched on one coefficient


def projection_jacobian(field: NumberField) -> JacobianFinding:
    J = jacobian_det(PolyMap(projection_cubics(field)))
    param = pencil_membership(J)
    scalar = J.proportional_to(member(param).form) if param is not None else None
    printed = member(PencilParam(field.one, 5 * nf_embed("sqrt5", field))).form
    lead = printed.leading_exponent()
    c = J.coefficient(lead) / printed.coefficient(lead)
    return JacobianFinding(J, param, scalar, J - printed.scale(c))


# --- report suite ---------------------------------------------------------------

_NAMED = (("sqrt(-3)", "sqrtm3", 1), ("sqrt5", "sqrt5", 1), ("5sqrt5", "sqrt5", 5),
          ("lam", "golden", 1), ("lam'", "goldenConj", 1), ("eps", "zeta3", 1))


def _val_text(v) -> str:
    """Short names for the constants that appear in reports."""
    if not isinstance(v, FieldElement) or v.is_rational():
        return str(v)
    for label, name, k in _NAMED:
        try:
            c = nf_embed(name, v.field) * k
        except KeyError:
            continue
        if v == c:
            return label
        if v == -c:
            return "-" + label
    return str(v)


def _pt_text(pt) -> str:
    return "(" + ":".join(_val_text(v) for v in pt) + ")"


def symmetry_findings(field: NumberField) -> dict:
    """Sign characters of the signed permutations and the Cremona cofactors per member."""
    params = {"(1:0)": PencilParam.of(1, 0, field), "(0:1)": PencilParam.of(0, 1, field),
              "(2:3)": PencilParam.of(2, 3, field)}
    out = {}
    for name, p in params.items():
        linear = {g.label: verify_symmetry(p, g) for g in SIGNED_PERMUTATION_GENERATORS}
        out[name] = {"linear": linear, "cremona": verify_symmetry(p, cremona(field))}
    return out


def suite(field: NumberField | None = None, seed: int = 0) -> list:
    field = field or get_field(DEFAULT_FIELD)
    require_constants(field, "sqrtm3", "zeta3", "sqrt5", "golden", "goldenConj")
    w, d = generators(field)
    fund = [tuple(field(v) for v in pt) for pt in FUNDAMENTAL_POINTS]

    def generators_check():
        x6 = member(PencilParam.of(1, 0, field)).form.coefficient((6, 0, 0))
        ok = x6 == 2 and all(e[i] % 2 == 0 for e in w.terms for i in range(3))
        return ok, f"W has only even exponents, x^6 coefficient {x6}; D = (x^2-y^2)(y^2-z^2)(x^2-z^2)"

    def linear_symmetry():
        group = signed_permutation_group()
        details = []
        ok = True
        for name, p in (("(1:0)", PencilParam.of(1, 0, field)), ("(0:1)", PencilParam.of(0, 1, field))):
            chars = {g.matrix: verify_symmetry(p, g).scalar for g in group}
            if any(c is None or c not in (1, -1) for c in chars.values()):
                ok = False
            mult = all(chars[g.compose(h).matrix] == chars[g.matrix] * chars[h.matrix] for g in group for h in group)
            ok = ok and mult
            odd = sorted({str(chars[g.matrix]) for g in group if g.label.startswith("perm(1, 0")})
            details.append(f"{name}: multiplicative sign character, transposition sign {','.join(odd)}")
        p = PencilParam.of(2, 3, field)
        even = [verify_symmetry(p, g) for g in (CYCLIC, SIGN_X)]
        ok = ok and all(r.ok and r.scalar == 1 for r in even)
        details.append("(2:3): fixed by cyclic and sign changes")
        return ok, "; ".join(details)

    def generic_member_odd():
        p = PencilParam.of(2, 3, field)
        r = verify_symmetry(p, SWAP_XY)
        s = verify_symmetry(p, cremona(field))
        ok = (not r.ok and r.image == p.conjugate() and not s.ok and s.image == p.conjugate())
        verdict = Verdict.REPORTED if ok else Verdict.FAIL
        return verdict, ("x<->y and sigma both send member (2:3) to (2:-3): they act as odd elements, "
                         "so sigma preserves only the two invariant members; sigma composed with x<->y "
                         "fixes every member")

    def cremona_check():
        H = [verify_symmetry(PencilParam.of(a, b, field), cremona(field)).cofactor for a, b in ((1, 0), (0, 1))]
        c = H[1].proportional_to(H[0]) if all(H) else None
        both = verify_symmetry(PencilParam.of(2, 3, field),
                               SymmetryElement("cremona", "sigma*swap",
                                               map=PolyMap([s.substitute([MPoly.gens(field, 3)[i] for i in (1, 0, 2)])
                                                            for s in cremona(field).map.components])))
        x, y, z = MPoly.gens(field, 3)
        h0 = 64 * ((x + y) * (y + z) * (x + z)) ** 2
        ok = c is not None and both.ok and both.cofactor.proportional_to(H[0]) is not None
        shape = "64(x+y)^2(y+z)^2(x+z)^2" if H[0] == h0 else H[0].text()
        return ok, (f"W o sigma = H W and D o sigma = {c} H D with H = {shape}; "
                    f"sigma o swap fixes (2:3) with the same H")

    def involution():
        q = cremona_square_common_factor(field)
        x, y, z = MPoly.gens(field, 3)
        shape = "8(x+y)(y+z)(x+z)" if q == 8 * (x + y) * (y + z) * (x + z) else (q.text() if q else None)
        return q is not None, f"sigma o sigma = q * id with q = {shape}"

    def base_locus():
        pts = base_points(field)
        bad = [pt for pt in pts if w.evaluate(pt) or d.evaluate(pt)]
        smooth = all(any(g.evaluate(pt) for g in F.gradient()) for pt in pts for F in (w, d))
        off = w.evaluate((1, 1, 0))
        return not bad and smooth and bool(off), (f"12 points on W and D, smooth on both; "
                                                  f"W(1:1:0) = {off}")

    def bezout():
        mults = [local_intersection_multiplicity(w, d, pt) for pt in fund]
        rest = [local_intersection_multiplicity(w, d, pt) for pt in base_points(field)]
        total = sum(mults) + sum(rest)
        ok = mults == [6, 6, 6, 6] and rest == [1] * 12 and total == 36
        return ok, f"fundamental {mults}, base points {sum(rest)} x 1, total {total} = 6*6"

    def node_split():
        return Verdict.REPORTED, ("each fundamental point contributes 6 = 2*2 from the multiplicities plus 2 from "
                                  "the shared branch tangents; 4*6 + 12 = 36, i.e. 16 + (12 + 8)")

    def tangent_cones():
        p = PencilParam.of(1, 0, field)
        cones = [tangent_cone(p, pt) for pt in FUNDAMENTAL_POINTS]
        idx = [c.pair_index for c in cones]
        ok = all(c.nondegenerate for c in cones) and sorted(i for i in idx if i is not None) == [0, 1, 2, 3]
        return ok, "nodes; point -> pair " + ", ".join(f"{_pt_text(c.point)}->{c.pair_index}" for c in cones)

    def biflex():
        lc = branch_tangent_contact(field)
        res = ", ".join(f"{_pt_text(pt)}x{m}" for pt, m in lc.residual_points)
        printed = "; ".join(f"{_pt_text(pt)} on line {a}, on curve {b}" for pt, (a, b) in lc.printed_points_on_line.items())
        ok = lc.node_multiplicity == 3 and sum(m for _, m in lc.residual_points) == 3
        return (Verdict.REPORTED if ok else Verdict.FAIL,
                f"contact {lc.node_multiplicity} at the node (not 4); other points {res}; printed: {printed}")

    def wiman_smooth():
        cert = smoothness_certificate(w, fund)
        if cert.verdict == "inconclusive":
            return Verdict.INCONCLUSIVE, cert.detail
        return cert.verdict == "smooth-off-points", f"singular only at the 4 nodes: {cert.detail}"

    def singular_members():
        s5 = nf_embed("sqrt5", field)
        details = []
        ok = True
        for sign in (1, -1):
            p = PencilParam(field.one, 5 * s5 * sign)
            found = singular_points_among(p, golden_candidates(field))
            expect = printed_singular_points(field, conj=sign < 0)
            listed = [pt for pt in expect if any(_same_point(pt, q) for q in found)]
            ok = ok and len(found) == 6
            missing = [pt for pt in expect if pt not in listed]
            details.append(f"(1:{sign * 5}sqrt5): {len(found)} points, printed entries not singular: "
                           f"{[_pt_text(m) for m in missing]}")
        return ok, "; ".join(details)

    def printed_list():
        p = PencilParam(field.one, 5 * nf_embed("sqrt5", field))
        found = singular_points_among(p, golden_candidates(field))
        lam = nf_embed("golden", field)
        fixed = (field.zero, field.one, lam)
        ok = fixed in found and (field.zero, field.zero, lam) not in found
        return (Verdict.REPORTED if ok else Verdict.FAIL,
                "(0:0:lam) is not singular; the sixth point is (0:1:lam)")

    def genus_ledger():
        p = PencilParam(field.one, 5 * nf_embed("sqrt5", field))
        pts = fund + singular_points_among(p, golden_candidates(field))
        cert = smoothness_certificate(member(p).form, pts)
        if cert.verdict == "inconclusive":
            return Verdict.INCONCLUSIVE, cert.detail
        return len(pts) == 10, f"exactly {len(pts)} singular points ({cert.detail}); genus 10 - 10 = 0"

    def reducible():
        matches = reducible_member_matches(field)
        per_eps = {}
        for m in matches:
            per_eps.setdefault(m.eps, []).append(m.sign)
        ok = len(matches) == 2 and all(len(v) == 1 for v in per_eps.values()) and {m.sign for m in matches} == {1, -1}
        fp = all(len(v) == 2 and 4 in v for v in fundamental_points_on_components(field, matches[0].eps)["through"].values()) if matches else False
        z3 = nf_embed("zeta3", field)
        desc = ", ".join(f"eps={'zeta3' if m.eps == z3 else 'zeta3^2'} -> (1:{'' if m.sign > 0 else '-'}sqrt(-3)) scalar {m.scalar}"
                         for m in matches)
        return ok and fp, desc + "; each fundamental point = one line meet the conic"

    def jacobian():
        jf = projection_jacobian(field)
        if jf.param is None:
            return Verdict.REPORTED, f"J not in the pencil; residual {jf.residual_vs_printed.text()}"
        a, b = jf.param.normalized()
        printed = PencilParam(field.one, 5 * nf_embed("sqrt5", field))
        if jf.param == printed:
            return Verdict.PASS, f"J = {jf.scalar} * member(1:5sqrt5)"
        return Verdict.REPORTED, (f"J = {jf.scalar} * member(1:{_val_text(b)}); in the opposite "
                                  f"sign convention for D this is (1:5sqrt5); residual against (1:5sqrt5) has "
                                  f"{len(jf.residual_vs_printed)} terms")

    def membership_roundtrip():
        p = PencilParam.of(3, 7, field)
        x = MPoly.gens(field, 3)[0]
        return pencil_membership(member(p).form) == p and pencil_membership(x ** 6) is None, "(3:7) recovered; x^6 rejected"

    return run_checks("pencil", [
        ("generators", generators_check),
        ("linear_symmetry", linear_symmetry),
        ("generic_member_odd", generic_member_odd),
        ("cremona_cofactor", cremona_check),
        ("cremona_involution", involution),
        ("base_locus", base_locus),
        ("bezout", bezout),
        ("node_contribution", node_split),
        ("tangent_cones", tangent_cones),
        ("biflex", biflex),
        ("wiman_smooth", wiman_smooth),
        ("singular_members", singular_members),
        ("printed_singular_list", printed_list),
        ("genus_ledger", genus_ledger),
        ("reducible_members", reducible),
        ("projection_jacobian", jacobian),
        ("membership", membership_roundtrip),
    ])
