"""Stable 5-tuples on the projective line, their S5-stabilizers, the catalogue of
irregular orbits and the forgetful maps to the four-pointed moduli line."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exactfield import FieldElement, NumberField, get_field, nf_embed
from .groups import Permutation, PermGroup, alternating_group, perm, symmetric_group
from .report import require_constants, run_checks

GENERIC_Z = (7, 11)


@dataclass(frozen=True)
class ProjPoint:
    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if not self.a and not self.b:
            raise ValueError("(0 : 0) is not a point")

    @classmethod
    def of(cls, field: NumberField, value) -> ProjPoint:
        """A field value z as (z : 1); the string "inf" as (1 : 0)."""
        if isinstance(value, str) and value in ("inf", "oo", "∞"):
            return cls(field.one, field.zero)
        return cls(field(value), field.one)

    @property
    def field(self) -> NumberField:
        return self.a.field

    def is_infinity(self) -> bool:
        return not self.b

    def affine(self) -> FieldElement | None:
        return None if self.is_infinity() else self.a / self.b

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.a * other.b == self.b * other.a

    def __hash__(self):
        v = self.affine()
        return hash(("inf",) if v is None else ("pt", v))

    def __str__(self):
        v = self.affine()
        return "inf" if v is None else str(v)


def bracket(p: ProjPoint, q: ProjPoint) -> FieldElement:
    return p.a * q.b - p.b * q.a


def cross_ratio(p1, p2, p3, p4) -> FieldElement:
    """Normalized so that (0, inf, 1, t) has cross-ratio t."""
    return bracket(p1, p4) * bracket(p2, p3) / (bracket(p1, p3) * bracket(p2, p4))


@dataclass(frozen=True)
class Moebius:
    """(x : y) -> (a x + b y : c x + d y)."""
    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        if not self.det():
            raise ValueError("singular matrix")

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(self.a * p.a + self.b * p.b, self.c * p.a + self.d * p.b)

    def __mul__(self, o: Moebius) -> Moebius:
        return Moebius(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                       self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def inverse(self) -> Moebius:
        return Moebius(self.d, -self.b, -self.c, self.a)

    def _entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        x, y = self._entries(), other._entries()
        i = next(k for k, v in enumerate(x) if v)
        r = y[i] / x[i]
        return bool(r) and all(v * r == w for v, w in zip(x, y))

    def __hash__(self):
        x = self._entries()
        lead = next(v for v in x if v)
        return hash(tuple(v / lead for v in x))

    def __str__(self):
        a, b, c, d = self._entries()
        if not b and not c:
            k = a / d
            return "z -> " + ("z" if k == 1 else "-z" if k == -1 else f"{_coef(k)} z")
        if not a and not d:
            return f"z -> {_coef(b / c)} / z"
        lead = next(v for v in (c, d) if v)
        a, b, c, d = (v / lead for v in (a, b, c, d))
        return f"z -> ({_coef(a)} z + {_coef(b)}) / ({_coef(c)} z + {_coef(d)})"


def _coef(v: FieldElement) -> str:
    """Rationals as they are, small powers of a named root of unity by name."""
    if v.is_rational():
        return str(v.to_fraction())
    for name in ("i", "zeta3", "zeta5"):
        try:
            r = nf_embed(name, v.field)
        except KeyError:
            continue
        for j in range(1, 5):
            for sign, tag in ((1, ""), (-1, "-")):
                if v == r ** j * sign:
                    return f"{tag}{name}" + (f"^{j}" if j > 1 else "")
    return f"({v})"


def _to_standard(s1, s2, s3) -> Moebius:
    """The map sending s1, s2, s3 to 0, inf, 1."""
    u, v = bracket(s3, s2), bracket(s3, s1)
    return Moebius(u * s1.b, -u * s1.a, v * s2.b, -v * s2.a)


def moebius_from_three(src, dst) -> Moebius:
    """The unique projective-linear map with src[i] -> dst[i]."""
    for pts in (src, dst):
        if len(pts) != 3 or len(set(pts)) != 3:
            raise ValueError("need three distinct points on each side")
    return _to_standard(*dst).inverse() * _to_standard(*src)


@dataclass(frozen=True)
class StableTuple:
    points: tuple

    def __post_init__(self):
        if len(self.points) != 5:
            raise ValueError("need five points")
        counts = {}
        for p in self.points:
            counts[p] = counts.get(p, 0) + 1
        if max(counts.values()) > 2:
            raise ValueError("a value repeated three times is not stable")

    @classmethod
    def of(cls, field: NumberField, values) -> StableTuple:
        return cls(tuple(ProjPoint.of(field, v) for v in values))

    @property
    def field(self) -> NumberField:
        return self.points[0].field

    def __call__(self, i: int) -> ProjPoint:
        return self.points[i - 1]

    def permuted(self, sigma: Permutation) -> StableTuple:
        """t o sigma."""
        return StableTuple(tuple(self(sigma(i)) for i in range(1, 6)))

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.points) + ")"


def _frame(t: StableTuple) -> list[int]:
    """Three indices carrying distinct values."""
    idx = []
    for i in range(1, 6):
        if all(t(i) != t(j) for j in idx):
            idx.append(i)
        if len(idx) == 3:
            return idx
    raise ValueError("fewer than three distinct values")


def moebius_witness(t: StableTuple, sigma: Permutation) -> Moebius | None:
    """rho with t(sigma(i)) = rho(t(i)) for all i, if it exists."""
    frame = _frame(t)
    dst = [t(sigma(i)) for i in frame]
    if len(set(dst)) < 3:
        return None
    rho = moebius_from_three([t(i) for i in frame], dst)
    if all(rho(t(i)) == t(sigma(i)) for i in range(1, 6)):
        return rho
    return None


def _generators(elements) -> list[Permutation]:
    gens: list[Permutation] = []
    span = PermGroup([Permutation.identity(5)]).elements
    for g in sorted(elements, key=lambda p: (-p.order(), p.images)):
        if g not in span:
            gens.append(g)
            span = PermGroup(gens).elements
    return gens


@dataclass
class Stabilizer:
    group: PermGroup
    witnesses: dict

    @property
    def order(self) -> int:
        return self.group.order


def stabilizer(t: StableTuple) -> Stabilizer:
    wit = {}
    for s in symmetric_group(5).elements:
        rho = moebius_witness(t, s)
        if rho is not None:
            wit[s] = rho
    gens = _generators(wit)
    return Stabilizer(PermGroup(gens or [Permutation.identity(5)]), {g: wit[g] for g in gens})


# --- catalogue -----------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogueRow:
    name: str
    field: str
    values: tuple
    generators: tuple
    orbit: int
    generic: bool = False


def catalogue_rows() -> list[CatalogueRow]:
    return [
        CatalogueRow("C2odd", "Q", (0, 0, "inf", 1, "z"), ("(12)",), 60, True),
        CatalogueRow("C2ev", "Q", ("z", "-z", 1, -1, "inf"), ("(12)(34)",), 60, True),
        CatalogueRow("C4", "Q(i)", (1, "i", -1, "-i", "inf"), ("(1234)",), 30),
        CatalogueRow("D4odd", "Q", (0, 0, 1, -1, "inf"), ("(12)", "(34)"), 30),
        CatalogueRow("S3ev", "Q(zeta3)", (1, "zeta3", "zeta3^2", 0, "inf"), ("(23)(45)", "(123)"), 20),
        CatalogueRow("D8", "Q", (0, 0, "inf", "inf", 1), ("(12)", "(1324)"), 15),
        CatalogueRow("C6", "Q(zeta3)", ("inf", "inf", 1, "zeta3", "zeta3^2"), ("(12)(345)",), 20),
        CatalogueRow("D10", "Q(zeta5)", (1, "zeta5", "zeta5^2", "zeta5^3", "zeta5^4"), ("(25)(34)", "(12345)"), 12),
    ]


def _value(field: NumberField, v, z):
    if v == "inf":
        return "inf"
    if v == "z":
        return z
    if v == "-z":
        return -z
    if isinstance(v, str):
        sign = -1 if v.startswith("-") else 1
        name, _, power = v.lstrip("-").partition("^")
        return nf_embed(name, field) ** int(power or 1) * sign
    return v


def row_tuple(row: CatalogueRow, z: int = GENERIC_Z[0]) -> StableTuple:
    field = get_field(row.field)
    return StableTuple.of(field, [_value(field, v, z) for v in row.values])


@dataclass
class RowResult:
    row: CatalogueRow
    z: int | None
    stab: Stabilizer
    matches: bool
    orbit: int
    even: bool
    a5_orbits: tuple

    @property
    def ok(self) -> bool:
        return self.matches and self.orbit == self.row.orbit and self.orbit * self.stab.order == 120


def check_row(row: CatalogueRow, z: int = GENERIC_Z[0]) -> RowResult:
    field = get_field(row.field)
    for v in row.values:
        if isinstance(v, str) and v not in ("inf", "z", "-z"):
            require_constants(field, v.lstrip("-").partition("^")[0])
    st = stabilizer(row_tuple(row, z))
    listed = PermGroup([perm(g) for g in row.generators])
    matches = st.group.elements == listed.elements
    orbit = 120 // st.order
    even = st.group.is_subgroup_of(alternating_group(5))
    a5_stab = sum(1 for g in st.group.elements if g.sign() == 1)
    a5_orbits = (orbit // 2, orbit // 2) if even else (60 // a5_stab,)
    return RowResult(row, z if row.generic else None, st, matches, orbit, even, a5_orbits)


def catalogue(zs=GENERIC_Z) -> list[RowResult]:
    out = []
    for row in catalogue_rows():
        for z in (zs if row.generic else zs[:1]):
            out.append(check_row(row, z))
    return out


def small_a5_orbit_census(results=None) -> dict:
    """A5-orbit sizes below 30, keyed by the A5-stabilizer order."""
    results = results or catalogue()
    out = {}
    for r in results:
        if r.row.generic or min(r.a5_orbits) >= 30:
            continue
        out[r.row.name] = r.a5_orbits
    return out


def catalogue_text(results=None) -> str:
    results = results or catalogue()
    lines = []
    for r in results:
        gens = ", ".join(str(g) for g in r.stab.witnesses)
        z = f" (z = {r.z})" if r.z is not None else ""
        split = "splits into two A5-orbits of size %d" % r.a5_orbits[0] if r.even else f"one A5-orbit of size {r.a5_orbits[0]}"
        lines.append(f"{r.row.name}: <{gens}> stabilizes {row_tuple(r.row, r.z or GENERIC_Z[0])}{z}; "
                     f"S5-orbit {r.orbit}, {split}")
    return "\n".join(lines)


# --- forgetful maps -------------------------------------------------------------------

def _classes(labels) -> list[list[int]]:
    seen: dict = {}
    for pos, v in enumerate(labels):
        seen.setdefault(v, []).append(pos)
    return list(seen.values())


def forgetful(t, i: int):
    """Forget point i.

    ``t`` is either a StableTuple or a symbolic value pattern such as (1, 2, 3, 1, 2).
    Interior results come back as (0, inf, 1, lambda) with lambda the cross-ratio; boundary
    results as a pattern over {1, 2}: the two unrepeated values are made equal and the
    classes are renumbered by their smallest original value.
    """
    if isinstance(t, StableTuple):
        rest = [p for k, p in enumerate(t.points, 1) if k != i]
        if len(set(rest)) == 4:
            f = t.field
            return (ProjPoint.of(f, 0), ProjPoint.of(f, "inf"), ProjPoint.of(f, 1), ProjPoint.of(f, cross_ratio(*rest)))
        keys = {p: n for n, p in enumerate(dict.fromkeys(rest))}
        rest = [keys[p] + 1 for p in rest]
    else:
        if len(t) != 5 or max(list(t).count(v) for v in t) > 2:
            raise ValueError(f"not a stable pattern: {t}")
        rest = [v for k, v in enumerate(t, 1) if k != i]
    counts = {v: rest.count(v) for v in rest}
    if len(counts) == 4:
        raise ValueError("four distinct values: not a boundary point")
    if len(counts) == 3:
        singles = [v for v, c in counts.items() if c == 1]
        rest = [min(singles) if v in singles else v for v in rest]
    order = sorted(set(rest))
    return tuple(order.index(v) + 1 for v in rest)


def zero_dim_strata() -> list[tuple]:
    """The 15 patterns with two disjoint repeated pairs, labelled by first occurrence."""
    out = []
    for a in combinations(range(5), 2):
        for b in combinations([k for k in range(5) if k not in a], 2):
            if a > b:
                continue
            lab = [0] * 5
            for k in a:
                lab[k] = "A"
            for k in b:
                lab[k] = "B"
            s = next(k for k in range(5) if k not in a + b)
            lab[s] = "C"
            names = {}
            for v in lab:
                names.setdefault(v, len(names) + 1)
            out.append(tuple(names[v] for v in lab))
    return out


def _partition(pattern) -> frozenset:
    return frozenset(frozenset(c) for c in _classes(pattern))


def forgetful_vector(pattern) -> tuple:
    return tuple(_partition(forgetful(pattern, i)) for i in range(1, 6))


# --- suite --------------------------------------------------------------------------------

def suite(field=None, seed: int = 0) -> list:
    results = catalogue()

    def moebius():
        q = get_field("Q")
        pts = [ProjPoint.of(q, v) for v in (0, "inf", 1)]
        ident = moebius_from_three(pts, pts)
        inv = moebius_from_three(pts, [pts[1], pts[0], pts[2]])
        k5 = get_field("Q(zeta5)")
        z = nf_embed("zeta5", k5)
        rot = moebius_from_three([ProjPoint.of(k5, z ** j) for j in range(3)],
                                 [ProjPoint.of(k5, z ** j) for j in range(1, 4)])
        ok = (ident == Moebius(q.one, q.zero, q.zero, q.one) and inv == Moebius(q.zero, q.one, q.one, q.zero)
              and rot == Moebius(z, k5.zero, k5.zero, k5.one) and rot(ProjPoint.of(k5, z ** 3)) == ProjPoint.of(k5, z ** 4))
        return ok, "identity, z -> 1/z and z -> zeta5 z recovered from three points"

    def make(row_name):
        rows = [r for r in results if r.row.name == row_name]

        def check():
            parts = []
            for r in rows:
                gens = ", ".join(f"{g} via {w}" for g, w in r.stab.witnesses.items())
                z = f"z={r.z}: " if r.z is not None else ""
                parts.append(f"{z}stabilizer of order {r.stab.order} <{gens}>; orbit {r.orbit}; "
                             f"A5-orbits {'+'.join(map(str, r.a5_orbits))}")
            ok = all(r.ok for r in rows)
            if not ok:
                parts.append(f"listed <{', '.join(rows[0].row.generators)}> of orbit {rows[0].row.orbit}")
            return ok, "; ".join(parts)
        return check

    def census():
        c = small_a5_orbit_census(results)
        want = {"S3ev": (10, 10), "D8": (15,), "C6": (20,), "D10": (6, 6)}
        return c == want, f"A5-orbits below 30: {c}"

    def forget():
        ex = [forgetful((1, 2, 3, 1, 2), i) for i in range(1, 6)]
        want = [(2, 1, 1, 2), (1, 2, 1, 2), (1, 2, 1, 2), (1, 2, 1, 2), (1, 2, 2, 1)]
        strata = zero_dim_strata()
        images = {forgetful_vector(s) for s in strata}
        ok = ex == want and len(strata) == 15 and len(images) == 15
        return ok, f"(1,2,3,1,2) -> {ex}; {len(strata)} zero-dimensional strata, {len(images)} distinct images"

    def crossratio():
        q = get_field("Q")
        pts = [ProjPoint.of(q, v) for v in (0, "inf", 1, 5)]
        m = Moebius(q(2), q(3), q(1), q(-4))
        ok = cross_ratio(*pts) == 5 and cross_ratio(*[m(p) for p in pts]) == 5
        return ok, "cross-ratio of (0, inf, 1, 5) is 5 and is kept by a Moebius map"

    checks = [("moebius_from_three", moebius), ("cross_ratio", crossratio)]
    checks += [(row.name, make(row.name)) for row in catalogue_rows()]
    checks += [("orbit_census", census), ("forgetful", forget)]
    return run_checks("moduli", checks)

