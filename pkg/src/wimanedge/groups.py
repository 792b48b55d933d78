"""Permutation groups on {1..n}, the character tables of S5 and A5, and the
Riemann-Hurwitz orbit count for finite groups acting on a genus-6 curve."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import lcm

from .exactfield import FieldElement, NumberField, get_field, nf_embed
from .report import run_checks


@dataclass(frozen=True)
class Permutation:
    """images[i] is the image of i + 1, stored 1-based."""
    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, text: str, n: int = 5) -> Permutation:
        """Parse cycle notation such as "(123)(45)" or "(1 2 3)(4 5)"; digits may run together when n <= 9."""
        img = list(range(1, n + 1))
        for body in re.findall(r"\(([^)]*)\)", text):
            tokens = re.findall(r"\d+", body) if re.search(r"[\s,]", body.strip()) else list(body)
            pts = [int(t) for t in tokens]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """(p * q)(i) = p(q(i)): q acts first."""
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def cycles(self) -> list[tuple]:
        seen, out = set(), []
        for i in range(1, self.degree + 1):
            if i in seen:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return lcm(*self.cycle_type())

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def fixed_points(self) -> int:
        return sum(1 for i, j in enumerate(self.images, 1) if i == j)

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + "".join(map(str, c)) + ")" for c in cyc) or "()"


def perm(text: str, n: int = 5) -> Permutation:
    return Permutation.from_cycles(text, n)


class PermGroup:
    def __init__(self, gens):
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        if len({g.degree for g in gens}) != 1:
            raise ValueError("generators act on different sets")
        self.gens = gens
        self.degree = gens[0].degree

    @cached_property
    def elements(self) -> frozenset:
        ident = Permutation.identity(self.degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.gens:
                    y = g * x
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.elements

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.elements <= other.elements

    @cached_property
    def conjugacy_classes(self) -> list[frozenset]:
        left = set(self.elements)
        out = []
        for g in sorted(self.elements, key=lambda p: (p.order(), p.images)):
            if g not in left:
                continue
            cls = frozenset(h * g * h.inverse() for h in self.elements)
            out.append(cls)
            left -= cls
        return out


def group_closure(gens) -> PermGroup:
    return PermGroup(gens)


def symmetric_group(n: int = 5) -> PermGroup:
    return PermGroup([perm("(12)", n), Permutation(tuple(list(range(2, n + 1)) + [1]))])


def alternating_group(n: int = 5) -> PermGroup:
    """Generated by the 3-cycles (1 2 k)."""
    return PermGroup([perm(f"(1 2 {k})", n) for k in range(3, n + 1)])


# --- character tables --------------------------------------------------------

@dataclass(frozen=True)
class ClassInfo:
    name: str
    rep: Permutation
    size: int


class CharacterTable:
    """Rows of exact class-function values, over Q(sqrt5)."""

    def __init__(self, group: PermGroup, reps: list[tuple[str, str]], rows: dict, field: NumberField):
        self.group = group
        self.field = field
        self._classes = {}
        infos = []
        for name, cyc in reps:
            r = perm(cyc, group.degree)
            cls = next(c for c in group.conjugacy_classes if r in c)
            infos.append(ClassInfo(name, r, len(cls)))
            for g in cls:
                self._classes[g] = len(infos) - 1
        if len(self._classes) != group.order:
            raise ValueError("listed classes do not cover the group")
        self.classes = infos
        self.chars = {k: tuple(field(v) for v in vals) for k, vals in rows.items()}

    @property
    def order(self) -> int:
        return self.group.order

    def class_index(self, g: Permutation) -> int:
        return self._classes[g]

    def square_map(self) -> list[int]:
        """Index of the class of g^2, from explicit representatives."""
        return [self.class_index(c.rep * c.rep) for c in self.classes]

    def evaluate(self, fn) -> tuple:
        """Class function from a function on representatives."""
        return tuple(self.field(fn(c.rep)) for c in self.classes)

    def inner(self, a, b) -> FieldElement:
        """(1/|G|) sum_g a(g) conj(b(g)); every character here is real-valued."""
        total = self.field.zero
        for c, x, y in zip(self.classes, a, b):
            total = total + x * y * c.size
        return total / self.order

    def wedge2(self, chi) -> tuple:
        sq = self.square_map()
        return tuple((chi[i] * chi[i] - chi[sq[i]]) / 2 for i in range(len(chi)))

    def sym2(self, chi) -> tuple:
        sq = self.square_map()
        return tuple((chi[i] * chi[i] + chi[sq[i]]) / 2 for i in range(len(chi)))

    def tensor(self, a, b) -> tuple:
        return tuple(x * y for x, y in zip(a, b))

    def combine(self, mults: dict) -> tuple:
        out = [self.field.zero] * len(self.classes)
        for name, m in mults.items():
            out = [o + v * m for o, v in zip(out, self.chars[name])]
        return tuple(out)

    def decompose(self, chi) -> dict:
        """Multiplicities of the irreducibles; raises if any is not a non-negative integer
        or if they fail to reassemble chi."""
        out = {}
        for name, row in self.chars.items():
            m = self.inner(chi, row)
            if not m.is_rational() or m.to_fraction().denominator != 1 or m.to_fraction() < 0:
                raise ValueError(f"multiplicity of {name} is {m}")
            if m:
                out[name] = int(m.to_fraction())
        if self.combine(out) != tuple(chi):
            raise ValueError("decomposition does not reassemble the character")
        return out

    def restrict(self, chi, sub: CharacterTable) -> tuple:
        idx = [self.class_index(c.rep) for c in sub.classes]
        return tuple(sub.field(chi[i]) for i in idx)

    def fusion(self, sub: CharacterTable) -> dict:
        return {c.name: self.classes[self.class_index(c.rep)].name for c in sub.classes}

    def perm_character(self, act, points) -> tuple:
        """Fixed-point counts of g -> act(g, x) on a finite set."""
        points = list(points)
        return self.evaluate(lambda g: sum(1 for x in points if act(g, x) == x))

    def orthogonality(self) -> tuple[bool, bool]:
        names = list(self.chars)
        rows_ok = all(self.inner(self.chars[a], self.chars[b]) == int(a == b) for a in names for b in names)
        cols_ok = True
        for i, ci in enumerate(self.classes):
            for j in range(len(self.classes)):
                s = sum((self.chars[n][i] * self.chars[n][j] for n in names), self.field.zero)
                want = Fraction(self.order, ci.size) if i == j else 0
                cols_ok = cols_ok and s == want
        return rows_ok, cols_ok

    def text(self) -> str:
        lines = ["type\t" + "\t".join(c.name for c in self.classes),
                 "size\t" + "\t".join(str(c.size) for c in self.classes)]
        for name, row in self.chars.items():
            lines.append(name + "\t" + "\t".join(_val(v) for v in row))
        return "\n".join(lines)


def _val(v: FieldElement) -> str:
    if v.is_rational():
        return str(v.to_fraction())
    g = nf_embed("golden", v.field)
    if v == g:
        return "(1+sqrt5)/2"
    if v == 1 - g:
        return "(1-sqrt5)/2"
    return str(v)


@lru_cache(maxsize=None)
def s5_table() -> CharacterTable:
    reps = [("1", "()"), ("(12)", "(12)"), ("(12)(34)", "(12)(34)"), ("(123)", "(123)"),
            ("(123)(45)", "(123)(45)"), ("(1234)", "(1234)"), ("(12345)", "(12345)")]
    rows = {
        "1": (1, 1, 1, 1, 1, 1, 1),
        "sgn": (1, -1, 1, 1, -1, -1, 1),
        "V": (4, 2, 0, 1, -1, 0, -1),
        "V*sgn": (4, -2, 0, 1, 1, 0, -1),
        "W": (5, 1, 1, -1, 1, -1, 0),
        "W*sgn": (5, -1, 1, -1, -1, 1, 0),
        "E": (6, 0, -2, 0, 0, 0, 1),
    }
    return CharacterTable(symmetric_group(5), reps, rows, get_field("Q(sqrt5)"))


@lru_cache(maxsize=None)
def a5_table() -> CharacterTable:
    fld = get_field("Q(sqrt5)")
    g = nf_embed("golden", fld)
    reps = [("1", "()"), ("(12)(34)", "(12)(34)"), ("(123)", "(123)"),
            ("(12345)", "(12345)"), ("(12354)", "(12354)")]
    rows = {
        "1": (1, 1, 1, 1, 1),
        "V": (4, 0, 1, -1, -1),
        "W": (5, 1, -1, 0, 0),
        "I": (3, -1, 0, g, 1 - g),
        "I'": (3, -1, 0, 1 - g, g),
    }
    return CharacterTable(PermGroup([perm("(123)"), perm("(12345)")]), reps, rows, fld)


# --- Riemann-Hurwitz --------------------------------------------------------

@dataclass(frozen=True)
class HurwitzSolution:
    quotient_genus: int
    counts: dict  # isotropy order i -> number k_i of orbits of size |G|/i

    def as_tuple(self, orders) -> tuple:
        return tuple(self.counts.get(i, 0) for i in orders)


def hurwitz_solve(order: int, isotropy_orders, genus: int = 6) -> list[HurwitzSolution]:
    """All (g', k_i) with (2g - 2)/|G| = 2(g' - 1) + sum (i-1)/i k_i."""
    target = Fraction(2 * genus - 2, order)
    orders = sorted(isotropy_orders)
    out = []
    gq = 0
    while 2 * (gq - 1) <= target:
        rest = target - 2 * (gq - 1)
        bounds = [int(rest / Fraction(i - 1, i)) for i in orders]
        for ks in product(*(range(b + 1) for b in bounds)):
            if sum(Fraction(i - 1, i) * k for i, k in zip(orders, ks)) == rest:
                out.append(HurwitzSolution(gq, {i: k for i, k in zip(orders, ks) if k}))
        gq += 1
    return out


def hurwitz_scaled(order: int, isotropy_orders, genus: int = 6) -> tuple:
    """The g' = 0 identity with both sides multiplied by |G|/2: lhs and per-order coefficients."""
    lhs = Fraction(2 * genus - 2, 2) + order
    coeffs = {i: Fraction(order * (i - 1), 2 * i) for i in isotropy_orders}
    return lhs, coeffs


def free_action_possible(m: int, genus: int = 6) -> bool:
    """A cyclic group of order m acts freely on a genus-g curve only if 2g - 2 = m (2h - 2) for some h."""
    q, r = divmod(2 * genus - 2, m)
    return r == 0 and q % 2 == 0


def passes_fixed_point_condition(sol: HurwitzSolution, element_orders, genus: int = 6) -> bool:
    """Every element order m not dividing any occurring isotropy order must be able to act freely."""
    for m in element_orders:
        if m == 1:
            continue
        if not any(i % m == 0 for i, k in sol.counts.items() if k) and not free_action_possible(m, genus):
            return False
    return True


def monodromy_check(a: Permutation, b: Permutation, c: Permutation) -> tuple[bool, bool, int]:
    """(a*b*c == 1 with right-to-left composition, same left-to-right, order of <a, b, c>)."""
    ident = Permutation.identity(a.degree)
    rl = a * b * c == ident
    lr = c * b * a == ident
    return rl, lr, PermGroup([a, b, c]).order


# --- suite --------------------------------------------------------------------

def suite(field=None, seed: int = 0) -> list:
    from . import delpezzo

    s5, a5 = s5_table(), a5_table()

    def closures():
        orders = [group_closure([perm("(12345)")]).order,
                  group_closure([perm("(123)(45)"), perm("(1245)")]).order,
                  group_closure([perm("(25)(34)"), perm("(12345)")]).order,
                  alternating_group(5).order]
        return orders == [5, 120, 10, 60], f"orders {orders}"

    def orthogonality():
        r1, c1 = s5.orthogonality()
        r2, c2 = a5.orthogonality()
        sizes = (sum(c.size for c in s5.classes), sum(c.size for c in a5.classes))
        return all((r1, c1, r2, c2)) and sizes == (120, 60), (f"S5 rows {r1} columns {c1}; A5 rows {r2} "
                                                               f"columns {c2}; class sizes sum to {sizes}")

    def squares():
        sq5, sqa = s5.square_map(), a5.square_map()
        named = {a5.classes[i].name: a5.classes[j].name for i, j in enumerate(sqa)}
        ok = named["(12345)"] == "(12354)" and named["(12354)"] == "(12345)"
        return ok, f"A5 squaring: {named}; S5 squaring: " + str({s5.classes[i].name: s5.classes[j].name
                                                                 for i, j in enumerate(sq5)})

    def wedge_w():
        d = s5.decompose(s5.wedge2(s5.chars["W"]))
        return d == {"E": 1, "V*sgn": 1}, f"wedge^2 W = {_fmt(d)}"

    def sym_e():
        d = s5.decompose(s5.sym2(s5.chars["E"]))
        return d == {"W": 2, "W*sgn": 1, "V": 1, "1": 1, "sgn": 1}, f"Sym^2 E = {_fmt(d)} (dimension 21)"

    def restriction():
        fus = s5.fusion(a5)
        d = a5.decompose(s5.restrict(s5.chars["E"], a5))
        inv = a5.inner(a5.sym2(a5.chars["I"]), a5.chars["1"])
        ok = d == {"I": 1, "I'": 1} and inv == 1 and fus["(12345)"] == fus["(12354)"] == "(12345)"
        return ok, f"E|A5 = {_fmt(d)}; <Sym^2 I, 1> = {inv}; fusion {fus}"

    def lines_character():
        verts, _ = delpezzo.intersection_graph()
        chi = s5.perm_character(lambda g, lab: delpezzo.act_on_label(g.images, lab), verts)
        d = s5.decompose(chi)
        return d == {"1": 1, "V": 1, "W": 1}, f"S5 on the 10 lines: {_fmt(d)}"

    def axes_character():
        from .icosa import axes_character as chi
        d = a5.decompose(tuple(a5.field(v) for v in chi()))
        return d == {"1": 1, "W": 1}, f"A5 on the 6 vertex axes: {_fmt(d)}"

    def bundles_character():
        labels = [delpezzo.bundle_label(f) for f in delpezzo.fiber_classes()]
        chi = s5.perm_character(lambda g, i: g(i), labels)
        d = s5.decompose(chi)
        return d == {"1": 1, "V": 1}, f"S5 on the 5 conic bundles: {_fmt(d)}"

    def hurwitz():
        s = hurwitz_solve(120, range(2, 7))
        s_t = sorted(x.as_tuple([2, 3, 4, 6]) for x in s if not x.counts.get(5))
        s_all5 = all(not x.counts.get(5) for x in s)
        kept = [x.as_tuple([2, 3, 4, 6]) for x in s if passes_fixed_point_condition(x, range(1, 7))]
        a = [x.as_tuple([2, 3, 5]) for x in hurwitz_solve(60, (2, 3, 5))]
        a6 = hurwitz_solve(360, range(2, 7))
        ok = (s_all5 and s_t == [(0, 2, 1, 0), (1, 0, 1, 1)] and kept == [(1, 0, 1, 1)]
              and a == [(3, 1, 0)] and a6 == [] and all(x.quotient_genus == 0 for x in s))
        return ok, (f"S5: (k2,k3,k4,k6) in {s_t}, fixed-point condition keeps {kept}; "
                    f"A5: {a}; A6: {len(a6)} solutions")

    def monodromy():
        a, b, c = perm("(123)(45)"), perm("(1245)"), perm("(14)(23)")
        rl, lr, order = monodromy_check(a, b, c)
        orders = (a.order(), b.order(), c.order())
        return (rl or lr) and order == 120 and orders == (6, 4, 2), (
            f"orders {orders}; product trivial composing right-to-left: {rl}, left-to-right: {lr}; "
            f"generated group of order {order}")

    return run_checks("groups", [
        ("closure", closures),
        ("orthogonality", orthogonality),
        ("squaring_map", squares),
        ("wedge2_W", wedge_w),
        ("sym2_E", sym_e),
        ("restriction_E", restriction),
        ("lines_character", lines_character),
        ("axes_character", axes_character),
        ("bundles_character", bundles_character),
        ("hurwitz", hurwitz),
        ("monodromy", monodromy),
    ])


def _fmt(d: dict) -> str:
    return " + ".join(f"{m}{name}" if m > 1 else name for name, m in d.items())
