"""Exact arithmetic in Q and in number fields Q[x]/(m(x)).

An element is stored as a vector of integer numerators over one positive
common denominator.  Products are reduced modulo the monic minimal
polynomial, and inverses come from the extended Euclidean algorithm over Q.
No floating point is used here except in the optional complex embedding,
which only the plotter and numeric spot checks call.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd
from types import MappingProxyType

Rational = Fraction


class FieldMismatchError(TypeError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"cannot coerce {c!r} to a rational")


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


# --- dense univariate polynomials over Q (ascending coefficient lists) ---

def _qtrim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qdivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    b = _qtrim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_qtrim(a)) >= len(b):
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
        a.pop()
    return q, a


def _qsub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _qtrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qtrim(out)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, r = _qdivmod(num, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not _qtrim(r)
    return [int(c) for c in _qtrim(num)]


class NumberField:
    """The field Q[x]/(m(x)) for a monic rational polynomial m.

    ``minpoly`` is an ascending coefficient list ending in 1.  Irreducibility
    is the caller's responsibility.  ``embedding`` optionally fixes a complex
    value of the generator for numeric evaluation.
    """

    __slots__ = ("minpoly", "name", "degree", "_low", "_lowden", "_key",
                 "embedding", "_zero", "_one")

    def __init__(self, minpoly, name: str | None = None, embedding: complex | None = None):
        coeffs = _qtrim([_frac(c) for c in minpoly])
        if len(coeffs) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        self._lowden = den
        self._low = tuple(int(c * den) for c in coeffs[:-1])
        self._key = self.minpoly
        self.name = name or "Q[x]/(" + _poly_text(self.minpoly) + ")"
        self.embedding = embedding
        self._zero = FieldElement._raw(self, (0,) * self.degree, 1)
        self._one = FieldElement._raw(self, (1,) + (0,) * (self.degree - 1), 1)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"NumberField({self.name})"

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    @property
    def gen(self) -> FieldElement:
        if self.degree == 1:
            return self(-self.minpoly[0])
        return self([0, 1])

    def __call__(self, value) -> FieldElement:
        """Coerce a rational, an element, or a coefficient list into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value.field.name} is not {self.name}")
            return value
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        c = _frac(value)
        return FieldElement._make(self, [c.numerator] + [0] * (self.degree - 1), c.denominator)

    def from_coeffs(self, coeffs) -> FieldElement:
        fr = [_frac(c) for c in coeffs]
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        return self._from_long([int(c * den) for c in fr], den)

    def _from_long(self, nums: list, den: int) -> FieldElement:
        nums, den = self._reduce_long(nums, den)
        return FieldElement._make(self, nums, den)

    def _reduce_long(self, nums: list, den: int) -> tuple[list, int]:
        n = self.degree
        nums = list(nums) + [0] * max(0, n - len(nums))
        low, ld = self._low, self._lowden
        for k in range(len(nums) - 1, n - 1, -1):
            c = nums[k]
            if not c:
                continue
            if ld != 1:
                nums = [v * ld for v in nums]
                den *= ld
                c = nums[k]
            nums[k] = 0
            base = k - n
            for j in range(n):
                if low[j]:
                    nums[base + j] -= c * low[j]
        return nums[:n], den

    def random_element(self, rng, bound: int = 5) -> FieldElement:
        return self.from_coeffs([Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
                                 for _ in range(self.degree)])


def _poly_text(coeffs) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and abs(c) == 1:
            s = ("-" if c < 0 else "+") + mono
        else:
            s = ("-" if c < 0 else "+") + str(abs(c)) + ("*" + mono if mono else "")
        parts.append(s)
    text = "".join(parts) or "0"
    return text[1:] if text.startswith("+") else text


class FieldElement:
    """An immutable element c0 + c1*a + ... + c_{n-1}*a^(n-1) of a NumberField."""

    __slots__ = ("field", "num", "den")

    @classmethod
    def _raw(cls, field, num: tuple, den: int) -> FieldElement:
        e = object.__new__(cls)
        e.field = field
        e.num = num
        e.den = den
        return e

    @classmethod
    def _make(cls, field, nums, den: int) -> FieldElement:
        if den < 0:
            nums = [-v for v in nums]
            den = -den
        if den != 1:
            g = gcd(den, *nums)
            if g != 1:
                nums = [v // g for v in nums]
                den //= g
        return cls._raw(field, tuple(nums), den)

    # -- views ---------------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- coercion --------------------------------------------------------------
    def _coerce(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self.den, o.den
        if d1 == d2:
            return FieldElement._make(self.field, [a + b for a, b in zip(self.num, o.num)], d1)
        return FieldElement._make(self.field, [a * d2 + b * d1 for a, b in zip(self.num, o.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement._make(self.field, [a * other for a in self.num], self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        n = f.degree
        if n == 1:
            return FieldElement._make(f, [self.num[0] * o.num[0]], self.den * o.den)
        a, b = self.num, o.num
        prod = [0] * (2 * n - 1)
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n):
                    bj = b[j]
                    if bj:
                        prod[i + j] += ai * bj
        nums, den = f._reduce_long(prod, self.den * o.den)
        return FieldElement._make(f, nums, den)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        if f.degree == 1 or self.is_rational():
            return f(Fraction(self.den, self.num[0]))
        # extended Euclid: track s with s*a = r (mod m)
        r0, r1 = [Fraction(c) for c in f.minpoly], _qtrim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, _qtrim(r)
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        if not r1:
            raise ZeroDivisionError(f"{self} is a zero divisor; minimal polynomial is reducible")
        c = r1[0]
        return f.from_coeffs([x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement._make(self.field, list(self.num), self.den * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    # -- other views -----------------------------------------------------------
    def minpoly_residual(self) -> FieldElement:
        """Value of the field's minimal polynomial at this element."""
        acc = self.field.zero
        for c in reversed(self.field.minpoly):
            acc = acc * self + c
        return acc

    def to_complex(self) -> complex:
        a = self.field.embedding
        if a is None:
            if self.is_rational():
                return complex(self.to_fraction())
            raise ValueError(f"{self.field.name} has no complex embedding")
        acc = 0j
        for v in reversed(self.num):
            acc = acc * a + v
        return acc / self.den

    def mod_p(self, p: int, root: int) -> int:
        """Image under the reduction sending the generator to ``root`` mod p."""
        if self.den % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        acc = 0
        for v in reversed(self.num):
            acc = (acc * root + v) % p
        return acc * pow(self.den, -1, p) % p

    def __repr__(self):
        return f"{self.field.name}[{self.text()}]"

    def text(self) -> str:
        """Coordinate-vector text, e.g. ``(1,0,2/3)``."""
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"

    def __str__(self):
        if self.is_rational():
            return str(self.to_fraction())
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("a" if k == 1 else f"a^{k}")
                parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


# --- shipped fields and constants -------------------------------------------

def _cyclo_field(n: int, name: str) -> NumberField:
    return NumberField(cyclotomic_polynomial(n), name, embedding=cmath.exp(2j * cmath.pi / n))


_FIELDS = {
    "Q": NumberField([0, 1], "Q", embedding=0j),
    "Q(i)": _cyclo_field(4, "Q(i)"),
    "Q(zeta3)": _cyclo_field(3, "Q(zeta3)"),
    "Q(zeta5)": _cyclo_field(5, "Q(zeta5)"),
    "Q(zeta15)": _cyclo_field(15, "Q(zeta15)"),
    "Q(zeta20)": _cyclo_field(20, "Q(zeta20)"),
    "Q(sqrt5)": NumberField([-1, -1, 1], "Q(sqrt5)", embedding=(1 + 5 ** 0.5) / 2),
}
FIELDS = MappingProxyType(_FIELDS)

_ALIASES = {k.lower().replace("(", "").replace(")", ""): k for k in _FIELDS}


def get_field(name: str) -> NumberField:
    """Look up a shipped field by name (``Q(zeta15)``) or alias (``qzeta15``)."""
    if name in _FIELDS:
        return _FIELDS[name]
    key = name.lower().replace("(", "").replace(")", "").replace("_", "")
    if key in _ALIASES:
        return _FIELDS[_ALIASES[key]]
    raise KeyError(f"unknown field {name!r}; known: {', '.join(_FIELDS)}")


DEFINING_POLYNOMIALS = MappingProxyType({
    "sqrt5": (-5, 0, 1),
    "sqrtm3": (3, 0, 1),
    "zeta3": (1, 1, 1),
    "zeta5": (1, 1, 1, 1, 1),
    "i": (1, 0, 1),
    "golden": (-1, -1, 1),
    "goldenConj": (-1, -1, 1),
})


def _monomial(field: NumberField, k: int) -> FieldElement:
    return field.gen ** k


def _constant_table() -> dict:
    table = {}

    def put(name, fname, value):
        table[(name, fname)] = value

    f = _FIELDS["Q(zeta15)"]
    z5, z3 = _monomial(f, 3), _monomial(f, 5)
    s5 = 1 + 2 * z5 + 2 * z5 ** 4
    put("zeta5", f.name, z5)
    put("zeta3", f.name, z3)
    put("sqrt5", f.name, s5)
    put("sqrtm3", f.name, 1 + 2 * z3)

    f = _FIELDS["Q(zeta20)"]
    z5 = _monomial(f, 4)
    put("i", f.name, _monomial(f, 5))
    put("zeta5", f.name, z5)
    put("sqrt5", f.name, 1 + 2 * z5 + 2 * z5 ** 4)

    f = _FIELDS["Q(zeta5)"]
    z5 = f.gen
    put("zeta5", f.name, z5)
    put("sqrt5", f.name, 1 + 2 * z5 + 2 * z5 ** 4)

    f = _FIELDS["Q(zeta3)"]
    put("zeta3", f.name, f.gen)
    put("sqrtm3", f.name, 1 + 2 * f.gen)

    f = _FIELDS["Q(i)"]
    put("i", f.name, f.gen)

    f = _FIELDS["Q(sqrt5)"]
    put("sqrt5", f.name, 2 * f.gen - 1)

    for (name, fname), value in list(table.items()):
        if name == "sqrt5":
            put("golden", fname, (1 + value) / 2)
            put("goldenConj", fname, (1 - value) / 2)
    return table


def _check_constant(name: str, value: FieldElement) -> None:
    acc = value.field.zero
    for c in reversed(DEFINING_POLYNOMIALS[name]):
        acc = acc * value + c
    if acc:
        raise AssertionError(f"{name} fails its defining polynomial in {value.field.name}")
    if name in ("zeta3", "zeta5") and value == 1:
        raise AssertionError(f"{name} is trivial")


_CONSTANTS = _constant_table()
for (_n, _f), _v in _CONSTANTS.items():
    _check_constant(_n, _v)
CONSTANTS = MappingProxyType(_CONSTANTS)


class MissingConstantError(KeyError):
    pass


def nf_make(minpoly, name: str | None = None) -> NumberField:
    return NumberField(minpoly, name)


def nf_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field.name} vs {b.field.name}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def nf_embed(name: str, field: NumberField | str) -> FieldElement:
    """The registered constant ``name`` inside ``field``."""
    if isinstance(field, str):
        field = get_field(field)
    try:
        return _CONSTANTS[(name, field.name)]
    except KeyError:
        raise MissingConstantError(f"constant {name!r} is not available in {field.name}") from None


def constants_in(field: NumberField) -> list[str]:
    return sorted(n for (n, f) in _CONSTANTS if f == field.name)


# --- suite ----------------------------------------------------------------------

def random_element(field: NumberField, rng) -> FieldElement:
    return field([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(field.degree)])


def suite(field: NumberField | None = None, seed: int = 0, samples: int = 1000) -> list:
    import random

    from .report import run_checks

    fields = [field] if field is not None else list(_FIELDS.values())

    def make():
        q = nf_make([0, 1])
        c15 = nf_make(cyclotomic_polynomial(15))
        gold = nf_make([-1, -1, 1])
        ok = q.degree == 1 and q.gen == 0 and c15.degree == 8
        ok = ok and list(c15.minpoly) == [1, -1, 0, 1, -1, 1, 0, -1, 1] and gold.gen ** 2 == gold.gen + 1
        try:
            nf_make([1, 0, 2])
            ok = False
        except ValueError:
            pass
        return ok, "x gives Q with generator 0; cyclotomic 15 has degree 8; x^2 - x - 1 hosts the golden ratio; non-monic rejected"

    def arithmetic():
        f15, f3 = _FIELDS["Q(zeta15)"], _FIELDS["Q(zeta3)"]
        z5 = f15.gen ** 3
        gauss = (1 + 2 * z5 + 2 * z5 ** 4) ** 2 == 5
        eis = (1 + 2 * f3.gen) ** 2 == -3
        s5 = nf_embed("sqrt5", f15) == 1 + 2 * f15.gen ** 3 + 2 * f15.gen ** 12
        return gauss and eis and s5, "(1 + 2 zeta5 + 2 zeta5^4)^2 = 5; (1 + 2 zeta3)^2 = -3; sqrt5 = 1 + 2 z^3 + 2 z^12 in Q(zeta15)"

    def constants():
        bad = []
        for (name, fname), v in _CONSTANTS.items():
            try:
                _check_constant(name, v)
            except AssertionError:
                bad.append(f"{name} in {fname}")
        return not bad, f"{len(_CONSTANTS)} registered constants satisfy their defining polynomials" + (
            f"; failing: {bad}" if bad else "")

    def axioms():
        rng = random.Random(seed)
        counts = {}
        for f in fields:
            n = 0
            for _ in range(samples):
                a, b, c = (random_element(f, rng) for _ in range(3))
                if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
                    return False, f"ring axiom fails in {f.name} at {a}, {b}, {c}"
                if a and a * a.inverse() != 1:
                    return False, f"inverse fails in {f.name} at {a}"
                acc = f.zero
                for co in reversed(f.minpoly):
                    acc = acc * f.gen + co
                if acc:
                    return False, f"minimal polynomial does not vanish in {f.name}"
                n += 1
            counts[f.name] = n
        return True, f"associativity, distributivity and inverses on {samples} random triples per field: {list(counts)}"

    return run_checks("exactfield", [
        ("nf_make", make),
        ("arithmetic", arithmetic),
        ("constants", constants),
        ("field_axioms", axioms),
    ])
