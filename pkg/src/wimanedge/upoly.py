"""Univariate polynomials over a NumberField as ascending coefficient lists."""

from __future__ import annotations

from .exactfield import FieldElement, NumberField
from .linalg import det


def trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: list) -> int:
    return len(trim(p)) - 1


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    return trim([x + y for x, y in zip(a, b)] + list(a[len(b):]))


def sub(a: list, b: list) -> list:
    return add(a, [-y for y in b])


def mul(a: list, b: list, field: NumberField) -> list:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return trim(out)


def scale(a: list, c) -> list:
    return trim([x * c for x in a])


def divmod_(a: list, b: list, field: NumberField) -> tuple[list, list]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero] * max(len(a) - len(b) + 1, 0)
    inv = b[-1].inverse()
    while len(a) >= len(b):
        k = len(a) - len(b)
        c = a[-1] * inv
        q[k] = c
        for j, bj in enumerate(b):
            if bj:
                a[k + j] = a[k + j] - c * bj
        a = trim(a)
    return trim(q), a


def monic(a: list) -> list:
    a = trim(a)
    if not a:
        return a
    inv = a[-1].inverse()
    return [x * inv for x in a]


def gcd(a: list, b: list, field: NumberField) -> list:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b, field)[1]
    return monic(a)


def derivative(a: list) -> list:
    return trim([c * k for k, c in enumerate(a)][1:])


def evaluate(a: list, x):
    acc = None
    for c in reversed(a):
        acc = c if acc is None else acc * x + c
    return acc


def squarefree_decomposition(a: list, field: NumberField) -> list[tuple[list, int]]:
    """Yun's algorithm: monic squarefree factors with their multiplicities."""
    a = monic(a)
    if len(a) <= 1:
        return []
    out = []
    b = gcd(a, derivative(a), field)
    c = divmod_(a, b, field)[0]
    d = sub(divmod_(derivative(a), b, field)[0], derivative(c))
    k = 1
    while len(c) > 1:
        g = gcd(c, d, field)
        if len(g) > 1:
            out.append((g, k))
        c = divmod_(c, g, field)[0]
        d = sub(divmod_(d, g, field)[0], derivative(c))
        k += 1
    return out


def interpolate(xs: list, ys: list, field: NumberField) -> list:
    """Coefficients of the unique polynomial of degree < len(xs) through the data."""
    n = len(xs)
    coef = [field(y) for y in ys]
    xs = [field(x) for x in xs]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[-1]]
    for i in range(n - 2, -1, -1):
        poly = add(mul(poly, [-xs[i], field.one], field), [coef[i]])
    return trim(poly)


def sylvester_matrix(a: list, b: list, field: NumberField) -> list[list[FieldElement]]:
    a, b = trim(a), trim(b)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    da, db = list(reversed(a)), list(reversed(b))
    for i in range(n):
        rows.append([field.zero] * i + da + [field.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([field.zero] * i + db + [field.zero] * (size - n - 1 - i))
    return rows


def sylvester_resultant(a: list, b: list, field: NumberField) -> FieldElement:
    """Determinant of the Sylvester matrix of two nonzero univariate polynomials."""
    a, b = trim([field(c) for c in a]), trim([field(c) for c in b])
    if not a or not b:
        raise ValueError("resultant of a zero polynomial")
    if len(a) == 1 and len(b) == 1:
        return field.one
    return det(sylvester_matrix(a, b, field), field)
