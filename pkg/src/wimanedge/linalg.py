"""Dense exact linear algebra over a NumberField, plus modular and rational helpers.

Matrices are lists of rows.  The number-field routines use plain Gaussian
elimination; sizes in this package stay in the low hundreds.  Large rational
kernels and matrices over F_p are delegated to FLINT.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import flint

from .exactfield import FieldElement, NumberField


def _lift(field: NumberField, rows) -> list[list[FieldElement]]:
    return [[field(c) for c in row] for row in rows]


def rref(rows, field: NumberField) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    m = _lift(field, rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv if v else v for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                ri = m[i]
                m[i] = [a - f * b if b else a for a, b in zip(ri, m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, field: NumberField) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows, field: NumberField, ncols: int | None = None) -> list[list[FieldElement]]:
    """Basis of {v : M v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(rows, rhs, field: NumberField) -> list[FieldElement] | None:
    """One solution of M x = rhs, or None when inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def det(rows, field: NumberField) -> FieldElement:
    m = _lift(field, rows)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    result = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        p = m[c][c]
        result = result * p
        inv = p.inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[c])]
    return result


def rank_mod_p(rows, p: int) -> int:
    if not rows:
        return 0
    return flint.nmod_mat([[int(v) % p for v in r] for r in rows], p).rank()


def det_mod_p(rows, p: int) -> int:
    if not rows:
        return 1
    return int(flint.nmod_mat([[int(v) % p for v in r] for r in rows], p).det())


def rational_nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Exact kernel basis of a rational matrix, via FLINT's fraction-free nullspace."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    scaled = []
    for r in rows:
        fr = [Fraction(v) for v in r]
        den = 1
        for v in fr:
            den = den * v.denominator // gcd(den, v.denominator)
        scaled.append([int(v * den) for v in fr])
    mat = flint.fmpz_mat(scaled)
    x, k = mat.nullspace()
    basis = []
    for j in range(k):
        basis.append([Fraction(int(x[i, j])) for i in range(ncols)])
    return basis


def fmpq(v) -> flint.fmpq:
    v = Fraction(v)
    return flint.fmpq(v.numerator, v.denominator)


def rational_rank(rows) -> int:
    if not rows:
        return 0
    return flint.fmpq_mat([[fmpq(v) for v in r] for r in rows]).rank()


def rational_solve(rows, rhs) -> list[Fraction] | None:
    """One solution of a rational system M x = rhs, or None when inconsistent."""
    ncols = len(rows[0])
    aug = flint.fmpq_mat([[fmpq(v) for v in r] + [fmpq(b)] for r, b in zip(rows, rhs)])
    red, rk = aug.rref()
    x = [Fraction(0)] * ncols
    for i in range(rk):
        lead = next(c for c in range(ncols + 1) if red[i, c] != 0)
        if lead == ncols:
            return None
        q = red[i, ncols]
        x[lead] = Fraction(int(q.p), int(q.q))
    return x
