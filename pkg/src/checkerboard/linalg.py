"""Exact linear algebra over the integers and rationals.

Matrices are lists of row lists. Nothing here uses floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .laurent import LaurentPoly, T, interpolate

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[0] * (n if m is None else m) for _ in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c):
    return [[c * x for x in row] for row in a]


def copy(a):
    return [list(row) for row in a]


def det_bareiss(a: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination; every division is exact."""
    m = copy(a)
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def scaled_inverse(a: Sequence[Sequence[int]]) -> tuple[int, Matrix]:
    """Fraction-free Gauss-Jordan on ``[a | I]``.

    Returns ``(d, X)`` with integer ``X`` and ``a @ X == d * I``; ``d`` is ``±det(a)``.
    Raises ``ZeroDivisionError`` when ``a`` is singular.
    """
    n = len(a)
    m = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise ZeroDivisionError("matrix is singular")
        pivot = m[k][k]
        for i in range(n):
            if i == k:
                continue
            f = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(2 * n):
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
        prev = pivot
    # every diagonal entry now equals the final pivot; earlier pivot rows lag behind
    d = prev
    out = []
    for i in range(n):
        diag = m[i][i]
        row = m[i][n:]
        if diag != d:
            row = [x * d // diag for x in row]
        out.append(row)
    return d, out


def inverse(a: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    d, x = scaled_inverse(a)
    return [[Fraction(v, d) for v in row] for row in x]


def rank(a: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in row] for row in a]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def nullity(a: Sequence[Sequence]) -> int:
    return len(a[0]) - rank(a) if a else 0


def inertia(sym: Sequence[Sequence]) -> tuple[int, int, int]:
    """Return ``(positive, negative, zero)`` counts of a symmetric rational matrix.

    Symmetric (congruence) elimination; a zero diagonal with a nonzero entry
    in its row is repaired by adding a neighbouring row and column first.
    """
    m = [[Fraction(x) for x in row] for row in sym]
    n = len(m)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if m[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row_i += row_j, col_i += col_j; new diagonal is 2*m[i][j] != 0
            for c in range(n):
                m[i][c] += m[j][c]
            for r in range(n):
                m[r][i] += m[r][j]
            k = i
        p = m[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = m[i][k] / p
            if f:
                for c in active:
                    m[i][c] -= f * m[k][c]
        for i in active:
            m[i][k] = m[k][i] = Fraction(0)
    return pos, neg, n - pos - neg


def signature(sym: Sequence[Sequence]) -> int:
    p, q, _ = inertia(sym)
    return p - q


def det_polynomial_by_interpolation(entry: Callable[[int], Sequence[Sequence[int]]], degree: int) -> LaurentPoly:
    """Determinant of a polynomial matrix, given as ``t -> integer matrix``, of known degree bound."""
    points = list(range(degree + 1))
    values = [det_bareiss(entry(t)) for t in points]
    return interpolate(points, values)


def charpoly(a: Sequence[Sequence[int]]) -> LaurentPoly:
    """``det(t I - a)`` by exact interpolation at ``n + 1`` integer points."""
    n = len(a)

    def at(t):
        return [[(t if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]

    return det_polynomial_by_interpolation(at, n)


def det_polynomial_bareiss(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Bareiss elimination directly over ``Z[t]``; divisions are exact polynomial divisions."""
    m = [list(row) for row in m]
    n = len(m)
    if n == 0:
        return LaurentPoly.monomial()
    sign = 1
    prev = LaurentPoly.monomial()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = LaurentPoly()
        prev = pivot
    return m[n - 1][n - 1] * sign


def charpoly_bareiss(a: Sequence[Sequence[int]]) -> LaurentPoly:
    n = len(a)
    m = [[(T if i == j else LaurentPoly()) - a[i][j] for j in range(n)] for i in range(n)]
    return det_polynomial_bareiss(m)
