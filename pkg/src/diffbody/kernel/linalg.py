"""Exact linear algebra over the integers and the rationals.

Everything here works on plain Python ``int`` and ``fractions.Fraction``;
no floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def common_denominator(points: Sequence[Sequence[Fraction]]) -> int:
    den = 1
    for p in points:
        for x in p:
            den = lcm(den, x.denominator)
    return den


def to_integer_points(points: Sequence[Sequence[Fraction]]) -> tuple[list[tuple[int, ...]], int]:
    """Scale rational points by a common denominator.

    Returns the integer points and the scale factor ``L`` such that
    ``int_point = L * point``.
    """
    den = common_denominator(points)
    return [tuple(int(x * den) for x in p) for p in points], den


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square rational matrix."""
    if not rows:
        return Fraction(1)
    frows = [[as_rational(x) for x in r] for r in rows]
    den = common_denominator(frows)
    ints = [[int(x * den) for x in r] for r in frows]
    return Fraction(det_int(ints), den ** len(rows))


def cofactor_normal(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Generalized cross product of ``d - 1`` integer vectors in dimension ``d``.

    The result ``a`` satisfies ``a . x = det([rows; x])`` for every ``x``.
    """
    d = len(rows) + 1
    if d == 2:
        (x, y), = rows
        return (-y, x)
    if d == 3:
        (a1, a2, a3), (b1, b2, b3) = rows
        return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    out = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in rows]
        # expansion of det([rows; x]) along the last row
        sign = -1 if (d - 1 + j) % 2 else 1
        out.append(sign * det_int(minor))
    return tuple(out)


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def row_echelon_int(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        for i in range(r + 1, len(m)):
            mic = m[i][c]
            if mic:
                row = m[i]
                pc = pr[c]
                m[i] = primitive([pc * row[j] - mic * pr[j] for j in range(ncols)])
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_int(rows: Sequence[Sequence[int]]) -> int:
    return len(row_echelon_int(rows)[1])


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    frows = [[as_rational(x) for x in r] for r in rows]
    den = common_denominator(frows)
    return rank_int([[int(x * den) for x in r] for r in frows])


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular rational system exactly.

    Raises ``ZeroDivisionError`` when the matrix is singular.
    """
    n = len(matrix)
    aug = [[as_rational(x) for x in row] + [as_rational(b)] for row, b in zip(matrix, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        pr = [x * inv for x in aug[c]]
        aug[c] = pr
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], pr)]
    return [row[n] for row in aug]
