"""Exact phase-one simplex for feasibility of ``A x = b, x >= 0``.

Small dense tableau over ``Fraction`` with Bland's rule, so it terminates on
degenerate problems. Used for point-in-hull membership and for intersection
nonemptiness; both are tiny at the sizes this package handles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import as_rational


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return some ``x >= 0`` with ``A x = b``, or ``None`` if none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        row = [as_rational(x) for x in A[i]]
        rhs = as_rational(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append(row + [Fraction(int(j == i)) for j in range(m)] + [rhs])
    ncols = n + m
    basis = [n + i for i in range(m)]
    # objective: minimise the sum of artificials, written as reduced costs
    obj = [Fraction(0)] * (ncols + 1)
    for row in rows:
        for j in range(n):
            obj[j] -= row[j]
        obj[ncols] -= row[ncols]

    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded phase-one objective cannot happen (it is bounded below by 0)
            raise ArithmeticError("phase-one simplex became unbounded")
        prow = rows[leave]
        inv = 1 / prow[enter]
        prow = [x * inv for x in prow]
        rows[leave] = prow
        for i, row in enumerate(rows):
            if i != leave and row[enter] != 0:
                f = row[enter]
                rows[i] = [x - f * y for x, y in zip(row, prow)]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, prow)]
        basis[leave] = enter

    if obj[ncols] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][ncols]
    return x


def in_convex_hull(point: Sequence, vertices: Sequence[Sequence]) -> bool:
    """Exact membership of ``point`` in ``conv(vertices)``."""
    d = len(point)
    A = [[v[i] for v in vertices] for i in range(d)]
    A.append([1] * len(vertices))
    return feasible_point(A, list(point) + [1]) is not None


def translates_intersect(vertices: Sequence[Sequence], shifts: Sequence[Sequence]) -> bool:
    """Whether ``K ∩ (K + x_1) ∩ ... ∩ (K + x_p)`` is nonempty, ``K = conv(vertices)``.

    Variables are barycentric weights ``lam^0, ..., lam^p`` over the vertices;
    the common point is ``sum lam^0 v = sum lam^i v + x_i``.
    """
    m = len(vertices)
    d = len(vertices[0])
    p = len(shifts)
    nvar = (p + 1) * m
    A: list[list] = []
    b: list = []
    for blk in range(p + 1):
        row = [0] * nvar
        for j in range(m):
            row[blk * m + j] = 1
        A.append(row)
        b.append(1)
    for i, x in enumerate(shifts, start=1):
        for c in range(d):
            row = [0] * nvar
            for j, v in enumerate(vertices):
                row[j] = v[c]
                row[i * m + j] = -as_rational(v[c])
            A.append(row)
            b.append(x[c])
    return feasible_point(A, b) is not None
