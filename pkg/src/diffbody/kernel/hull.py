"""Exact convex hulls and volumes of finite point sets.

Points are scaled to a common denominator so the whole computation runs on
Python integers. The hull is built as a placing (beneath-beyond)
triangulation: the first point in lexicographic order is the apex of the
initial simplex, remaining points are inserted one by one, and every point
that sees a boundary face strictly is coned over all such faces. Since the
normal of a boundary face is the cofactor vector of its edge matrix, the
value ``a . q - b`` that decides visibility is also the determinant of the
new simplex, so the volume accumulates for free.

Degenerate input is handled by first passing to the affine hull: the points
are projected onto pivot coordinates of their difference vectors, which is
injective on the affine hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from operator import mul
from typing import Sequence

from .linalg import cofactor_normal, primitive, rank_int, row_echelon_int, to_integer_points


@dataclass(frozen=True)
class HullResult:
    vertex_indices: tuple[int, ...]
    affine_dim: int
    volume: Fraction


def _affine_basis(points: list[tuple[int, ...]]) -> tuple[int, list[int]]:
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    diffs = [d for d in diffs if any(d)]
    if not diffs:
        return 0, []
    echelon, pivots = row_echelon_int(diffs)
    return len(pivots), pivots


def _initial_simplex(points: list[tuple[int, ...]], d: int) -> list[int]:
    chosen = [0]
    base = points[0]
    rows: list[tuple[int, ...]] = []
    for i in range(1, len(points)):
        diff = tuple(a - b for a, b in zip(points[i], base))
        if rank_int(rows + [diff]) > len(rows):
            rows.append(diff)
            chosen.append(i)
            if len(chosen) == d + 1:
                break
    return chosen


def _oriented_face(pts: list[tuple[int, ...]], idx: tuple[int, ...], ref: tuple[int, ...], ref_scale: int):
    """Normal ``a`` and offset ``b`` of the face through ``pts[idx]``.

    The sign is fixed so that the interior reference point ``ref / ref_scale``
    lies strictly on the ``a . x < b`` side.
    """
    p0 = pts[idx[0]]
    rows = [tuple(x - y for x, y in zip(pts[j], p0)) for j in idx[1:]]
    a = cofactor_normal(rows)
    b = sum(map(mul, a, p0))
    s = sum(map(mul, a, ref))
    if s > b * ref_scale:
        a = tuple(-x for x in a)
        b = -b
    return a, b


def _full_dim_hull(pts: list[tuple[int, ...]], d: int) -> tuple[list[int], int]:
    """Hull of integer points spanning R^d. Returns (vertex indices, d! * volume)."""
    init = _initial_simplex(pts, d)
    ref = tuple(sum(pts[i][c] for i in init) for c in range(d))
    ref_scale = d + 1

    faces: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {}
    for omit in range(d + 1):
        idx = tuple(sorted(init[:omit] + init[omit + 1:]))
        faces[idx] = _oriented_face(pts, idx, ref, ref_scale)
    a, b = faces[tuple(sorted(init[1:]))]
    total = abs(sum(map(mul, a, pts[init[0]])) - b)

    used = set(init)
    rest = [i for i in range(len(pts)) if i not in used]
    # far points first keeps the number of later-discarded simplices small
    rest.sort(key=lambda i: (-sum((ref_scale * x - r) ** 2 for x, r in zip(pts[i], ref)), i))

    for qi in rest:
        q = pts[qi]
        visible = []
        for idx, (a, b) in faces.items():
            s = sum(map(mul, a, q)) - b
            if s > 0:
                visible.append(idx)
                total += s
        if not visible:
            continue
        ridge_count: dict[tuple[int, ...], int] = {}
        for idx in visible:
            del faces[idx]
            for j in range(d):
                ridge = idx[:j] + idx[j + 1:]
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        for ridge, cnt in ridge_count.items():
            if cnt == 1:
                idx = tuple(sorted(ridge + (qi,)))
                faces[idx] = _oriented_face(pts, idx, ref, ref_scale)

    facets: dict[tuple[int, ...], list[int]] = {}
    for idx, (a, b) in faces.items():
        facets.setdefault(primitive(a + (b,)), [])
    facet_list = list(facets)
    candidates = sorted({i for idx in faces for i in idx})
    vertices = []
    for i in candidates:
        p = pts[i]
        active = [f[:d] for f in facet_list if sum(map(mul, f, p)) == f[d]]
        if len(active) >= d and rank_int(active) == d:
            vertices.append(i)
    return vertices, total


def hull_integer(points: Sequence[tuple[int, ...]]) -> tuple[list[int], int, int]:
    """Hull of distinct integer points.

    Returns (vertex indices, affine dimension, d! * volume) where the volume is
    the ambient one and is 0 for lower-dimensional input.
    """
    pts = list(points)
    d = len(pts[0])
    if len(pts) == 1:
        return [0], 0, (1 if d == 0 else 0)
    r, pivots = _affine_basis(pts)
    if r == 0:
        return [0], 0, 0
    if r < d:
        proj = [tuple(p[c] for c in pivots) for p in pts]
    else:
        proj = pts
    if r == 1:
        vals = [p[0] for p in proj]
        lo = min(range(len(vals)), key=lambda i: vals[i])
        hi = max(range(len(vals)), key=lambda i: vals[i])
        vol = vals[hi] - vals[lo] if d == 1 else 0
        return sorted({lo, hi}), 1, vol
    verts, vol = _full_dim_hull(proj, r)
    return verts, r, (vol if r == d else 0)


@lru_cache(maxsize=1 << 16)
def hull_points(points: tuple[tuple[Fraction, ...], ...]) -> HullResult:
    """Hull of a sorted, duplicate-free tuple of rational points (memoized)."""
    d = len(points[0])
    ints, scale = to_integer_points(points)
    verts, r, vol = hull_integer(ints)
    volume = Fraction(vol, factorial(d) * scale ** d) if vol else Fraction(int(d == 0))
    return HullResult(tuple(sorted(verts)), r, volume)
