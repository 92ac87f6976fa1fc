"""V-polytopes with exact rational vertices and the operations on them."""

from __future__ import annotations

import contextlib
import contextvars
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .hull import hull_points
from .lp import in_convex_hull

Point = tuple[Fraction, ...]

MAX_DIM = 8
_dim_cap: contextvars.ContextVar[int | None] = contextvars.ContextVar("dim_cap", default=MAX_DIM)


class DimensionCapError(ValueError):
    """Raised when a computation would run in more than ``MAX_DIM`` dimensions."""


@contextlib.contextmanager
def uncapped():
    """Lift the dimension cap inside the block (the CLI's ``--force``)."""
    token = _dim_cap.set(None)
    try:
        yield
    finally:
        _dim_cap.reset(token)


def check_dim(d: int) -> None:
    cap = _dim_cap.get()
    if cap is not None and d > cap:
        raise DimensionCapError(
            f"ambient dimension {d} exceeds the cap of {cap}; use --force / uncapped() to override"
        )
    if cap is None and d > MAX_DIM:
        warnings.warn(f"running in dimension {d} > {MAX_DIM}; this may take very long", stacklevel=3)


def _point(p: Iterable) -> Point:
    return tuple(linalg.as_rational(x) for x in p)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of an irredundant vertex list in Q^d.

    Instances come out of :func:`hull`; vertices are stored sorted, so two
    polytopes compare equal iff they are the same set. The volume is computed
    together with the hull and carried along.
    """

    ambient_dim: int
    vertices: tuple[Point, ...]
    affine_dim: int = field(compare=False)
    _volume: Fraction = field(compare=False, repr=False)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vertices))

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    def contains(self, point: Sequence) -> bool:
        """Exact membership test by linear feasibility over the vertices."""
        return in_convex_hull(_point(point), self.vertices)

    def __neg__(self) -> VPolytope:
        return hull([tuple(-x for x in v) for v in self.vertices])

    def __add__(self, other: VPolytope) -> VPolytope:
        return minkowski_sum(self, other)


@dataclass(frozen=True)
class LinearMap:
    """Rational matrix acting on column vectors: ``target_dim x source_dim``."""

    entries: tuple[tuple[Fraction, ...], ...]
    source_dim: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.source_dim:
                raise ValueError(
                    f"row of length {len(row)} in a map with source dimension {self.source_dim}"
                )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], source_dim: int | None = None) -> LinearMap:
        ents = tuple(tuple(linalg.as_rational(x) for x in r) for r in rows)
        if source_dim is None:
            if not ents:
                raise ValueError("source_dim is required for a map with no rows")
            source_dim = len(ents[0])
        return cls(ents, source_dim)

    @classmethod
    def identity(cls, d: int, scale=1) -> LinearMap:
        s = linalg.as_rational(scale)
        return cls.from_rows([[s if i == j else 0 for j in range(d)] for i in range(d)], d)

    @property
    def target_dim(self) -> int:
        return len(self.entries)

    def __call__(self, x: Sequence) -> Point:
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self.entries)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        if self.source_dim != other.target_dim:
            raise ValueError("dimension mismatch in composition")
        cols = list(zip(*other.entries)) if other.entries else [()] * other.source_dim
        return LinearMap.from_rows(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.entries],
            other.source_dim,
        )

    def det(self) -> Fraction:
        if self.target_dim != self.source_dim:
            raise ValueError("determinant of a non-square map")
        return linalg.det(self.entries)


def hull(points: Iterable[Sequence]) -> VPolytope:
    """Irredundant vertex description of the convex hull of ``points``."""
    pts = sorted({_point(p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    check_dim(d)
    res = hull_points(tuple(pts))
    return VPolytope(d, tuple(pts[i] for i in res.vertex_indices), res.affine_dim, res.volume)


def point_body(point: Sequence) -> VPolytope:
    return hull([point])


def volume(P: VPolytope) -> Fraction:
    """Exact ``ambient_dim``-dimensional volume; 0 for lower-dimensional bodies."""
    return P._volume


def affine_image(M: LinearMap, P: VPolytope, shift: Sequence | None = None) -> VPolytope:
    if M.source_dim != P.ambient_dim:
        raise ValueError(
            f"map with source dimension {M.source_dim} applied to a body in dimension {P.ambient_dim}"
        )
    s = _point(shift) if shift is not None else (Fraction(0),) * M.target_dim
    if len(s) != M.target_dim:
        raise ValueError("shift has the wrong dimension")
    return hull(tuple(a + b for a, b in zip(M(v), s)) for v in P.vertices)


def scale(P: VPolytope, factor) -> VPolytope:
    f = linalg.as_rational(factor)
    return hull(tuple(f * x for x in v) for v in P.vertices)


def translate(P: VPolytope, shift: Sequence) -> VPolytope:
    s = _point(shift)
    return hull(tuple(a + b for a, b in zip(v, s)) for v in P.vertices)


def minkowski_sum(P: VPolytope, Q: VPolytope) -> VPolytope:
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError(f"Minkowski sum of bodies in dimensions {P.ambient_dim} and {Q.ambient_dim}")
    return hull(tuple(a + b for a, b in zip(v, w)) for v in P.vertices for w in Q.vertices)


def cartesian_product(P: VPolytope, Q: VPolytope) -> VPolytope:
    return hull(v + w for v in P.vertices for w in Q.vertices)


def cartesian_power(P: VPolytope, p: int) -> VPolytope:
    if p < 1:
        raise ValueError("power must be positive")
    out = P
    for _ in range(p - 1):
        out = cartesian_product(out, P)
    return out
