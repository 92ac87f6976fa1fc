"""Bodies built from other bodies: embeddings into products, difference
bodies, anti-blocking generators, sign symmetrization and coordinate sections.

Coordinates are 1-based in :class:`CoordinateSubset` (matching the usual
``{1, ..., n}`` labelling) and 0-based everywhere else.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .kernel import (
    LinearMap,
    VPolytope,
    affine_image,
    as_rational,
    cartesian_power,
    hull,
    minkowski_sum,
)
from .kernel.lp import in_convex_hull


class NotAntiBlockingError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CoordinateSubset:
    """A subset of ``{1, ..., n}``; the empty subset stands for ``E = {0}``."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(self.members)))
        if len(mem) != len(self.members):
            raise ValueError(f"duplicate members in {self.members}")
        if any(i < 1 or i > self.n for i in mem):
            raise ValueError(f"members {self.members} out of range 1..{self.n}")
        object.__setattr__(self, "members", mem)

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> CoordinateSubset:
        return cls(n, tuple(sorted(members)))

    @property
    def complement(self) -> CoordinateSubset:
        return CoordinateSubset(self.n, tuple(i for i in range(1, self.n + 1) if i not in self.members))

    @property
    def indices(self) -> tuple[int, ...]:
        """0-based coordinate indices."""
        return tuple(i - 1 for i in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


# ---------------------------------------------------------------------------
# linear maps


def reflection(d: int) -> LinearMap:
    return LinearMap.identity(d, -1)


def diagonal_map(n: int, p: int) -> LinearMap:
    """``x -> (x, ..., x)`` from R^n to (R^n)^p."""
    return LinearMap.from_rows([[int(r % n == c) for c in range(n)] for r in range(p * n)], n)


def factor_map(n: int, i: int, p: int) -> LinearMap:
    """Inclusion of R^n as the ``i``-th factor (1-based) of (R^n)^p."""
    if not 1 <= i <= p:
        raise ValueError(f"factor index {i} out of range 1..{p}")
    return LinearMap.from_rows(
        [[int(r == (i - 1) * n + c) for c in range(n)] for r in range(p * n)], n
    )


def swap_first_map(n: int, p: int) -> LinearMap:
    """``(X_1, ..., X_p) -> (-X_1, X_2 - X_1, ..., X_p - X_1)``.

    Unimodular; sends ``-Δ_p`` to ``ι_1``, ``ι_1`` to ``-Δ_p`` and fixes the
    other factor inclusions, so it exchanges the first two slots of a mixed
    volume of the form ``V(-Δ_p K[m_0], ι_1 K[m_1], ...)``.
    """
    rows = []
    for blk in range(p):
        for c in range(n):
            row = [0] * (p * n)
            row[c] = -1
            if blk > 0:
                row[blk * n + c] += 1
            rows.append(row)
    return LinearMap.from_rows(rows, p * n)


def swap_factors_map(n: int, p: int, i: int, j: int) -> LinearMap:
    """Exchange factors ``i`` and ``j`` (1-based) of (R^n)^p."""
    perm = list(range(p))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    rows = []
    for blk in range(p):
        for c in range(n):
            row = [0] * (p * n)
            row[perm[blk] * n + c] = 1
            rows.append(row)
    return LinearMap.from_rows(rows, p * n)


def cokernel_map(n: int, p: int) -> LinearMap:
    """``(x_0, ..., x_p) -> (x_1 - x_0, ..., x_p - x_0)`` from (R^n)^(p+1) to (R^n)^p.

    Its kernel is the diagonal, so it identifies the cokernel of the
    diagonal embedding with (R^n)^p.
    """
    rows = []
    for blk in range(1, p + 1):
        for c in range(n):
            row = [0] * ((p + 1) * n)
            row[c] = -1
            row[blk * n + c] = 1
            rows.append(row)
    return LinearMap.from_rows(rows, (p + 1) * n)


def coordinate_projection(n: int, sigma: CoordinateSubset) -> LinearMap:
    """Orthogonal projection R^n -> E_sigma, written in the coordinates of sigma."""
    return LinearMap.from_rows([[int(c == i) for c in range(n)] for i in sigma.indices], n)


def coordinate_inclusion(sigma: CoordinateSubset) -> LinearMap:
    """E_sigma (in its own coordinates) -> R^n."""
    k = len(sigma)
    return LinearMap.from_rows(
        [[int(r == i) for r in sigma.indices] for i in range(sigma.n)], k
    )


# ---------------------------------------------------------------------------
# bodies


def axis_simplex(c: Sequence) -> VPolytope:
    """``conv{0, c_1 e_1, ..., c_n e_n}``."""
    cs = [as_rational(x) for x in c]
    if not cs or any(x <= 0 for x in cs):
        raise ValueError(f"axis simplex needs positive lengths, got {c}")
    n = len(cs)
    pts = [(Fraction(0),) * n]
    for i, x in enumerate(cs):
        pts.append(tuple(x if j == i else Fraction(0) for j in range(n)))
    return hull(pts)


def cube(n: int, side=1) -> VPolytope:
    s = as_rational(side)
    return hull(itertools.product((Fraction(0), s), repeat=n))


def _zeroings(v: Sequence[Fraction]) -> Iterable[tuple[Fraction, ...]]:
    for mask in itertools.product((False, True), repeat=len(v)):
        yield tuple(Fraction(0) if z else x for x, z in zip(v, mask))


def staircase_antiblocking(generators: Sequence[Sequence]) -> VPolytope:
    """Smallest anti-blocking body containing the generators."""
    gens = [tuple(as_rational(x) for x in g) for g in generators]
    if not gens:
        raise ValueError("empty point set")
    for g in gens:
        if any(x < 0 for x in g):
            raise ValueError(f"generator {g} has a negative coordinate")
    return hull(pt for g in gens for pt in _zeroings(g))


@lru_cache(maxsize=4096)
def is_antiblocking(P: VPolytope) -> bool:
    if any(x < 0 for v in P.vertices for x in v):
        return False
    # closing under single-coordinate zeroings of the vertices closes P under all of them
    for v in P.vertices:
        for i, x in enumerate(v):
            if x != 0:
                w = v[:i] + (Fraction(0),) + v[i + 1:]
                if not in_convex_hull(w, P.vertices):
                    return False
    return True


def require_antiblocking(P: VPolytope) -> None:
    if not is_antiblocking(P):
        raise NotAntiBlockingError("body is not anti-blocking")


def diagonal_embed(P: VPolytope, p: int) -> VPolytope:
    return affine_image(diagonal_map(P.ambient_dim, p), P)


def factor_embed(P: VPolytope, i: int, p: int) -> VPolytope:
    return affine_image(factor_map(P.ambient_dim, i, p), P)


def reflect(P: VPolytope) -> VPolytope:
    return affine_image(reflection(P.ambient_dim), P)


def neg_diagonal(P: VPolytope, p: int) -> VPolytope:
    """``-Δ_p P``."""
    return affine_image(LinearMap.identity(P.ambient_dim * p, -1) @ diagonal_map(P.ambient_dim, p), P)


def difference_body(P: VPolytope) -> VPolytope:
    return minkowski_sum(P, reflect(P))


def higher_difference_body(P: VPolytope, p: int) -> VPolytope:
    """``D_p P = Δ_p P - P^p``: the translation tuples with a common point."""
    if p < 1:
        raise ValueError("p must be positive")
    return minkowski_sum(diagonal_embed(P, p), reflect(cartesian_power(P, p)))


def hat_symmetrization(P: VPolytope) -> VPolytope:
    """Union of all coordinate sign flips of an anti-blocking body."""
    require_antiblocking(P)
    pts = set()
    for v in P.vertices:
        for signs in itertools.product((1, -1), repeat=len(v)):
            pts.add(tuple(s * x for s, x in zip(signs, v)))
    return hull(pts)


def antiblocking_section(P: VPolytope, sigma: CoordinateSubset) -> VPolytope:
    """``P ∩ E_sigma`` as a body in R^|sigma|; equals the projection for anti-blocking P."""
    require_antiblocking(P)
    if sigma.n != P.ambient_dim:
        raise ValueError(f"subset of {{1..{sigma.n}}} used on a body in R^{P.ambient_dim}")
    return affine_image(coordinate_projection(P.ambient_dim, sigma), P)


def embedded_section(P: VPolytope, sigma: CoordinateSubset) -> VPolytope:
    """``P ∩ E_sigma`` kept in R^n (closure of the piece ``P_sigma``)."""
    require_antiblocking(P)
    keep = set(sigma.indices)
    return hull(tuple(x if i in keep else Fraction(0) for i, x in enumerate(v)) for v in P.vertices)


class SimplexTest(str, enum.Enum):
    SIMPLEX = "simplex"
    NOT_SIMPLEX = "not_simplex"
    DEGENERATE = "degenerate"


def is_axis_simplex(P: VPolytope) -> SimplexTest:
    require_antiblocking(P)
    n = P.ambient_dim
    if P.affine_dim < n:
        return SimplexTest.DEGENERATE
    axes = set()
    for v in P.vertices:
        support = [i for i, x in enumerate(v) if x != 0]
        if len(support) > 1:
            return SimplexTest.NOT_SIMPLEX
        axes.update(support)
    if len(axes) == n and len(P.vertices) == n + 1:
        return SimplexTest.SIMPLEX
    return SimplexTest.NOT_SIMPLEX


def is_simplex(P: VPolytope) -> bool:
    """Full-dimensional simplex, for arbitrary (not necessarily anti-blocking) bodies."""
    return P.is_full_dimensional and len(P.vertices) == P.ambient_dim + 1


# ---------------------------------------------------------------------------
# random bodies


def random_grid_point(rng: random.Random, n: int, q: int, support: Sequence[int] | None = None):
    """Point with coordinates on ``{1/q, ..., q/q}`` inside ``support``, zero elsewhere."""
    idx = range(n) if support is None else support
    return tuple(Fraction(rng.randint(1, q), q) if i in idx else Fraction(0) for i in range(n))


def random_antiblocking(
    rng: random.Random,
    n: int,
    q: int = 4,
    max_generators: int = 3,
    full_dim: bool = True,
    max_tries: int = 1000,
) -> VPolytope:
    """Staircase body of a few random grid generators.

    Each generator gets a random nonempty support, so axis simplices (all
    generators on axes) come up with positive probability alongside genuine
    staircases.
    """
    for _ in range(max_tries):
        count = rng.randint(1, max_generators)
        gens = []
        for _ in range(count):
            size = rng.randint(1, n)
            support = rng.sample(range(n), size)
            gens.append(random_grid_point(rng, n, q, support))
        K = staircase_antiblocking(gens)
        if not full_dim or K.is_full_dimensional:
            return K
    raise RuntimeError("could not draw a full-dimensional body")


def random_polytope(
    rng: random.Random,
    n: int,
    q: int = 4,
    points: int | None = None,
    full_dim: bool = True,
    max_tries: int = 1000,
) -> VPolytope:
    """Hull of random points on the grid ``{-1, -1 + 1/q, ..., 1}^n``."""
    m = points if points is not None else n + 1 + rng.randint(0, n + 1)
    for _ in range(max_tries):
        pts = [tuple(Fraction(rng.randint(-q, q), q) for _ in range(n)) for _ in range(m)]
        K = hull(pts)
        if not full_dim or K.is_full_dimensional:
            return K
    raise RuntimeError("could not draw a full-dimensional body")
