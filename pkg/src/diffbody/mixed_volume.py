"""Mixed volumes of polytopes.

The main route is the polarization (inclusion-exclusion) formula, summed
over multi-subsets so that a body of multiplicity ``m`` costs ``m + 1``
scalings instead of ``2^m`` subsets. An independent route interpolates the
volume polynomial ``vol(l_1 K_1 + ... + l_m K_m)`` and reads off a
coefficient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from .constructions import CoordinateSubset, coordinate_inclusion, coordinate_projection
from .covers import multinomial
from .kernel import VPolytope, affine_image, hull, volume
from .kernel.linalg import rank_int, solve
from .report import VerificationReport, make_report


@dataclass(frozen=True)
class MixedVolumeQuery:
    """``V(K_1[m_1], ..., K_r[m_r])`` in R^N with ``sum m_i = N``.

    Equal bodies are merged on construction.
    """

    ambient_dim: int
    entries: tuple[tuple[VPolytope, int], ...]

    def __post_init__(self):
        merged: dict[VPolytope, int] = {}
        for body, mult in self.entries:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if body.ambient_dim != self.ambient_dim:
                raise ValueError(
                    f"body in R^{body.ambient_dim} in a mixed volume over R^{self.ambient_dim}"
                )
            if mult:
                merged[body] = merged.get(body, 0) + mult
        total = sum(merged.values())
        if total != self.ambient_dim:
            raise ValueError(f"multiplicities sum to {total}, expected {self.ambient_dim}")
        object.__setattr__(self, "entries", tuple(merged.items()))

    @classmethod
    def of(cls, *entries: tuple[VPolytope, int]) -> MixedVolumeQuery:
        if not entries:
            return cls(0, ())
        return cls(entries[0][0].ambient_dim, tuple(entries))

    @classmethod
    def from_bodies(cls, bodies: Sequence[VPolytope]) -> MixedVolumeQuery:
        return cls.of(*[(b, 1) for b in bodies])

    @property
    def bodies(self) -> tuple[VPolytope, ...]:
        return tuple(b for b, _ in self.entries)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.entries)


@lru_cache(maxsize=1 << 15)
def combination_volume(bodies: tuple[VPolytope, ...], coeffs: tuple[Fraction, ...]) -> Fraction:
    """``vol(c_1 K_1 + ... + c_r K_r)`` for nonnegative ``c``."""
    terms = [(b, c) for b, c in zip(bodies, coeffs) if c]
    if not terms:
        return Fraction(int(bodies[0].ambient_dim == 0)) if bodies else Fraction(1)
    acc = None
    for body, c in terms:
        pts = [tuple(c * x for x in v) for v in body.vertices]
        if acc is None:
            acc = hull(pts)
        else:
            acc = hull(tuple(a + b for a, b in zip(u, w)) for u in acc.vertices for w in pts)
    return volume(acc)


def mixed_volume(q: MixedVolumeQuery) -> Fraction:
    """Exact mixed volume by polarization over multi-subsets."""
    N = q.ambient_dim
    if N == 0:
        return Fraction(1)
    bodies, mults = q.bodies, q.multiplicities
    total = Fraction(0)
    for js in itertools.product(*(range(m + 1) for m in mults)):
        size = sum(js)
        if size == 0:
            continue
        weight = prod(comb(m, j) for m, j in zip(mults, js))
        vol = combination_volume(bodies, tuple(Fraction(j) for j in js))
        if vol:
            total += (-1) ** (N - size) * weight * vol
    return total / factorial(N)


def mixed_volume_of(*entries: tuple[VPolytope, int]) -> Fraction:
    return mixed_volume(MixedVolumeQuery.of(*entries))


def _exponents(N: int, m: int) -> list[tuple[int, ...]]:
    return [e for e in itertools.product(range(N + 1), repeat=m) if sum(e) == N]


def mixed_volume_interpolation(q: MixedVolumeQuery, max_shifts: int = 8) -> Fraction:
    """Mixed volume read off the interpolated volume polynomial.

    The volume of ``l_1 K_1 + ... + l_m K_m`` is a homogeneous polynomial of
    degree N; it is sampled on positive integer tuples until the monomial
    matrix is square and invertible, and the coefficient of
    ``prod l_i^{m_i}`` divided by ``N! / prod m_i!`` is the answer.
    """
    N = q.ambient_dim
    if N == 0:
        return Fraction(1)
    bodies, mults = q.bodies, q.multiplicities
    m = len(bodies)
    exps = _exponents(N, m)
    target = exps.index(tuple(mults))
    for shift in range(max_shifts):
        rows: list[list[int]] = []
        samples: list[tuple[int, ...]] = []
        for lam in itertools.product(range(1 + shift, N + 2 + shift), repeat=m):
            row = [prod(l**e for l, e in zip(lam, ex)) for ex in exps]
            if _extends_rank(rows, row):
                rows.append(row)
                samples.append(lam)
                if len(rows) == len(exps):
                    break
        if len(rows) < len(exps):
            continue
        values = [combination_volume(bodies, tuple(Fraction(x) for x in lam)) for lam in samples]
        try:
            coeffs = solve(rows, values)
        except ZeroDivisionError:
            continue
        return coeffs[target] / multinomial(N, mults)
    raise ArithmeticError("interpolation system stayed singular")


def _extends_rank(rows: list[list[int]], row: list[int]) -> bool:
    return rank_int(rows + [row]) > len(rows)


def lemma_exact_sequence_check(
    sigma: CoordinateSubset,
    bodies_W2: Sequence[VPolytope],
    bodies_W1: Sequence[VPolytope],
) -> VerificationReport:
    """Split a mixed volume along ``0 -> E_sigma -> R^n -> E_{sigma^c} -> 0``.

    ``bodies_W2`` are ``n - k`` bodies in R^n, ``bodies_W1`` are ``k`` bodies
    given in the coordinates of ``E_sigma``; the quotient map is the
    orthogonal projection to ``E_{sigma^c}``.
    """
    n, k = sigma.n, len(sigma)
    if len(bodies_W2) != n - k or len(bodies_W1) != k:
        raise ValueError(f"need {n - k} bodies in R^{n} and {k} bodies in E_sigma")
    f = coordinate_inclusion(sigma)
    g = coordinate_projection(n, sigma.complement)
    lifted = [affine_image(f, L) for L in bodies_W1]
    lhs = comb(n, k) * mixed_volume(MixedVolumeQuery.from_bodies(list(bodies_W2) + lifted))
    quotient = mixed_volume(MixedVolumeQuery.from_bodies([affine_image(g, K) for K in bodies_W2]))
    sub = mixed_volume(MixedVolumeQuery.from_bodies(list(bodies_W1)))
    return make_report(
        "lemma-exact",
        {"n": n, "k": k, "sigma": list(sigma.members)},
        lhs,
        quotient * sub,
        kind="identity",
        expected_equality=True,
        proven=True,
        bodies=list(bodies_W2) + list(bodies_W1),
    )
