"""One checkable unit per inequality or identity.

Every function returns a :class:`~diffbody.report.VerificationReport` with
the convention ``lhs <= rhs`` for inequalities (so a negative gap is a
violation) and ``lhs == rhs`` for identities.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial, prod
from typing import Sequence

from .constructions import (
    CoordinateSubset,
    antiblocking_section,
    cokernel_map,
    embedded_section,
    factor_embed,
    factor_map,
    hat_symmetrization,
    higher_difference_body,
    is_antiblocking,
    is_simplex,
    neg_diagonal,
    reflect,
    require_antiblocking,
)
from .covers import UniformCover, all_covers, compositions, enumerate_covers, induced_one_cover, multinomial
from .kernel import VPolytope, affine_image, cartesian_power, check_dim, hull, minkowski_sum, volume
from .mixed_volume import mixed_volume_of
from .report import VerificationReport, make_report


def _degenerate(K: VPolytope) -> bool:
    return not K.is_full_dimensional


def _check_kvec(n: int, p: int, kvec: Sequence[int]) -> tuple[int, ...]:
    kvec = tuple(int(k) for k in kvec)
    if len(kvec) != p:
        raise ValueError(f"expected {p} values k_1..k_p, got {len(kvec)}")
    if any(k < 0 or k > n for k in kvec):
        raise ValueError(f"each k_i must lie in 0..{n}")
    if sum(kvec) > n:
        raise ValueError(f"k_1 + ... + k_p = {sum(kvec)} exceeds n = {n}")
    return kvec


def conj2_lhs(K: VPolytope, p: int, kvec: Sequence[int]) -> Fraction:
    """``V(-Δ_p K[k], ι_1 K[n - k_1], ..., ι_p K[n - k_p])`` with ``k = sum k_i``."""
    if p == 0:
        return Fraction(1)
    n = K.ambient_dim
    check_dim(p * n)
    k = sum(kvec)
    entries = [(neg_diagonal(K, p), k)]
    entries += [(factor_embed(K, i + 1, p), n - ki) for i, ki in enumerate(kvec)]
    return mixed_volume_of(*entries)


def conj2_rhs(K: VPolytope, p: int, kvec: Sequence[int]) -> Fraction:
    n = K.ambient_dim
    k = sum(kvec)
    return comb(n, k) * multinomial(k, kvec) * Fraction(factorial(n) ** p, factorial(p * n)) * volume(K) ** p


def check_rogers_shephard(K: VPolytope) -> VerificationReport:
    n = K.ambient_dim
    D = minkowski_sum(K, reflect(K))
    return make_report(
        "rogers-shephard",
        {"n": n},
        volume(D),
        comb(2 * n, n) * volume(K),
        expected_equality=_degenerate(K) or is_simplex(K),
        proven=True,
        bodies=[K],
    )


def check_godbersen(K: VPolytope, k: int) -> VerificationReport:
    n = K.ambient_dim
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    lhs = mixed_volume_of((reflect(K), k), (K, n - k))
    return make_report(
        "godbersen",
        {"n": n, "k": k},
        lhs,
        comb(n, k) * volume(K),
        expected_equality=_degenerate(K) or k in (0, n) or is_simplex(K),
        proven=k in (0, 1, n - 1, n) or _degenerate(K) or is_antiblocking(K),
        bodies=[K],
    )


def check_schneider(K: VPolytope, p: int) -> VerificationReport:
    n = K.ambient_dim
    check_dim(p * n)
    return make_report(
        "schneider",
        {"n": n, "p": p},
        volume(higher_difference_body(K, p)),
        comb(p * n + n, n) * volume(K) ** p,
        expected_equality=_degenerate(K) or is_simplex(K),
        proven=True,
        bodies=[K],
    )


def check_conjecture1(K: VPolytope, p: int, k: int) -> VerificationReport:
    n = K.ambient_dim
    check_dim(p * n)
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    lhs = mixed_volume_of((neg_diagonal(K, p), k), (cartesian_power(K, p), p * n - k))
    notes = []
    if k == n and k > 0:
        terms = list(compositions(k, p, n))
        forced = [t for t in terms if n in t]
        notes.append(
            "equality clause encoded as stated (0 < k); expansion terms "
            f"{[list(t) for t in terms]}, of which {[list(t) for t in forced]} are equalities for every body"
        )
        if len(forced) == len(terms):
            notes.append("every expansion term is an equality here, so equality holds for every body")
    return make_report(
        "conj1",
        {"n": n, "p": p, "k": k},
        lhs,
        comb(n, k) * volume(K) ** p,
        expected_equality=_degenerate(K) or k == 0 or is_simplex(K),
        proven=k == 0 or _degenerate(K) or is_antiblocking(K) or (p == 1 and k in (1, n - 1, n)),
        bodies=[K],
        notes=notes,
    )


def _conj2_expected(K: VPolytope, kvec: Sequence[int]) -> bool:
    n = K.ambient_dim
    return _degenerate(K) or sum(kvec) == 0 or n in kvec or is_simplex(K)


def _conj2_proven(K: VPolytope, p: int, kvec: Sequence[int]) -> bool:
    n = K.ambient_dim
    k = sum(kvec)
    return (
        _degenerate(K)
        or k == 0
        or n in kvec
        or is_antiblocking(K)
        or (p == 1 and k in (1, n - 1))
    )


def check_conjecture2(K: VPolytope, p: int, kvec: Sequence[int]) -> VerificationReport:
    n = K.ambient_dim
    kvec = _check_kvec(n, p, kvec)
    check_dim(p * n)
    return make_report(
        "conj2",
        {"n": n, "p": p, "k": sum(kvec), "kvec": list(kvec)},
        conj2_lhs(K, p, kvec),
        conj2_rhs(K, p, kvec),
        expected_equality=_conj2_expected(K, kvec),
        proven=_conj2_proven(K, p, kvec),
        bodies=[K],
    )


def check_conjecture2_reduction(K: VPolytope, p: int, kvec: Sequence[int]) -> VerificationReport:
    """A zero slot ``ι_i K[n]`` splits off as ``vol(K) / C(pn, n)`` times a rank ``p - 1`` term.

    When ``k = n`` the first two slots are exchanged first (the exchange is
    recorded as a witness), which produces a zero slot.
    """
    n = K.ambient_dim
    kvec = _check_kvec(n, p, kvec)
    check_dim(p * n)
    k = sum(kvec)
    lhs = conj2_lhs(K, p, kvec)
    witnesses = []
    notes = []
    work = kvec
    if 0 not in kvec:
        if k != n:
            raise ValueError("reduction needs some k_i = 0 or k = n")
        work = (0,) + kvec[1:]
        witnesses.append(make_report(
            "slot-exchange",
            {"from": list(kvec), "to": list(work)},
            lhs,
            conj2_lhs(K, p, work),
            kind="identity",
            expected_equality=True,
            proven=True,
        ))
        notes.append(f"exchanged slots 0 and 1: {list(kvec)} -> {list(work)}")
    i = work.index(0)
    reduced = work[:i] + work[i + 1:]
    notes.append(f"split off factor {i + 1}; reduced instance p={p - 1}, kvec={list(reduced)}")
    rhs = conj2_lhs(K, p - 1, reduced) * volume(K) / comb(p * n, n)
    return make_report(
        "conj2-reduction",
        {"n": n, "p": p, "k": k, "kvec": list(kvec)},
        lhs,
        rhs,
        kind="identity",
        expected_equality=True,
        proven=True,
        bodies=[K],
        witnesses=witnesses,
        notes=notes,
    )


def _section_volume(K: VPolytope, sigma: CoordinateSubset) -> Fraction:
    return volume(antiblocking_section(K, sigma))


def _hat_section(K: VPolytope, sigma: CoordinateSubset) -> VPolytope:
    """``K̂ ∩ E_sigma`` in R^n."""
    return hat_symmetrization(embedded_section(K, sigma))


def check_dual_bt(K: VPolytope, cover: UniformCover) -> VerificationReport:
    """Section-product bound for ``K̂`` (as ``lhs``) against ``vol(K̂)^p`` (as ``rhs``)."""
    require_antiblocking(K)
    if _degenerate(K):
        raise ValueError("the symmetrized body must contain 0 in its interior")
    n, p = K.ambient_dim, cover.p
    if cover.n != n:
        raise ValueError("cover of the wrong ground set")
    Khat = hat_symmetrization(K)
    factor = Fraction(prod(factorial(len(s)) for s in cover.blocks), factorial(n) ** p)
    sections = prod(2 ** len(s) * _section_volume(K, s) for s in cover.blocks)
    one_cover = induced_one_cover(cover)
    pieces = [v for s in one_cover.blocks for v in _hat_section(K, s).vertices]
    hull_condition = hull(pieces) == Khat
    return make_report(
        "dual-bt",
        {"n": n, "p": p, "cover": [list(s.members) for s in cover.blocks]},
        factor * sections,
        volume(Khat) ** p,
        expected_equality=hull_condition,
        proven=True,
        bodies=[K],
        witnesses=[make_report(
            "hat-volume", {"n": n}, volume(Khat), 2**n * volume(K), kind="identity",
            expected_equality=True, proven=True,
        )],
        notes=[f"induced 1-uniform cover {[list(s.members) for s in one_cover.blocks]}; hull condition {hull_condition}"],
    )


def _cover_piece(K: VPolytope, Ls: Sequence[VPolytope], cover: UniformCover) -> VPolytope:
    p = len(Ls)
    acc = neg_diagonal(embedded_section(K, cover.blocks[0]), p)
    for i, L in enumerate(Ls, start=1):
        acc = minkowski_sum(acc, factor_embed(embedded_section(L, cover.blocks[i]), i, p))
    return acc


def check_decomposition(K: VPolytope, L_list: Sequence[VPolytope]) -> VerificationReport:
    """``vol(-Δ_p K + Σ ι_i L_i)`` against the sum of its cover pieces."""
    p = len(L_list)
    n = K.ambient_dim
    check_dim(p * n)
    for B in (K, *L_list):
        require_antiblocking(B)
        if B.ambient_dim != n:
            raise ValueError("all bodies must live in the same R^n")
    whole = neg_diagonal(K, p)
    for i, L in enumerate(L_list, start=1):
        whole = minkowski_sum(whole, factor_embed(L, i, p))
    witnesses = []
    total = Fraction(0)
    for cover in all_covers(n, p):
        piece = volume(_cover_piece(K, L_list, cover))
        closed = _section_volume(K, cover.blocks[0]) * prod(
            _section_volume(L, s) for L, s in zip(L_list, cover.blocks[1:])
        )
        total += piece
        witnesses.append(make_report(
            "cover-piece",
            {"cover": [list(s.members) for s in cover.blocks]},
            piece,
            closed,
            kind="identity",
            expected_equality=True,
            proven=True,
        ))
    return make_report(
        "decomposition",
        {"n": n, "p": p},
        volume(whole),
        total,
        kind="identity",
        expected_equality=True,
        proven=True,
        bodies=[K, *L_list],
        witnesses=witnesses,
    )


def _check_cover_sizes(n: int, p: int, kvec: Sequence[int], cover: UniformCover) -> None:
    want = (sum(kvec),) + tuple(n - k for k in kvec)
    if cover.p != p or cover.n != n or cover.sizes != want:
        raise ValueError(f"cover sizes {cover.sizes} do not match {want}")


def per_cover_closed_form(K: VPolytope, p: int, kvec: Sequence[int], cover: UniformCover) -> Fraction:
    """``multinomial(pn; k, n-k_1, ...)^{-1} vol_k(K_σ0) prod vol(K_σi)``."""
    n = K.ambient_dim
    _check_cover_sizes(n, p, kvec, cover)
    require_antiblocking(K)
    k = sum(kvec)
    weight = multinomial(p * n, (k,) + tuple(n - ki for ki in kvec))
    vols = prod(_section_volume(K, s) for s in cover.blocks)
    return Fraction(vols) / weight


def check_per_cover(K: VPolytope, p: int, kvec: Sequence[int], cover: UniformCover) -> VerificationReport:
    """Closed form of one cover term against its direct mixed volume."""
    n = K.ambient_dim
    closed = per_cover_closed_form(K, p, kvec, cover)
    k = sum(kvec)
    entries = [(neg_diagonal(embedded_section(K, cover.blocks[0]), p), k)]
    entries += [
        (factor_embed(embedded_section(K, s), i, p), n - ki)
        for i, (s, ki) in enumerate(zip(cover.blocks[1:], kvec), start=1)
    ]
    return make_report(
        "per-cover",
        {"kvec": list(kvec), "cover": [list(s.members) for s in cover.blocks]},
        mixed_volume_of(*entries),
        closed,
        kind="identity",
        expected_equality=True,
        proven=True,
    )


def check_cover_sum(K: VPolytope, p: int, kvec: Sequence[int], direct: bool = True) -> VerificationReport:
    """Direct left-hand side of the rank-``p`` inequality against the sum of cover terms."""
    n = K.ambient_dim
    kvec = _check_kvec(n, p, kvec)
    require_antiblocking(K)
    k = sum(kvec)
    covers = enumerate_covers(n, p, (k,) + tuple(n - ki for ki in kvec))
    witnesses = [check_per_cover(K, p, kvec, c) for c in covers] if direct else []
    total = sum((per_cover_closed_form(K, p, kvec, c) for c in covers), Fraction(0))
    return make_report(
        "cover-sum",
        {"n": n, "p": p, "kvec": list(kvec), "covers": len(covers)},
        conj2_lhs(K, p, kvec),
        total,
        kind="identity",
        expected_equality=True,
        proven=True,
        bodies=[K],
        witnesses=witnesses,
    )


def check_conj1_expansion(K: VPolytope, p: int, k: int) -> VerificationReport:
    """Rank-one left-hand side against its multinomial expansion into rank-``p`` terms."""
    n = K.ambient_dim
    direct = mixed_volume_of((neg_diagonal(K, p), k), (cartesian_power(K, p), p * n - k))
    total = Fraction(0)
    for kvec in compositions(k, p, n):
        total += multinomial(p * n - k, tuple(n - ki for ki in kvec)) * conj2_lhs(K, p, kvec)
    return make_report(
        "conj1-expansion", {"n": n, "p": p, "k": k}, direct, total,
        kind="identity", expected_equality=True, proven=True, bodies=[K],
    )


def check_schneider_expansion(K: VPolytope, p: int) -> VerificationReport:
    """``vol(D_p K)`` against ``sum_k C(pn, k) V(-Δ_p K[k], K^p[pn - k])``."""
    n = K.ambient_dim
    direct = volume(higher_difference_body(K, p))
    Kp = cartesian_power(K, p)
    A = neg_diagonal(K, p)
    total = sum(
        (comb(p * n, k) * mixed_volume_of((A, k), (Kp, p * n - k)) for k in range(n + 1)),
        Fraction(0),
    )
    return make_report(
        "schneider-expansion", {"n": n, "p": p}, direct, total,
        kind="identity", expected_equality=True, proven=True, bodies=[K],
    )


def alesker_coefficient(K: VPolytope, p: int, parts: Sequence[int]) -> VerificationReport:
    """Scalar ``c`` with ``phi_0 ... phi_p = c vol_n``, compared against ``vol(K)^p``.

    The mixed volume lives on the cokernel of the diagonal embedding of R^n
    into (R^n)^(p+1); it is pushed to (R^n)^p along
    ``g(x_0, ..., x_p) = (x_1 - x_0, ..., x_p - x_0)``, which preserves the
    induced Lebesgue measure.
    """
    n = K.ambient_dim
    parts = tuple(int(x) for x in parts)
    if len(parts) != p + 1 or any(x < 0 for x in parts) or sum(parts) != n:
        raise ValueError(f"need p + 1 = {p + 1} nonnegative parts summing to n = {n}")
    check_dim(p * n)
    g = cokernel_map(n, p)
    images = [affine_image(g @ factor_map(n, i + 1, p + 1), K) for i in range(p + 1)]
    V = mixed_volume_of(*[(img, n - ki) for img, ki in zip(images, parts)])
    c = Fraction(prod(factorial(x) for x in parts) * factorial(p * n), factorial(n) ** (p + 1)) * V
    kvec = parts[1:]
    witnesses = [make_report(
        "cokernel-route",
        {"parts": list(parts)},
        V,
        conj2_lhs(K, p, kvec),
        kind="identity",
        expected_equality=True,
        proven=True,
    )]
    notes = ["evaluated on a polytope; the valuation statement is for smooth bodies and extends by continuity"]
    return make_report(
        "alesker",
        {"n": n, "p": p, "parts": list(parts)},
        c,
        volume(K) ** p,
        expected_equality=_conj2_expected(K, kvec),
        proven=_conj2_proven(K, p, kvec),
        bodies=[K],
        witnesses=witnesses,
        notes=notes,
    )


def check_factor_product(K: VPolytope, p: int) -> VerificationReport:
    """``V(ι_1 K[n], ..., ι_p K[n]) == (n!)^p / (pn)! vol(K)^p``."""
    n = K.ambient_dim
    zeros = (0,) * p
    return make_report(
        "factor-product",
        {"n": n, "p": p},
        conj2_lhs(K, p, zeros),
        Fraction(factorial(n) ** p, factorial(p * n)) * volume(K) ** p,
        kind="identity",
        expected_equality=True,
        proven=True,
        bodies=[K],
    )


def check_slot_symmetry(K: VPolytope, p: int, mults: Sequence[int]) -> VerificationReport:
    """``V(-Δ_p K[m_0], ι_1 K[m_1], ..., ι_p K[m_p])`` is symmetric in the ``m_i``.

    ``rhs`` is the value at the first permutation that differs (if any), and
    every distinct permutation is a witness against the original order.
    """
    n = K.ambient_dim
    mults = tuple(int(m) for m in mults)
    if len(mults) != p + 1 or sum(mults) != p * n or any(m < 0 for m in mults):
        raise ValueError(f"need p + 1 = {p + 1} multiplicities summing to pn = {p * n}")
    check_dim(p * n)
    bodies = [neg_diagonal(K, p)] + [factor_embed(K, i, p) for i in range(1, p + 1)]

    def value(ms):
        return mixed_volume_of(*zip(bodies, ms))

    base = value(mults)
    witnesses = []
    for perm in sorted(set(itertools.permutations(mults))):
        if perm != mults:
            witnesses.append(make_report(
                "slot-permutation", {"mults": list(perm)}, base, value(perm),
                kind="identity", expected_equality=True, proven=True,
            ))
    rhs = witnesses[0].rhs if witnesses else base
    return make_report(
        "slot-symmetry",
        {"n": n, "p": p, "mults": list(mults)},
        base,
        rhs,
        kind="identity",
        expected_equality=True,
        proven=True,
        bodies=[K],
        witnesses=witnesses,
    )


def equality_battery(K: VPolytope, p_values: Sequence[int] = (1, 2)) -> list[VerificationReport]:
    """Every Godbersen / rank-one / rank-p check in range for one body."""
    n = K.ambient_dim
    out = [check_godbersen(K, k) for k in range(n + 1)]
    for p in p_values:
        if p * n > 8:
            continue
        out += [check_conjecture1(K, p, k) for k in range(n + 1)]
        for k in range(n + 1):
            out += [check_conjecture2(K, p, kv) for kv in compositions(k, p, n)]
    return out


__all__ = [
    "alesker_coefficient",
    "check_conj1_expansion",
    "check_conjecture1",
    "check_conjecture2",
    "check_conjecture2_reduction",
    "check_cover_sum",
    "check_decomposition",
    "check_dual_bt",
    "check_factor_product",
    "check_godbersen",
    "check_per_cover",
    "check_rogers_shephard",
    "check_schneider",
    "check_schneider_expansion",
    "check_slot_symmetry",
    "conj2_lhs",
    "conj2_rhs",
    "equality_battery",
    "per_cover_closed_form",
]
