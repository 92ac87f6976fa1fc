"""Built-in identity suite behind ``diffbody selftest``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .constructions import axis_simplex, cube, random_antiblocking, random_polytope, staircase_antiblocking
from .covers import compositions, enumerate_covers, vandermonde_check_1, vandermonde_check_2
from .mixed_volume import MixedVolumeQuery, mixed_volume, mixed_volume_interpolation
from .verifiers import (
    check_conjecture1,
    check_conjecture2,
    check_factor_product,
    check_godbersen,
    check_schneider,
    conj2_lhs,
    per_cover_closed_form,
)


@dataclass
class SelftestResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _vandermonde(fault: bool) -> tuple[bool, str]:
    ok = all(vandermonde_check_1(n, p) for n in range(1, 7) for p in range(1, 4))
    ok &= all(vandermonde_check_2(n, p, k) for n in range(1, 7) for p in range(1, 4) for k in range(n + 1))
    return ok, "n <= 6, p <= 3, k <= n"


def _factor_product(fault: bool) -> tuple[bool, str]:
    rng = random.Random("selftest:factor")
    count = 0
    for n, p in ((1, 2), (1, 3), (2, 2)):
        for _ in range(3):
            K = random_antiblocking(rng, n)
            if check_factor_product(K, p).violation:
                return False, f"(n, p) = ({n}, {p})"
            count += 1
    return True, f"{count} staircase bodies"


def _oracle(fault: bool) -> tuple[bool, str]:
    rng = random.Random("selftest:oracle")
    for i in range(6):
        n = rng.choice((2, 3))
        bodies = [random_polytope(rng, n, q=2, points=rng.randint(2, n + 2), full_dim=False) for _ in range(2)]
        m0 = rng.randint(0, n)
        q = MixedVolumeQuery(n, ((bodies[0], m0), (bodies[1], n - m0)))
        if mixed_volume(q) != mixed_volume_interpolation(q):
            return False, f"query {i}"
    return True, "6 random queries"


def _cover_sum(fault: bool) -> tuple[bool, str]:
    rng = random.Random("selftest:covers")
    bump = Fraction(998, 997) if fault else 1
    for i in range(4):
        K = random_antiblocking(rng, 2)
        for k in range(3):
            for kv in compositions(k, 2, 2):
                covers = enumerate_covers(2, 2, (k,) + tuple(2 - x for x in kv))
                total = sum(per_cover_closed_form(K, 2, kv, c) * bump for c in covers)
                if total != conj2_lhs(K, 2, kv):
                    return False, f"body {i}, kvec {kv}"
    return True, "4 bodies, all kvec, (n, p) = (2, 2)"


def _simplex_battery(quick: bool) -> Callable[[bool], tuple[bool, str]]:
    def run(fault: bool) -> tuple[bool, str]:
        cases = [(axis_simplex([1, 1]), (1, 2)), (axis_simplex([2, 3]), (1, 2)), (axis_simplex([1, 1, 1]), (1,) if quick else (1, 2))]
        count = 0
        for K, ps in cases:
            n = K.ambient_dim
            reports = [check_godbersen(K, k) for k in range(n + 1)]
            for p in ps:
                reports += [check_conjecture1(K, p, k) for k in range(n + 1)]
                reports += [check_conjecture2(K, p, kv) for k in range(n + 1) for kv in compositions(k, p, n)]
            for r in reports:
                if not r.equality:
                    return False, f"{r.name} {r.params}"
            count += len(reports)
        return True, f"{count} checks, all equalities"
    return run


def _strict_staircase(fault: bool) -> tuple[bool, str]:
    K = staircase_antiblocking([(2, 0), (0, 1), (1, 1)])
    reports = [check_godbersen(K, 1), check_conjecture1(K, 2, 1), check_conjecture2(K, 2, (1, 1))]
    bad = [r for r in reports if r.gap <= 0]
    return not bad, "strict on the staircase {(2,0),(0,1),(1,1)}"


def _schneider(quick: bool) -> Callable[[bool], tuple[bool, str]]:
    def run(fault: bool) -> tuple[bool, str]:
        bodies = [(cube(1), 2), (axis_simplex([1, 1]), 2)]
        if not quick:
            bodies.append((axis_simplex([1, 1]), 3))
        for K, p in bodies:
            if not check_schneider(K, p).equality:
                return False, f"n={K.ambient_dim}, p={p}"
        return True, f"{len(bodies)} simplex cases" + ("" if quick else " incl. pn = 6")
    return run


def run_selftest(quick: bool = False, fault: bool = False) -> list[SelftestResult]:
    suite: list[tuple[str, Callable[[bool], tuple[bool, str]]]] = [
        ("vandermonde identities", _vandermonde),
        ("factor product identity", _factor_product),
        ("mixed volume oracle equivalence", _oracle),
        ("cover sum identity", _cover_sum),
        ("simplex equality battery", _simplex_battery(quick)),
        ("staircase strictness", _strict_staircase),
        ("schneider simplex equality", _schneider(quick)),
    ]
    results = []
    for name, fn in suite:
        t = time.perf_counter()
        try:
            ok, detail = fn(fault)
        except Exception as exc:  # a crash is a failure, reported in the table
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(SelftestResult(name, ok, detail, time.perf_counter() - t))
    return results


def format_table(results: list[SelftestResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.name:<{width}}  {r.seconds:7.2f}s  {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} passed")
    return "\n".join(lines)
