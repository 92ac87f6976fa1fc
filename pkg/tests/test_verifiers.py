import random
from fractions import Fraction

import pytest

from diffbody.constructions import axis_simplex, cube, random_antiblocking, random_polytope, staircase_antiblocking
from diffbody.covers import UniformCover, compositions, enumerate_covers
from diffbody.kernel import DimensionCapError, hull, point_body
from diffbody.report import reports_to_csv, reports_to_json, summarize
from diffbody.search import SearchConfig, search_counterexamples, trial_rng, draw_body
from diffbody.verifiers import (
    alesker_coefficient,
    check_conj1_expansion,
    check_conjecture1,
    check_conjecture2,
    check_conjecture2_reduction,
    check_cover_sum,
    check_decomposition,
    check_dual_bt,
    check_godbersen,
    check_per_cover,
    check_rogers_shephard,
    check_schneider,
    check_schneider_expansion,
    equality_battery,
    per_cover_closed_form,
)

F = Fraction


def lr(report):
    return report.lhs, report.rhs


# --- classical inequalities ------------------------------------------------------------


def test_rogers_shephard_examples(triangle, square):
    r = check_rogers_shephard(triangle)
    assert lr(r) == (3, 3) and r.equality and r.expected_equality
    r = check_rogers_shephard(square)
    assert lr(r) == (4, 6) and not r.equality and not r.expected_equality
    r = check_rogers_shephard(hull([(0, 0), (1, 1)]))
    assert lr(r) == (0, 0) and r.expected_equality


def test_godbersen_examples(triangle, square):
    assert lr(check_godbersen(triangle, 1)) == (1, 1)
    assert lr(check_godbersen(square, 1)) == (1, 2)
    K = staircase_antiblocking([(2, 0), (0, 1), (1, 1)])
    r = check_godbersen(K, 0)
    assert r.lhs == r.rhs == F(3, 2) and r.expected_equality
    with pytest.raises(ValueError):
        check_godbersen(K, 3)


def test_schneider_examples(triangle, square):
    assert lr(check_schneider(cube(1), 2)) == (3, 3)
    r = check_schneider(square, 2)
    assert r.lhs < 15 and r.rhs == 15 and not r.expected_equality
    r = check_schneider(triangle, 2)
    assert r.lhs == r.rhs == F(15, 4) and r.expected_equality


def test_schneider_dimension_cap():
    with pytest.raises(DimensionCapError):
        check_schneider(cube(3), 3)


def test_conjecture1_examples(triangle, staircase):
    r = check_conjecture1(staircase, 2, 0)
    assert r.lhs == r.rhs == F(9, 4)
    assert check_conjecture1(triangle, 2, 1).equality
    r = check_conjecture1(staircase, 2, 1)
    assert r.gap > 0 and r.proven and not r.expected_equality


def test_conjecture1_k_equals_n_is_logged(staircase):
    r = check_conjecture1(staircase, 2, 2)
    assert r.notes and "(0 < k)" in r.notes[0]
    r = check_conjecture1(staircase, 1, 2)
    assert r.equality and "every expansion term" in r.notes[-1]


def test_conjecture2_examples(triangle):
    r = check_conjecture2(cube(1), 2, (1, 0))
    assert lr(r) == (F(1, 2), F(1, 2))
    r = check_conjecture2(triangle, 2, (1, 1))
    assert lr(r) == (F(1, 12), F(1, 12)) and r.expected_equality
    K = random_antiblocking(random.Random(3), 2)
    r = check_conjecture2(K, 2, (0, 0))
    assert r.lhs == r.rhs and r.expected_equality


def test_conjecture2_rejects_bad_kvec(triangle):
    with pytest.raises(ValueError):
        check_conjecture2(triangle, 2, (2, 1))
    with pytest.raises(ValueError):
        check_conjecture2(triangle, 2, (1,))


def test_conjecture2_reduction_examples(triangle, staircase):
    r = check_conjecture2_reduction(cube(1), 2, (1, 0))
    assert r.lhs == r.rhs == F(1, 2)
    r = check_conjecture2_reduction(staircase, 2, (0, 0))
    assert r.lhs == r.rhs and not r.failed
    r = check_conjecture2_reduction(staircase, 2, (1, 1))
    assert r.lhs == r.rhs and len(r.witnesses) == 1 and not r.failed
    with pytest.raises(ValueError):
        check_conjecture2_reduction(axis_simplex([1, 1, 1]), 2, (1, 1))


# --- dual Brascamp-Lieb type bound --------------------------------------------------------------


def test_dual_bt_examples(triangle, square, staircase):
    one = UniformCover.of(2, 1, [[1], [2]])
    r = check_dual_bt(triangle, one)
    assert lr(r) == (2, 2) and r.expected_equality and not r.failed
    r = check_dual_bt(square, one)
    assert lr(r) == (2, 4) and not r.expected_equality
    r = check_dual_bt(staircase, UniformCover.of(2, 2, [[1, 2], [1], [2]]))
    assert r.gap > 0 and not r.expected_equality


def test_dual_bt_equality_matches_hull_condition():
    rng = random.Random("dual-bt")
    for _ in range(10):
        K = random_antiblocking(rng, 2)
        for blocks in ([[1], [2]], [[1, 2], [1], [2]], [[1, 2], [], [1, 2]], [[1, 2], [2], [1]]):
            p = 1 if len(blocks) == 2 else 2
            r = check_dual_bt(K, UniformCover.of(2, p, blocks))
            assert r.gap >= 0 and r.equality == r.expected_equality


def test_dual_bt_rejects_degenerate(triangle):
    with pytest.raises(ValueError):
        check_dual_bt(hull([(0, 0), (1, 0)]), UniformCover.of(2, 1, [[1], [2]]))


# --- decomposition and cover terms -----------------------------------------------------------------


def test_decomposition_examples(triangle):
    I = cube(1)
    r = check_decomposition(I, [I])
    assert lr(r) == (2, 2) and not r.failed
    r = check_decomposition(triangle, [triangle])
    assert lr(r) == (3, 3) and not r.failed
    r = check_decomposition(triangle, [point_body((0, 0))])
    assert r.lhs == r.rhs == F(1, 2)


def test_decomposition_on_random_pairs():
    rng = random.Random("decomposition")
    for n, p in ((2, 1), (2, 2), (3, 1)):
        K = random_antiblocking(rng, n)
        Ls = [random_antiblocking(rng, n) for _ in range(p)]
        assert not check_decomposition(K, Ls).failed


def test_per_cover_examples(triangle):
    c = UniformCover.of(2, 2, [[1, 2], [2], [1]])
    assert per_cover_closed_form(triangle, 2, (1, 1), c) == F(1, 24)
    assert not check_per_cover(triangle, 2, (1, 1), c).failed
    flat = staircase_antiblocking([(1, 0)])
    assert per_cover_closed_form(flat, 2, (1, 1), c) == 0
    with pytest.raises(ValueError):
        per_cover_closed_form(triangle, 2, (1, 0), c)


@pytest.mark.parametrize("seed", range(4))
def test_cover_sum_identity(seed):
    K = random_antiblocking(random.Random(seed), 2)
    for k in range(3):
        for kvec in compositions(k, 2, 2):
            r = check_cover_sum(K, 2, kvec)
            assert not r.failed
            assert r.params["covers"] == len(enumerate_covers(2, 2, (k, 2 - kvec[0], 2 - kvec[1])))


def test_cover_sum_in_three_dimensions():
    K = staircase_antiblocking([(1, 1, 0), (0, 1, 1)])
    for kvec in ((1, 0), (1, 1), (2, 1), (0, 3)):
        assert not check_cover_sum(K, 2, kvec, direct=False).failed


# --- expansions ---------------------------------------------------------------------------------------


def test_rank_one_expansion():
    rng = random.Random("expansion")
    for K in (random_antiblocking(rng, 2), random_polytope(rng, 2, q=2)):
        for k in range(3):
            assert not check_conj1_expansion(K, 2, k).failed


def test_schneider_expansion(triangle, staircase):
    for K in (triangle, staircase, random_polytope(random.Random(1), 2, q=2)):
        assert not check_schneider_expansion(K, 2).failed
    assert not check_schneider_expansion(random_polytope(random.Random(2), 1), 3).failed


# --- equality flags ----------------------------------------------------------------------------------------


@pytest.mark.parametrize("c", [(1, 1), (2, 3), (F(1, 2), 1), (1, 1, 1)])
def test_axis_simplices_are_equality_cases(c):
    K = axis_simplex(c)
    ps = (1, 2) if len(c) < 3 else (1,)
    for r in equality_battery(K, ps):
        assert r.equality and r.expected_equality, (r.name, r.params)


def simplex_required(r):
    """Whether the equality clause forces a simplex for these parameters."""
    n, k = r.params["n"], r.params["k"]
    if r.name == "godbersen":
        return 0 < k < n
    if r.name == "conj2":
        return k > 0 and all(ki < n for ki in r.params["kvec"])
    # rank one: strict as soon as one expansion term is strict
    return k > 0 and any(all(ki < n for ki in t) for t in compositions(k, r.params["p"], n))


def test_staircase_strict_where_simplex_required(staircase):
    reports = equality_battery(staircase, (1, 2))
    assert {r.name for r in reports} == {"godbersen", "conj1", "conj2"}
    for r in reports:
        assert r.gap >= 0
        assert r.equality == (not simplex_required(r)), (r.name, r.params)


def test_rank_one_clause_as_stated_differs_only_at_k_equal_n(staircase):
    for r in equality_battery(staircase, (1, 2)):
        if r.name == "conj1" and r.equality_mismatch:
            assert r.params["k"] == r.params["n"] and r.params["p"] == 1


def test_proven_flags(staircase):
    general = hull([(0, 0), (3, 1), (1, 2), (-1, 1)])
    assert check_godbersen(general, 1).proven
    assert not check_conjecture2(general, 2, (1, 1)).proven
    assert check_conjecture2(staircase, 2, (1, 1)).proven
    assert check_conjecture2(general, 2, (2, 0)).proven


# --- Alesker coefficient ---------------------------------------------------------------------------------


def test_alesker_examples(triangle, square, staircase):
    r = alesker_coefficient(staircase, 2, (0, 0, 2))
    assert r.lhs == r.rhs == F(9, 4)
    r = alesker_coefficient(triangle, 1, (1, 1))
    assert r.lhs == r.rhs == F(1, 2)
    r = alesker_coefficient(square, 1, (1, 1))
    assert lr(r) == (F(1, 2), 1)
    with pytest.raises(ValueError):
        alesker_coefficient(square, 1, (1, 0))


def test_alesker_cokernel_route_matches_direct():
    rng = random.Random("alesker")
    for _ in range(3):
        K = random_polytope(rng, 2, q=2)
        for parts in ((2, 0, 0), (1, 1, 0), (0, 1, 1)):
            r = alesker_coefficient(K, 2, parts)
            assert not r.failed and r.gap >= 0


# --- search ----------------------------------------------------------------------------------------------


def test_search_antiblocking_conj2_has_no_violations():
    config = SearchConfig(target="conj2", body_class="antiblocking", n=2, p=2, k_spec=(1, 1), trials=100, seed=7)
    reports = search_counterexamples(config)
    assert len(reports) == 100 and not any(r.violation for r in reports)
    gaps = [r.gap for r in reports]
    assert gaps == sorted(gaps)


def test_search_general_godbersen_has_no_violations():
    config = SearchConfig(target="godbersen", body_class="general", n=2, k_spec=(1,), trials=100, seed=7)
    assert summarize(search_counterexamples(config), config.trials)["violations"] == 0


def test_simplex_trials_have_zero_gap():
    rng = random.Random("simplices")
    for _ in range(10):
        K = axis_simplex([F(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(2)])
        for r in (check_godbersen(K, 1), check_conjecture1(K, 2, 1), check_conjecture2(K, 2, (1, 1))):
            assert r.gap == 0


def test_search_is_reproducible_per_trial():
    config = SearchConfig(target="schneider", n=2, p=1, trials=5, seed=11)
    assert draw_body(config, 3) == draw_body(config, 3)
    assert trial_rng(11, 3).random() == trial_rng(11, 3).random()
    a = reports_to_json(search_counterexamples(config))
    b = reports_to_json(search_counterexamples(config))
    assert a == b


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(target="nope")
    with pytest.raises(ValueError):
        SearchConfig(trials=0)
    with pytest.raises(DimensionCapError):
        SearchConfig(n=3, p=3)
    assert SearchConfig(n=3, p=3, force=True).p == 3


# --- report plumbing ---------------------------------------------------------------------------------------


def test_report_serialization(staircase):
    r = check_godbersen(staircase, 1)
    assert r.gap == r.rhs - r.lhs
    d = r.to_dict()
    assert d["lhs"] == "2" and d["rhs"] == "3" and d["gap"] == "1" and d["status"] == "strict"
    csv_text = reports_to_csv([r])
    assert csv_text.splitlines()[0].startswith("name,params,kind,lhs,rhs,gap")
    assert ",2,3,1,2,3,1," in csv_text


def test_violation_status_labels():
    from diffbody.report import make_report

    r = make_report("x", {}, 2, 1)
    assert r.violation and r.status.startswith("VIOLATION (candidate")
    r = make_report("x", {}, 2, 1, proven=True)
    assert r.status == "VIOLATION"
    r = make_report("x", {}, 1, 1, witnesses=[make_report("w", {}, 1, 2, kind="identity")])
    assert r.failed and r.status == "VIOLATION (witness)"
