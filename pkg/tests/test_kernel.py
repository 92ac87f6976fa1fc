import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import delaunay_volume, grid_points, shoelace
from diffbody.constructions import diagonal_embed, factor_embed, neg_diagonal, swap_first_map
from diffbody.kernel import (
    BodyFormatError,
    DimensionCapError,
    LinearMap,
    affine_image,
    body_to_obj,
    cartesian_product,
    dumps_body,
    hull,
    loads_body,
    minkowski_sum,
    point_body,
    translate,
    uncapped,
    volume,
)
from diffbody.kernel.linalg import det, det_int, rank, solve
from diffbody.kernel.lp import feasible_point, in_convex_hull, translates_intersect

half = Fraction(1, 2)


def vset(P):
    return set(P.vertices)


def pts(*coords):
    return {tuple(Fraction(x) for x in c) for c in coords}


# --- hull -------------------------------------------------------------------


def test_hull_drops_interior_point():
    P = hull([(0, 0), (1, 0), (0, 1), (1, 1), (half, half)])
    assert vset(P) == pts((0, 0), (1, 0), (0, 1), (1, 1))


def test_hull_degenerate_segment():
    P = hull([(0, 0), (2, 0)])
    assert P.affine_dim == 1
    assert vset(P) == pts((0, 0), (2, 0))


def test_hull_of_cube_lattice():
    g = (0, half, 1)
    P = hull(itertools.product(g, g, g))
    assert vset(P) == {tuple(Fraction(x) for x in c) for c in itertools.product((0, 1), repeat=3)}


def test_hull_empty_input():
    with pytest.raises(ValueError, match="empty point set"):
        hull([])


def test_hull_collinear_and_coplanar_in_3d():
    line = hull([(0, 0, 0), (1, 1, 1), (2, 2, 2), (half, half, half)])
    assert line.affine_dim == 1 and vset(line) == pts((0, 0, 0), (2, 2, 2))
    plane = hull([(0, 0, 1), (2, 0, 1), (0, 2, 1), (2, 2, 1), (1, 1, 1), (1, 0, 1)])
    assert plane.affine_dim == 2 and len(plane.vertices) == 4
    assert volume(plane) == 0


def test_hull_cocircular_points():
    octagon = [(2, 1), (1, 2), (-1, 2), (-2, 1), (-2, -1), (-1, -2), (1, -2), (2, -1)]
    P = hull(octagon + [(0, 0), (1, 1)])
    assert len(P.vertices) == 8
    assert volume(P) == shoelace(octagon)


def test_single_point_and_zero_dimensional_body():
    P = point_body((1, 2))
    assert P.affine_dim == 0 and volume(P) == 0
    assert volume(hull([()])) == 1


@given(grid_points(3, min_size=1, max_size=10))
def test_hull_is_idempotent(points):
    P = hull(points)
    Q = hull(P.vertices)
    assert P == Q and P.affine_dim == Q.affine_dim and volume(P) == volume(Q)


@given(grid_points(2, min_size=1, max_size=15))
def test_every_input_point_is_inside(points):
    P = hull(points)
    for p in points[:5]:
        assert P.contains(p)


# --- volume -------------------------------------------------------------------


def test_volume_examples():
    assert volume(hull(itertools.product((0, 1), repeat=3))) == 1
    assert volume(hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])) == Fraction(1, 6)
    assert volume(hull([(0, 0), (2, 0)])) == 0


@given(grid_points(2, min_size=3, max_size=15))
def test_area_matches_shoelace(points):
    P = hull(points)
    assume(P.affine_dim == 2)
    # order the hull vertices by angle around their centroid for the shoelace oracle
    cx = sum(v[0] for v in P.vertices) / len(P.vertices)
    cy = sum(v[1] for v in P.vertices) / len(P.vertices)
    import math

    ring = sorted(P.vertices, key=lambda v: math.atan2(float(v[1] - cy), float(v[0] - cx)))
    assert volume(P) == shoelace(ring)


@pytest.mark.parametrize("dim", [3, 4])
def test_volume_matches_delaunay_oracle(dim):
    rng = random.Random(dim)
    for _ in range(15):
        points = [tuple(rng.randint(-4, 4) for _ in range(dim)) for _ in range(rng.randint(dim + 1, 14))]
        P = hull(points)
        if P.affine_dim < dim:
            continue
        assert volume(P) == delaunay_volume(P.vertices)


@given(grid_points(3, min_size=4, max_size=10), st.tuples(*[st.integers(-5, 5)] * 3))
def test_volume_translation_invariant(points, shift):
    P = hull(points)
    assert volume(translate(P, shift)) == volume(P)


@given(
    grid_points(3, min_size=4, max_size=9),
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=9, max_size=9),
)
def test_volume_scales_with_determinant(points, entries):
    P = hull(points)
    M = LinearMap.from_rows([entries[0:3], entries[3:6], entries[6:9]])
    assert volume(affine_image(M, P)) == abs(M.det()) * volume(P)


def test_volume_additive_over_split():
    # the unit cube cut by x + y + z <= 1 and its complement
    corner = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    rest = hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    cube = hull(itertools.product((0, 1), repeat=3))
    assert volume(corner) + volume(rest) == volume(cube)


# --- affine images ------------------------------------------------------------


def test_reflection_of_unit_square():
    Q = affine_image(LinearMap.identity(2, -1), hull([(0, 0), (1, 0), (0, 1), (1, 1)]))
    assert vset(Q) == pts((0, 0), (-1, 0), (0, -1), (-1, -1))


def test_diagonal_embedding_of_interval():
    assert vset(diagonal_embed(hull([(0,), (1,)]), 2)) == pts((0, 0), (1, 1))


def test_swap_map_sends_first_factor_to_negative_diagonal():
    K = hull([(0, 0), (2, 0), (1, 1), (0, 1)])
    T = swap_first_map(2, 2)
    assert abs(T.det()) == 1
    assert affine_image(T, factor_embed(K, 1, 2)) == neg_diagonal(K, 2)
    assert affine_image(T, neg_diagonal(K, 2)) == factor_embed(K, 1, 2)
    assert affine_image(T, factor_embed(K, 2, 2)) == factor_embed(K, 2, 2)


def test_affine_image_dimension_mismatch():
    with pytest.raises(ValueError):
        affine_image(LinearMap.identity(3), hull([(0, 0), (1, 1)]))


def test_affine_image_with_shift():
    P = affine_image(LinearMap.identity(1), hull([(0,), (1,)]), shift=(3,))
    assert vset(P) == pts((3,), (4,))


# --- Minkowski sums and products ----------------------------------------------


def test_minkowski_sum_hexagon_matches_zonotope_formula():
    gens = [(1, 1), (1, 0), (0, 1)]
    zonotope_area = sum(abs(a[0] * b[1] - a[1] * b[0]) for a, b in itertools.combinations(gens, 2))
    P = minkowski_sum(hull([(0, 0), (1, 1)]), hull([(-1, -1), (0, -1), (-1, 0), (0, 0)]))
    assert len(P.vertices) == 6
    assert volume(P) == zonotope_area == 3


def test_minkowski_sum_with_point_translates():
    P = hull([(0, 0), (1, 0), (0, 1)])
    assert minkowski_sum(P, point_body((2, 3))) == translate(P, (2, 3))


def test_triangle_difference_body_is_hexagon_of_area_three(triangle):
    D = minkowski_sum(triangle, -triangle)
    assert len(D.vertices) == 6 and volume(D) == 3


def test_minkowski_dimension_mismatch():
    with pytest.raises(ValueError):
        minkowski_sum(hull([(0,)]), hull([(0, 0)]))


@given(grid_points(2, max_size=5), grid_points(2, max_size=5), grid_points(2, max_size=5))
def test_minkowski_commutative_and_associative(a, b, c):
    A, B, C = hull(a), hull(b), hull(c)
    assert minkowski_sum(A, B) == minkowski_sum(B, A)
    assert minkowski_sum(minkowski_sum(A, B), C) == minkowski_sum(A, minkowski_sum(B, C))


def test_cartesian_product_examples(triangle):
    I = hull([(0,), (1,)])
    assert vset(cartesian_product(I, I)) == pts((0, 0), (0, 1), (1, 0), (1, 1))
    SS = cartesian_product(triangle, triangle)
    assert SS.ambient_dim == 4 and volume(SS) == Fraction(1, 4)
    E = cartesian_product(triangle, point_body((5,)))
    assert E.ambient_dim == 3 and E.affine_dim == 2


@given(grid_points(2, min_size=3, max_size=6), grid_points(1, min_size=2, max_size=4))
def test_product_volume(a, b):
    P, Q = hull(a), hull(b)
    assume(P.is_full_dimensional and Q.is_full_dimensional)
    assert volume(cartesian_product(P, Q)) == volume(P) * volume(Q)


# --- dimension cap --------------------------------------------------------------


def test_dimension_cap_and_override():
    with pytest.raises(DimensionCapError):
        hull([tuple(range(9))])
    with uncapped(), pytest.warns(UserWarning):
        assert hull([tuple(range(9))]).ambient_dim == 9


# --- exact linear algebra and LP --------------------------------------------------


def test_det_and_rank_and_solve():
    assert det([[2, 0, 0], [0, 3, 0], [0, 0, Fraction(1, 6)]]) == 1
    assert det_int([[1, 2, 3, 4], [0, 1, 2, 3], [1, 0, 1, 0], [2, 2, 2, 1]]) == -2
    assert rank([[1, 2], [2, 4]]) == 1
    assert solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    with pytest.raises(ZeroDivisionError):
        solve([[1, 2], [2, 4]], [1, 2])


@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=5, max_size=5))
def test_bareiss_matches_cofactor_expansion(m):
    def laplace(a):
        if len(a) == 1:
            return a[0][0]
        return sum((-1) ** j * a[0][j] * laplace([r[:j] + r[j + 1:] for r in a[1:]]) for j in range(len(a)))

    assert det_int(m) == laplace(m)


def test_lp_feasibility():
    assert feasible_point([[1, 1]], [1]) is not None
    assert feasible_point([[1, 1]], [-1]) is None
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert in_convex_hull((half, half), square)
    assert in_convex_hull((1, 0), square)
    assert not in_convex_hull((Fraction(11, 10), 0), square)


def test_translates_intersect_on_interval():
    verts = [(0,), (1,)]
    assert translates_intersect(verts, [(1,)])
    assert not translates_intersect(verts, [(Fraction(11, 10),)])
    assert translates_intersect(verts, [(half,), (-half,)])
    assert not translates_intersect(verts, [(Fraction(3, 4),), (Fraction(-3, 4),)])


# --- JSON body format -------------------------------------------------------------


def test_body_json_roundtrip():
    P = hull([("1/2", 0), (0, "3/4"), (0, 0)])
    Q = loads_body(dumps_body(P))
    assert P == Q
    assert body_to_obj(P)["vertices"][-1] == ["1/2", "0"]


def test_body_json_errors_carry_positions():
    with pytest.raises(BodyFormatError, match="line 1, column"):
        loads_body('{"dim": 2, "vertices": [[0, 0],')
    with pytest.raises(BodyFormatError, match=r"vertices\[1\]"):
        loads_body(json.dumps({"dim": 2, "vertices": [[0, 0], [1]]}))
    with pytest.raises(BodyFormatError, match=r"vertices\[0\]\[1\]"):
        loads_body(json.dumps({"dim": 2, "vertices": [[0, "x/y"]]}))
