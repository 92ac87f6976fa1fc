from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st
from scipy.spatial import Delaunay

from diffbody.kernel.linalg import det

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def F(x) -> Fraction:
    return Fraction(x)


def shoelace(polygon):
    """Area of a polygon from its vertices in cyclic order."""
    s = Fraction(0)
    for (x0, y0), (x1, y1) in zip(polygon, polygon[1:] + polygon[:1]):
        s += Fraction(x0) * Fraction(y1) - Fraction(x1) * Fraction(y0)
    return abs(s) / 2


def delaunay_volume(points):
    """Exact volume from a floating-point Delaunay triangulation's combinatorics.

    The simplices come from Qhull; their volumes are exact determinants, so
    this agrees with the true volume whenever the triangulation is valid.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    tri = Delaunay(np.array([[float(x) for x in p] for p in pts]))
    d = len(pts[0])
    total = Fraction(0)
    for simplex in tri.simplices:
        base = pts[simplex[0]]
        rows = [[a - b for a, b in zip(pts[j], base)] for j in simplex[1:]]
        total += abs(det(rows))
    return total / factorial(d)


def grid_points(dim, lo=-3, hi=3, min_size=1, max_size=12):
    coord = st.integers(lo, hi)
    return st.lists(st.tuples(*[coord] * dim), min_size=min_size, max_size=max_size)


@pytest.fixture
def triangle():
    from diffbody.constructions import axis_simplex

    return axis_simplex([1, 1])


@pytest.fixture
def square():
    from diffbody.constructions import cube

    return cube(2)


@pytest.fixture
def staircase():
    from diffbody.constructions import staircase_antiblocking

    return staircase_antiblocking([(2, 0), (0, 1), (1, 1)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
