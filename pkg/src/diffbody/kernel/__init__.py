"""Exact rational polytope kernel: hulls, volumes, affine images, sums, products."""

from .io import BodyFormatError, body_from_obj, body_to_obj, dumps_body, load_body, loads_body, rational_str
from .linalg import Rational, as_rational
from .polytope import (
    MAX_DIM,
    DimensionCapError,
    LinearMap,
    VPolytope,
    affine_image,
    cartesian_power,
    cartesian_product,
    check_dim,
    hull,
    minkowski_sum,
    point_body,
    scale,
    translate,
    uncapped,
    volume,
)

__all__ = [
    "MAX_DIM",
    "BodyFormatError",
    "DimensionCapError",
    "LinearMap",
    "Rational",
    "VPolytope",
    "affine_image",
    "as_rational",
    "body_from_obj",
    "body_to_obj",
    "cartesian_power",
    "cartesian_product",
    "check_dim",
    "dumps_body",
    "hull",
    "load_body",
    "loads_body",
    "minkowski_sum",
    "point_body",
    "rational_str",
    "scale",
    "translate",
    "uncapped",
    "volume",
]
