"""Body JSON interchange: ``{"dim": d, "vertices": [["p/q", ...], ...]}``."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .polytope import VPolytope, hull


class BodyFormatError(ValueError):
    pass


def rational_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise BodyFormatError(f"{where}: expected an integer or a 'p/q' string, got {x!r}")
    try:
        return Fraction(x.strip()) if isinstance(x, str) else Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise BodyFormatError(f"{where}: bad rational {x!r} ({exc})") from None


def body_from_obj(obj) -> VPolytope:
    if not isinstance(obj, dict) or "dim" not in obj or "vertices" not in obj:
        raise BodyFormatError('body must be an object with keys "dim" and "vertices"')
    d = obj["dim"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise BodyFormatError(f"dim must be a nonnegative integer, got {d!r}")
    verts = obj["vertices"]
    if not isinstance(verts, list) or not verts:
        raise BodyFormatError("vertices must be a nonempty list")
    pts = []
    for i, v in enumerate(verts):
        if not isinstance(v, list) or len(v) != d:
            raise BodyFormatError(f"vertices[{i}]: expected a list of {d} coordinates")
        pts.append(tuple(_parse_rational(x, f"vertices[{i}][{j}]") for j, x in enumerate(v)))
    return hull(pts)


def body_to_obj(P: VPolytope) -> dict:
    return {"dim": P.ambient_dim, "vertices": [[rational_str(x) for x in v] for v in P.vertices]}


def loads_body(text: str) -> VPolytope:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BodyFormatError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return body_from_obj(obj)


def load_body(path: str | Path) -> VPolytope:
    try:
        return loads_body(Path(path).read_text())
    except BodyFormatError as exc:
        raise BodyFormatError(f"{path}: {exc}") from None


def dumps_body(P: VPolytope) -> str:
    return json.dumps(body_to_obj(P))
