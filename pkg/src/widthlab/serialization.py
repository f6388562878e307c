"""Body JSON schema: {"dim": n, "expr": {"kind": ..., ...}}.

Nested bodies (combination terms, similarity images, reflections) carry the
full {"dim", "expr"} wrapper again.  Validation errors report a JSON pointer
to the offending field.
"""

import json

import numpy as np

from .bodies import (
    Ball,
    BallIntersection,
    Body,
    MinkComb,
    PointHull,
    Reflected,
    SimImage,
)
from .errors import BodySchemaError, WidthLabError
from .transforms import Similarity


def body_to_json(body: Body) -> dict:
    return {"dim": int(body.dim), "expr": _expr_to_json(body)}


def _expr_to_json(body: Body) -> dict:
    if isinstance(body, PointHull):
        return {"kind": "point_hull", "points": body.points.tolist()}
    if isinstance(body, Ball):
        return {"kind": "ball", "center": body.center.tolist(), "radius": float(body.radius)}
    if isinstance(body, BallIntersection):
        return {
            "kind": "ball_intersection",
            "centers": body.centers.tolist(),
            "radii": body.radii.tolist(),
        }
    if isinstance(body, MinkComb):
        return {
            "kind": "mink_comb",
            "terms": [
                {"coef": float(coef), "body": body_to_json(sub)} for coef, sub in body.terms
            ],
        }
    if isinstance(body, SimImage):
        return {"kind": "sim_image", "map": body.sim.to_json(), "inner": body_to_json(body.inner)}
    if isinstance(body, Reflected):
        return {"kind": "reflected", "inner": body_to_json(body.inner)}
    raise WidthLabError(f"cannot serialize body of type {type(body).__name__}")


def _want_dict(obj, ptr):
    if not isinstance(obj, dict):
        raise BodySchemaError(ptr, "expected an object")
    return obj


def _want_number(obj, ptr):
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise BodySchemaError(ptr, "expected a number")
    if not np.isfinite(obj):
        raise BodySchemaError(ptr, "number must be finite")
    return float(obj)


def _want_int(obj, ptr):
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise BodySchemaError(ptr, "expected an integer")
    return obj


def _want_list(obj, ptr):
    if not isinstance(obj, list):
        raise BodySchemaError(ptr, "expected an array")
    return obj


def _want_field(obj, name, ptr):
    if name not in obj:
        raise BodySchemaError(f"{ptr}/{name}", "missing field")
    return obj[name]


def _want_vector(obj, ptr, dim):
    items = _want_list(obj, ptr)
    if len(items) != dim:
        raise BodySchemaError(ptr, f"expected {dim} coordinates, got {len(items)}")
    return [_want_number(x, f"{ptr}/{i}") for i, x in enumerate(items)]


def _want_vectors(obj, ptr, dim):
    items = _want_list(obj, ptr)
    if not items:
        raise BodySchemaError(ptr, "expected a non-empty array")
    return [_want_vector(row, f"{ptr}/{i}", dim) for i, row in enumerate(items)]


_KINDS = ("point_hull", "ball", "ball_intersection", "mink_comb", "sim_image", "reflected")


def body_from_json(obj, ptr="") -> Body:
    obj = _want_dict(obj, ptr)
    dim = _want_int(_want_field(obj, "dim", ptr), f"{ptr}/dim")
    if dim < 1:
        raise BodySchemaError(f"{ptr}/dim", "dimension must be >= 1")
    expr = _want_dict(_want_field(obj, "expr", ptr), f"{ptr}/expr")
    return _expr_from_json(expr, f"{ptr}/expr", dim)


def _expr_from_json(expr, ptr, dim) -> Body:
    kind = _want_field(expr, "kind", ptr)
    if kind not in _KINDS:
        raise BodySchemaError(f"{ptr}/kind", f"unknown kind {kind!r}")
    try:
        if kind == "point_hull":
            points = _want_vectors(_want_field(expr, "points", ptr), f"{ptr}/points", dim)
            return PointHull(points)
        if kind == "ball":
            center = _want_vector(_want_field(expr, "center", ptr), f"{ptr}/center", dim)
            radius = _want_number(_want_field(expr, "radius", ptr), f"{ptr}/radius")
            if radius < 0:
                raise BodySchemaError(f"{ptr}/radius", "radius must be >= 0")
            return Ball(center, radius)
        if kind == "ball_intersection":
            centers = _want_vectors(_want_field(expr, "centers", ptr), f"{ptr}/centers", dim)
            radii_items = _want_list(_want_field(expr, "radii", ptr), f"{ptr}/radii")
            radii = [_want_number(r, f"{ptr}/radii/{i}") for i, r in enumerate(radii_items)]
            if len(radii) != len(centers):
                raise BodySchemaError(f"{ptr}/radii", "need one radius per center")
            for i, r in enumerate(radii):
                if r <= 0:
                    raise BodySchemaError(f"{ptr}/radii/{i}", "radius must be > 0")
            return BallIntersection(centers, radii)
        if kind == "mink_comb":
            items = _want_list(_want_field(expr, "terms", ptr), f"{ptr}/terms")
            if not items:
                raise BodySchemaError(f"{ptr}/terms", "expected a non-empty array")
            terms = []
            for i, item in enumerate(items):
                item = _want_dict(item, f"{ptr}/terms/{i}")
                coef = _want_number(_want_field(item, "coef", f"{ptr}/terms/{i}"),
                                    f"{ptr}/terms/{i}/coef")
                if coef < 0:
                    raise BodySchemaError(f"{ptr}/terms/{i}/coef", "coefficient must be >= 0")
                sub = body_from_json(_want_field(item, "body", f"{ptr}/terms/{i}"),
                                     f"{ptr}/terms/{i}/body")
                if sub.dim != dim:
                    raise BodySchemaError(f"{ptr}/terms/{i}/body/dim", "dimension mismatch")
                terms.append((coef, sub))
            return MinkComb(terms)
        if kind == "sim_image":
            sim = _sim_from_json(_want_field(expr, "map", ptr), f"{ptr}/map", dim)
            inner = body_from_json(_want_field(expr, "inner", ptr), f"{ptr}/inner")
            if inner.dim != dim:
                raise BodySchemaError(f"{ptr}/inner/dim", "dimension mismatch")
            return SimImage(sim, inner)
        inner = body_from_json(_want_field(expr, "inner", ptr), f"{ptr}/inner")
        if inner.dim != dim:
            raise BodySchemaError(f"{ptr}/inner/dim", "dimension mismatch")
        return Reflected(inner)
    except BodySchemaError:
        raise
    except WidthLabError as exc:
        raise BodySchemaError(ptr, str(exc)) from exc


def _sim_from_json(obj, ptr, dim) -> Similarity:
    obj = _want_dict(obj, ptr)
    v = _want_vector(_want_field(obj, "translation", ptr), f"{ptr}/translation", dim)
    ratio = _want_number(_want_field(obj, "ratio", ptr), f"{ptr}/ratio")
    if ratio <= 0:
        raise BodySchemaError(f"{ptr}/ratio", "ratio must be > 0")
    rows = _want_list(_want_field(obj, "rotation", ptr), f"{ptr}/rotation")
    if len(rows) != dim:
        raise BodySchemaError(f"{ptr}/rotation", f"expected {dim} rows")
    R = [_want_vector(row, f"{ptr}/rotation/{i}", dim) for i, row in enumerate(rows)]
    try:
        return Similarity(v, ratio, R)
    except WidthLabError as exc:
        raise BodySchemaError(f"{ptr}/rotation", str(exc)) from exc


def body_to_json_str(body: Body) -> str:
    return json.dumps(body_to_json(body), sort_keys=True, indent=2) + "\n"


def save_body(body: Body, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(body_to_json_str(body))


def load_body(path) -> Body:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BodySchemaError("", f"invalid JSON: {exc}") from exc
    return body_from_json(obj)
