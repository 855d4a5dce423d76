"""Exact-rational JSON payloads for instances and reports.

Rationals travel as strings "p/q" (or "p" when the denominator is 1), never
as floats, so serialization round-trips are exact. Payload dictionaries here
are plain JSON-ready values; the service layer wraps them in pydantic models.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InvalidArgument
from .projective import ProjectivePoint
from .simplex import FaceInstance
from .triangle import Triangle2D

SCHEMA_VERSION = 1

_RATIONAL_PATTERN = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p"; anything else (floats included) is rejected."""
    if not isinstance(text, str) or not _RATIONAL_PATTERN.match(text):
        raise InvalidArgument(f"not an exact rational string: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_coords(values: Sequence[str]) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def format_coords(values: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]


def _require_version(payload: Mapping) -> None:
    version = payload.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise InvalidArgument(f"unsupported schema_version {version!r}")


def payload_kind(payload: Mapping) -> str:
    """Classify an instance file: exactly one payload kind must be present."""
    has_triangle = "triangle" in payload or "feet" in payload
    has_face = any(key in payload for key in ("n", "k", "points"))
    if has_triangle and has_face:
        raise InvalidArgument("instance file mixes triangle and face payloads")
    if has_triangle:
        return "triangle"
    if has_face:
        return "face"
    raise InvalidArgument("instance file carries no recognizable payload")


def face_instance_to_payload(inst: FaceInstance) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": inst.n,
        "k": inst.k,
        "points": [
            {"subset": list(subset), "coords": format_coords(point.coords)}
            for subset, point in inst.points.items()
        ],
    }


def face_instance_from_payload(payload: Mapping) -> FaceInstance:
    _require_version(payload)
    try:
        n = int(payload["n"])
        k = int(payload["k"])
        raw_points = payload["points"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidArgument(f"malformed face payload: {exc}") from exc
    points = {}
    for item in raw_points:
        try:
            subset = tuple(int(i) for i in item["subset"])
            coords = parse_coords(item["coords"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed face point: {exc}") from exc
        if list(subset) != sorted(set(subset)):
            raise InvalidArgument(f"subset {list(subset)} must be strictly increasing")
        points[subset] = ProjectivePoint(coords)
    return FaceInstance(n=n, k=k, points=points)


def triangle_to_payload(t: Triangle2D, feet: Sequence[tuple[Fraction, Fraction]]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "triangle": [format_coords(v) for v in (t.a, t.b, t.c)],
        "feet": [format_coords(foot) for foot in feet],
    }


def triangle_from_payload(payload: Mapping) -> tuple[Triangle2D, list[tuple[Fraction, Fraction]]]:
    _require_version(payload)
    try:
        vertices = payload["triangle"]
        feet = payload["feet"]
    except (KeyError, TypeError) as exc:
        raise InvalidArgument(f"malformed triangle payload: {exc}") from exc
    if len(vertices) != 3 or len(feet) != 3:
        raise InvalidArgument("triangle payload needs 3 vertices and 3 feet")
    parsed_vertices = [_parse_pair(v) for v in vertices]
    parsed_feet = [_parse_pair(f) for f in feet]
    triangle = Triangle2D(*parsed_vertices)
    return triangle, parsed_feet


def _parse_pair(values: Sequence[str]) -> tuple[Fraction, Fraction]:
    if len(values) != 2:
        raise InvalidArgument(f"expected a coordinate pair, got {values!r}")
    x, y = (parse_rational(v) for v in values)
    return (x, y)


def canonical_json(payload: Mapping) -> str:
    """Stable rendering used for files and digests (byte-identical reruns)."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def payload_digest(payload: Mapping) -> str:
    compact = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(compact.encode("utf-8")).hexdigest()
