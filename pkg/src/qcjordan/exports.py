"""Point-set and table serialization.

Exact values are primary: coordinates are integers and every physical or
inner component is written as ``p+q*sqrt5``.  Float columns carry a
``float_`` prefix and are for plotting only.  SVG and OBJ are float
renderings at 12 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Sequence

from .golden_field import GoldenRat, format_golden, parse_golden
from .model_set import QcPoint, SchemeSpec

SCHEMA_VERSION = 1
SIN72 = math.sin(math.radians(72))

__all__ = [
    "SCHEMA_VERSION",
    "points_to_csv",
    "points_from_csv",
    "points_to_json",
    "points_from_json",
    "points_to_svg",
    "points_to_obj",
    "obj_vertex_count",
    "table_to_csv",
    "table_to_json",
    "render_points",
]


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _columns(scheme: SchemeSpec) -> list[str]:
    cols = ["index"] + [f"c{k}" for k in range(scheme.ncoords)]
    cols += [f"phys{k}" for k in range(scheme.d1)] + [f"star{k}" for k in range(scheme.d2)]
    cols += [f"float_phys{k}" for k in range(scheme.d1)] + [f"float_star{k}" for k in range(scheme.d2)]
    return cols


def _row(scheme: SchemeSpec, i: int, p: QcPoint) -> list[str]:
    phys = scheme.physical(p.coords)
    star = p.star or scheme.star_map(p.coords)
    return (
        [str(i)]
        + [str(c) for c in p.coords]
        + [format_golden(v) for v in phys]
        + [format_golden(v) for v in star]
        + [_fmt(float(v)) for v in phys]
        + [_fmt(float(v)) for v in star]
    )


def points_to_csv(scheme: SchemeSpec, points: Sequence[QcPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_columns(scheme))
    for i, p in enumerate(points):
        w.writerow(_row(scheme, i, p))
    return buf.getvalue()


def points_from_csv(text: str, scheme: SchemeSpec | None = None) -> list[QcPoint]:
    """Parse a CSV export; with a scheme the exact columns are cross-checked."""
    reader = csv.DictReader(io.StringIO(text))
    coord_cols = [c for c in reader.fieldnames or [] if c.startswith("c") and c[1:].isdigit()]
    star_cols = [c for c in reader.fieldnames or [] if c.startswith("star")]
    out = []
    for row in reader:
        coords = tuple(int(row[c]) for c in coord_cols)
        star = tuple(GoldenRat.coerce(parse_golden(row[c])) for c in star_cols)
        if scheme is not None and star != scheme.star_map(coords):
            raise ValueError(f"row {row['index']}: star column disagrees with coordinates")
        out.append(QcPoint(coords, star))
    return out


def points_to_json(scheme: SchemeSpec, points: Sequence[QcPoint], radius=None) -> str:
    data = {
        "schema_version": SCHEMA_VERSION,
        "scheme": scheme.name,
        "kind": scheme.kind,
        "radius": None if radius is None else format_golden(GoldenRat.coerce(radius)),
        "count": len(points),
        "window": scheme.window.to_json() if hasattr(scheme.window, "to_json") else scheme.window.name,
        "points": [
            {
                "coords": list(p.coords),
                "physical": [format_golden(v) for v in scheme.physical(p.coords)],
                "star": [format_golden(v) for v in (p.star or scheme.star_map(p.coords))],
                "float_physical": [float(_fmt(float(v))) for v in scheme.physical(p.coords)],
            }
            for p in points
        ],
    }
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def points_from_json(text: str) -> tuple[dict, list[QcPoint]]:
    data = json.loads(text)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
    pts = [
        QcPoint(tuple(int(c) for c in p["coords"]), tuple(GoldenRat.coerce(parse_golden(s)) for s in p["star"]))
        for p in data["points"]
    ]
    return data, pts


def _plane(scheme: SchemeSpec, p: QcPoint) -> tuple[float, ...]:
    vals = [float(v) for v in scheme.physical(p.coords)]
    if scheme.kind == "penrose":
        vals = [vals[0], vals[1] * SIN72]  # back to (Re, Im)
    return tuple(vals)


def points_to_svg(scheme: SchemeSpec, points: Sequence[QcPoint], size: int = 512) -> str:
    """Static scatter plot of the first two physical coordinates."""
    xy = [(v[0], v[1] if len(v) > 1 else 0.0) for v in (_plane(scheme, p) for p in points)]
    span = max([abs(c) for pt in xy for c in pt] + [1.0])
    scale = (size / 2 - 10) / span
    r = max(1.5, size / 200)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{scheme.name}: {len(points)} points</title>",
        '<g fill="black">',
    ]
    for x, y in xy:
        cx, cy = size / 2 + x * scale, size / 2 - y * scale
        lines.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}"/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


def points_to_obj(scheme: SchemeSpec, points: Sequence[QcPoint]) -> str:
    """Wavefront OBJ vertex cloud; coordinates past the third are dropped."""
    lines = [f"# {scheme.name}: {len(points)} points"]
    for p in points:
        v = list(_plane(scheme, p)) + [0.0, 0.0]
        lines.append("v " + " ".join(_fmt(c) for c in v[:3]))
    return "\n".join(lines) + "\n"


def obj_vertex_count(text: str) -> int:
    return sum(1 for line in text.splitlines() if line.startswith("v "))


def render_points(scheme: SchemeSpec, points: Sequence[QcPoint], fmt: str, radius=None) -> str:
    if fmt == "csv":
        return points_to_csv(scheme, points)
    if fmt == "json":
        return points_to_json(scheme, points, radius)
    if fmt == "svg":
        return points_to_svg(scheme, points)
    if fmt == "obj":
        return points_to_obj(scheme, points)
    raise ValueError(f"unknown point format {fmt!r}")


def table_to_csv(row_labels: Sequence[str], col_labels: Sequence[str], cells: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", *col_labels])
    for lab, row in zip(row_labels, cells):
        w.writerow([lab, *row])
    return buf.getvalue()


def table_to_json(row_labels, col_labels, cells, extra: dict | None = None) -> str:
    data = {"schema_version": SCHEMA_VERSION, "rows": list(row_labels), "cols": list(col_labels), "cells": [list(r) for r in cells]}
    if extra:
        data.update(extra)
    return json.dumps(data, indent=1, sort_keys=True) + "\n"
