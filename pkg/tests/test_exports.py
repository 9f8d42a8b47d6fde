from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest

from qcjordan.exports import (
    SCHEMA_VERSION,
    obj_vertex_count,
    points_from_csv,
    points_from_json,
    points_to_csv,
    points_to_json,
    points_to_obj,
    points_to_svg,
    render_points,
    table_to_csv,
    table_to_json,
)
from qcjordan.model_set import QcPoint


@pytest.mark.parametrize("name", ["fibonacci-palindromic", "penrose", "z6", "elser-sloane"])
def test_csv_round_trip(batches, name):
    scheme, pts = batches[name]
    text = points_to_csv(scheme, pts)
    back = points_from_csv(text, scheme)
    assert back == pts
    assert [p.star for p in back] == [p.star for p in pts]
    header = text.splitlines()[0].split(",")
    assert header[0] == "index" and any(h.startswith("float_") for h in header)


@pytest.mark.parametrize("name", ["fibonacci-palindromic", "penrose", "z6", "elser-sloane"])
def test_json_round_trip(batches, name):
    scheme, pts = batches[name]
    meta, back = points_from_json(points_to_json(scheme, pts, 3))
    assert back == pts
    assert meta["schema_version"] == SCHEMA_VERSION
    assert meta["count"] == len(pts)
    assert meta["scheme"] == scheme.name


def test_csv_detects_tampered_star(batches):
    scheme, pts = batches["fibonacci-palindromic"]
    lines = points_to_csv(scheme, pts).splitlines()
    cols = lines[1].split(",")
    star_col = lines[0].split(",").index("star0")
    cols[star_col] = "7+0*sqrt5"
    lines[1] = ",".join(cols)
    with pytest.raises(ValueError):
        points_from_csv("\n".join(lines) + "\n", scheme)


def test_json_rejects_unknown_schema():
    with pytest.raises(ValueError):
        points_from_json(json.dumps({"schema_version": 99, "points": []}))


@pytest.mark.parametrize("name", ["penrose", "z6", "elser-sloane"])
def test_obj_vertex_count_matches(batches, name):
    scheme, pts = batches[name]
    text = points_to_obj(scheme, pts)
    assert obj_vertex_count(text) == len(pts) == json.loads(points_to_json(scheme, pts))["count"]


def test_svg_is_well_formed(batches):
    scheme, pts = batches["penrose"]
    root = ET.fromstring(points_to_svg(scheme, pts))
    circles = root.findall(".//{http://www.w3.org/2000/svg}circle")
    assert len(circles) == len(pts)


def test_render_dispatch(batches):
    scheme, pts = batches["fibonacci-palindromic"]
    for fmt in ("csv", "json", "svg", "obj"):
        assert render_points(scheme, pts, fmt)
    with pytest.raises(ValueError):
        render_points(scheme, pts, "png")


def test_empty_export(batches):
    scheme, _ = batches["z6"]
    assert points_from_csv(points_to_csv(scheme, []), scheme) == []
    assert obj_vertex_count(points_to_obj(scheme, [])) == 0


def test_table_exports():
    csv_text = table_to_csv(["L_0"], ["L_1", "L_2"], [["a", "b"]])
    assert csv_text == "row,L_1,L_2\nL_0,a,b\n"
    data = json.loads(table_to_json(["r"], ["c"], [["x"]], {"scheme": "s"}))
    assert data["cells"] == [["x"]] and data["scheme"] == "s"


def test_float_columns_are_rounded(batches):
    scheme, pts = batches["fibonacci-palindromic"]
    row = points_to_csv(scheme, [QcPoint((1, 1))]).splitlines()[1].split(",")
    assert row[-2] == "2.61803398875"
