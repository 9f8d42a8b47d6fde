from __future__ import annotations

import itertools
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcjordan.golden_field import GoldenInt, GoldenRat
from qcjordan.icosian import build_icosian_group
from qcjordan.model_set import (
    PRESETS,
    QcPoint,
    check_injective,
    custom_scheme,
    elser_sloane_cache_json,
    elser_sloane_vertices,
    elser_sloane_window,
    enumerate_points,
    load_window_file,
    pentagon_vertices,
    preset,
    translate_window,
    triacontahedron_vertices,
)
from qcjordan.window import DegenerateWindowError, interval

TAU = GoldenInt(0, 1).to_rat()
HALF = GoldenRat(Fraction(1, 2))


def brute_force(scheme, radius: float) -> set[tuple[int, ...]]:
    """Every lattice point in a provably sufficient box, filtered exactly.

    The box comes from inverting the real matrix coords -> (phys, inner); it
    does not share code with the enumerator's pruning.
    """
    phys = np.array([[float(x) for x in row] for row in scheme.coord_matrix("phys")])
    inner = np.array([[float(x) for x in row] for row in scheme.coord_matrix("inner")])
    full = np.vstack([phys, inner])
    inv = np.linalg.inv(full)
    gram = np.array([float(g) for g in scheme.phys_gram])
    lo, hi = scheme.window.bounding_box()
    ybound = np.concatenate([radius / np.sqrt(gram), np.maximum(np.abs(lo), np.abs(hi))])
    cbound = np.floor(np.abs(inv) @ ybound + 1e-6).astype(int)
    axes = [np.arange(-b, b + 1) for b in cbound]
    grid = np.array(list(itertools.product(*axes)), dtype=np.int64)
    keep = scheme.contains_many(grid)
    grid = grid[keep]
    keep = scheme.norm_within(grid, GoldenRat(Fraction(radius).limit_denominator()) ** 2)
    return {tuple(int(v) for v in row) for row in grid[keep]}


@pytest.mark.parametrize(
    "name, radius",
    [("fibonacci-palindromic", 9), ("fibonacci", 12), ("fibonacci-unit", 12), ("penrose", 3), ("z6", 2), ("z6-icosian", 2)],
)
def test_enumeration_matches_brute_force(name, radius):
    scheme = preset(name)
    got = {p.coords for p in enumerate_points(scheme, radius)}
    assert got == brute_force(scheme, radius)


def test_fibonacci_palindromic_radius_9():
    pts = enumerate_points(preset("fibonacci-palindromic"), 9)
    expected = {(0, 0)} | {(s * a, s * b) for s in (1, -1) for a, b in [(1, 1), (1, 2), (2, 3), (2, 4)]}
    assert {p.coords for p in pts} == expected


def test_fibonacci_palindromic_radius_8_misses_outer_pair():
    # 2 + 4 tau is about 8.47
    pts = enumerate_points(preset("fibonacci-palindromic"), 8)
    assert len(pts) == 7


def test_palindromic_set_is_symmetric(batches):
    _, pts = batches["fibonacci-palindromic"]
    coords = {p.coords for p in pts}
    assert coords == {tuple(-c for c in x) for x in coords}


def test_scalar_contains_matches_vector(batches):
    for name, (scheme, pts) in batches.items():
        sample = [p.coords for p in pts[:40]]
        shifted = [tuple(c + 1 for c in x) for x in sample]
        for c in sample + shifted:
            assert scheme.contains(c) == bool(scheme.contains_many(np.array([c]))[0])


def test_points_are_sorted_and_injective(batches):
    for scheme, pts in batches.values():
        assert [p.coords for p in pts] == sorted(p.coords for p in pts)
        assert check_injective(scheme, pts)
        assert all(scheme.window.contains(p.star) for p in pts)


def test_penrose_counts():
    assert len(enumerate_points(preset("penrose"), 3)) == 26
    assert len(enumerate_points(preset("penrose"), 4)) == 36


def test_penrose_physical_matches_complex_embedding():
    # z = (a + b tau) + (c + d tau) xi^2 with xi = exp(2 pi i / 5)
    scheme = preset("penrose")
    for c in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (2, -1, 3, 1)]:
        y = [float(v) for v in scheme.physical(c)]
        z = complex(c[0] + c[1] * 1.618033988749895, 0) + (c[2] + c[3] * 1.618033988749895) * np.exp(4j * np.pi / 5)
        assert abs(y[0] - z.real) < 1e-9
        assert abs(y[1] * np.sin(np.radians(72)) - z.imag) < 1e-9


def test_elser_sloane_small_radius_is_origin_plus_scaled_units(batches):
    scheme, pts = batches["elser-sloane"]
    assert len(pts) == 121
    units = build_icosian_group().elements
    tau2 = GoldenInt(1, 1)
    expected = {(0,) * 8} | {tuple((e * tau2).doubled) for e in units}
    assert {p.coords for p in pts} == expected
    assert [p.coords for p in enumerate_points(scheme, 2)] == [(0,) * 8]


def test_elser_sloane_window():
    verts = elser_sloane_vertices()
    assert len(verts) == 720
    assert len(set(verts)) == 720
    w = elser_sloane_window()
    assert len(w.facets) == 1200
    assert w.kappa_scaled
    assert w.validate_fast() == []
    cache = elser_sloane_cache_json(w)
    assert cache["schema_version"] == 1


def test_window_vertex_lists():
    assert len(pentagon_vertices()) == 5
    assert len(triacontahedron_vertices()) == 32
    assert len(preset("z6").window.facets) == 30


def test_radius_validation():
    with pytest.raises(ValueError):
        enumerate_points(preset("fibonacci"), -1)
    assert enumerate_points(preset("fibonacci"), "0") == []
    assert len(enumerate_points(preset("fibonacci-unit"), "1+0*sqrt5")) == 2


def test_translate_window_changes_the_set():
    base = preset("fibonacci-palindromic")
    moved = translate_window(base, (HALF,))
    a = {p.coords for p in enumerate_points(base, 9)}
    b = {p.coords for p in enumerate_points(moved, 9)}
    assert a != b
    assert {p.coords for p in enumerate_points(preset("fibonacci-unit"), 9)} == b


@settings(max_examples=30, deadline=None)
@given(st.integers(-40, 40), st.integers(-40, 40))
def test_fibonacci_membership_float_oracle(a, b):
    star = a + b * (1 - 1.618033988749895)
    scheme = preset("fibonacci-palindromic")
    if abs(abs(star) - 0.5) > 1e-9:
        assert scheme.contains((a, b)) == (abs(star) < 0.5)


def test_presets_build():
    for name in PRESETS:
        assert preset(name).name == name
    with pytest.raises(KeyError):
        preset("nope")


def test_load_window_file(tmp_path):
    good = tmp_path / "w.json"
    good.write_text(json.dumps({"vertices": [["-1/2"], ["1/2"]], "closed": True}))
    w = load_window_file(str(good))
    assert custom_scheme(w).name == "fibonacci:custom"
    flat = tmp_path / "flat.json"
    flat.write_text(json.dumps({"vertices": [["0", "0"], ["1", "1"], ["2", "2"]]}))
    with pytest.raises(DegenerateWindowError):
        load_window_file(str(flat))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"verts": []}))
    with pytest.raises(ValueError):
        load_window_file(str(bad))


def test_custom_scheme_dimension_check():
    with pytest.raises(ValueError):
        custom_scheme(interval(0, 1), base="penrose")


def test_qcpoint_ordering():
    assert QcPoint((0, 1)) < QcPoint((1, 0))
    assert QcPoint((1, 2), (HALF,)) == QcPoint((1, 2))
