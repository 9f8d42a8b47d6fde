from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from qcjordan.icosian import build_icosian_group
from qcjordan.roots_coxeter import (
    Reflection,
    build_delta,
    check_crystallographic,
    delta_literal,
    group_order,
    inner,
    reflect,
    roots_to_csv,
    simple_roots,
    vec,
    verify_coxeter,
)
from qcjordan.roots_coxeter import simple_root_coordinates

SIZES = {2: 10, 3: 30, 4: 120}
ORDERS = {2: 10, 3: 120, 4: 14400}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_root_counts_and_axioms(n):
    system = build_delta(n)
    assert len(system) == SIZES[n]
    report = system.check_axioms()
    assert report["ok"], report["violations"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_all_roots_have_unit_length(n):
    assert all(inner(r, r) == 1 for r in build_delta(n).roots)


def test_delta4_is_the_icosian_group():
    roots = set(build_delta(4).roots)
    units = {tuple(e.values) for e in build_icosian_group().elements}
    assert roots == units


def test_delta3_inner_products_match_icosidodecahedron():
    # float oracle: vertices of an icosidodecahedron have five distinct
    # neighbour cosines besides +-1
    pts = np.array([[float(c) for c in r] for r in build_delta(3).roots])
    cos = np.round(pts @ pts.T, 9)
    values = sorted(set(cos.ravel()))
    phi = (1 + math.sqrt(5)) / 2
    expected = sorted({-1.0, 1.0, 0.0, 0.5, -0.5, round(phi / 2, 9), round(-phi / 2, 9), round(1 / (2 * phi), 9), round(-1 / (2 * phi), 9)})
    assert values == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coxeter_relations(n):
    report = verify_coxeter(build_delta(n))
    assert report.ok, report.violations
    assert len(simple_roots(build_delta(n))) == n


@pytest.mark.parametrize("n", [2, 3, 4])
def test_group_orders(n):
    assert group_order(build_delta(n)) == ORDERS[n]


def test_wrong_coxeter_matrix_is_rejected():
    report = verify_coxeter(build_delta(3), expected=((1, 3, 2), (3, 1, 3), (2, 3, 1)))
    assert not report.ok


@pytest.mark.parametrize("n", [2, 3, 4])
def test_non_crystallographic(n):
    assert not check_crystallographic(build_delta(n))


def test_a2_is_crystallographic():
    from qcjordan.roots_coxeter import RootSystem

    # A2 inside the plane x+y+z=0 in R^3
    roots = set(itertools.permutations((1, -1, 0)))
    system = RootSystem(2, tuple(vec(*r) for r in roots))
    assert check_crystallographic(system)


def test_reflection_is_an_involution():
    r = Reflection(vec(1, 1, 0))
    v = vec(3, -2, 5)
    assert reflect(r, reflect(r, v)) == v
    assert reflect(r, r.axis) == tuple(-c for c in r.axis)


def test_zero_axis_rejected():
    with pytest.raises(ValueError):
        Reflection(vec(0, 0))


def test_literal_planar_listing_mixes_lengths():
    lengths = {inner(r, r) for r in delta_literal(2)}
    assert len(lengths) > 1


def test_simple_root_coordinates_reconstruct():
    coords = simple_root_coordinates(build_delta(3))
    # positive roots have coefficients all of one sign
    for c in coords.values():
        signs = {x.sign() for x in c if x}
        assert len(signs) == 1


def test_csv_export():
    text = roots_to_csv(build_delta(3).roots)
    lines = text.strip().splitlines()
    assert lines[0] == "x0,x1,x2"
    assert len(lines) == 31
