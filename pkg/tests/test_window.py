from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcjordan.exact import IntMatrix, golden_to_parts, sign_sqrt5
from qcjordan.golden_field import GoldenInt, GoldenRat
from qcjordan.window import (
    ConvexWindow,
    DegenerateWindowError,
    WindowUnion,
    facets_from_vertices,
    hull_incidence,
    interval,
)

TAU = GoldenInt(0, 1).to_rat()
HALF = GoldenRat(Fraction(1, 2))


@given(st.lists(st.tuples(st.integers(-10**12, 10**12), st.integers(-10**12, 10**12)), min_size=1, max_size=30))
def test_sign_sqrt5_matches_scalar(pairs):
    p = np.array([a for a, _ in pairs], dtype=np.int64)
    q = np.array([b for _, b in pairs], dtype=np.int64)
    got = sign_sqrt5(p, q)
    assert list(got) == [_scalar_sign(a, b) for a, b in pairs]


def _scalar_sign(a: int, b: int) -> int:
    # sign of a + b*sqrt5 by squaring, written independently of the library
    if a >= 0 and b >= 0:
        return int(a > 0 or b > 0)
    if a <= 0 and b <= 0:
        return -1
    d = a * a - 5 * b * b
    return (1 if a > 0 else -1) * (d > 0) - (1 if a > 0 else -1) * (d < 0)


def test_sign_sqrt5_object_path():
    big = np.array([3 * 10**40, -(10**40)], dtype=object)
    q = np.array([-(10**40), 10**40 + 1], dtype=object)
    assert list(sign_sqrt5(big, q)) == [1, 1]


def test_int_matrix_apply():
    m = IntMatrix.from_golden([[TAU, 1], [HALF, -TAU]])
    c = np.array([[1, 2], [-3, 5]])
    p, q = m.apply_int(c)
    for row, (pr, qr) in zip(c, zip(p, q)):
        for j in range(2):
            exact = sum((m.entry(j, k) * int(row[k]) for k in range(2)), GoldenRat(0))
            assert GoldenRat._raw(int(pr[j]), int(qr[j]), m.den) == exact


def test_golden_to_parts_common_denominator():
    ps, qs, den = golden_to_parts([HALF, TAU, GoldenRat(Fraction(1, 3))])
    assert den == 6
    assert (ps, qs) == ([3, 3, 2], [0, 3, 0])


@pytest.mark.parametrize(
    "lo_closed, hi_closed, expect",
    [(True, True, (True, True)), (False, True, (False, True)), (True, False, (True, False)), (False, False, (False, False))],
)
def test_interval_boundary_policy(lo_closed, hi_closed, expect):
    w = interval(0, 1, lo_closed, hi_closed)
    assert (w.contains((0,)), w.contains((1,))) == expect
    assert w.contains((HALF,))
    assert not w.contains((GoldenRat(2),))


def test_degenerate_interval():
    with pytest.raises(DegenerateWindowError):
        interval(1, 1)


def test_square_hull_and_policy():
    w = facets_from_vertices([(0, 0), (1, 0), (0, 1), (1, 1), (HALF, HALF)])
    assert len(w.facets) == 4
    assert len(w.vertices) == 5  # interior points are kept but lie on no facet
    assert w.validate() == []
    assert w.contains((1, 1))
    assert not w.with_policy(False).contains((1, HALF))
    assert w.with_policy(False).contains((HALF, HALF))


def test_collinear_points_are_degenerate():
    with pytest.raises(DegenerateWindowError):
        facets_from_vertices([(0, 0), (1, 1), (2, 2)])


def _cube(scale=1):
    return [tuple(GoldenRat(s * scale) for s in v) for v in itertools.product((-1, 1), repeat=3)]


def test_brute_and_qhull_agree_on_icosahedron():
    verts = []
    for s1, s2 in itertools.product((1, -1), repeat=2):
        for k in range(3):
            v = [GoldenRat(0), GoldenRat(s1), s2 * TAU]
            verts.append(tuple(v[(i + k) % 3] for i in range(3)))
    brute = hull_incidence(verts, "brute")
    fast = hull_incidence(verts, "qhull")
    assert len(brute[0]) == 20
    assert set(brute[0]) == set(fast[0])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=10))
def test_membership_matches_tester(points):
    w = facets_from_vertices(_cube() + [(GoldenRat(0), GoldenRat(0), TAU)])
    ident = [[GoldenRat(int(i == j)) for j in range(3)] for i in range(3)]
    tester = w.linear_tester(ident)
    got = tester(np.array(points, dtype=np.int64))
    assert list(got) == [w.contains(p) for p in points]


def test_kappa_scaled_window_scales_region():
    w = facets_from_vertices(_cube(), kappa_scaled=True)
    # kappa is about 0.6015
    assert w.contains((GoldenRat(Fraction(3, 5)), 0, 0))
    assert not w.contains((GoldenRat(Fraction(603, 1000)), 0, 0))
    assert w.validate_fast() == []


def test_translated_and_transformed():
    w = interval(0, 1)
    t = w.translated((HALF,))
    assert t.contains((GoldenRat(Fraction(3, 2)),))
    assert not t.contains((GoldenRat(Fraction(1, 4)),))
    neg = w.transformed([[GoldenRat(-1)]])
    assert neg.contains((GoldenRat(-1),))
    sym = interval(-HALF, HALF)
    assert sym.transformed([[GoldenRat(-1)]]).same_region(sym)
    assert not w.transformed([[GoldenRat(-1)]]).same_region(w)


def test_json_round_trip():
    w = facets_from_vertices(_cube(), kappa_scaled=True).translated((HALF, 0, TAU))
    back = ConvexWindow.from_json(w.to_json())
    assert back.same_region(w)
    assert back.vertices == w.vertices


def test_window_union():
    u = WindowUnion((interval(0, 1), interval(2, 3)))
    assert u.contains((GoldenRat(Fraction(5, 2)),))
    assert not u.contains((GoldenRat(Fraction(3, 2)),))
    test = u.linear_tester([[GoldenRat(1)]])
    assert list(test(np.array([[0], [1], [2], [4]]))) == [True, True, True, False]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=10))
def test_kappa_membership_matches_tester(points):
    w = facets_from_vertices(_cube(), kappa_scaled=True)
    scale = [[GoldenRat(Fraction(int(i == j), 8)) for j in range(3)] for i in range(3)]
    got = w.linear_tester(scale)(np.array(points, dtype=np.int64))
    assert list(got) == [w.contains(tuple(GoldenRat(Fraction(c, 8)) for c in p)) for p in points]
