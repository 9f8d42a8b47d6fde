from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcjordan.golden_field import GoldenInt
from qcjordan.icosian import (
    A_VECTORS,
    TABLE1,
    Icosian,
    build_icosian_group,
    conjugate,
    e8_basis_images,
    e8_gram,
    e8_project_parallel,
    e8_project_perp,
    euclidean_norm,
    icosian_ring_basis,
    in_icosian_ring,
    integer_det,
    parse_cycles,
    quat_mul,
    quaternionic_norm,
)

PHI = (1 + math.sqrt(5)) / 2


def _fq(x: Icosian) -> np.ndarray:
    return np.array([float(v) for v in x.values])


def _hamilton(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return np.array([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ])


@pytest.fixture(scope="module")
def group():
    return build_icosian_group()


def test_group_has_120_unit_elements(group):
    assert len(group.elements) == 120
    assert len(set(group.elements)) == 120
    assert all(quaternionic_norm(e) == 1 for e in group.elements)


def test_group_matches_float_closure_of_two_generators(group):
    # independent oracle: float closure of <i, (1 + i + j + k)/2, (tau + i/tau + j)/2>
    gens = [np.array([0, 1, 0, 0.0]), np.array([0.5] * 4), np.array([PHI, 1 / PHI, 1, 0]) / 2]
    found = [np.array([1.0, 0, 0, 0])]
    frontier = list(found)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _hamilton(x, g)
                if not any(np.allclose(y, z, atol=1e-9) for z in found):
                    found.append(y)
                    nxt.append(y)
        frontier = nxt
    assert len(found) == 120
    ours = np.array([_fq(e) for e in group.elements])
    for y in found:
        assert np.min(np.abs(ours - y).sum(axis=1)) < 1e-9


def test_product_table_agrees_with_quat_mul(group):
    els = group.elements
    for i, j in itertools.product(range(0, 120, 7), range(0, 120, 11)):
        assert els[group.mul(i, j)] == quat_mul(els[i], els[j])


def test_a5_images_and_kernel(group):
    for row in TABLE1:
        assert group.a5_image[row["icosian"]] == parse_cycles(row["permutation"])
    one = Icosian.unit("1")
    assert set(group.kernel()) == {one, -one}


def test_a5_image_is_onto(group):
    assert len(set(group.a5_image.values())) == 60


@pytest.mark.parametrize(
    "text, perm",
    [("(2,3)(4,5)", (1, 3, 2, 5, 4)), ("(3,4,5)", (1, 2, 4, 5, 3)), ("()", (1, 2, 3, 4, 5))],
)
def test_parse_cycles(text, perm):
    assert parse_cycles(text) == perm


def test_hamilton_units():
    i, j, k = (Icosian.unit(n) for n in "ijk")
    one = Icosian.unit("1")
    assert quat_mul(i, j) == k
    assert quat_mul(j, i) == -k
    assert quat_mul(i, i) == -one
    assert quat_mul(quat_mul(i, j), k) == -one


ring_coords = st.lists(st.integers(-20, 20), min_size=8, max_size=8)


@given(ring_coords, ring_coords)
def test_norm_is_multiplicative(a, b):
    x, y = Icosian.from_z8(a), Icosian.from_z8(b)
    assert quaternionic_norm(quat_mul(x, y)) == quaternionic_norm(x) * quaternionic_norm(y)


@given(ring_coords)
def test_conjugate_product_is_norm(a):
    x = Icosian.from_z8(a)
    prod = quat_mul(x, conjugate(x))
    assert prod.values[1:] == [0, 0, 0]
    assert prod.values[0] == quaternionic_norm(x)


@given(ring_coords)
def test_star_is_involution_and_z8_roundtrip(a):
    x = Icosian.from_z8(a)
    assert x.star().star() == x
    assert x.to_z8() == tuple(a)


def test_half_integer_has_no_z8_coordinates():
    with pytest.raises(ValueError):
        Icosian((1, 0, 1, 0, 1, 0, 1, 0)).to_z8()


def test_ring_membership(group):
    assert all(in_icosian_ring(e) for e in group.elements)
    assert in_icosian_ring(Icosian.from_z8((1, 2, 3, 4, 5, 6, 7, 8)))
    assert not in_icosian_ring(Icosian((1, 0, 0, 0, 0, 0, 0, 0)))
    basis = icosian_ring_basis()
    assert len(basis) == 8
    for a, b in itertools.product(basis, repeat=2):
        assert in_icosian_ring(quat_mul(a, b))


def test_e8_gram_is_even_unimodular():
    gram = e8_gram()
    assert integer_det(gram) == 1
    assert all(v.denominator == 1 for row in gram for v in row)
    assert all(gram[k][k] % 2 == 0 and gram[k][k] > 0 for k in range(8))
    assert all(gram[i][j] == gram[j][i] for i in range(8) for j in range(8))


def test_e8_images_lie_in_ring():
    assert all(in_icosian_ring(v) for v in e8_basis_images())
    assert all(euclidean_norm(a) == 1 for a in A_VECTORS)


@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_projections_are_galois_twins(c):
    # pi_perp(X) is the star of pi_par(X)
    assert e8_project_perp(c) == e8_project_parallel(c).star()


def test_integer_det_small():
    assert integer_det([[2, 1], [1, 1]]) == 1
    assert integer_det([[1, 2], [2, 4]]) == 0


def test_scalar_multiplication():
    x = Icosian.unit("i")
    assert (x * GoldenInt(0, 1)).values[1] == GoldenInt(0, 1).to_rat()
    assert 3 * x == x + x + x
