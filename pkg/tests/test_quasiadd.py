from __future__ import annotations

import math
import random
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcjordan.model_set import enumerate_points, preset
from qcjordan.quasiadd import (
    check_closure,
    check_identities,
    identity_suite,
    qadd,
    qadd_many,
    qadd_points,
    qadd_repeated,
    qadd_repeated_closed,
    qadd_z8,
    random_lattice_batch,
    random_lattice_coords,
    star_identity_holds,
    tau_power_coords,
)
from qcjordan.window import WindowUnion, interval

PHI = (1 + math.sqrt(5)) / 2
pair = st.tuples(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
vec4 = st.tuples(*[st.integers(-500, 500)] * 4)


@given(pair, pair)
def test_qadd_float_oracle(x, y):
    fx, fy = x[0] + PHI * x[1], y[0] + PHI * y[1]
    a, b = qadd(x, y)
    assert math.isclose(a + PHI * b, PHI**2 * fx - PHI * fy, rel_tol=1e-9, abs_tol=1e-6)


@given(vec4, vec4)
def test_ring_and_integer_formulas_agree(x, y):
    assert qadd(x, y) == qadd_z8(x, y)
    assert tuple(qadd_many(np.array([x]), np.array([y]))[0]) == qadd(x, y)


@given(vec4, vec4, vec4)
def test_identities_hold(x, y, u):
    assert check_identities(x, y, u).ok


@given(vec4, vec4, st.integers(1, 10))
def test_repeated_closed_form(y, x, k):
    assert qadd_repeated(y, x, k) == qadd_repeated_closed(y, x, k)


def test_not_commutative_not_associative():
    x, y, z = (1, 0), (0, 1), (2, 3)
    assert qadd(x, y) != qadd(y, x)
    assert qadd(qadd(x, y), z) != qadd(x, qadd(y, z))


def test_tau_power():
    assert tau_power_coords((1, 0), 1) == (1, 1)
    assert tau_power_coords((1, 0), 2) == (2, 3)


def test_bad_inputs():
    with pytest.raises(ValueError):
        qadd((1, 2), (1, 2, 3, 4))
    with pytest.raises(ValueError):
        qadd_repeated((0, 0), (1, 1), 0)


@pytest.mark.parametrize("name", ["fibonacci-palindromic", "penrose", "z6", "z6-icosian", "elser-sloane"])
def test_star_identity(name):
    scheme = preset(name)
    rng = random.Random(1)
    for _ in range(30):
        x, y = random_lattice_coords(scheme, rng, 20), random_lattice_coords(scheme, rng, 20)
        assert star_identity_holds(scheme, x, y)


@pytest.mark.parametrize("name", ["fibonacci-palindromic", "penrose", "z6-icosian", "elser-sloane"])
def test_identity_suite_passes(name):
    report = identity_suite(preset(name), 2000, seed=3)
    assert report["ok"], report["identity"]
    assert set(report["identity"]) >= {"flexible", "swap", "z8_formula", "star_compatibility", "repeated_closed_form"}


def test_random_batch_respects_congruence():
    scheme = preset("elser-sloane")
    batch = random_lattice_batch(scheme, 200, np.random.default_rng(0))
    assert batch.shape == (200, 8)
    assert all(scheme.in_lattice(tuple(int(v) for v in row)) for row in batch)


@pytest.mark.parametrize("name", ["fibonacci-palindromic", "penrose", "z6", "elser-sloane"])
def test_closure_on_desk_batches(batches, name):
    scheme, pts = batches[name]
    report = check_closure(scheme, pts)
    assert report.pairs == len(pts) ** 2
    assert report.ok, report.violations[:3]


def test_closure_scalar_replay(batches):
    scheme, pts = batches["penrose"]
    op = qadd_points(scheme)
    for x in pts:
        for y in pts:
            assert scheme.contains(op(x, y).coords)


def test_nonconvex_window_breaks_closure():
    gap = WindowUnion((interval(-1, Fraction(-1, 4)), interval(Fraction(1, 4), 1)), name="gap")
    scheme = replace(preset("fibonacci-palindromic"), window=gap, name="gap")
    pts = enumerate_points(scheme, 6)
    report = check_closure(scheme, pts)
    assert not report.ok
    x, y = report.violations[0]
    assert not scheme.contains(qadd(x, y))
