"""Symmetry transfer and the windowed Witt bracket."""

from __future__ import annotations

from fractions import Fraction

from qcjordan.aperiodic_algebra import (
    WittElement,
    acceptability_check,
    icosian_conjugation,
    jacobi_check,
    penrose_rotation,
    symmetry_transfer_check,
    witt_bracket,
)
from qcjordan.golden_field import GoldenRat
from qcjordan.icosian import TABLE1
from qcjordan.model_set import enumerate_points, preset
from qcjordan.window import interval

# %% Negation on the palindromic chain, multiplication by xi on Penrose.
fib = preset("fibonacci-palindromic")
print("F_pal, x -> -x:", symmetry_transfer_check(fib, [[-1]], enumerate_points(fib, 9), 9).to_json())
pen = preset("penrose")
print("Penrose, z -> xi z:", symmetry_transfer_check(pen, penrose_rotation(pen), enumerate_points(pen, 3), 3).ok)

# %% The half-open window (0, 1] is not symmetric, so the hypothesis fails.
half = preset("fibonacci")
print("(0,1], x -> -x hypothesis:", symmetry_transfer_check(half, [[-1]]).hypothesis_ok)

# %% Conjugation by the listed icosians on pure icosians.
ico = preset("z6-icosian-conjugate")
pts = enumerate_points(ico, 2)
print("icosian conjugations:", [symmetry_transfer_check(ico, icosian_conjugation(r["icosian"]), pts, 2).ok for r in TABLE1])

# %% Witt bracket [L_x, L_y] = (x - y) chi(x* + y*) L_{x+y} on the window [0, 1].
unit = preset("fibonacci-unit")
a, b, c = WittElement.gen((1, 0)), WittElement.gen((0, 1)), WittElement.gen((2, -1))
print("[L_(1,0), L_(0,1)] =", witt_bracket(a, b, unit).terms)
print("Jacobi:", jacobi_check(a, b, c, unit, windowed=True))

# %% Acceptability: [0, 1] passes, [-1/2, 1/2] does not.
samples = [(GoldenRat(Fraction(k, 4)),) for k in range(-2, 5)]
for lo, hi in [(0, 1), (Fraction(-1, 2), Fraction(1, 2))]:
    w = interval(lo, hi)
    inside = [s for s in samples if w.contains(s)]
    print(f"[{lo}, {hi}] violations:", len(acceptability_check(w, inside).violations))
