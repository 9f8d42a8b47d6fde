"""Quasiaddition x |- y = tau^2 x - tau y and closure on convex windows."""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

from qcjordan.model_set import enumerate_points, preset
from qcjordan.quasiadd import check_closure, check_identities, identity_suite, qadd
from qcjordan.window import WindowUnion, interval

# %% On a pair (a, b) = a + b tau the operation is integral.
x, y = (1, 1), (-1, -2)
print("x |- y =", qadd(x, y), "  y |- x =", qadd(y, x), "  x |- x =", qadd(x, x))
print("identities on one triple:", check_identities(x, y, (3, -2)).ok)

# %% Randomized exact replay of every identity on 10^4 lattice triples.
report = identity_suite(preset("penrose"), 10_000, seed=1)
print("penrose identities:", {k: v["fail"] for k, v in report["identity"].items()})

# %% Closure holds for convex windows ...
for name, r in [("fibonacci-palindromic", 9), ("penrose", 3), ("z6", 2)]:
    scheme = preset(name)
    rep = check_closure(scheme, enumerate_points(scheme, r))
    print(f"{name}: {rep.pairs} ordered pairs, {len(rep.violations)} violations")

# %% ... and fails for a window with a gap.
gap = replace(preset("fibonacci-palindromic"),
              window=WindowUnion((interval(-1, Fraction(-1, 4)), interval(Fraction(1, 4), 1))), name="gap")
rep = check_closure(gap, enumerate_points(gap, 6))
print("gap window violations:", len(rep.violations), "first:", rep.violations[0])
