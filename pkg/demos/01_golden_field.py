"""Exact arithmetic in Z[tau] and Q(sqrt5)."""

from __future__ import annotations

from qcjordan.golden_field import GoldenInt, GoldenRat, format_golden, parse_golden

# %% tau satisfies tau^2 = tau + 1; GoldenInt(a, b) is a + b*tau
tau = GoldenInt(0, 1)
print("tau^2        =", tau * tau)
print("tau^2 - tau  =", tau * tau - tau)

# %% the Galois conjugate (star) sends tau to 1 - tau
print("tau*         =", tau.star())
print("tau * tau*   =", tau * tau.star(), "(the norm, -1)")

# %% rationals over sqrt5 parse and print exactly
x = GoldenRat.coerce(parse_golden("1/2+3/4*sqrt5"))
print("x            =", format_golden(x))
print("x * x^-1     =", format_golden(x * x.inverse()))
print("sign(2 - tau) =", (GoldenRat(2) - tau.to_rat()).sign())
