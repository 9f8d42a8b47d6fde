"""The aperiodic Jordan algebra on the palindromic Fibonacci chain."""

from __future__ import annotations

from qcjordan.aperiodic_algebra import (
    fib_label_coords,
    format_fib_cell,
    generator,
    ideal_probe,
    jordan_identity_check,
    jordan_table,
    markdown_table,
    unit_probe,
)
from qcjordan.model_set import enumerate_points, preset

fib = preset("fibonacci-palindromic")

# %% Multiplication table L_n o L_m for n in -4..4, m in -2..2.
rows, cols = range(-4, 5), range(-2, 3)
table = jordan_table(fib, [fib_label_coords(n) for n in rows], [fib_label_coords(m) for m in cols])
cells = [[f"L_{n}", *(format_fib_cell(c) for c in row)] for n, row in zip(rows, table)]
print(markdown_table([f"L_{m}" for m in cols], cells, corner="o"))

# %% The Jordan identity holds on generators but not on sums of them.
L = lambda n: generator(fib, fib_label_coords(n))  # noqa: E731
print("generators L_1, L_2:", jordan_identity_check(L(1), L(2)))
print("a = L_0 + L_1, b = L_2:", jordan_identity_check(L(0) + L(1), L(2)))

# %% No unit: only x = 0 satisfies L_x o L_0 = L_0 on the batch.
batch = enumerate_points(fib, 9)
print("unit probe fixed points:", unit_probe(fib, batch).details["fixed"])
print("ideal probe from L_0:", ideal_probe(fib, (0, 0), batch).details)
