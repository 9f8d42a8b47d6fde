"""Cut-and-project model sets: the palindromic Fibonacci chain and a Penrose vertex set.

Run with an output directory to also write SVG and OBJ renderings:

    python3 demos/02_model_sets.py out/
"""

from __future__ import annotations

import pathlib
import sys

from qcjordan.aperiodic_algebra import fib_label_coords
from qcjordan.exports import points_to_obj, points_to_svg
from qcjordan.golden_field import format_golden
from qcjordan.model_set import enumerate_points, preset

# %% The palindromic chain keeps a + b*tau whose conjugate a + b(1 - tau) lies in [-1/2, 1/2].
fib = preset("fibonacci-palindromic")
for p in enumerate_points(fib, "2+4*tau"):
    print(p.coords, "physical", format_golden(fib.physical(p.coords)[0]), "star", format_golden(p.star[0]))

# %% Integer labels n <-> (n', n) enumerate the chain in order.
print("labels -4..4:", [fib_label_coords(n) for n in range(-4, 5)])

# %% Penrose: z = (a + b tau) + (c + d tau) xi^2 with z* in the pentagon.
pen = preset("penrose")
pts = enumerate_points(pen, 4)
print(f"penrose: {len(pts)} points within radius 4")
print("(0,1,1,1) in set:", pen.contains((0, 1, 1, 1)), " (3,0,0,0) in set:", pen.contains((3, 0, 0, 0)))

if len(sys.argv) > 1:
    out = pathlib.Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    big = enumerate_points(pen, 12)
    (out / "penrose.svg").write_text(points_to_svg(pen, big))
    (out / "penrose.obj").write_text(points_to_obj(pen, big))
    print(f"wrote {len(big)} points to {out}")
