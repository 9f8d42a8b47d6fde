"""The Elser-Sloane quasicrystal: E8 through the icosian ring, 720-vertex window."""

from __future__ import annotations

import time

from qcjordan.model_set import elser_sloane_vertices, elser_sloane_window, enumerate_points, preset
from qcjordan.quasiadd import check_closure

t0 = time.perf_counter()
verts = elser_sloane_vertices()
win = elser_sloane_window()  # loaded from the cached H-representation and revalidated
print(f"{len(verts)} vertices, {len(win.facets)} facets, problems {win.validate_fast()}")

# %% Radius 3 is the first radius beyond the origin: tau^2 times the 120 unit icosians.
scheme = preset("elser-sloane")
for r in (1, 2, 3):
    print(f"radius {r}: {len(enumerate_points(scheme, r))} points")

pts = enumerate_points(scheme, 3)
rep = check_closure(scheme, pts)
print(f"closure: {rep.pairs} pairs, {len(rep.violations)} violations, {time.perf_counter() - t0:.1f}s")
