"""The 120 unit icosians, their A5 images, and the H2/H3/H4 root systems."""

from __future__ import annotations

from qcjordan.icosian import TABLE1, build_icosian_group, e8_gram, integer_det
from qcjordan.roots_coxeter import build_delta, check_crystallographic, group_order, verify_coxeter

# %% The binary icosahedral group with its double cover onto A5.
g = build_icosian_group()
print("order:", len(g.elements), " kernel:", [str(e) for e in g.kernel()])
for row in TABLE1:
    print(f"  {str(row['icosian']):70s} -> {g.a5_image[row['icosian']]}  (listed {row['permutation']})")

# %% The icosian ring carries E8: its Gram matrix is even with determinant 1.
gram = e8_gram()
print("E8 Gram determinant:", integer_det(gram))

# %% Root systems: sizes, Coxeter relations, group orders.
for n in (2, 3, 4):
    d = build_delta(n)
    print(f"H{n}: {len(d)} roots, Coxeter ok {verify_coxeter(d).ok}, "
          f"group order {group_order(d)}, crystallographic {check_crystallographic(d)}")
