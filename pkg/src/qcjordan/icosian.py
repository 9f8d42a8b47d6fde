"""Icosians: quaternions over Z[tau] with half-integer components.

An ``Icosian`` stores the *doubled* coordinates ``X = 2x`` as eight integers
``(A0, B0, A1, B1, A2, B2, A3, B3)``; component ``k`` of the quaternion is
``(Ak + tau*Bk)/2``.  Every element of the icosian ring fits this convention,
including the 600-cell vertices with entries ``1/2`` and ``tau/2``.

The integral coordinates ``(a, b, c, d, e, f, g, h)`` of ring elements whose
components lie in Z[tau] are available through :meth:`Icosian.to_z8`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .golden_field import GoldenInt, GoldenRat, format_golden, golden_mul

__all__ = [
    "Icosian",
    "IcosianGroupTable",
    "quat_mul",
    "conjugate",
    "quaternionic_norm",
    "euclidean_norm",
    "euclidean_inner",
    "build_icosian_group",
    "in_icosian_ring",
    "icosian_ring_basis",
    "A_VECTORS",
    "e8_project_parallel",
    "e8_project_perp",
    "e8_basis_images",
    "e8_gram",
    "integer_det",
    "residue_table",
    "parse_cycles",
    "TABLE1",
]


def _pairs(x: Sequence[int]) -> list[GoldenInt]:
    return [GoldenInt(x[2 * k], x[2 * k + 1]) for k in range(len(x) // 2)]


def _flatten(components: Iterable[GoldenInt]) -> tuple[int, ...]:
    out: list[int] = []
    for g in components:
        out.extend((g.a, g.b))
    return tuple(out)


@dataclass(frozen=True, order=True)
class Icosian:
    """Quaternion ``(X0 + X1 i + X2 j + X3 k)/2`` with ``Xk`` in Z[tau]."""

    doubled: tuple[int, ...]

    def __post_init__(self):
        if len(self.doubled) != 8:
            raise ValueError("an icosian has eight doubled integer coordinates")
        object.__setattr__(self, "doubled", tuple(int(v) for v in self.doubled))

    @classmethod
    def from_z8(cls, coords: Sequence[int]) -> Icosian:
        """Build from integral coordinates ``x = (a+tau b) + (c+tau d)i + ...``."""
        if len(coords) != 8:
            raise ValueError("integral coordinates have length 8")
        return cls(tuple(2 * int(v) for v in coords))

    @classmethod
    def from_values(cls, values: Sequence) -> Icosian:
        """Build from four Q(sqrt5) component values; each must lie in Z[tau]/2."""
        doubled = []
        for v in values:
            g = (GoldenRat.coerce(v) * 2).to_golden_int()
            doubled.extend((g.a, g.b))
        return cls(tuple(doubled))

    @classmethod
    def unit(cls, name: str) -> Icosian:
        idx = "1ijk".index(name)
        x = [0] * 8
        x[2 * idx] = 2
        return cls(tuple(x))

    @property
    def components(self) -> list[GoldenInt]:
        """Doubled components ``Xk`` as GoldenInt."""
        return _pairs(self.doubled)

    @property
    def values(self) -> list[GoldenRat]:
        return [g.to_rat() / 2 for g in self.components]

    def is_integral(self) -> bool:
        return all(v % 2 == 0 for v in self.doubled)

    def to_z8(self) -> tuple[int, ...]:
        """Integral coordinates; raises ValueError when a component is not in Z[tau]."""
        if not self.is_integral():
            raise ValueError(f"{self} has half-integer components; no Z^8 coordinates")
        return tuple(v // 2 for v in self.doubled)

    def __add__(self, other: Icosian) -> Icosian:
        return Icosian(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: Icosian) -> Icosian:
        return Icosian(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> Icosian:
        return Icosian(tuple(-a for a in self.doubled))

    def __mul__(self, other):
        if isinstance(other, Icosian):
            return quat_mul(self, other)
        if isinstance(other, int):
            other = GoldenInt(other, 0)
        if isinstance(other, GoldenInt):
            return Icosian(_flatten(golden_mul(other, g) for g in self.components))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, GoldenInt)):
            return self * other
        return NotImplemented

    def conjugate(self) -> Icosian:
        return conjugate(self)

    def star(self) -> Icosian:
        """Componentwise Galois conjugation tau -> 1 - tau."""
        d = self.doubled
        return Icosian(tuple(v for k in range(4) for v in (d[2 * k] + d[2 * k + 1], -d[2 * k + 1])))

    def is_zero(self) -> bool:
        return not any(self.doubled)

    def __str__(self):
        parts = [format_golden(v) for v in self.values]
        return "(" + ", ".join(parts) + ")"


def _hamilton(x: Sequence[GoldenInt], y: Sequence[GoldenInt]) -> list[GoldenInt]:
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    m = golden_mul
    return [
        m(a1, a2) - m(b1, b2) - m(c1, c2) - m(d1, d2),
        m(a1, b2) + m(b1, a2) + m(c1, d2) - m(d1, c2),
        m(a1, c2) - m(b1, d2) + m(c1, a2) + m(d1, b2),
        m(a1, d2) + m(b1, c2) - m(c1, b2) + m(d1, a2),
    ]


def quat_mul(x: Icosian, y: Icosian) -> Icosian:
    """Hamilton product.  Raises ValueError if the result leaves (1/2)Z[tau]^4."""
    prod = _flatten(_hamilton(x.components, y.components))
    # (X/2)(Y/2) = (XY/2)/2, so the doubled product is XY/2
    if any(v % 2 for v in prod):
        raise ValueError("product is not representable with half-integer components")
    return Icosian(tuple(v // 2 for v in prod))


def conjugate(x: Icosian) -> Icosian:
    d = x.doubled
    return Icosian(d[:2] + tuple(-v for v in d[2:]))


def quaternionic_norm(x: Icosian) -> GoldenRat:
    """``n(x) = x * conj(x)``, a real number ``p + q*sqrt5``."""
    total = GoldenInt(0, 0)
    for g in x.components:
        total = total + golden_mul(g, g)
    return total.to_rat() / 4


def euclidean_norm(x: Icosian) -> Fraction:
    """``n_E(x) = p + q`` where ``n(x) = p + q*sqrt5``."""
    n = quaternionic_norm(x)
    return n.p + n.q


def euclidean_inner(x: Icosian, y: Icosian) -> Fraction:
    """Polar form ``n_E(x+y) - n_E(x) - n_E(y)`` (twice the bilinear form)."""
    return euclidean_norm(x + y) - euclidean_norm(x) - euclidean_norm(y)


# ---------------------------------------------------------------------------
# the 120-element group

# doubled Z[tau] pairs for the entries appearing in the 600-cell vertices
_ONE = (2, 0)
_HALF = (1, 0)
_HALF_TAU = (0, 1)
_HALF_INV_TAU = (-1, 1)  # 1/tau = tau - 1


def _even_permutations(n: int) -> list[tuple[int, ...]]:
    def parity(p):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        return inv % 2

    return [p for p in itertools.permutations(range(n)) if parity(p) == 0]


def _signed(pair: tuple[int, int], s: int) -> tuple[int, int]:
    return (s * pair[0], s * pair[1])


def _group_vertices() -> list[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()
    zero = (0, 0)
    for pos in range(4):
        for s in (1, -1):
            comps = [zero] * 4
            comps[pos] = _signed(_ONE, s)
            out.add(tuple(v for c in comps for v in c))
    for signs in itertools.product((1, -1), repeat=4):
        out.add(tuple(v for s in signs for v in _signed(_HALF, s)))
    base = [zero, _HALF, _HALF_INV_TAU, _HALF_TAU]
    for perm in _even_permutations(4):
        for signs in itertools.product((1, -1), repeat=4):
            comps = [_signed(base[perm[k]], signs[k]) for k in range(4)]
            out.add(tuple(v for c in comps for v in c))
    return sorted(out, reverse=True)


def parse_cycles(text: str, n: int = 5) -> tuple[int, ...]:
    """Cycle notation such as ``(2,3)(4,5)`` to an image tuple on ``1..n``.

    The tuple lists ``p(1), ..., p(n)``.
    """
    img = list(range(1, n + 1))
    for cyc in text.replace(" ", "").strip("()").split(")("):
        if not cyc:
            continue
        pts = [int(v) for v in cyc.split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b
    return tuple(img)


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """``(p o q)(x) = p(q(x))``."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def _h(num: int = 0, tau: int = 0) -> GoldenRat:
    """``(num + tau*tau_coeff)/2`` as a GoldenRat."""
    return GoldenInt(num, tau).to_rat() / 2


_INV_TAU = GoldenInt(-1, 1).to_rat()
_TAU = GoldenInt(0, 1).to_rat()


def _m(rows) -> tuple[tuple[GoldenRat, ...], ...]:
    return tuple(tuple(GoldenRat.coerce(v) / 2 for v in row) for row in rows)


# Five correspondences: root of Delta_4, icosian, A5 permutation, isometry of R^3.
TABLE1 = (
    {
        "root": (0, 1, 0, 0),
        "icosian": Icosian((0, 0, 2, 0, 0, 0, 0, 0)),
        "permutation": "(2,3)(4,5)",
        "matrix": _m([[-1, _INV_TAU, -_TAU], [_INV_TAU, -_TAU, -1], [-_TAU, -1, _INV_TAU]]),
    },
    {
        "root": (0, 0, 1, 0),
        "icosian": Icosian((0, 0, 0, 0, 2, 0, 0, 0)),
        "permutation": "(2,4)(5,3)",
        "matrix": _m([[-_TAU, 1, -_INV_TAU], [1, -_INV_TAU, _TAU], [-_INV_TAU, _TAU, -1]]),
    },
    {
        "root": (0, 0, 0, 1),
        "icosian": Icosian((0, 0, 0, 0, 0, 0, 2, 0)),
        "permutation": "(2,5)(3,4)",
        "matrix": _m([[-_INV_TAU, -_TAU, 1], [-_TAU, -1, -_INV_TAU], [1, -_INV_TAU, -_TAU]]),
    },
    {
        "root": (Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
        "icosian": Icosian((1, 0, 1, 0, 1, 0, 1, 0)),
        "permutation": "(3,4,5)",
        "matrix": _m([[-1, _INV_TAU, _TAU], [-_INV_TAU, _TAU, -1], [-_TAU, -1, -_INV_TAU]]),
    },
    {
        "root": (0, _h(1), -_INV_TAU / 2, _TAU / 2),
        "icosian": Icosian((0, 0, 1, 0, 1, -1, 0, 1)),
        "permutation": "(1,3)(4,5)",
        "matrix": _m([[-1, -_INV_TAU, _TAU], [-_INV_TAU, -_TAU, -1], [_TAU, -1, _INV_TAU]]),
    },
)


@dataclass(frozen=True)
class IcosianGroupTable:
    elements: tuple[Icosian, ...]
    product_index: tuple[tuple[int, ...], ...]
    a5_image: dict = field(hash=False)

    def index(self, x: Icosian) -> int:
        return self._lookup[x]

    @property
    def _lookup(self) -> dict:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = {e: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def mul(self, i: int, j: int) -> int:
        return self.product_index[i][j]

    def kernel(self) -> list[Icosian]:
        ident = tuple(range(1, 6))
        return [e for e in self.elements if self.a5_image[e] == ident]

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "elements": [[format_golden(v) for v in e.values] for e in self.elements],
            "doubled": [list(e.doubled) for e in self.elements],
            "product_index": [list(row) for row in self.product_index],
            "a5_image": [list(self.a5_image[e]) for e in self.elements],
        }


def _extend_homomorphism(elements, index, product, gens: dict) -> dict:
    """Extend generator images to the whole group by breadth-first search.

    Raises ValueError if two words for the same element disagree.
    """
    ident_idx = index[Icosian.unit("1")]
    image = {ident_idx: tuple(range(1, 6))}
    frontier = [ident_idx]
    gen_items = [(index[g], p) for g, p in gens.items()]
    while frontier:
        nxt = []
        for i in frontier:
            for gi, gp in gen_items:
                j = product[i][gi]
                val = compose(image[i], gp)
                if j in image:
                    if image[j] != val:
                        raise ValueError("generator images do not define a homomorphism")
                else:
                    image[j] = val
                    nxt.append(j)
        frontier = nxt
    if len(image) != len(elements):
        raise ValueError("generators do not generate the group")
    return image


@lru_cache(maxsize=1)
def build_icosian_group() -> IcosianGroupTable:
    """The 120 unit icosians with product table and the A5 double-cover map."""
    elements = tuple(Icosian(v) for v in _group_vertices())
    if len(elements) != 120:
        raise RuntimeError(f"expected 120 icosians, got {len(elements)}")
    index = {e: i for i, e in enumerate(elements)}
    product = []
    for x in elements:
        row = []
        for y in elements:
            z = quat_mul(x, y)
            if z not in index:
                raise RuntimeError(f"group not closed: {x} * {y} = {z}")
            row.append(index[z])
        product.append(tuple(row))
    for e in elements:
        if quaternionic_norm(e) != 1:
            raise RuntimeError(f"non-unit element {e}")
    gens = {row["icosian"]: parse_cycles(row["permutation"]) for row in TABLE1}
    image_idx = _extend_homomorphism(elements, index, product, gens)
    for i in range(120):
        for j in range(120):
            if image_idx[product[i][j]] != compose(image_idx[i], image_idx[j]):
                raise RuntimeError("A5 map is not multiplicative")
    a5 = {elements[i]: p for i, p in image_idx.items()}
    return IcosianGroupTable(elements, tuple(product), a5)


# ---------------------------------------------------------------------------
# the icosian ring as a Z-module


def _f2_reduce(basis: list[int], v: int) -> int:
    for b in basis:
        v = min(v, v ^ b)
    return v


@lru_cache(maxsize=1)
def _residue_table() -> tuple[bool, ...]:
    basis: list[int] = []
    for e in build_icosian_group().elements:
        v = _f2_reduce(basis, _residue(e.doubled))
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return tuple(_f2_reduce(basis, r) == 0 for r in range(256))


def _residue(doubled: Sequence[int]) -> int:
    return sum((v & 1) << k for k, v in enumerate(doubled))


def residue_table() -> tuple[bool, ...]:
    """Which parity patterns of doubled coordinates belong to the ring."""
    return _residue_table()


def in_icosian_ring(x) -> bool:
    """Membership in the Z-span of the icosian group.

    Since Z[tau]^4 lies in the ring, ``X/2`` is in the ring exactly when the
    parity pattern of ``X`` is a sum of parity patterns of group elements.
    """
    doubled = x.doubled if isinstance(x, Icosian) else tuple(x)
    return _residue_table()[_residue(doubled)]


def _hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form (nonzero rows only)."""
    rows = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    out: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            col += 1
            continue
        while len([r for r in rows if r[col] != 0]) > 1:
            nz = sorted((r for r in rows if r[col] != 0), key=lambda r: abs(r[col]))
            pivot = nz[0]
            for r in nz[1:]:
                q = r[col] // pivot[col]
                for k in range(ncols):
                    r[k] -= q * pivot[k]
            rows = [r for r in rows if any(r)]
        pivot = next(r for r in rows if r[col] != 0)
        if pivot[col] < 0:
            pivot[:] = [-v for v in pivot]
        rows = [r for r in rows if r is not pivot]
        for prev in out:
            q = prev[col] // pivot[col]
            for k in range(ncols):
                prev[k] -= q * pivot[k]
        out.append(pivot)
        col += 1
    return out


@lru_cache(maxsize=1)
def icosian_ring_basis() -> tuple[Icosian, ...]:
    """A Z-basis (in Hermite normal form of doubled coordinates) of the ring."""
    rows = _hnf([list(e.doubled) for e in build_icosian_group().elements])
    if len(rows) != 8:
        raise RuntimeError("the icosian ring should have rank 8")
    return tuple(Icosian(tuple(r)) for r in rows)


# ---------------------------------------------------------------------------
# E8 correspondence

# a1..a4 in doubled coordinates
A_VECTORS = (
    Icosian((-1, 1, 0, -1, 0, 0, -1, 0)),  # (1/tau, -tau, 0, -1)/2
    Icosian((0, 0, -1, 1, 0, -1, 1, 0)),  # (0, 1/tau, -tau, 1)/2
    Icosian((0, 0, 1, 0, -1, 1, 0, -1)),  # (0, 1, 1/tau, -tau)/2
    Icosian((0, 0, -1, 0, -1, 1, 0, 1)),  # (0, -1, 1/tau, tau)/2
)

# (rational index, tau index) of the coefficient multiplying a1..a4, 0-based
_PAIRING = ((0, 6), (1, 5), (2, 4), (7, 3))


def e8_project_parallel(c: Sequence[int]) -> Icosian:
    """``pi_par(X) = (c1 + tau c7) a1 + (c2 + tau c6) a2 + (c3 + tau c5) a3 + (c8 + tau c4) a4``."""
    if len(c) != 8:
        raise ValueError("E8 coefficient vectors have length 8")
    total = Icosian((0,) * 8)
    for (r, t), a in zip(_PAIRING, A_VECTORS):
        total = total + a * GoldenInt(c[r], c[t])
    return total


def e8_project_perp(c: Sequence[int]) -> Icosian:
    """``pi_perp(X) = sum (c_r - c_t/tau) a_k^*``, with ``1/tau = tau - 1``."""
    if len(c) != 8:
        raise ValueError("E8 coefficient vectors have length 8")
    total = Icosian((0,) * 8)
    for (r, t), a in zip(_PAIRING, A_VECTORS):
        coeff = GoldenInt(c[r], 0) - golden_mul(GoldenInt(c[t], 0), GoldenInt(-1, 1))
        total = total + a.star() * coeff
    return total


def e8_basis_images() -> list[Icosian]:
    return [e8_project_parallel([int(i == k) for i in range(8)]) for k in range(8)]


def e8_gram(vectors: Sequence[Icosian] | None = None) -> list[list[Fraction]]:
    """Gram matrix of the polar form of n_E on the given vectors."""
    vs = list(vectors) if vectors is not None else e8_basis_images()
    return [[euclidean_inner(x, y) for y in vs] for x in vs]


def integer_det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det
