"""Cut-and-project schemes, exact model-set membership and enumeration.

Every lattice here is written in *pair coordinates*: a flat integer tuple
``(a1, b1, a2, b2, ...)`` where pair ``i`` has value ``(ai + tau*bi)/den``.
The star map conjugates each pair (``tau -> 1 - tau``); the scheme's physical
and inner maps are Q(sqrt5)-linear in the pair values and their conjugates.

* Fibonacci: one pair, ``x = a + tau b``.
* Penrose: ``(a, b, c, d)`` for ``z = (a + b tau) + (c + d tau) xi^2``; the
  plane uses the basis ``(Re z, Im z / sin 72deg)`` so both maps stay exact.
* z6: three pairs, the rows of the 3x6 projection matrices.
* Icosian schemes: doubled quaternion coordinates (``den = 2``) with the
  icosian-ring congruence.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

import numpy as np

from .exact import IntMatrix, max_abs, sign_sqrt5, golden_to_parts
from .golden_field import GoldenInt, GoldenRat, format_golden, parse_golden
from .icosian import in_icosian_ring, residue_table
from .window import (
    ConvexWindow,
    DegenerateWindowError,
    WindowUnion,
    facets_from_vertices,
    interval,
)

__all__ = [
    "SchemeSpec",
    "QcPoint",
    "window_contains",
    "enumerate_points",
    "star_map",
    "translate_window",
    "preset",
    "PRESETS",
    "pentagon_vertices",
    "triacontahedron_vertices",
    "elser_sloane_vertices",
    "elser_sloane_window",
    "load_window_file",
]

TAU = GoldenInt(0, 1).to_rat()
TAU_STAR = GoldenInt(1, -1).to_rat()
INV_TAU = GoldenInt(-1, 1).to_rat()
ONE = GoldenRat(1)
ZERO = GoldenRat(0)
HALF = GoldenRat(Fraction(1, 2))
SIN72_SQ = GoldenRat(Fraction(5, 8), Fraction(1, 8))  # sin^2(72 deg)


def _g(x) -> GoldenRat:
    return GoldenRat.coerce(x)


def _ident(n: int):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


@dataclass(frozen=True, order=True)
class QcPoint:
    """A model-set point: integral pair coordinates plus its inner image."""

    coords: tuple[int, ...]
    star: tuple = field(compare=False, default=())

    def key(self) -> tuple[int, ...]:
        return self.coords


@dataclass(frozen=True)
class SchemeSpec:
    """A cut-and-project scheme over a lattice in pair coordinates."""

    kind: str
    name: str
    n_pairs: int
    den: int
    phys_matrix: tuple  # d1 x n_pairs, acting on pair values
    inner_matrix: tuple  # d2 x n_pairs, acting on conjugated pair values
    phys_gram: tuple  # diagonal metric of physical space
    window: ConvexWindow | WindowUnion
    congruence: str | None = None  # None, "icosian" or "pure_icosian"
    description: str = ""

    @property
    def ncoords(self) -> int:
        return 2 * self.n_pairs

    @property
    def d1(self) -> int:
        return len(self.phys_matrix)

    @property
    def d2(self) -> int:
        return len(self.inner_matrix)

    # -- coordinate plumbing ------------------------------------------------

    def pair_values(self, coords: Sequence[int]) -> list[GoldenRat]:
        return [GoldenInt(coords[2 * i], coords[2 * i + 1]).to_rat() / self.den for i in range(self.n_pairs)]

    def conjugate_values(self, coords: Sequence[int]) -> list[GoldenRat]:
        return [GoldenInt(coords[2 * i], coords[2 * i + 1]).star().to_rat() / self.den for i in range(self.n_pairs)]

    def coords_from_values(self, values: Sequence[GoldenRat]) -> tuple[int, ...]:
        """Inverse of :meth:`pair_values`; raises ValueError off the lattice."""
        out: list[int] = []
        for v in values:
            g = (_g(v) * self.den).to_golden_int()
            out.extend((g.a, g.b))
        return tuple(out)

    def physical(self, coords: Sequence[int]) -> tuple[GoldenRat, ...]:
        v = self.pair_values(coords)
        return tuple(_dot(row, v) for row in self.phys_matrix)

    def star_map(self, coords: Sequence[int]) -> tuple[GoldenRat, ...]:
        v = self.conjugate_values(coords)
        return tuple(_dot(row, v) for row in self.inner_matrix)

    def phys_norm2(self, coords: Sequence[int]) -> GoldenRat:
        y = self.physical(coords)
        return _dot([g * c for g, c in zip(self.phys_gram, y)], y)

    def in_lattice(self, coords: Sequence[int]) -> bool:
        if len(coords) != self.ncoords:
            return False
        if self.congruence is None:
            return True
        full = _embed_quaternion(coords, self.congruence)
        return in_icosian_ring(full)

    def contains(self, coords: Sequence[int]) -> bool:
        """Model-set membership: lattice point whose star image is in the window."""
        coords = tuple(int(c) for c in coords)
        return self.in_lattice(coords) and self.window.contains(self.star_map(coords))

    def point(self, coords: Sequence[int]) -> QcPoint:
        coords = tuple(int(c) for c in coords)
        return QcPoint(coords, self.star_map(coords))

    # -- vectorized exact maps ------------------------------------------------

    def coord_matrix(self, which: str) -> list[list[GoldenRat]]:
        """Map from integer coordinates to physical ('phys') or inner ('inner') space."""
        mat = self.phys_matrix if which == "phys" else self.inner_matrix
        t = TAU if which == "phys" else TAU_STAR
        return [[c for x in row for c in (_g(x) / self.den, _g(x) * t / self.den)] for row in mat]

    def _cache(self) -> dict:
        c = self.__dict__.get("_vector_cache")
        if c is None:
            c = {}
            object.__setattr__(self, "_vector_cache", c)
        return c

    def window_tester(self):
        c = self._cache()
        if "tester" not in c:
            c["tester"] = self.window.linear_tester(self.coord_matrix("inner"))
        return c["tester"]

    def lattice_mask(self, coords: np.ndarray) -> np.ndarray:
        if self.congruence is None:
            return np.ones(coords.shape[0], dtype=bool)
        table = np.array(residue_table(), dtype=bool)
        res = np.zeros(coords.shape[0], dtype=np.int64)
        offset = 2 if self.congruence == "pure_icosian" else 0
        for k in range(coords.shape[1]):
            res |= (np.asarray(coords[:, k], dtype=np.int64) & 1) << (k + offset)
        return table[res]

    def contains_many(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=np.int64) if np.asarray(coords).dtype != object else np.asarray(coords)
        if coords.size == 0:
            return np.zeros(0, dtype=bool)
        return self.lattice_mask(coords) & self.window_tester()(coords)

    def norm_within(self, coords: np.ndarray, radius2: GoldenRat) -> np.ndarray:
        """Exact test ``|phys(c)|^2 <= radius2`` for a batch."""
        c = self._cache()
        if "phys" not in c:
            c["phys"] = IntMatrix.from_golden(self.coord_matrix("phys"))
            c["gram"] = golden_to_parts(self.phys_gram)
        m = c["phys"]
        gp, gq, gd = c["gram"]
        yp, yq = m.apply_int(np.asarray(coords))
        yp, yq = yp.astype(object), yq.astype(object)
        sp = np.zeros(yp.shape[0], dtype=object)
        sq = np.zeros(yp.shape[0], dtype=object)
        for k in range(yp.shape[1]):
            a, b = yp[:, k], yq[:, k]
            sqp = a * a + 5 * b * b
            sqq = 2 * a * b
            sp = sp + gp[k] * sqp + 5 * gq[k] * sqq
            sq = sq + gp[k] * sqq + gq[k] * sqp
        # |y|^2 = (sp + sq s) / (gd * den^2)
        rp, rq, rd = radius2.parts
        scale = gd * m.den * m.den
        return sign_sqrt5(rp * scale - rd * sp, rq * scale - rd * sq) >= 0


def _dot(u, v) -> GoldenRat:
    total = ZERO
    for a, b in zip(u, v):
        total = total + _g(a) * _g(b)
    return total


def _embed_quaternion(coords: Sequence[int], congruence: str) -> tuple[int, ...]:
    if congruence == "pure_icosian":
        return (0, 0) + tuple(coords)
    return tuple(coords)


# ---------------------------------------------------------------------------
# operations


def window_contains(window: ConvexWindow | WindowUnion, p: Sequence) -> bool:
    return window.contains(p)


def star_map(scheme: SchemeSpec, coords: Sequence[int]) -> tuple[GoldenRat, ...]:
    return scheme.star_map(coords)


def translate_window(scheme: SchemeSpec, shift: Sequence) -> SchemeSpec:
    """The same scheme with the window replaced by ``window + shift``."""
    shift = tuple(_g(c) for c in shift)
    if all(not c for c in shift):
        return scheme
    new = replace(scheme, window=scheme.window.translated(shift))
    new.__dict__.pop("_vector_cache", None)
    return new


def _float_matrix(rows) -> np.ndarray:
    return np.array([[float(_g(x)) for x in row] for row in rows])


def _pair_ranges(scheme: SchemeSpec, radius: float) -> list[np.ndarray]:
    """Per-pair integer candidates ``(a, b)`` compatible with both constraints.

    Uses ``b = den (v - v*)/sqrt5`` and ``a = den v - tau b``.  Floats only
    size the search box; a generous margin keeps it complete.
    """
    p_inv = np.linalg.inv(_float_matrix(scheme.phys_matrix))
    gram = np.array([float(_g(g)) for g in scheme.phys_gram])
    # dual norm of each row of P^-1 under the physical metric
    vbound = radius * np.sqrt(np.sum(p_inv**2 / gram[None, :], axis=1))
    q_inv = np.linalg.inv(_float_matrix(scheme.inner_matrix))
    parts = scheme.window.parts if isinstance(scheme.window, WindowUnion) else (scheme.window,)
    verts = np.vstack([w.actual_vertices_float() for w in parts])
    star_vals = verts @ q_inv.T
    slo, shi = star_vals.min(axis=0), star_vals.max(axis=0)
    phi = (1 + math.sqrt(5)) / 2
    tau_star = 1 - phi
    den = scheme.den
    out = []
    for i in range(scheme.n_pairs):
        eps = 1e-7 * (1 + vbound[i] + abs(slo[i]) + abs(shi[i]))
        vlo, vhi = -vbound[i] - eps, vbound[i] + eps
        lo_s, hi_s = slo[i] - eps, shi[i] + eps
        b_min = math.floor(den * (vlo - hi_s) / math.sqrt(5))
        b_max = math.ceil(den * (vhi - lo_s) / math.sqrt(5))
        cands = []
        for b in range(b_min, b_max + 1):
            a_lo = max(den * vlo - phi * b, den * lo_s - tau_star * b)
            a_hi = min(den * vhi - phi * b, den * hi_s - tau_star * b)
            for a in range(math.floor(a_lo), math.ceil(a_hi) + 1):
                cands.append((a, b))
        out.append(np.array(cands, dtype=np.int64).reshape(-1, 2))
    return out


def _diagonal(rows, n: int) -> list[float] | None:
    if len(rows) != n:
        return None
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if i != j and _g(x):
                return None
    return [float(_g(rows[i][i])) for i in range(n)]


class _PartialBound:
    """Float pruning of partial products for schemes with diagonal maps.

    With diagonal physical and inner maps the squared lengths split into
    per-pair terms, so any prefix of pairs already bounds the total.  The
    inner constraint uses the ball around the window's vertex centroid.
    """

    def __init__(self, scheme: SchemeSpec, radius: float):
        self.den = scheme.den
        pd = _diagonal(scheme.phys_matrix, scheme.n_pairs)
        qd = _diagonal(scheme.inner_matrix, scheme.n_pairs)
        self.active = pd is not None and qd is not None
        if not self.active:
            return
        gram = [float(_g(g)) for g in scheme.phys_gram]
        self.pw = np.array([g * p * p for g, p in zip(gram, pd)])
        self.qd = np.array(qd)
        parts = scheme.window.parts if isinstance(scheme.window, WindowUnion) else (scheme.window,)
        verts = np.vstack([w.actual_vertices_float() for w in parts])
        self.center = verts.mean(axis=0)
        rho2 = float(np.max(np.sum((verts - self.center) ** 2, axis=1)))
        self.r2 = radius * radius * (1 + 1e-9) + 1e-9
        self.rho2 = rho2 * (1 + 1e-9) + 1e-9

    def keep(self, block: np.ndarray) -> np.ndarray:
        k = block.shape[1] // 2
        a = block[:, 0::2].astype(float)
        b = block[:, 1::2].astype(float)
        phi = (1 + math.sqrt(5)) / 2
        v = (a + phi * b) / self.den
        vs = (a + (1 - phi) * b) / self.den
        phys = np.sum(self.pw[:k] * v * v, axis=1)
        inner = np.sum((self.qd[:k] * vs - self.center[:k]) ** 2, axis=1)
        return (phys <= self.r2) & (inner <= self.rho2)


def _candidates(scheme: SchemeSpec, blocks: list[np.ndarray], radius: float, chunk: int):
    """Yield batches of coordinate rows covering every candidate lattice point."""
    bound = _PartialBound(scheme, radius)
    if not bound.active:
        if any(len(b) == 0 for b in blocks):
            return
        grids = np.meshgrid(*[np.arange(len(b)) for b in blocks], indexing="ij")
        flat = [g.ravel() for g in grids]
        for start in range(0, len(flat[0]), chunk):
            yield np.concatenate([blk[f[start : start + chunk]] for blk, f in zip(blocks, flat)], axis=1)
        return
    prefix = blocks[0][bound.keep(blocks[0])]
    for blk in blocks[1:-1]:
        rows = []
        for start in range(0, len(prefix), max(1, chunk // max(len(blk), 1))):
            sub = prefix[start : start + max(1, chunk // max(len(blk), 1))]
            cand = np.concatenate([np.repeat(sub, len(blk), axis=0), np.tile(blk, (len(sub), 1))], axis=1)
            rows.append(cand[bound.keep(cand)])
        prefix = np.concatenate(rows, axis=0) if rows else np.zeros((0, prefix.shape[1] + 2), dtype=np.int64)
    if len(blocks) == 1:
        yield prefix
        return
    last = blocks[-1]
    step = max(1, chunk // max(len(last), 1))
    for start in range(0, len(prefix), step):
        sub = prefix[start : start + step]
        cand = np.concatenate([np.repeat(sub, len(last), axis=0), np.tile(last, (len(sub), 1))], axis=1)
        yield cand[bound.keep(cand)]


def enumerate_points(scheme: SchemeSpec, radius, chunk: int = 200_000) -> list[QcPoint]:
    """All model-set points with physical length at most ``radius``, sorted."""
    r = _g(parse_golden(radius) if isinstance(radius, str) else radius)
    if r.sign() < 0:
        raise ValueError("radius must be non-negative")
    r2 = r * r
    blocks = _pair_ranges(scheme, float(r))
    found: list[np.ndarray] = []
    for batch in _candidates(scheme, blocks, float(r), chunk):
        batch = batch[scheme.lattice_mask(batch)]
        if len(batch):
            batch = batch[scheme.window_tester()(batch)]
        if len(batch):
            batch = batch[scheme.norm_within(batch, r2)]
        if len(batch):
            found.append(batch)
    if not found:
        return []
    allc = np.concatenate(found, axis=0)
    uniq = sorted({tuple(int(v) for v in row) for row in allc})
    return [scheme.point(c) for c in uniq]


def check_injective(scheme: SchemeSpec, points: Iterable[QcPoint]) -> bool:
    """Collision check: distinct lattice points must have distinct physical images."""
    seen: dict = {}
    for p in points:
        img = scheme.physical(p.coords)
        if img in seen and seen[img] != p.coords:
            return False
        seen[img] = p.coords
    return True


# ---------------------------------------------------------------------------
# windows and presets


def pentagon_vertices() -> list[tuple[GoldenRat, GoldenRat]]:
    """1, xi, xi^2, xi^3, xi^4 in the basis (Re, Im / sin 72deg)."""
    c72 = (TAU - 1) / 2
    c144 = -TAU / 2
    return [(ONE, ZERO), (c72, ONE), (c144, INV_TAU), (c144, -INV_TAU), (c72, -ONE)]


def triacontahedron_vertices(conjugate: bool = False) -> list[tuple[GoldenRat, ...]]:
    """The 32 vertices of the rhombic triacontahedron as listed.

    With ``conjugate`` every coordinate is Galois-conjugated.
    """
    out = []

    def signed(v):
        for s in itertools.product((1, -1), repeat=3):
            yield tuple(x * k for x, k in zip(v, s))

    for base in ((ZERO, ONE, TAU), (ZERO, TAU, INV_TAU)):
        for rot in (base, (base[2], base[0], base[1]), (base[1], base[2], base[0])):
            out.extend(signed(rot))
    out.extend(signed((ONE, ONE, ONE)))
    uniq = list(dict.fromkeys(out))
    if conjugate:
        uniq = [tuple(c.star() for c in v) for v in uniq]
    return uniq


def _even_perms4() -> list[tuple[int, ...]]:
    return [
        p
        for p in itertools.permutations(range(4))
        if sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) % 2 == 0
    ]


def elser_sloane_base_rows() -> list[tuple[GoldenRat, tuple]]:
    """The printed generating rows (scale, pattern), before sign/permutation expansion."""
    h, t = HALF, GoldenRat(Fraction(1, 3))
    T, IT = TAU, INV_TAU
    return [
        (h, (2, 0, 0, 0)),
        (h, (1, 1, 1, 1)),
        (h, (0, 1, T, IT)),
        (t, (T * T, IT * IT, 1, 0)),
        (t, (T * T, IT, IT, IT)),
        (h, (0, 1, T, IT)),
        (t, (2 * T - 1, IT, T, 0)),
        (t, (2 * T - 1, 1, 1, 1)),
        (t, (T, T, T, IT * IT)),
        (t, (2, 2, 0, 0)),
        (t, (2, 1, T, IT)),
    ]


def elser_sloane_vertices() -> list[tuple[GoldenRat, ...]]:
    """Unscaled window vertices (multiply by kappa), all signs and even permutations.

    Raises ValueError unless exactly 720 distinct vertices come out.
    """
    seen: dict = {}
    for scale, pattern in elser_sloane_base_rows():
        base = [_g(x) * scale for x in pattern]
        for perm in _even_perms4():
            for signs in itertools.product((1, -1), repeat=4):
                seen.setdefault(tuple(base[perm[k]] * signs[k] for k in range(4)), None)
    verts = sorted(seen, key=lambda v: tuple(v[k].parts for k in range(4)))
    if len(verts) != 720:
        raise ValueError(f"expected 720 window vertices, got {len(verts)}")
    return verts


ES_CACHE_VERSION = 1


def _vertex_digest(verts) -> str:
    import hashlib

    text = "\n".join(",".join(format_golden(c) for c in v) for v in verts)
    return hashlib.sha256(text.encode()).hexdigest()


def build_elser_sloane_window() -> ConvexWindow:
    """Compute the exact hull from scratch (several seconds)."""
    return facets_from_vertices(elser_sloane_vertices(), kappa_scaled=True, name="elser-sloane")


def elser_sloane_cache_json(window: ConvexWindow) -> dict:
    data = window.to_json()
    data.pop("vertices", None)
    return {
        "schema_version": ES_CACHE_VERSION,
        "vertex_digest": _vertex_digest(elser_sloane_vertices()),
        "window": data,
    }


@lru_cache(maxsize=1)
def elser_sloane_window() -> ConvexWindow:
    """The kappa-scaled 720-vertex window, loaded from the cached facet file.

    The cache is revalidated at load: version, vertex digest, every vertex
    inside or on every facet, and every facet supported by incident vertices.
    Falls back to a fresh hull computation if the cache is missing or stale.
    """
    verts = tuple(elser_sloane_vertices())
    try:
        text = resources.files("qcjordan").joinpath("data/elser_sloane_facets.json").read_text()
        data = json.loads(text)
    except (FileNotFoundError, OSError, json.JSONDecodeError):
        return build_elser_sloane_window()
    if data.get("schema_version") != ES_CACHE_VERSION or data.get("vertex_digest") != _vertex_digest(verts):
        return build_elser_sloane_window()
    win = ConvexWindow.from_json(data["window"])
    win = replace(win, vertices=verts, name="elser-sloane")
    problems = win.validate_fast()
    if problems:
        raise ValueError("cached Elser-Sloane facets failed revalidation: " + "; ".join(problems[:3]))
    if len(win.incidence) != len(win.facets) or any(len(s) < 4 for s in win.incidence):
        raise ValueError("cached Elser-Sloane incidence is incomplete")
    return win


def _icosian_scheme(kind, name, window, pure=False, description=""):
    n = 3 if pure else 4
    return SchemeSpec(
        kind=kind,
        name=name,
        n_pairs=n,
        den=2,
        phys_matrix=_ident(n),
        inner_matrix=_ident(n),
        phys_gram=(ONE,) * n,
        window=window,
        congruence="pure_icosian" if pure else "icosian",
        description=description,
    )


def _fib(name, window, description=""):
    return SchemeSpec("fibonacci", name, 1, 1, ((ONE,),), ((ONE,),), (ONE,), window, None, description)


def penrose_scheme(window: ConvexWindow | None = None) -> SchemeSpec:
    # z = A + B xi^2 with xi^2 = (-tau/2, 1/tau); inner z* = A* + B* xi^4, xi^4 = ((tau-1)/2, -1)
    phys = ((ONE, -TAU / 2), (ZERO, INV_TAU))
    inner = ((ONE, (TAU - 1) / 2), (ZERO, -ONE))
    win = window or facets_from_vertices(pentagon_vertices(), name="pentagon")
    return SchemeSpec("penrose", "penrose", 2, 1, phys, inner, (ONE, SIN72_SQ), win, None,
                      "z = (a + b tau) + (c + d tau) xi^2 in the basis (Re, Im/sin72)")


@lru_cache(maxsize=None)
def preset(name: str) -> SchemeSpec:
    """Scheme presets addressable by name."""
    if name == "fibonacci-palindromic":
        return _fib(name, interval(-HALF, HALF, name="[-1/2,1/2]"), "palindromic Fibonacci chain")
    if name == "fibonacci":
        return _fib(name, interval(0, 1, lo_closed=False, name="(0,1]"), "Fibonacci chain")
    if name == "fibonacci-unit":
        return _fib(name, interval(0, 1, name="[0,1]"), "Fibonacci chain with closed window")
    if name == "penrose":
        return penrose_scheme()
    if name == "z6":
        win = facets_from_vertices(triacontahedron_vertices(), name="triacontahedron")
        return SchemeSpec("z6", name, 3, 1, _ident(3), _ident(3), (ONE,) * 3, win, None, "Z^6 icosahedral")
    if name == "z6-icosian":
        win = facets_from_vertices(triacontahedron_vertices(), name="triacontahedron")
        return _icosian_scheme("custom_icosian", name, win, pure=True, description="pure icosians")
    if name == "z6-icosian-conjugate":
        win = facets_from_vertices(triacontahedron_vertices(conjugate=True), name="triacontahedron*")
        return _icosian_scheme("custom_icosian", name, win, pure=True, description="pure icosians, conjugated window")
    if name == "elser-sloane":
        return _icosian_scheme("elser_sloane", name, elser_sloane_window(), description="E8 / icosian ring")
    raise KeyError(f"unknown scheme preset {name!r}")


PRESETS = (
    "fibonacci-palindromic",
    "fibonacci",
    "fibonacci-unit",
    "penrose",
    "z6",
    "z6-icosian",
    "z6-icosian-conjugate",
    "elser-sloane",
)


def load_window_file(path: str, kappa_scaled: bool = False) -> ConvexWindow:
    """Read a JSON vertex file ``{"vertices": [["1/2+0*sqrt5", ...], ...]}``.

    Raises ValueError on malformed input and DegenerateWindowError for flat hulls.
    """
    with open(path) as fh:
        data = json.load(fh)
    try:
        raw = data["vertices"]
        verts = [tuple(GoldenRat.coerce(parse_golden(str(c))) for c in v) for v in raw]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"invalid window file {path}: {exc}") from exc
    if not verts or len({len(v) for v in verts}) != 1:
        raise ValueError(f"invalid window file {path}: inconsistent vertex dimensions")
    closed = bool(data.get("closed", True))
    return facets_from_vertices(verts, closed=closed, kappa_scaled=bool(data.get("kappa_scaled", kappa_scaled)),
                                name=data.get("name", path))


def custom_scheme(window: ConvexWindow, base: str | None = None) -> SchemeSpec:
    """Attach a custom window to the scheme family matching its dimension."""
    families = {1: "fibonacci", 2: "penrose", 3: "z6", 4: "elser-sloane"}
    name = base or families.get(window.dim)
    if name is None:
        raise ValueError(f"no scheme family for a {window.dim}-dimensional window")
    sch = preset(name)
    if sch.d2 != window.dim:
        raise ValueError("window dimension does not match the scheme's inner space")
    new = replace(sch, window=window, name=f"{name}:custom")
    new.__dict__.pop("_vector_cache", None)
    return new


__all__ += ["custom_scheme", "check_injective", "penrose_scheme", "DegenerateWindowError"]
