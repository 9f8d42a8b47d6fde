"""Acceptance windows: exact convex polytopes over Q(sqrt5).

A :class:`ConvexWindow` is an H-representation ``n . (p - shift) <= h`` (or
``<= h*kappa`` on kappa-scaled facets) with an explicit closed/open policy per
facet.  :func:`facets_from_vertices` turns a vertex list into such a window
exactly; large inputs take candidate facets from qhull and then rebuild and
certify every facet in exact arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .exact import IntMatrix, golden_to_parts, max_abs, sign_sqrt5
from .golden_field import KAPPA_FLOAT, KAPPA_SQ, GoldenRat, KappaScaledRat, kappa_compare

__all__ = [
    "Facet",
    "ConvexWindow",
    "WindowUnion",
    "DegenerateWindowError",
    "facets_from_vertices",
    "hull_incidence",
    "interval",
]

Vec = tuple  # tuple of GoldenRat

ZERO = GoldenRat(0)


class DegenerateWindowError(ValueError):
    """The vertices do not span a full-dimensional polytope."""


def _g(x) -> GoldenRat:
    return GoldenRat.coerce(x)


def _vec(v: Iterable) -> Vec:
    return tuple(_g(x) for x in v)


def _dot(u: Sequence[GoldenRat], v: Sequence[GoldenRat]) -> GoldenRat:
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def _det(m: list[list[GoldenRat]]) -> GoldenRat:
    m = [list(r) for r in m]
    n = len(m)
    det = GoldenRat(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def _rank(rows: list[list[GoldenRat]]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][c].inverse()
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def affine_rank(points: Sequence[Vec]) -> int:
    if len(points) < 2:
        return 0
    p0 = points[0]
    return _rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def _normal_through(points: Sequence[Vec]) -> Vec | None:
    """Generalized cross product of the edge vectors of ``d`` points in R^d."""
    d = len(points[0])
    p0 = points[0]
    rows = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    if d == 1:
        return (GoldenRat(1),)
    normal = []
    for i in range(d):
        minor = [[r[j] for j in range(d) if j != i] for r in rows]
        c = _det(minor)
        normal.append(c if i % 2 == 0 else -c)
    if all(not c for c in normal):
        return None
    return tuple(normal)


def _normalize(normal: Vec, offset: GoldenRat, extra: GoldenRat = ZERO) -> tuple[Vec, GoldenRat, GoldenRat]:
    """Scale by a positive number so the hyperplane has one canonical form."""
    if offset.sign() > 0:
        s = offset
    else:
        s = abs(next(c for c in normal if c))
    inv = s.inverse()
    return tuple(c * inv for c in normal), offset * inv, extra * inv


@dataclass(frozen=True)
class Facet:
    """Half-space ``normal . x <= offset`` (times kappa when ``kappa_scaled``)."""

    normal: Vec
    offset: GoldenRat
    kappa_scaled: bool = False
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "normal", _vec(self.normal))
        object.__setattr__(self, "offset", _g(self.offset))

    def holds(self, p: Sequence[GoldenRat]) -> bool:
        lhs = _dot(self.normal, p)
        if self.kappa_scaled:
            c = kappa_compare(lhs, KappaScaledRat(self.offset, 1))
        else:
            c = (lhs - self.offset).sign()
        return c < 0 or (c == 0 and self.closed)


@dataclass(frozen=True)
class ConvexWindow:
    """Exact convex acceptance window.

    ``vertices`` are stored unscaled: the actual vertices are
    ``kappa**e * v + shift`` where ``e`` is 1 for kappa-scaled windows.
    ``incidence`` lists, per facet, the indices of vertices lying on it.
    """

    dim: int
    facets: tuple[Facet, ...]
    vertices: tuple[Vec, ...] | None = None
    incidence: tuple[frozenset, ...] | None = None
    shift: Vec | None = None
    name: str = ""

    def __post_init__(self):
        for f in self.facets:
            if len(f.normal) != self.dim:
                raise ValueError("facet normal has wrong dimension")
        if self.shift is not None:
            object.__setattr__(self, "shift", _vec(self.shift))

    @property
    def kappa_scaled(self) -> bool:
        return any(f.kappa_scaled for f in self.facets)

    @property
    def boundary_policy(self) -> tuple[str, ...]:
        return tuple("closed" if f.closed else "open" for f in self.facets)

    def _local(self, p: Sequence) -> Vec:
        p = _vec(p)
        if len(p) != self.dim:
            raise ValueError(f"point has dimension {len(p)}, window has {self.dim}")
        if self.shift is None:
            return p
        return tuple(a - b for a, b in zip(p, self.shift))

    def contains(self, p: Sequence) -> bool:
        q = self._local(p)
        return all(f.holds(q) for f in self.facets)

    __contains__ = contains

    def with_policy(self, closed: Sequence[bool] | bool) -> ConvexWindow:
        flags = [closed] * len(self.facets) if isinstance(closed, bool) else list(closed)
        return replace(self, facets=tuple(replace(f, closed=c) for f, c in zip(self.facets, flags)))

    def translated(self, shift: Sequence) -> ConvexWindow:
        s = _vec(shift)
        base = self.shift or (ZERO,) * self.dim
        total = tuple(a + b for a, b in zip(base, s))
        return replace(self, shift=None if all(not c for c in total) else total)

    # -- geometry helpers -------------------------------------------------

    def actual_vertices_float(self) -> np.ndarray:
        if self.vertices is None:
            raise ValueError("window has no vertex list")
        scale = KAPPA_FLOAT if self.kappa_scaled else 1.0
        arr = np.array([[float(c) for c in v] for v in self.vertices]) * scale
        if self.shift is not None:
            arr = arr + np.array([float(c) for c in self.shift])
        return arr

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        """Float box containing the window (for enumeration bounds only)."""
        arr = self.actual_vertices_float()
        return arr.min(axis=0), arr.max(axis=0)

    def validate(self) -> list[str]:
        """Every stored vertex must satisfy every facet (closed comparison)."""
        problems = []
        if self.vertices is None:
            return problems
        for i, f in enumerate(self.facets):
            for j, v in enumerate(self.vertices):
                if (_dot(f.normal, v) - f.offset).sign() > 0:
                    problems.append(f"vertex {j} violates facet {i}")
        if self.incidence is not None:
            for i, inc in enumerate(self.incidence):
                pts = [self.vertices[j] for j in sorted(inc)]
                if any(_dot(self.facets[i].normal, p) != self.facets[i].offset for p in pts):
                    problems.append(f"facet {i} incidence list is wrong")
                if affine_rank(pts) < self.dim - 1:
                    problems.append(f"facet {i} is not supported by {self.dim} independent vertices")
        return problems

    def validate_fast(self) -> list[str]:
        """Vectorized form of :meth:`validate` for large vertex lists."""
        if self.vertices is None:
            return []
        vp, vq, vd = _parts_matrix(self.vertices)
        np_, nq, nd = _parts_matrix([f.normal for f in self.facets])
        hp, hq, hd = golden_to_parts([f.offset for f in self.facets])
        lp, lq = _golden_matmul(vp, vq, np_, nq)  # shape (V, F), over vd*nd
        hp = np.array(hp, dtype=object) * (vd * nd // hd)
        hq = np.array(hq, dtype=object) * (vd * nd // hd)
        s = sign_sqrt5(hp[None, :] - lp, hq[None, :] - lq)
        bad = np.argwhere(s < 0)
        return [f"vertex {j} violates facet {i}" for j, i in bad[:20]]

    def canonical_facets(self) -> frozenset:
        """Hyperplanes in absolute form ``n.p <= h*kappa^e + n.shift``, normalized."""
        out = set()
        for f in self.facets:
            c = _dot(f.normal, self.shift) if self.shift is not None else ZERO
            if f.kappa_scaled:
                s = abs(next(x for x in f.normal if x))
                inv = s.inverse()
                n, h, c2 = tuple(x * inv for x in f.normal), f.offset * inv, c * inv
            else:
                n, h, c2 = _normalize(f.normal, f.offset + c)
            out.add((n, h, c2, f.kappa_scaled, f.closed))
        return frozenset(out)

    def transformed(self, matrix: Sequence[Sequence]) -> ConvexWindow:
        """Image ``A(W)`` of the window under an invertible linear map ``A``."""
        a = [[_g(x) for x in row] for row in matrix]
        inv = _mat_inverse(a)
        facets = []
        for f in self.facets:
            n = tuple(_dot(f.normal, [inv[k][j] for k in range(self.dim)]) for j in range(self.dim))
            facets.append(replace(f, normal=n))
        verts = None
        if self.vertices is not None:
            verts = tuple(tuple(_dot(row, v) for row in a) for v in self.vertices)
        shift = None if self.shift is None else tuple(_dot(row, self.shift) for row in a)
        return replace(self, facets=tuple(facets), vertices=verts, shift=shift)

    def same_region(self, other: ConvexWindow) -> bool:
        return self.canonical_facets() == other.canonical_facets()

    # -- vectorized membership ---------------------------------------------

    def linear_tester(self, inner_map: Sequence[Sequence]) -> LinearTester:
        """Membership tester for points ``y = inner_map @ c`` with integer ``c``."""
        return LinearTester(self, [[_g(x) for x in row] for row in inner_map])

    def to_json(self) -> dict:
        from .golden_field import format_golden

        out = {
            "dim": self.dim,
            "name": self.name,
            "facets": [
                {
                    "normal": [format_golden(c) for c in f.normal],
                    "offset": format_golden(f.offset),
                    "kappa_scaled": f.kappa_scaled,
                    "closed": f.closed,
                }
                for f in self.facets
            ],
        }
        if self.vertices is not None:
            out["vertices"] = [[format_golden(c) for c in v] for v in self.vertices]
        if self.incidence is not None:
            out["incidence"] = [sorted(s) for s in self.incidence]
        if self.shift is not None:
            out["shift"] = [format_golden(c) for c in self.shift]
        return out

    @classmethod
    def from_json(cls, data: dict) -> ConvexWindow:
        from .golden_field import parse_golden

        def gr(t):
            return GoldenRat.coerce(parse_golden(t))

        facets = tuple(
            Facet(tuple(gr(c) for c in f["normal"]), gr(f["offset"]), f.get("kappa_scaled", False), f.get("closed", True))
            for f in data["facets"]
        )
        verts = tuple(tuple(gr(c) for c in v) for v in data["vertices"]) if "vertices" in data else None
        inc = tuple(frozenset(s) for s in data["incidence"]) if "incidence" in data else None
        shift = tuple(gr(c) for c in data["shift"]) if "shift" in data else None
        return cls(int(data["dim"]), facets, verts, inc, shift, data.get("name", ""))


def _mat_inverse(a: list[list[GoldenRat]]) -> list[list[GoldenRat]]:
    n = len(a)
    m = [list(a[i]) + [GoldenRat(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = m[c][c].inverse()
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def _parts_matrix(rows: Sequence[Sequence]) -> tuple[np.ndarray, np.ndarray, int]:
    flat = [x for r in rows for x in r]
    ps, qs, den = golden_to_parts(flat)
    shape = (len(rows), len(rows[0]))
    return (np.array(ps, dtype=object).reshape(shape), np.array(qs, dtype=object).reshape(shape), den)


def _golden_matmul(ap, aq, bp, bq):
    """``(ap + aq s)(bp + bq s)^T`` for object arrays; returns (P, Q)."""
    return ap @ bp.T + 5 * (aq @ bq.T), ap @ bq.T + aq @ bp.T


class LinearTester:
    """Exact vectorized membership of ``y = M c`` for integer batches ``c``.

    Each facet becomes an integer linear form in ``[c, 1]``; the comparison
    with the offset is an exact sign test of ``p + q*sqrt5``.
    """

    def __init__(self, window: ConvexWindow, inner_map: list[list[GoldenRat]]):
        self.window = window
        m = len(inner_map[0])
        rows = []
        shift = window.shift or (ZERO,) * window.dim
        for f in window.facets:
            combined = [_dot(f.normal, [inner_map[k][j] for k in range(window.dim)]) for j in range(m)]
            rows.append(combined + [-_dot(f.normal, shift), f.offset])
        self.forms = IntMatrix.from_golden(rows)
        self.kappa = np.array([f.kappa_scaled for f in window.facets])
        self.closed = np.array([f.closed for f in window.facets])
        self.ncoords = m

    def __call__(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords)
        n = coords.shape[0]
        if n == 0:
            return np.zeros(0, dtype=bool)
        aug = np.concatenate([coords, np.ones((n, 1), dtype=coords.dtype)], axis=1)
        fp = self.forms.p[:, :-1]
        fq = self.forms.q[:, :-1]
        bound = max_abs(aug) * max(max_abs(fp), max_abs(fq)) * aug.shape[1]
        if bound >= 2**62 or aug.dtype == object or fp.dtype == object:
            aug, fp, fq = aug.astype(object), fp.astype(object), fq.astype(object)
        lp = aug @ fp.T  # value of n.(y - shift), over forms.den
        lq = aug @ fq.T
        hp = self.forms.p[:, -1]
        hq = self.forms.q[:, -1]
        ok = np.ones(n, dtype=bool)
        plain = ~self.kappa
        if np.any(plain):
            s = sign_sqrt5(hp[plain][None, :] - lp[:, plain], hq[plain][None, :] - lq[:, plain])
            cl = self.closed[plain][None, :]
            ok &= np.all((s > 0) | ((s == 0) & cl), axis=1)
        if np.any(self.kappa):
            s = _kappa_sign(hp[self.kappa], hq[self.kappa], lp[:, self.kappa], lq[:, self.kappa])
            cl = self.closed[self.kappa][None, :]
            ok &= np.all((s > 0) | ((s == 0) & cl), axis=1)
        return ok


_KSQ_PARTS = golden_to_parts([KAPPA_SQ])
_SQRT5 = 5 ** 0.5


def _kappa_sign(hp, hq, lp, lq) -> np.ndarray:
    """Elementwise sign of ``h*kappa - l`` with ``h`` per column, ``l`` per entry.

    A float pass settles every entry whose value clears a wide relative
    margin; the rest are decided by comparing squares exactly.
    """
    hp = np.asarray(hp)
    hq = np.asarray(hq)
    hv = (hp.astype(float) + hq.astype(float) * _SQRT5)[None, :] * KAPPA_FLOAT
    lv = np.asarray(lp).astype(float) + np.asarray(lq).astype(float) * _SQRT5
    diff = hv - lv
    margin = 1e-9 * (np.abs(hv) + np.abs(lv) + 1.0)
    out = np.where(diff > margin, 1, np.where(diff < -margin, -1, 0)).astype(np.int64)
    idx = np.nonzero(np.abs(diff) <= margin)
    if len(idx[0]) == 0:
        return out
    hpb = np.asarray(hp, dtype=object)[idx[1]]
    hqb = np.asarray(hq, dtype=object)[idx[1]]
    lpo = np.asarray(lp, dtype=object)[idx]
    lqo = np.asarray(lq, dtype=object)[idx]
    sh = sign_sqrt5(hpb, hqb)
    sl = sign_sqrt5(lpo, lqo)
    res = np.zeros(len(sh), dtype=np.int64)
    res[(sh >= 0) & (sl <= 0)] = 1
    res[(sh <= 0) & (sl >= 0)] = -1
    res[(sh == 0) & (sl == 0)] = 0
    same = (sh * sl) > 0
    if np.any(same):
        (kp,), (kq,), kd = _KSQ_PARTS
        a, b, c, e = hpb[same], hqb[same], lpo[same], lqo[same]
        # h^2 kappa^2 - l^2, scaled by kd
        h2p = a * a + 5 * b * b
        h2q = 2 * a * b
        left_p = h2p * kp + 5 * h2q * kq
        left_q = h2p * kq + h2q * kp
        d = sign_sqrt5(left_p - (c * c + 5 * e * e) * kd, left_q - (2 * c * e) * kd)
        res[same] = d * sh[same]
    out[idx] = res
    return out


@dataclass(frozen=True)
class WindowUnion:
    """Finite union of convex windows; used for non-convex fixtures."""

    parts: tuple[ConvexWindow, ...]
    name: str = ""

    @property
    def dim(self) -> int:
        return self.parts[0].dim

    @property
    def shift(self):
        return None

    def contains(self, p: Sequence) -> bool:
        return any(w.contains(p) for w in self.parts)

    __contains__ = contains

    def bounding_box(self):
        boxes = [w.bounding_box() for w in self.parts]
        return np.min([b[0] for b in boxes], axis=0), np.max([b[1] for b in boxes], axis=0)

    def translated(self, shift):
        return WindowUnion(tuple(w.translated(shift) for w in self.parts), self.name)

    def linear_tester(self, inner_map):
        testers = [w.linear_tester(inner_map) for w in self.parts]

        def test(coords):
            out = np.zeros(np.asarray(coords).shape[0], dtype=bool)
            for t in testers:
                out |= t(coords)
            return out

        return test


def interval(lo, hi, lo_closed: bool = True, hi_closed: bool = True, name: str = "") -> ConvexWindow:
    """The window ``lo <= x <= hi`` in dimension 1 with the given endpoint policy."""
    lo, hi = _g(lo), _g(hi)
    if not lo < hi:
        raise DegenerateWindowError("interval endpoints must satisfy lo < hi")
    facets = (Facet((GoldenRat(1),), hi, False, hi_closed), Facet((GoldenRat(-1),), -lo, False, lo_closed))
    return ConvexWindow(1, facets, ((lo,), (hi,)), (frozenset({1}), frozenset({0})), None, name)


# ---------------------------------------------------------------------------
# convex hull


def _support(points: Sequence[Vec], normal: Vec, offset: GoldenRat) -> tuple[int, frozenset] | None:
    """Orientation (+1/-1) making every point satisfy ``n.p <= h``, with the incident set."""
    signs = [(_dot(normal, p) - offset).sign() for p in points]
    if all(s <= 0 for s in signs):
        orient = 1
    elif all(s >= 0 for s in signs):
        orient = -1
    else:
        return None
    return orient, frozenset(i for i, s in enumerate(signs) if s == 0)


def _brute_force_facets(points: Sequence[Vec]) -> dict:
    d = len(points[0])
    found: dict = {}
    for subset in itertools.combinations(range(len(points)), d):
        pts = [points[i] for i in subset]
        normal = _normal_through(pts)
        if normal is None:
            continue
        offset = _dot(normal, pts[0])
        sup = _support(points, normal, offset)
        if sup is None:
            continue
        orient, inc = sup
        if orient < 0:
            normal, offset = tuple(-c for c in normal), -offset
        key = _normalize(normal, offset)[:2]
        if key not in found:
            found[key] = inc
    return found


def _qhull_facets(points: Sequence[Vec]) -> dict:
    from scipy.spatial import ConvexHull

    d = len(points[0])
    arr = np.array([[float(c) for c in p] for p in points])
    hull = ConvexHull(arr)
    groups: dict = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 9))
        groups.setdefault(key, set()).update(int(i) for i in simplex)
    vp, vq, vd = _parts_matrix(points)
    found: dict = {}
    for idxs in groups.values():
        idxs = sorted(idxs)
        basis = _independent_subset([points[i] for i in idxs], d)
        if basis is None:
            raise DegenerateWindowError("qhull returned a facet without d independent vertices")
        normal = _normal_through(basis)
        offset = _dot(normal, basis[0])
        # exact support test for all points at once
        npp, nq, nd = _parts_matrix([normal])
        hp, hq, hd = golden_to_parts([offset])
        lp, lq = _golden_matmul(vp, vq, npp, nq)
        scale = vd * nd
        # compare l/scale with h/hd  <=>  l*hd - h*scale
        sp = sign_sqrt5(lp[:, 0] * hd - hp[0] * scale, lq[:, 0] * hd - hq[0] * scale)
        if np.all(sp >= 0) and not np.all(sp == 0):
            normal, offset = tuple(-c for c in normal), -offset
            sp = -sp
        elif not np.all(sp <= 0):
            raise DegenerateWindowError("qhull candidate is not a supporting hyperplane")
        inc = frozenset(int(i) for i in np.nonzero(sp == 0)[0])
        key = _normalize(normal, offset)[:2]
        found.setdefault(key, inc)
    return found


def _independent_subset(pts: Sequence[Vec], d: int) -> list[Vec] | None:
    chosen = [pts[0]]
    for p in pts[1:]:
        trial = chosen + [p]
        if affine_rank(trial) == len(trial) - 1:
            chosen = trial
            if len(chosen) == d:
                return chosen
    return chosen if len(chosen) == d else None


def ridge_certificate(points: Sequence[Vec], found: dict) -> list[str]:
    """Every ridge of every facet must lie on exactly two facets.

    Together with exact support this proves the facet list is complete: the
    listed facets then form a closed boundary around the polytope.
    """
    d = len(points[0])
    if d < 2:
        return []
    count: dict = {}
    for (normal, _), inc in found.items():
        inc_list = sorted(inc)
        drop = next(j for j, c in enumerate(normal) if c)
        proj = [tuple(c for j, c in enumerate(points[i]) if j != drop) for i in inc_list]
        if d - 1 == 1:
            vals = [p[0] for p in proj]
            lo = min(range(len(vals)), key=lambda k: vals[k])
            hi = max(range(len(vals)), key=lambda k: vals[k])
            ridges = [frozenset({inc_list[lo]}), frozenset({inc_list[hi]})]
        else:
            sub = _brute_force_facets(proj)
            ridges = [frozenset(inc_list[k] for k in s) for s in sub.values()]
        for r in ridges:
            count[r] = count.get(r, 0) + 1
    return [f"ridge {sorted(r)} lies on {c} facets" for r, c in count.items() if c != 2]


def hull_incidence(points: Sequence[Vec], method: str = "auto") -> tuple[list[tuple[Vec, GoldenRat]], list[frozenset]]:
    """Exact facets ``(normal, offset)`` and their vertex incidence sets."""
    pts = [_vec(p) for p in points]
    d = len(pts[0])
    if len(pts) < d + 1 or affine_rank(pts) < d:
        raise DegenerateWindowError(
            f"{len(pts)} vertices span an affine space of dimension {affine_rank(pts)} < {d}"
        )
    if d == 1:
        vals = [p[0] for p in pts]
        lo = min(range(len(vals)), key=lambda k: vals[k])
        hi = max(range(len(vals)), key=lambda k: vals[k])
        found = {}
        found[_normalize((GoldenRat(1),), vals[hi])[:2]] = frozenset(i for i, v in enumerate(vals) if v == vals[hi])
        found[_normalize((GoldenRat(-1),), -vals[lo])[:2]] = frozenset(i for i, v in enumerate(vals) if v == vals[lo])
    else:
        n_subsets = _comb(len(pts), d)
        use_brute = method == "brute" or (method == "auto" and n_subsets <= 1000)
        found = _brute_force_facets(pts) if use_brute else _qhull_facets(pts)
        if not use_brute:
            problems = ridge_certificate(pts, found)
            if problems:
                raise DegenerateWindowError("hull certificate failed: " + "; ".join(problems[:5]))
    for (normal, _), inc in found.items():
        if affine_rank([pts[i] for i in inc]) < d - 1:
            raise DegenerateWindowError("facet is not supported by d independent vertices")
    items = sorted(found.items(), key=lambda kv: tuple(float(c) for c in kv[0][0]))
    return [k for k, _ in items], [v for _, v in items]


def _comb(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def facets_from_vertices(
    vertices: Sequence[Sequence],
    closed: bool = True,
    kappa_scaled: bool = False,
    name: str = "",
    method: str = "auto",
) -> ConvexWindow:
    """Exact H-representation of the convex hull of ``vertices``.

    Duplicate vertices are merged.  With ``kappa_scaled`` the window is the
    hull scaled by kappa, with the vertices kept unscaled.
    """
    seen: dict = {}
    for v in vertices:
        seen.setdefault(_vec(v), None)
    pts = list(seen)
    if not pts:
        raise DegenerateWindowError("no vertices")
    hyperplanes, incidence = hull_incidence(pts, method)
    facets = tuple(Facet(n, h, kappa_scaled, closed) for n, h in hyperplanes)
    return ConvexWindow(len(pts[0]), facets, tuple(pts), tuple(incidence), None, name)
