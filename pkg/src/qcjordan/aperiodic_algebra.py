"""Aperiodic Jordan and Witt algebras spanned by generators ``L_x``.

Elements are sparse maps from lattice coordinates to exact coefficients.  The
Jordan product is ``L_x o L_y = (L_{x|-y} + L_{y|-x}) / 2``; every support
point it produces is re-certified against the window, so a non-convex or
corrupted window surfaces as :class:`ClosureError` instead of a silent wrong
answer.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .golden_field import GoldenInt, GoldenRat
from .icosian import Icosian, TABLE1, quat_mul, residue_table
from .model_set import QcPoint, SchemeSpec, enumerate_points
from .quasiadd import qadd, qadd_many, qadd_repeated_closed, tau_power_coords
from .window import ConvexWindow, WindowUnion, _mat_inverse

Coords = tuple[int, ...]

__all__ = [
    "ClosureError",
    "AlgebraElement",
    "generator",
    "jordan_product",
    "jordan_identity_check",
    "sum_conservation_check",
    "support_conservation_check",
    "unit_probe",
    "subalgebra_growth_probe",
    "ideal_probe",
    "UnitizedElement",
    "unitize",
    "GoldenRing",
    "CyclotomicRing",
    "ring_for",
    "WittElement",
    "witt_bracket",
    "jacobi_check",
    "acceptability_check",
    "symmetry_transfer_check",
    "SymmetryReport",
    "CoordinateAction",
    "coordinate_action",
    "penrose_rotation",
    "table1_isometries",
    "icosian_conjugation",
    "icosian_left_multiplication",
    "fib_label_coords",
    "fib_coords_label",
    "jordan_product_nm",
    "jordan_table",
    "format_fib_cell",
    "jordan_identity_generators",
    "markdown_table",
]


class ClosureError(RuntimeError):
    """A product left the model set; the window is not convex or is corrupted."""


def _coords(p) -> Coords:
    if isinstance(p, QcPoint):
        return p.coords
    return tuple(int(v) for v in p)


# ---------------------------------------------------------------------------
# Jordan algebra


class _Certifier:
    """Per-scheme membership cache shared by all elements of that scheme."""

    _registry: dict[int, "_Certifier"] = {}

    def __init__(self, scheme: SchemeSpec):
        self.scheme = scheme
        self.known: set[Coords] = set()

    @classmethod
    def of(cls, scheme: SchemeSpec) -> "_Certifier":
        key = id(scheme)
        c = cls._registry.get(key)
        if c is None or c.scheme is not scheme:
            c = cls._registry[key] = cls(scheme)
        return c

    def certify(self, coords: Iterable[Coords]) -> list[Coords]:
        """Return the coordinates that are *not* model-set points."""
        todo = [c for c in set(coords) if c not in self.known]
        if not todo:
            return []
        ok = self.scheme.contains_many(np.array(todo, dtype=np.int64))
        bad = []
        for c, good in zip(todo, ok):
            if good:
                self.known.add(c)
            else:
                bad.append(c)
        return bad


@dataclass(frozen=True)
class AlgebraElement:
    """Finite exact linear combination ``sum c_x L_x`` over one scheme."""

    scheme: SchemeSpec = field(repr=False, compare=False)
    terms: Mapping[Coords, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.terms.items():
            v = Fraction(v)
            if v:
                clean[tuple(int(c) for c in k)] = v
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def certified(cls, scheme: SchemeSpec, terms: Mapping[Coords, Fraction]) -> AlgebraElement:
        el = cls(scheme, terms)
        bad = _Certifier.of(scheme).certify(el.terms)
        if bad:
            raise ValueError(f"not model-set points: {bad[:3]}")
        return el

    def canonical(self) -> tuple:
        return tuple((k, (v.numerator, v.denominator)) for k, v in self.terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.canonical())

    def support(self) -> list[Coords]:
        return list(self.terms)

    def coefficient(self, x) -> Fraction:
        return self.terms.get(_coords(x), Fraction(0))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.scheme, out)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + other * -1

    def __mul__(self, c) -> AlgebraElement:
        if isinstance(c, AlgebraElement):
            return jordan_product(self, c)
        c = Fraction(c)
        return AlgebraElement(self.scheme, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list:
        return [[list(k), str(v)] for k, v in self.terms.items()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*L{list(k)}" for k, v in self.terms.items())


def generator(scheme: SchemeSpec, x) -> AlgebraElement:
    """``L_x``; raises ValueError when ``x`` is not in the model set."""
    return AlgebraElement.certified(scheme, {_coords(x): Fraction(1)})


def jordan_product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of ``L_x o L_y = (L_{x|-y} + L_{y|-x}) / 2``."""
    if not a.terms or not b.terms:
        return AlgebraElement(a.scheme, {})
    if len(a.terms) == 1 and len(b.terms) == 1:
        (x, c1), (y, c2) = next(iter(a.terms.items())), next(iter(b.terms.items()))
        k1, k2 = qadd(x, y), qadd(y, x)
        bad = _Certifier.of(a.scheme).certify((k1, k2))
        if bad:
            raise ClosureError(f"product left the model set at {bad[:3]}")
        w = c1 * c2 / 2
        return AlgebraElement(a.scheme, {k1: w, k2: w} if k1 != k2 else {k1: 2 * w})
    ka, ca = list(a.terms), list(a.terms.values())
    kb, cb = list(b.terms), list(b.terms.values())
    xa = np.array(ka, dtype=np.int64)
    xb = np.array(kb, dtype=np.int64)
    left = np.repeat(xa, len(kb), axis=0)
    right = np.tile(xb, (len(ka), 1))
    xy = qadd_many(left, right)
    yx = qadd_many(right, left)
    keys_xy = [tuple(int(v) for v in row) for row in xy]
    keys_yx = [tuple(int(v) for v in row) for row in yx]
    bad = _Certifier.of(a.scheme).certify(keys_xy + keys_yx)
    if bad:
        raise ClosureError(f"product left the model set at {bad[:3]}")
    out: dict[Coords, Fraction] = {}
    half = Fraction(1, 2)
    idx = 0
    for c1 in ca:
        for c2 in cb:
            w = c1 * c2 * half
            k1, k2 = keys_xy[idx], keys_yx[idx]
            out[k1] = out.get(k1, 0) + w
            out[k2] = out.get(k2, 0) + w
            idx += 1
    return AlgebraElement(a.scheme, out)


def jordan_identity_check(a: AlgebraElement, b: AlgebraElement) -> bool:
    """Commutativity and ``(a o b) o (a o a) == a o (b o (a o a))``."""
    ab = jordan_product(a, b)
    if ab != jordan_product(b, a):
        return False
    aa = jordan_product(a, a)
    return jordan_product(ab, aa) == jordan_product(a, jordan_product(b, aa))


def jordan_identity_generators(scheme: SchemeSpec, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Batched Jordan identity for generator pairs ``a = L_x``, ``b = L_y``.

    Both sides expand to four quarter-weight generators built from ``|-``;
    a row passes when the two multisets agree and every intermediate point
    lies in the model set.
    """
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    q = qadd_many
    xx = q(xs, xs)  # a o a = L_{x|-x}
    p1, p2 = q(xs, ys), q(ys, xs)  # a o b
    lhs = [q(p1, xx), q(xx, p1), q(p2, xx), q(xx, p2)]
    r1, r2 = q(ys, xx), q(xx, ys)  # b o (a o a)
    rhs = [q(xs, r1), q(r1, xs), q(xs, r2), q(r2, xs)]
    every = [xx, p1, p2, r1, r2] + lhs + rhs
    uniq, inverse = np.unique(np.concatenate(every, axis=0), axis=0, return_inverse=True)
    member = scheme.contains_many(uniq)[inverse.ravel()]
    inside = np.all(member.reshape(len(every), len(xs)), axis=0)

    def canon(rows):
        stacked = np.stack(rows, axis=1)  # (n, 4, k)
        return np.array([sorted(map(tuple, block)) for block in stacked.tolist()], dtype=np.int64)

    return inside & np.all(canon(lhs) == canon(rhs), axis=(1, 2))


def sum_conservation_check(x, y) -> bool:
    """``(x |- y) + (y |- x) == x + y``."""
    x, y = _coords(x), _coords(y)
    s1 = tuple(p + q for p, q in zip(qadd(x, y), qadd(y, x)))
    return s1 == tuple(p + q for p, q in zip(x, y))


def support_conservation_check(scheme: SchemeSpec, x, y) -> bool:
    """``L_x o L_y`` lives on ``{x|-y, y|-x}`` with weight 1/2 each, or is ``L_x`` when ``x == y``."""
    x, y = _coords(x), _coords(y)
    prod = jordan_product(generator(scheme, x), generator(scheme, y))
    if x == y:
        return prod.terms == {x: Fraction(1)}
    a, b = qadd(x, y), qadd(y, x)
    if a == b:
        return prod.terms == {a: Fraction(1)}
    return prod.terms == {a: Fraction(1, 2), b: Fraction(1, 2)}


@dataclass
class ProbeReport:
    kind: str
    ok: bool
    details: dict
    note: str = "evidence on batch"

    def to_json(self) -> dict:
        return {"kind": self.kind, "ok": self.ok, "note": self.note, **self.details}


def unit_probe(scheme: SchemeSpec, points: Sequence) -> ProbeReport:
    """Which batch points satisfy ``L_x o L_0 == L_0``; only ``x = 0`` should."""
    zero = (0,) * scheme.ncoords
    if not scheme.contains(zero):
        raise ValueError("the origin is not in this model set")
    l0 = generator(scheme, zero)
    fixed, obstruction = [], {}
    for p in points:
        x = _coords(p)
        prod = jordan_product(generator(scheme, x), l0)
        if prod == l0:
            fixed.append(x)
        else:
            obstruction[x] = sorted((list(k), str(v)) for k, v in prod.terms.items() if v > 0)
    ok = fixed == [zero]
    details = {
        "points": len(points),
        "fixed": [list(f) for f in fixed],
        "positive_supports": {str(list(k)): len(v) for k, v in obstruction.items()},
    }
    return ProbeReport("unit", ok, details)


def subalgebra_growth_probe(scheme: SchemeSpec, x, y, k_max: int) -> ProbeReport:
    """The chain ``x|-y, (x|-y)|-y, ...`` is injective and stays in the model set."""
    x, y = _coords(x), _coords(y)
    if x == y:
        raise ValueError("the growth probe needs x != y")
    chain, cur = [], x
    agree = True
    for k in range(1, k_max + 1):
        cur = qadd(cur, y)
        agree &= cur == qadd_repeated_closed(x, y, k)
        chain.append(cur)
    bad = _Certifier.of(scheme).certify(chain)
    distinct = len(set(chain)) == len(chain)
    ok = distinct and agree and not bad
    return ProbeReport(
        "growth",
        ok,
        {"chain": [list(c) for c in chain], "distinct": distinct, "closed_form": agree, "outside": [list(b) for b in bad]},
    )


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def ideal_probe(scheme: SchemeSpec, g, points: Sequence) -> ProbeReport:
    """Span of ``{L_g o L_p}`` over the batch versus the batch generators.

    Reports the batch generators not reachable from that span, computed by
    exact rational rank.  Finite-batch evidence only.
    """
    g = _coords(g)
    batch = [_coords(p) for p in points]
    if g not in batch:
        raise ValueError("the generator must be in the batch")
    lg = generator(scheme, g)
    prods = [jordan_product(lg, generator(scheme, p)) for p in batch]
    basis = sorted({k for pr in prods for k in pr.terms} | set(batch))
    col = {k: i for i, k in enumerate(basis)}

    def vec(terms):
        v = [Fraction(0)] * len(basis)
        for k, c in terms.items():
            v[col[k]] = c
        return v

    rows = [vec(pr.terms) for pr in prods]
    r = _rank(rows)
    unreachable = [q for q in batch if _rank(rows + [vec({q: 1})]) > r]
    proper = bool(unreachable)
    return ProbeReport(
        "ideal",
        True,
        {
            "generator": list(g),
            "batch": len(batch),
            "span_rank": r,
            "proper_on_batch": proper,
            "unreachable": [list(q) for q in unreachable],
        },
    )


# ---------------------------------------------------------------------------
# unitization


@dataclass(frozen=True)
class UnitizedElement:
    body: AlgebraElement
    scalar: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))

    def __add__(self, other: UnitizedElement) -> UnitizedElement:
        return UnitizedElement(self.body + other.body, self.scalar + other.scalar)

    def __eq__(self, other) -> bool:
        return isinstance(other, UnitizedElement) and self.body == other.body and self.scalar == other.scalar

    def __hash__(self) -> int:
        return hash((self.body, self.scalar))


def unitize(a: UnitizedElement, b: UnitizedElement) -> UnitizedElement:
    """``(x + alpha)(y + beta) = x o y + alpha y + beta x + alpha beta``."""
    body = jordan_product(a.body, b.body) + b.body * a.scalar + a.body * b.scalar
    return UnitizedElement(body, a.scalar * b.scalar)


# ---------------------------------------------------------------------------
# Witt algebra


class GoldenRing:
    """Z[tau] on one pair of coordinates."""

    name = "Z[tau]"

    def mul(self, x: Coords, y: Coords) -> Coords:
        p = GoldenInt(*x) * GoldenInt(*y)
        return (p.a, p.b)

    def random(self, rng: random.Random, bound: int) -> Coords:
        return (rng.randint(-bound, bound), rng.randint(-bound, bound))


class CyclotomicRing:
    """Z[xi] with elements ``A + B xi^2`` written as ``(a, b, c, d)``.

    ``xi^2`` satisfies ``w^2 = -tau w - 1``.
    """

    name = "Z[xi]"

    def mul(self, x: Coords, y: Coords) -> Coords:
        a, b = GoldenInt(x[0], x[1]), GoldenInt(x[2], x[3])
        c, d = GoldenInt(y[0], y[1]), GoldenInt(y[2], y[3])
        bd = b * d
        first = a * c - bd
        second = a * d + b * c - GoldenInt(0, 1) * bd
        return (first.a, first.b, second.a, second.b)

    def random(self, rng: random.Random, bound: int) -> Coords:
        return tuple(rng.randint(-bound, bound) for _ in range(4))


def ring_for(scheme: SchemeSpec):
    """Scalar ring of the lattice; the bracket is only defined for commutative ones."""
    if scheme.kind == "fibonacci":
        return GoldenRing()
    if scheme.kind == "penrose":
        return CyclotomicRing()
    raise ValueError(f"no commutative scalar ring for scheme kind {scheme.kind!r}")


def _add(x: Coords, y: Coords) -> Coords:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: Coords, y: Coords) -> Coords:
    return tuple(a - b for a, b in zip(x, y))


@dataclass(frozen=True)
class WittElement:
    """``sum r_x L_x`` with ring coefficients ``r_x`` (coordinate tuples)."""

    terms: Mapping[Coords, Coords] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(k): tuple(v) for k, v in self.terms.items() if any(v)}
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def gen(cls, x, width: int | None = None) -> WittElement:
        x = _coords(x)
        one = (1,) + (0,) * ((width or len(x)) - 1)
        return cls({x: one})

    def __add__(self, other: WittElement) -> WittElement:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = _add(out[k], v) if k in out else v
        return WittElement(out)

    def __neg__(self) -> WittElement:
        return WittElement({k: tuple(-c for c in v) for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, WittElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms


def witt_bracket(a: WittElement, b: WittElement, scheme: SchemeSpec, windowed: bool = True) -> WittElement:
    """Bilinear extension of ``[L_x, L_y] = (x - y) chi(x* + y*) L_{x+y}``.

    With ``windowed=False`` the characteristic function is dropped.
    """
    ring = ring_for(scheme)
    out: dict[Coords, Coords] = {}
    for x, r in a.terms.items():
        for y, s in b.terms.items():
            if x == y:
                continue
            z = _add(x, y)
            if windowed and not scheme.window.contains(scheme.star_map(z)):
                continue
            c = ring.mul(ring.mul(r, s), _sub(x, y))
            out[z] = _add(out[z], c) if z in out else c
    return WittElement(out)


def jacobi_check(a: WittElement, b: WittElement, c: WittElement, scheme: SchemeSpec, windowed: bool = False) -> bool:
    br = lambda u, v: witt_bracket(u, v, scheme, windowed)  # noqa: E731
    total = br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)
    return total.is_zero()


@dataclass
class AcceptabilityReport:
    triples: int
    violations: list
    jacobi_failures: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "triples": self.triples,
            "violations": [[[str(c) for c in p] for p in t] for t in self.violations[:20]],
            "violation_count": len(self.violations),
            "jacobi_failures": len(self.jacobi_failures),
        }


def acceptability_check(
    window: ConvexWindow | WindowUnion,
    samples: Sequence,
    scheme: SchemeSpec | None = None,
    limit: int | None = None,
) -> AcceptabilityReport:
    """Test ``chi(a+b+c) and chi(a+b) => chi(a+c)`` on ordered triples of samples.

    ``samples`` are inner-space points, or lattice coordinates when a scheme is
    given; in the latter case the windowed bracket's Jacobi identity is also
    replayed on every triple of generators.
    """
    if scheme is not None:
        lattice = [_coords(p) for p in samples]
        inner = [scheme.star_map(c) for c in lattice]
    else:
        lattice = None
        inner = [tuple(GoldenRat.coerce(v) for v in p) for p in samples]
    n = len(inner)
    memo: dict = {}

    def chi(p):
        if p not in memo:
            memo[p] = window.contains(p)
        return memo[p]

    def plus(u, v):
        return tuple(a + b for a, b in zip(u, v))

    violations, jac, count = [], [], 0
    for i, j, k in itertools.product(range(n), repeat=3):
        if limit is not None and count >= limit:
            break
        count += 1
        a, b, c = inner[i], inner[j], inner[k]
        ab = plus(a, b)
        if chi(plus(ab, c)) and chi(ab) and not chi(plus(a, c)):
            violations.append((a, b, c))
        if lattice is not None:
            g = [WittElement.gen(lattice[t]) for t in (i, j, k)]
            if not jacobi_check(*g, scheme, windowed=True):
                jac.append((lattice[i], lattice[j], lattice[k]))
    return AcceptabilityReport(count, violations, jac)


# ---------------------------------------------------------------------------
# symmetry transfer


def _mat(rows) -> list[list[GoldenRat]]:
    return [[GoldenRat.coerce(x) for x in r] for r in rows]


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), GoldenRat(0)) for j in range(len(b[0]))] for i in range(len(a))]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _diag(values):
    n = len(values)
    return [[GoldenRat.coerce(values[i]) if i == j else GoldenRat(0) for j in range(n)] for i in range(n)]


def _star_matrix(a):
    return [[x.star() for x in r] for r in a]


@dataclass
class SymmetryReport:
    isometry: bool
    integral: bool
    congruence: bool
    window_invariant: bool
    equivariance_failures: int = 0
    core_bijective: bool | None = None
    pairs: int = 0

    @property
    def hypothesis_ok(self) -> bool:
        return self.isometry and self.integral and self.congruence and self.window_invariant

    @property
    def ok(self) -> bool:
        return self.hypothesis_ok and self.equivariance_failures == 0 and bool(self.core_bijective)

    def to_json(self) -> dict:
        return {
            "isometry": self.isometry,
            "integral": self.integral,
            "congruence": self.congruence,
            "window_invariant": self.window_invariant,
            "hypothesis_ok": self.hypothesis_ok,
            "equivariance_failures": self.equivariance_failures,
            "core_bijective": self.core_bijective,
            "pairs": self.pairs,
            "ok": self.ok,
        }


def _tau_coords(v: GoldenRat) -> tuple[Fraction, Fraction]:
    """Rational ``(a, b)`` with ``v = a + b tau``."""
    p, q, d = v.parts
    return Fraction(p - q, d), Fraction(2 * q, d)


def _lattice_generators(scheme: SchemeSpec) -> np.ndarray:
    n = scheme.ncoords
    if scheme.congruence is None:
        return np.eye(n, dtype=np.int64)
    reps = np.array(list(itertools.product((0, 1), repeat=n)), dtype=np.int64)
    return np.concatenate([2 * np.eye(n, dtype=np.int64), reps[scheme.lattice_mask(reps)]], axis=0)


@dataclass(frozen=True)
class CoordinateAction:
    """Rational matrix ``numer / denom`` acting on pair coordinates."""

    numer: np.ndarray
    denom: int

    def apply(self, coords: np.ndarray) -> np.ndarray:
        raw = np.asarray(coords, dtype=np.int64) @ self.numer.T
        if np.any(raw % self.denom):
            raise ValueError("image is not integral")
        return raw // self.denom


def coordinate_action(scheme: SchemeSpec, c) -> CoordinateAction:
    """Matrix of ``v -> C v`` (pair values) written on pair coordinates."""
    n = scheme.ncoords
    cols = []
    for k in range(n):
        e = [0] * n
        e[k] = 1
        v = scheme.pair_values(e)
        image = [sum((c[i][j] * v[j] for j in range(scheme.n_pairs)), GoldenRat(0)) * scheme.den for i in range(scheme.n_pairs)]
        cols.append([x for g in image for x in _tau_coords(g)])
    den = 1
    for col in cols:
        for x in col:
            den = den * x.denominator // np.gcd(den, x.denominator)
    numer = np.array([[int(x * den) for x in col] for col in cols], dtype=np.int64).T
    return CoordinateAction(numer, int(den))


def _preserves_lattice(scheme: SchemeSpec, act: CoordinateAction) -> tuple[bool, bool]:
    """(integral on the lattice, image inside the lattice)."""
    gens = _lattice_generators(scheme)
    raw = gens @ act.numer.T
    if np.any(raw % act.denom):
        return False, False
    return True, bool(np.all(scheme.lattice_mask(raw // act.denom)))


def symmetry_transfer_check(
    scheme: SchemeSpec,
    rho: Sequence[Sequence],
    points: Sequence | None = None,
    radius=None,
) -> SymmetryReport:
    """Check that a physical isometry ``rho`` transfers to the model set.

    Hypotheses: ``rho`` preserves the metric, its lattice action is integral
    and respects the congruence, and the induced inner map fixes the window.
    Then the equivariance ``rho(x|-y) == rho(x)|-rho(y)`` is replayed on all
    pairs, and ``rho`` must permute the radius core of the batch.
    """
    r = _mat(rho)
    gram = _diag(scheme.phys_gram)
    isometry = _matmul(_matmul(_transpose(r), gram), r) == gram
    p = _mat(scheme.phys_matrix)
    q = _mat(scheme.inner_matrix)
    c = _matmul(_matmul(_mat_inverse(p), r), p)
    act = coordinate_action(scheme, c)
    integral, congruence = _preserves_lattice(scheme, act)
    inner_action = _matmul(_matmul(q, _star_matrix(c)), _mat_inverse(q))
    win = scheme.window
    if isinstance(win, WindowUnion):
        invariant = False
    else:
        invariant = win.transformed(inner_action).same_region(win)
    rep = SymmetryReport(isometry, integral, congruence, invariant)
    if points is None or not (integral and congruence):
        return rep
    coords = np.array([_coords(pt) for pt in points], dtype=np.int64)
    if len(coords) == 0:
        rep.core_bijective = True
        return rep
    n = len(coords)
    left = np.repeat(coords, n, axis=0)
    right = np.tile(coords, (n, 1))
    lhs = act.apply(qadd_many(left, right))
    rhs = qadd_many(act.apply(left), act.apply(right))
    rep.pairs = n * n
    rep.equivariance_failures = int(np.sum(~np.all(lhs == rhs, axis=1)))
    if radius is not None:
        core = {tuple(int(v) for v in row) for row in coords}
        r2 = GoldenRat.coerce(radius) ** 2
        core = {x for x in core if scheme.phys_norm2(x) <= r2}
        image = {tuple(int(v) for v in row) for row in act.apply(np.array(sorted(core), dtype=np.int64).reshape(-1, scheme.ncoords))}
        rep.core_bijective = image == core and all(scheme.contains(x) for x in image)
    else:
        image = {tuple(int(v) for v in row) for row in act.apply(coords)}
        rep.core_bijective = image == {tuple(int(v) for v in row) for row in coords}
    return rep


def penrose_rotation(scheme: SchemeSpec) -> list[list[GoldenRat]]:
    """Physical matrix of multiplication by ``xi``.

    On pair values ``(A, B)`` of ``A + B xi^2`` this is ``(tau A - tau B, tau A - B)``.
    """
    t = GoldenInt(0, 1).to_rat()
    one = GoldenRat(1)
    c = [[t, -t], [t, -one]]
    p = _mat(scheme.phys_matrix)
    return _matmul(_matmul(p, c), _mat_inverse(p))


def table1_isometries() -> list[list[list[GoldenRat]]]:
    """The five listed 3x3 matrices, as printed."""
    return [_mat(row["matrix"]) for row in TABLE1]


def icosian_conjugation(q: Icosian) -> list[list[GoldenRat]]:
    """Matrix of ``v -> q v q^-1`` on pure quaternions (basis i, j, k); ``q`` a unit."""
    cols = []
    qbar = Icosian(tuple(v if i < 2 else -v for i, v in enumerate(q.doubled)))
    for name in "ijk":
        img = quat_mul(quat_mul(q, Icosian.unit(name)), qbar)
        cols.append(img.values[1:])
    return _transpose([[GoldenRat.coerce(x) for x in col] for col in cols])


def icosian_left_multiplication(q: Icosian) -> list[list[GoldenRat]]:
    """Matrix of ``v -> q v`` on quaternions (basis 1, i, j, k)."""
    cols = [quat_mul(q, Icosian.unit(name)).values for name in "1ijk"]
    return _transpose([[GoldenRat.coerce(x) for x in col] for col in cols])


# ---------------------------------------------------------------------------
# Fibonacci label layer


def _fib_offset(n: int) -> int:
    """``n'`` with ``n' + n tau`` the unique point of label ``n`` in ``[-1/2, 1/2]*``."""
    # n' = round(n (tau - 1)); never a tie because tau is irrational
    return (GoldenInt(-n, n).to_rat() + GoldenRat(Fraction(1, 2))).floor()


def fib_label_coords(n: int) -> Coords:
    return (_fib_offset(n), n)


def fib_coords_label(x) -> int:
    a, b = _coords(x)
    if a != _fib_offset(b):
        raise ValueError(f"{(a, b)} is not a palindromic Fibonacci point")
    return b


def jordan_product_nm(n: int, m: int) -> dict[int, Fraction]:
    """``L_n o L_m = (L_{n'-m'+2n-m} + L_{m'-n'+2m-n}) / 2`` on integer labels."""
    if n == m:
        return {n: Fraction(1)}
    n1, m1 = _fib_offset(n), _fib_offset(m)
    out: dict[int, Fraction] = {}
    for lab in (n1 - m1 + 2 * n - m, m1 - n1 + 2 * m - n):
        out[lab] = out.get(lab, Fraction(0)) + Fraction(1, 2)
    return out


def jordan_table(scheme: SchemeSpec, rows: Sequence, cols: Sequence) -> list[list[AlgebraElement]]:
    gens_r = [generator(scheme, r) for r in rows]
    gens_c = [generator(scheme, c) for c in cols]
    return [[jordan_product(a, b) for b in gens_c] for a in gens_r]


def format_fib_cell(el: AlgebraElement) -> str:
    """Render a Fibonacci element with integer labels, e.g. ``1/2(L_3 + L_-2)``."""
    items = [(fib_coords_label(k), v) for k, v in el.terms.items()]
    if len(items) == 1 and items[0][1] == 1:
        return f"L_{items[0][0]}"
    if len(items) == 2 and all(v == Fraction(1, 2) for _, v in items):
        a, b = sorted(lab for lab, _ in items)
        return f"1/2(L_{a} + L_{b})"
    return " + ".join(f"{v}*L_{lab}" for lab, v in sorted(items))


def markdown_table(header: Sequence[str], rows: Sequence[Sequence[str]], corner: str = "") -> str:
    lines = ["| " + " | ".join([corner, *header]) + " |", "|" + "---|" * (len(header) + 1)]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def random_element(scheme: SchemeSpec, points: Sequence, rng: random.Random, terms: int = 3) -> AlgebraElement:
    """Random combination of batch generators with small rational coefficients."""
    picks = rng.sample([_coords(p) for p in points], min(terms, len(points)))
    coeffs = {p: Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 4)) for p in picks}
    return AlgebraElement.certified(scheme, coeffs)


__all__ += ["random_element", "ProbeReport", "AcceptabilityReport"]
