"""Quasiaddition ``x |- y = tau^2 x - tau y`` on pair coordinates.

On a single pair ``(a, b) = a + tau b`` multiplication by ``tau`` is
``(a, b) -> (b, a + b)`` and by ``tau^2`` is ``(a, b) -> (a + b, a + 2b)``,
so the operation is integral and acts pairwise.  It is defined on the whole
lattice; closure on a model set is a separate check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .golden_field import GoldenInt, GoldenRat
from .model_set import QcPoint, SchemeSpec

Coords = tuple[int, ...]

__all__ = [
    "qadd",
    "qadd_z8",
    "qadd_many",
    "qadd_repeated",
    "qadd_repeated_closed",
    "tau_power_coords",
    "star_identity_holds",
    "check_identities",
    "IdentityReport",
    "check_closure",
    "ClosureReport",
    "random_lattice_coords",
    "random_lattice_batch",
    "identity_suite",
]


def _pairs(x: Sequence[int]):
    if len(x) % 2:
        raise ValueError("pair coordinates need an even length")
    return [GoldenInt(x[i], x[i + 1]) for i in range(0, len(x), 2)]


def _flat(values: Sequence[GoldenInt]) -> Coords:
    return tuple(c for g in values for c in (g.a, g.b))


TAU = GoldenInt(0, 1)
TAU2 = GoldenInt(1, 1)


def qadd(x: Sequence[int], y: Sequence[int]) -> Coords:
    """``tau^2 x - tau y`` computed with ring arithmetic on each pair."""
    if len(x) != len(y):
        raise ValueError("coordinate lengths differ")
    return _flat([TAU2 * a - TAU * b for a, b in zip(_pairs(x), _pairs(y))])


def qadd_z8(x: Sequence[int], y: Sequence[int]) -> Coords:
    """The same operation through the explicit integer formula on each pair."""
    if len(x) != len(y):
        raise ValueError("coordinate lengths differ")
    out: list[int] = []
    for i in range(0, len(x), 2):
        a, b, a2, b2 = x[i], x[i + 1], y[i], y[i + 1]
        out.append((a - a2) + (b - b2) + a2)
        out.append((a - a2) + (b - b2) + b)
    return tuple(out)


def qadd_many(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Vectorized ``x |- y`` for integer batches of shape ``(n, 2k)``."""
    x = np.asarray(x)
    y = np.asarray(y)
    out = np.empty(np.broadcast_shapes(x.shape, y.shape), dtype=np.result_type(x, y))
    a, b = x[..., 0::2], x[..., 1::2]
    a2, b2 = y[..., 0::2], y[..., 1::2]
    out[..., 0::2] = a + b - b2
    out[..., 1::2] = a + 2 * b - a2 - b2
    return out


def tau_power_coords(x: Sequence[int], k: int) -> Coords:
    """``(1 + tau)^k x`` pairwise."""
    factor = TAU2**k
    return _flat([factor * g for g in _pairs(x)])


def qadd_repeated(y: Sequence[int], x: Sequence[int], k: int) -> Coords:
    """``(((y |- x) |- x) ... ) |- x`` with ``k`` applications, by iteration."""
    if k < 1:
        raise ValueError("k must be positive")
    cur = tuple(y)
    for _ in range(k):
        cur = qadd(cur, x)
    return cur


def qadd_repeated_closed(y: Sequence[int], x: Sequence[int], k: int) -> Coords:
    """Closed form ``(1 + tau)^k (y - x) + x``."""
    if k < 1:
        raise ValueError("k must be positive")
    diff = tuple(a - b for a, b in zip(y, x))
    return tuple(a + b for a, b in zip(tau_power_coords(diff, k), x))


def star_identity_holds(scheme: SchemeSpec, x: Sequence[int], y: Sequence[int]) -> bool:
    """``star(x |- y) == (1 - tau)^2 x* - (1 - tau) y*`` in inner space."""
    t = GoldenRat(1) - GoldenInt(0, 1).to_rat()
    lhs = scheme.star_map(qadd(x, y))
    xs, ys = scheme.star_map(x), scheme.star_map(y)
    rhs = tuple(t * t * a - t * b for a, b in zip(xs, ys))
    return lhs == rhs


@dataclass
class IdentityReport:
    cases: int = 0
    failures: dict[str, list] = field(default_factory=dict)

    def fail(self, name: str, witness) -> None:
        self.failures.setdefault(name, []).append(witness)

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, int]:
        return {k: len(v) for k, v in self.failures.items()}


IDENTITY_NAMES = ("flexible", "idempotent_right", "power_left", "swap", "translation", "fixed_point")


def check_identities(x: Sequence[int], y: Sequence[int], u: Sequence[int], report: IdentityReport | None = None) -> IdentityReport:
    """Flexibility, the two power laws, the swap law and translation invariance.

    Also the fixed-point law ``x |- y == x`` exactly when ``y == x``.
    """
    rep = report or IdentityReport()
    x, y, u = tuple(x), tuple(y), tuple(u)
    q = qadd
    rep.cases += 1
    if q(x, q(y, x)) != q(q(x, y), x):
        rep.fail("flexible", (x, y))
    if q(x, q(y, y)) != q(x, y):
        rep.fail("idempotent_right", (x, y))
    if q(q(x, x), y) != q(x, y):
        rep.fail("power_left", (x, y))
    if q(x, q(x, y)) != q(y, x):
        rep.fail("swap", (x, y))
    shift = lambda v: tuple(a + b for a, b in zip(v, u))  # noqa: E731
    if q(shift(x), shift(y)) != shift(q(x, y)):
        rep.fail("translation", (x, y, u))
    if (q(x, y) == x) != (x == y):
        rep.fail("fixed_point", (x, y))
    return rep


@dataclass
class ClosureReport:
    pairs: int
    violations: list[tuple[Coords, Coords]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"pairs": self.pairs, "violations": [[list(a), list(b)] for a, b in self.violations]}


def check_closure(scheme: SchemeSpec, points: Sequence[QcPoint | Sequence[int]]) -> ClosureReport:
    """Every ordered pair ``x |- y`` must again be a model-set point.

    Uses the scheme's exact vectorized membership test on the full pair grid.
    """
    coords = np.array([p.coords if isinstance(p, QcPoint) else tuple(p) for p in points], dtype=np.int64)
    n = len(coords)
    if n == 0:
        return ClosureReport(0, [])
    violations: list[tuple[Coords, Coords]] = []
    block = max(1, 200_000 // n)
    for start in range(0, n, block):
        xs = coords[start : start + block]
        left = np.repeat(xs, n, axis=0)
        right = np.tile(coords, (len(xs), 1))
        res = qadd_many(left, right)
        ok = scheme.contains_many(res)
        for i in np.flatnonzero(~ok):
            violations.append((tuple(int(v) for v in left[i]), tuple(int(v) for v in right[i])))
    return ClosureReport(n * n, violations)


def random_lattice_coords(scheme: SchemeSpec, rng: random.Random, bound: int = 50) -> Coords:
    """A random lattice vector with coordinates in ``[-bound, bound]``."""
    while True:
        c = tuple(rng.randint(-bound, bound) for _ in range(scheme.ncoords))
        if scheme.in_lattice(c):
            return c


def random_lattice_batch(scheme: SchemeSpec, n: int, rng: np.random.Generator, bound: int = 50) -> np.ndarray:
    """``n`` random lattice vectors (rows) by rejection on the congruence."""
    out = np.zeros((0, scheme.ncoords), dtype=np.int64)
    while len(out) < n:
        cand = rng.integers(-bound, bound + 1, size=(2 * n + 16, scheme.ncoords))
        out = np.concatenate([out, cand[scheme.lattice_mask(cand)]], axis=0)
    return out[:n]


def _tau2_many(v: np.ndarray, k: int) -> np.ndarray:
    out = v.copy()
    for _ in range(k):
        a, b = out[:, 0::2].copy(), out[:, 1::2].copy()
        out[:, 0::2] = a + b
        out[:, 1::2] = a + 2 * b
    return out


def _star_identity_many(scheme: SchemeSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Vectorized ``star(x |- y) == (1-tau)^2 x* - (1-tau) y*``; True where it holds."""
    from .exact import IntMatrix

    m = IntMatrix.from_golden(scheme.coord_matrix("inner"))
    lp, lq = m.apply_int(qadd_many(x, y))
    xp, xq = m.apply_int(x)
    yp, yq = m.apply_int(y)
    # (1-tau)^2 = (3 - s)/2 and (1-tau) = (1 - s)/2 with s = sqrt5
    rp = 3 * xp - 5 * xq - yp + 5 * yq
    rq = 3 * xq - xp - yq + yp
    return np.all((2 * lp == rp) & (2 * lq == rq), axis=1)


def _rows_equal(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.all(a == b, axis=1)


def identity_suite(scheme: SchemeSpec, cases: int, seed: int = 0, bound: int = 50) -> dict:
    """Randomized exact replay of every quasiaddition identity on one scheme.

    Batched integer arithmetic; the scalar ring-arithmetic ``qadd`` is replayed
    against the integer formula on a subsample to keep both paths honest.
    """
    rng = np.random.default_rng(seed)
    x = random_lattice_batch(scheme, cases, rng, bound)
    y = random_lattice_batch(scheme, cases, rng, bound)
    u = random_lattice_batch(scheme, cases, rng, bound)
    q = qadd_many
    checks = {
        "flexible": _rows_equal(q(x, q(y, x)), q(q(x, y), x)),
        "idempotent_right": _rows_equal(q(x, q(y, y)), q(x, y)),
        "power_left": _rows_equal(q(q(x, x), y), q(x, y)),
        "swap": _rows_equal(q(x, q(x, y)), q(y, x)),
        "translation": _rows_equal(q(x + u, y + u), q(x, y) + u),
        "fixed_point": _rows_equal(q(x, y), x) == _rows_equal(x, y),
    }
    ks = 1 + np.arange(cases) % 10
    closed = np.ones(cases, dtype=bool)
    for k in range(1, 11):
        sel = ks == k
        it = y[sel]
        for _ in range(k):
            it = q(it, x[sel])
        closed[sel] = _rows_equal(it, _tau2_many(y[sel] - x[sel], k) + x[sel])
    checks["repeated_closed_form"] = closed
    ring = np.array([qadd(tuple(int(v) for v in a), tuple(int(v) for v in b)) for a, b in zip(x, y)])
    checks["z8_formula"] = _rows_equal(ring, q(x, y))
    checks["star_compatibility"] = _star_identity_many(scheme, x, y)
    identity = {n: {"pass": int(np.sum(v)), "fail": int(np.sum(~v))} for n, v in checks.items()}
    return {
        "scheme": scheme.name,
        "cases": cases,
        "seed": seed,
        "identity": identity,
        "ok": all(v["fail"] == 0 for v in identity.values()),
    }


def qadd_points(scheme: SchemeSpec) -> Callable[[QcPoint, QcPoint], QcPoint]:
    """Quasiaddition lifted to :class:`QcPoint` values of one scheme."""

    def op(x: QcPoint, y: QcPoint) -> QcPoint:
        return scheme.point(qadd(x.coords, y.coords))

    return op
