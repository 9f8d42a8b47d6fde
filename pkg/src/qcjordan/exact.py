"""Vectorized exact arithmetic on arrays of numbers ``(p + q*sqrt5)/d``.

Batches are held as integer numpy arrays with one shared positive denominator.
Arrays stay ``int64`` while the bounds allow it and switch to Python-int
object arrays otherwise, so no result ever depends on rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .golden_field import GoldenRat

_SAFE = 2**62


def _as_safe(arr: np.ndarray, bound: int) -> np.ndarray:
    if arr.dtype == object:
        return arr
    if bound >= _SAFE:
        return arr.astype(object)
    return arr


def max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(np.max(np.abs(arr)))


def sign_sqrt5(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Elementwise exact sign of ``p + q*sqrt5`` for integer arrays."""
    p = np.asarray(p)
    q = np.asarray(q)
    sp = np.sign(p).astype(np.int64)
    sq = np.sign(q).astype(np.int64)
    out = np.sign(sp + sq).astype(np.int64)
    mixed = (sp * sq) < 0
    if np.any(mixed):
        pm, qm = p[mixed], q[mixed]
        if pm.dtype != object and max(max_abs(pm), max_abs(qm)) >= 2**30:
            pm, qm = pm.astype(object), qm.astype(object)
        diff = pm * pm - 5 * qm * qm
        out[mixed] = sp[mixed] * np.sign(diff).astype(np.int64)
    return out


@dataclass(frozen=True)
class IntMatrix:
    """A Q(sqrt5) matrix stored as ``(P + Q*sqrt5)/den`` with integer P, Q."""

    p: np.ndarray
    q: np.ndarray
    den: int

    @classmethod
    def from_golden(cls, rows: Sequence[Sequence]) -> IntMatrix:
        vals = [[GoldenRat.coerce(x) for x in row] for row in rows]
        den = 1
        for row in vals:
            for x in row:
                d = x.parts[2]
                den = den * d // math.gcd(den, d)
        shape = (len(vals), len(vals[0]) if vals else 0)
        p = np.zeros(shape, dtype=object)
        q = np.zeros(shape, dtype=object)
        for i, row in enumerate(vals):
            for j, x in enumerate(row):
                a, b, d = x.parts
                p[i, j] = a * (den // d)
                q[i, j] = b * (den // d)
        bound = max(max_abs(p), max_abs(q)) if p.size else 0
        if bound < 2**40:
            p, q = p.astype(np.int64), q.astype(np.int64)
        return cls(p, q, den)

    @property
    def bound(self) -> int:
        return max(max_abs(self.p), max_abs(self.q))

    def apply_int(self, coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """``coords @ M.T`` for an integer coordinate batch; returns (P, Q) over ``den``."""
        coords = np.asarray(coords)
        width = self.p.shape[1]
        bound = max_abs(coords) * self.bound * max(width, 1)
        c = _as_safe(coords, bound)
        mp = _as_safe(self.p, bound)
        mq = _as_safe(self.q, bound)
        return c @ mp.T, c @ mq.T

    def entry(self, i: int, j: int) -> GoldenRat:
        return GoldenRat._raw(int(self.p[i, j]), int(self.q[i, j]), self.den)


def golden_to_parts(values: Sequence) -> tuple[list[int], list[int], int]:
    """Common-denominator integer parts of a list of Q(sqrt5) numbers."""
    vals = [GoldenRat.coerce(v) for v in values]
    den = 1
    for v in vals:
        den = den * v.parts[2] // math.gcd(den, v.parts[2])
    ps = [v.parts[0] * (den // v.parts[2]) for v in vals]
    qs = [v.parts[1] * (den // v.parts[2]) for v in vals]
    return ps, qs, den
