"""Root systems of types H2, H3, H4, reflections and Coxeter relations.

Vectors are tuples of :class:`GoldenRat` and all inner products are exact.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .golden_field import GoldenInt, GoldenRat, format_golden

__all__ = [
    "Vector",
    "Reflection",
    "RootSystem",
    "CoxeterReport",
    "reflect",
    "inner",
    "delta_literal",
    "build_delta",
    "simple_roots",
    "verify_coxeter",
    "check_crystallographic",
    "group_order",
    "COXETER_MATRICES",
    "roots_to_csv",
]

Vector = tuple  # tuple of GoldenRat

ZERO = GoldenRat(0)
HALF = GoldenRat(Fraction(1, 2))
TAU = GoldenInt(0, 1).to_rat()
INV_TAU = GoldenInt(-1, 1).to_rat()

COXETER_MATRICES = {
    2: ((1, 5), (5, 1)),
    3: ((1, 3, 2), (3, 1, 5), (2, 5, 1)),
    4: ((1, 3, 2, 2), (3, 1, 3, 2), (2, 3, 1, 5), (2, 2, 5, 1)),
}


def vec(*xs) -> Vector:
    return tuple(GoldenRat.coerce(x) for x in xs)


def inner(u: Sequence[GoldenRat], v: Sequence[GoldenRat]) -> GoldenRat:
    total = ZERO
    for a, b in zip(u, v):
        total = total + a * b
    return total


@dataclass(frozen=True)
class Reflection:
    """Orthogonal reflection in the hyperplane normal to ``axis``."""

    axis: Vector

    def __post_init__(self):
        if all(not c for c in self.axis):
            raise ValueError("reflection axis must be nonzero")
        object.__setattr__(self, "axis", tuple(GoldenRat.coerce(c) for c in self.axis))

    def __call__(self, v: Sequence) -> Vector:
        return reflect(self, v)

    def matrix(self) -> list[list[GoldenRat]]:
        n = len(self.axis)
        return [list(reflect(self, tuple(GoldenRat(int(i == j)) for i in range(n)))) for j in range(n)]


def reflect(r: Reflection, v: Sequence) -> Vector:
    """``v - 2<v|a>/<a|a> a``."""
    a = r.axis
    v = tuple(GoldenRat.coerce(c) for c in v)
    if len(v) != len(a):
        raise ValueError("dimension mismatch")
    f = inner(v, a) * 2 / inner(a, a)
    return tuple(x - f * y for x, y in zip(v, a))


def _even_permutations(n: int) -> list[tuple[int, ...]]:
    def parity(p):
        return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]) % 2

    return [p for p in itertools.permutations(range(n)) if parity(p) == 0]


def _expand(base: Sequence[GoldenRat], perms: Iterable[tuple[int, ...]]) -> list[Vector]:
    out = []
    for perm in perms:
        permuted = [base[i] for i in perm]
        for signs in itertools.product((1, -1), repeat=len(base)):
            out.append(tuple(s * x for s, x in zip(signs, permuted)))
    return out


def _dedupe(vs: Iterable[Vector]) -> list[Vector]:
    seen: dict = {}
    for v in vs:
        seen.setdefault(v, None)
    return sorted(seen, key=lambda v: tuple(float(c) for c in v), reverse=True)


def delta_literal(n: int) -> list[Vector]:
    """The vertex listings exactly as printed, expanded lexicographically."""
    all_perms = lambda k: list(itertools.permutations(range(k)))  # noqa: E731
    if n == 4:
        vs = _expand(vec(1, 0, 0, 0), all_perms(4))
        vs += _expand(vec(HALF, HALF, HALF, HALF), all_perms(4))
        vs += _expand(vec(0, HALF, INV_TAU / 2, TAU / 2), _even_permutations(4))
    elif n == 3:
        vs = _expand(vec(1, 0, 0), all_perms(3))
        vs += _expand(vec(HALF, INV_TAU / 2, TAU / 2), _even_permutations(3))
    elif n == 2:
        # "(+-1, 0)" without permutation, then (1/2)(+-1, +-tau) and all permutations
        vs = _expand(vec(1, 0), [(0, 1)])
        vs += _expand(vec(HALF, TAU / 2), all_perms(2))
    else:
        raise ValueError("n must be 2, 3 or 4")
    return _dedupe(vs)


@dataclass(frozen=True)
class RootSystem:
    rank: int
    roots: tuple[Vector, ...]
    coxeter_matrix: tuple[tuple[int, ...], ...] | None = None
    name: str = ""
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {r: i for i, r in enumerate(self.roots)})

    @property
    def dim(self) -> int:
        return len(self.roots[0])

    def __len__(self):
        return len(self.roots)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._index

    def index(self, v) -> int:
        return self._index[tuple(v)]

    def reflection_permutation(self, alpha: Vector) -> tuple[int, ...]:
        r = Reflection(alpha)
        return tuple(self._index[reflect(r, v)] for v in self.roots)

    def check_axioms(self) -> dict:
        """Negation closure, reflection closure and exact isometry of every reflection."""
        missing_neg = [v for v in self.roots if tuple(-c for c in v) not in self._index]
        not_closed = []
        not_isometric = []
        for a in self.roots:
            r = Reflection(a)
            images = [reflect(r, v) for v in self.roots]
            if any(w not in self._index for w in images):
                not_closed.append(a)
                continue
            # linear, so preserving <.|.> on all root pairs is R^T R = 1
            m = r.matrix()
            n = len(m)
            if not all(inner(m[i], m[j]) == int(i == j) for i in range(n) for j in range(n)):
                not_isometric.append(a)
        return {
            "count": len(self.roots),
            "negation_closed": not missing_neg,
            "reflection_closed": not not_closed,
            "isometric": not not_isometric,
            "violations": {
                "negation": missing_neg,
                "reflection": not_closed,
                "isometry": not_isometric,
            },
            "ok": not (missing_neg or not_closed or not_isometric),
        }

    def to_csv(self) -> str:
        return roots_to_csv(self.roots)


def roots_to_csv(roots: Sequence[Vector]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    dim = len(roots[0]) if roots else 0
    w.writerow([f"x{i}" for i in range(dim)])
    for r in roots:
        w.writerow([format_golden(c) for c in r])
    return buf.getvalue()


def _decagon_in_delta3() -> list[Vector]:
    axis = vec(0, 1, TAU)  # an icosahedron vertex, i.e. a fivefold axis
    return [v for v in delta_literal(3) if not inner(v, axis)]


@lru_cache(maxsize=None)
def build_delta(n: int) -> RootSystem:
    """Delta_n for n in {2, 3, 4}.

    Delta_4 and Delta_3 are the printed listings.  Delta_2 is the decagon of
    roots of Delta_3 orthogonal to a fivefold axis (rank 2, carried in R^3);
    the printed two-dimensional listing mixes root lengths and is exposed
    separately as :func:`delta_literal`.
    """
    if n == 4:
        roots = delta_literal(4)
    elif n == 3:
        roots = delta_literal(3)
    elif n == 2:
        roots = _dedupe(_decagon_in_delta3())
    else:
        raise ValueError("n must be 2, 3 or 4")
    return RootSystem(n, tuple(roots), COXETER_MATRICES[n], f"H{n}")


def embed(v: Vector, dim: int) -> Vector:
    """Coordinate inclusion R^k -> R^dim by prepending zeros."""
    return (ZERO,) * (dim - len(v)) + tuple(v)


# ---------------------------------------------------------------------------
# simple roots and the reflection group


def _functional(dim: int) -> Vector:
    # generic rational weights: no root of H2/H3/H4 is orthogonal to this
    weights = (Fraction(1000003), Fraction(1009), Fraction(31), Fraction(1))
    return tuple(GoldenRat(w) for w in weights[-dim:]) if dim <= 4 else tuple(
        GoldenRat(7**k) for k in range(dim)
    )


def positive_roots(system: RootSystem, functional: Vector | None = None) -> list[Vector]:
    f = functional or _functional(system.dim)
    out = []
    for r in system.roots:
        s = inner(r, f).sign()
        if s == 0:
            raise ValueError("functional is orthogonal to a root; choose another")
        if s > 0:
            out.append(r)
    return out


def simple_roots(system: RootSystem, functional: Vector | None = None) -> list[Vector]:
    """Positive roots ``a`` whose reflection permutes the other positive roots."""
    pos = positive_roots(system, functional)
    pos_set = set(pos)
    simple = []
    for a in pos:
        r = Reflection(a)
        if all(reflect(r, b) in pos_set for b in pos if b != a):
            simple.append(a)
    return simple


def _perm_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """``(p o q)[i] = p[q[i]]``."""
    return tuple(p[i] for i in q)


def group_order(system: RootSystem, generators: Sequence[Vector] | None = None) -> int:
    """Order of the group generated by reflections, by closure on root permutations."""
    gens = [system.reflection_permutation(a) for a in (generators or simple_roots(system))]
    ident = tuple(range(len(system)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _perm_mul(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)


def _perm_order(p: tuple[int, ...]) -> int:
    ident = tuple(range(len(p)))
    q, k = p, 1
    while q != ident:
        q = _perm_mul(p, q)
        k += 1
    return k


def _mat_mul(a, b):
    n = len(a)
    return [[inner(a[i], [b[k][j] for k in range(n)]) for j in range(n)] for i in range(n)]


def _mat_pow(a, k):
    n = len(a)
    out = [[GoldenRat(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = _mat_mul(out, a)
    return out


def _is_identity(a) -> bool:
    return all(a[i][j] == int(i == j) for i in range(len(a)) for j in range(len(a)))


@dataclass
class CoxeterReport:
    computed: list[list[int]]
    expected: tuple[tuple[int, ...], ...]
    labeling: tuple[int, ...] | None
    violations: list[str]

    @property
    def ok(self) -> bool:
        return self.labeling is not None and not self.violations


def verify_coxeter(
    system: RootSystem,
    generators: Sequence[Reflection | Vector] | None = None,
    expected: Sequence[Sequence[int]] | None = None,
) -> CoxeterReport:
    """Check ``(R_i R_j)^{m_ij} = 1`` against the Coxeter matrix.

    Generator labels are matched to the expected matrix by trying every
    relabeling; the relations are then checked on exact reflection matrices
    and the orders ``m_ij`` are confirmed minimal.
    """
    axes = [g.axis if isinstance(g, Reflection) else tuple(g) for g in (generators or simple_roots(system))]
    expected = tuple(tuple(row) for row in (expected or system.coxeter_matrix))
    n = len(axes)
    perms = [system.reflection_permutation(a) for a in axes]
    computed = [
        [1 if i == j else _perm_order(_perm_mul(perms[i], perms[j])) for j in range(n)] for i in range(n)
    ]
    labeling = None
    if len(expected) == n:
        for sigma in itertools.permutations(range(n)):
            if all(computed[sigma[i]][sigma[j]] == expected[i][j] for i in range(n) for j in range(n)):
                labeling = sigma
                break
    violations = []
    if labeling is None:
        violations.append("no relabeling of the generators matches the expected Coxeter matrix")
    else:
        mats = [Reflection(axes[labeling[i]]).matrix() for i in range(n)]
        for i in range(n):
            for j in range(n):
                m = expected[i][j]
                prod = _mat_mul(mats[i], mats[j])
                if not _is_identity(_mat_pow(prod, m)):
                    violations.append(f"(R{i + 1}R{j + 1})^{m} != 1")
    return CoxeterReport(computed, expected, labeling, violations)


def check_crystallographic(system: RootSystem) -> bool:
    """True iff every Cartan integer ``2<b|a>/<a|a>`` is a rational integer."""
    for a in system.roots:
        aa = inner(a, a)
        for b in system.roots:
            c = inner(b, a) * 2 / aa
            if not c.is_rational() or c.p.denominator != 1:
                return False
    return True


def simple_root_coordinates(system: RootSystem, simple: Sequence[Vector] | None = None) -> dict:
    """Coefficients of every root in the simple-root basis (exact, Q(sqrt5))."""
    basis = list(simple or simple_roots(system))
    k = len(basis)
    gram = [[inner(a, b) for b in basis] for a in basis]
    out = {}
    for r in system.roots:
        rhs = [inner(r, b) for b in basis]
        out[r] = _solve(gram, rhs)
        recon = tuple(sum((c * b[i] for c, b in zip(out[r], basis)), ZERO) for i in range(system.dim))
        if recon != r:
            raise ValueError("root lies outside the span of the simple roots")
    assert k == len(basis)
    return out


def _solve(a, b):
    n = len(a)
    m = [list(a[i]) + [b[i]] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]
