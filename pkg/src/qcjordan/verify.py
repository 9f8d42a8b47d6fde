"""Verification suites: each returns a JSON-ready dict with ``cases``, ``failures`` and ``ok``.

Randomized suites are seeded, so a report is reproducible from its inputs.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from typing import Callable

import numpy as np

from . import aperiodic_algebra as alg
from .golden_field import GoldenRat, format_golden
from .icosian import TABLE1, build_icosian_group, parse_cycles, quaternionic_norm
from .model_set import (
    SchemeSpec,
    elser_sloane_vertices,
    elser_sloane_window,
    enumerate_points,
    preset,
)
from .quasiadd import check_closure, identity_suite
from .roots_coxeter import build_delta, check_crystallographic, group_order, verify_coxeter

__all__ = [
    "DESK_RADIUS",
    "SUITES",
    "default_symmetries",
    "icosian_suite",
    "coxeter_suite",
    "quasiadd_suite",
    "closure_suite",
    "algebra_suite",
    "acceptability_suite",
    "symmetry_suite",
    "elser_sloane_suite",
    "run_suites",
]

DESK_RADIUS = {
    "fibonacci-palindromic": 9,
    "fibonacci": 9,
    "fibonacci-unit": 9,
    "penrose": 3,
    "z6": 2,
    "z6-icosian": 2,
    "z6-icosian-conjugate": 2,
    "elser-sloane": 3,
}


def _radius(scheme: SchemeSpec, radius=None):
    if radius is not None:
        return radius
    base = scheme.name.split(":")[0]
    return DESK_RADIUS.get(base, 3)


def _result(cases: int, failures: int, **details) -> dict:
    return {"cases": cases, "failures": failures, "ok": failures == 0, **details}


def icosian_suite() -> dict:
    """Group order, closure, unit norms, the five listed A5 images and the kernel."""
    g = build_icosian_group()
    n = len(g.elements)
    norms_bad = sum(1 for e in g.elements if quaternionic_norm(e) != 1)
    closed = all(0 <= g.product_index[i][j] < n for i in range(n) for j in range(n))
    images_bad = [row["permutation"] for row in TABLE1 if g.a5_image[row["icosian"]] != parse_cycles(row["permutation"])]
    kernel = sorted(str(e) for e in g.kernel())
    image_size = len(set(g.a5_image.values()))
    fails = (n != 120) + (not closed) + norms_bad + len(images_bad) + (len(kernel) != 2) + (image_size != 60)
    return _result(
        4 + n + len(TABLE1),
        fails,
        order=n,
        closed=closed,
        norm_failures=norms_bad,
        a5_mismatches=images_bad,
        kernel=kernel,
        a5_image_size=image_size,
    )


EXPECTED_ORDER = {2: 10, 3: 120, 4: 14400}


def coxeter_suite(groups=("h2", "h3"), long: bool = False) -> dict:
    """Root-system axioms, Coxeter relations and group orders."""
    names = list(groups)
    if long and "h4" not in names:
        names.append("h4")
    out, fails, cases = {}, 0, 0
    for name in names:
        n = int(name[1])
        t0 = time.perf_counter()
        rs = build_delta(n)
        ax = rs.check_axioms()
        cox = verify_coxeter(rs)
        order = group_order(rs) if (n < 4 or long) else None
        f = (not ax["ok"]) + (not cox.ok) + (order is not None and order != EXPECTED_ORDER[n])
        fails += f
        cases += 3
        out[name] = {
            "roots": len(rs.roots),
            "axioms": ax["ok"],
            "coxeter_relations": cox.ok,
            "coxeter_matrix": cox.computed,
            "order": order,
            "expected_order": EXPECTED_ORDER[n],
            "crystallographic": check_crystallographic(rs),
            "seconds": round(time.perf_counter() - t0, 3),
        }
    return _result(cases, fails, groups=out)


def quasiadd_suite(scheme: SchemeSpec, seed: int = 0, cases: int = 10_000, radius=None) -> dict:
    ident = identity_suite(scheme, cases, seed)
    pts = enumerate_points(scheme, _radius(scheme, radius))
    clos = check_closure(scheme, pts)
    fails = sum(v["fail"] for v in ident["identity"].values()) + len(clos.violations)
    return _result(
        cases + clos.pairs,
        fails,
        scheme=scheme.name,
        identity=ident["identity"],
        closure_violations=[[list(a), list(b)] for a, b in clos.violations[:20]],
    )


def closure_suite(scheme: SchemeSpec, radius=None) -> dict:
    pts = enumerate_points(scheme, _radius(scheme, radius))
    rep = check_closure(scheme, pts)
    return _result(rep.pairs, len(rep.violations), scheme=scheme.name, points=len(pts), **rep.to_json())


def algebra_suite(scheme: SchemeSpec, seed: int = 0, random_pairs: int = 250, terms: int = 3, radius=None) -> dict:
    """Exhaustive generator checks plus random multi-term Jordan identities."""
    pts = [p.coords for p in enumerate_points(scheme, _radius(scheme, radius))]
    counts = dict.fromkeys(
        ("commutativity", "idempotency", "sum_conservation", "support_conservation", "jordan_generators", "jordan_random"), 0
    )
    cases = dict.fromkeys(counts, 0)
    gens = {x: alg.generator(scheme, x) for x in pts}
    for x in pts:
        cases["idempotency"] += 1
        counts["idempotency"] += alg.jordan_product(gens[x], gens[x]) != gens[x]
    for x, y in itertools.product(pts, repeat=2):
        cases["sum_conservation"] += 1
        counts["sum_conservation"] += not alg.sum_conservation_check(x, y)
        cases["support_conservation"] += 1
        counts["support_conservation"] += not alg.support_conservation_check(scheme, x, y)
        if x <= y:
            cases["commutativity"] += 1
            counts["commutativity"] += alg.jordan_product(gens[x], gens[y]) != alg.jordan_product(gens[y], gens[x])
    # all generator pairs in one batch, with the scalar path replayed on a sample
    rng = random.Random(seed)
    pairs = list(itertools.product(pts, repeat=2))
    ok = alg.jordan_identity_generators(scheme, np.array([x for x, _ in pairs]), np.array([y for _, y in pairs]))
    cases["jordan_generators"] = len(pairs)
    counts["jordan_generators"] = int(np.sum(~ok))
    for i in rng.sample(range(len(pairs)), min(200, len(pairs))):
        x, y = pairs[i]
        cases["jordan_generators"] += 1
        counts["jordan_generators"] += alg.jordan_identity_check(gens[x], gens[y]) != bool(ok[i])
    witness = None
    for _ in range(random_pairs):
        a = alg.random_element(scheme, pts, rng, terms)
        b = alg.random_element(scheme, pts, rng, terms)
        cases["jordan_random"] += 1
        if not alg.jordan_identity_check(a, b):
            counts["jordan_random"] += 1
            if witness is None:
                witness = {"a": a.to_json(), "b": b.to_json()}
    unit = alg.unit_probe(scheme, pts)
    checks = {k: {"cases": cases[k], "failures": counts[k]} for k in counts}
    checks["unit_probe"] = {"cases": len(pts), "failures": int(not unit.ok)}
    total_f = sum(v["failures"] for v in checks.values())
    return _result(
        sum(v["cases"] for v in checks.values()),
        total_f,
        scheme=scheme.name,
        generators=len(pts),
        checks=checks,
        jordan_witness=witness,
        unit_fixed=unit.details["fixed"],
    )


def _fib_rational_samples(window, denominator: int = 6) -> list[tuple[GoldenRat]]:
    vals = sorted({Fraction(k, d) for d in range(1, denominator + 1) for k in range(-2 * d, 2 * d + 1)})
    return [(GoldenRat(v),) for v in vals if window.contains((GoldenRat(v),))]


def acceptability_suite(scheme: SchemeSpec, seed: int = 0, jacobi_trials: int = 1000, radius=None, max_samples: int = 14) -> dict:
    """Acceptability implication on sampled triples, plus Jacobi for the unwindowed bracket."""
    rng = random.Random(seed)
    win = scheme.window
    reports = {}
    if scheme.d2 == 1:
        rep = alg.acceptability_check(win, _fib_rational_samples(win))
        reports["rational_triples"] = rep.to_json()
    pts = [p.coords for p in enumerate_points(scheme, _radius(scheme, radius))]
    if len(pts) > max_samples:
        pts = sorted(rng.sample(pts, max_samples))
    rep = alg.acceptability_check(win, pts, scheme=scheme)
    reports["lattice_triples"] = rep.to_json()
    ring = alg.ring_for(scheme)
    jac_fail = 0
    for _ in range(jacobi_trials):
        els = []
        for _ in range(3):
            terms = {}
            for _ in range(2):
                x = tuple(rng.randint(-6, 6) for _ in range(scheme.ncoords))
                terms[x] = ring.random(rng, 3)
            els.append(alg.WittElement(terms))
        jac_fail += not alg.jacobi_check(*els, scheme, windowed=False)
    violations = sum(r["violation_count"] for r in reports.values())
    return _result(
        sum(r["triples"] for r in reports.values()) + jacobi_trials,
        violations + jac_fail,
        scheme=scheme.name,
        window=getattr(win, "name", ""),
        acceptability=reports,
        jacobi_unwindowed={"cases": jacobi_trials, "failures": jac_fail},
        windowed_jacobi_failures=reports["lattice_triples"]["jacobi_failures"],
    )


def default_symmetries(scheme: SchemeSpec) -> dict[str, list]:
    """Named physical isometries natural to each preset."""
    base = scheme.name.split(":")[0]
    if scheme.kind == "fibonacci":
        return {"negation": [[-1]]}
    if scheme.kind == "penrose":
        return {"xi": alg.penrose_rotation(scheme)}
    if base == "z6":
        return {f"table1[{i}]": m for i, m in enumerate(alg.table1_isometries())}
    if scheme.congruence == "pure_icosian":
        return {f"conj[{i}]": alg.icosian_conjugation(row["icosian"]) for i, row in enumerate(TABLE1)}
    if scheme.congruence == "icosian":
        return {f"left[{i}]": alg.icosian_left_multiplication(row["icosian"]) for i, row in enumerate(TABLE1)}
    return {}


def symmetry_suite(scheme: SchemeSpec, radius=None, rho: dict | None = None) -> dict:
    r = _radius(scheme, radius)
    pts = enumerate_points(scheme, r)
    out, fails = {}, 0
    for name, mat in (rho or default_symmetries(scheme)).items():
        rep = alg.symmetry_transfer_check(scheme, mat, pts, radius=r)
        out[name] = rep.to_json()
        fails += not rep.ok
    return _result(len(out), fails, scheme=scheme.name, radius=str(r), symmetries=out)


def elser_sloane_suite(radius=3) -> dict:
    t0 = time.perf_counter()
    verts = elser_sloane_vertices()
    win = elser_sloane_window()
    problems = win.validate_fast()
    scheme = preset("elser-sloane")
    pts = enumerate_points(scheme, radius)
    clos = check_closure(scheme, pts)
    fails = (len(verts) != 720) + bool(problems) + (not pts) + len(clos.violations)
    return _result(
        4 + clos.pairs,
        fails,
        vertices=len(verts),
        facets=len(win.facets),
        cache_problems=problems[:5],
        points=len(pts),
        closure_pairs=clos.pairs,
        closure_violations=len(clos.violations),
        seconds=round(time.perf_counter() - t0, 3),
    )


SUITES: dict[str, Callable] = {
    "icosian": icosian_suite,
    "coxeter": coxeter_suite,
    "quasiadd": quasiadd_suite,
    "closure": closure_suite,
    "algebra": algebra_suite,
    "acceptability": acceptability_suite,
    "symmetry": symmetry_suite,
    "elser-sloane": elser_sloane_suite,
}


def run_suites(names, scheme: SchemeSpec, seed: int = 0, groups=("h2", "h3"), long: bool = False, radius=None) -> dict:
    report = {}
    for name in names:
        if name == "icosian":
            report[name] = icosian_suite()
        elif name == "coxeter":
            report[name] = coxeter_suite(groups, long)
        elif name == "quasiadd":
            report[name] = quasiadd_suite(scheme, seed, radius=radius)
        elif name == "closure":
            report[name] = closure_suite(scheme, radius)
        elif name == "algebra":
            report[name] = algebra_suite(scheme, seed, radius=radius)
        elif name == "acceptability":
            report[name] = acceptability_suite(scheme, seed, radius=radius)
        elif name == "symmetry":
            report[name] = symmetry_suite(scheme, radius)
        elif name == "elser-sloane":
            report[name] = elser_sloane_suite(radius or 3)
        else:
            raise KeyError(f"unknown suite {name!r}")
    return report


def format_value(v) -> str:
    return format_golden(v) if isinstance(v, GoldenRat) else str(v)
