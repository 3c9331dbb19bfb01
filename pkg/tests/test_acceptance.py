"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
Every check is an exact equality; the stated time budgets are asserted too.
"""

import itertools
import random
import time

from wpline import (
    ExtBundle,
    Verdict,
    WeightTriple,
    apply_sequence,
    auslander,
    corner_exchange_verdict,
    desuspend,
    dim_S,
    eq_ext,
    ext1_dim_line,
    hom_dim_line,
    is_isomorphic,
    k0_of,
    mutate,
    mutate_via_rules,
    corestriction_companion,
    run_replay,
    search,
    suspend,
)
from wpline.fixtures import fixture
from wpline.quiver import Quiver

FOUR_TRIPLES = [(2, 4, 4), (2, 3, 6), (3, 3, 3), (2, 3, 7)]
GENUS_ONE = [(2, 4, 4), (2, 3, 6), (3, 3, 3)]


def _report(num: int, elapsed: float, desc: str) -> None:
    print(f"ACCEPTANCE {num:2d}: PASS ({elapsed:6.2f}s) {desc}")


def _monomial_count(w, x):
    # brute-force enumeration; only the normalization rule is used
    p1, p2, p3 = w.weights
    target = x.coeffs
    count = 0
    for a1 in range(p1 * (abs(x.l) + 2)):
        q1, r1 = divmod(a1, p1)
        for a2 in range(p2 * (abs(x.l) + 2)):
            q2, r2 = divmod(a2, p2)
            for a3 in range(p3):
                if (r1, r2, a3, q1 + q2) == target:
                    count += 1
    return count


def test_criterion_01_dim_formula_vs_enumeration():
    t0 = time.time()
    for t in FOUR_TRIPLES:
        w = WeightTriple(*t)
        for x in w.window(3):
            assert dim_S(x) == _monomial_count(w, x), (t, x)
    elapsed = time.time() - t0
    assert elapsed < 1.0, f"budget exceeded: {elapsed:.2f}s"
    _report(1, elapsed, "closed dimension formula == brute-force monomial count, 4 triples")


def test_criterion_02_euler_consistency():
    t0 = time.time()
    for t in FOUR_TRIPLES:
        w = WeightTriple(*t)
        k0 = k0_of(w)
        window = w.window(3)
        reduced = [(y, k0.reduce_line(y)) for y in window]
        for b in k0.basis:
            rb = k0.reduce_line(b)
            for y, ry in reduced:
                assert k0.euler_form(rb, ry) == hom_dim_line(b, y) - ext1_dim_line(b, y)
    elapsed = time.time() - t0
    assert elapsed < 5.0, f"budget exceeded: {elapsed:.2f}s"
    _report(2, elapsed, "Euler pairing of reduced classes == hom - ext1 line data")


def test_criterion_03_presentation_rule_exhaustive():
    t0 = time.time()
    mismatches = 0
    for t in FOUR_TRIPLES:
        w = WeightTriple(*t)
        interiors = list(itertools.product(range(w.p1 - 1), range(w.p2 - 1), range(w.p3 - 1)))
        lefts = [ExtBundle(w, x, w.zero) for x in interiors]
        rights = [
            (ExtBundle(w, y, z), ExtBundle(w, y, z).k0_class)
            for y in interiors
            for z in w.window(2)
        ]
        for a in lefts:
            ca = a.k0_class
            for b, cb in rights:
                if eq_ext(a, b) != (ca == cb):
                    mismatches += 1
    elapsed = time.time() - t0
    assert mismatches == 0
    assert elapsed < 60.0, f"budget exceeded: {elapsed:.2f}s"
    _report(3, elapsed, "closed equality rule == class-equality oracle, box x box x window, 4 triples")


def test_criterion_04_hulls_and_suspension():
    t0 = time.time()
    for t in GENUS_ONE:
        w = WeightTriple(*t)
        from wpline import injective_hull

        hull = injective_hull(auslander(w))
        expected = sorted([w.zero, w.xbar(1), w.xbar(2), w.xbar(3)], key=lambda e: e.sort_key())
        assert hull == expected
        for x in itertools.product(range(w.p1 - 1), range(w.p2 - 1), range(w.p3 - 1)):
            e = ExtBundle(w, x, w.zero)
            assert eq_ext(desuspend(suspend(e)), e)
    w3 = WeightTriple(3, 3, 3)
    assert eq_ext(suspend(ExtBundle(w3, (1, 0, 1), w3.zero)), ExtBundle(w3, (1, 1, 1), w3.x(2)))
    assert eq_ext(suspend(auslander(w3)), ExtBundle(w3, (1, 1, 1), -w3.omega))
    elapsed = time.time() - t0
    _report(4, elapsed, "hull of E, suspension round trips, and the two pinned suspensions")


def test_criterion_05_quotient_determinant_identity():
    t0 = time.time()
    for t in FOUR_TRIPLES:
        w = WeightTriple(*t)
        for i in (1, 2, 3):
            others = [j for j in (1, 2, 3) if j != i]
            rhs = sum(((t[j - 1] - 2) * w.x(j) for j in others), start=w.zero)
            assert 2 * w.xbar(i) == rhs
    elapsed = time.time() - t0
    _report(5, elapsed, "2*xbar_i == (p_j - 2)x_j + (p_k - 2)x_k for all branches, 4 triples")


def test_criterion_06_corner_dichotomy():
    t0 = time.time()
    assert corner_exchange_verdict(WeightTriple(2, 4, 4))[0] is Verdict.TILTING
    assert corner_exchange_verdict(WeightTriple(2, 3, 6))[0] is Verdict.TILTING
    verdict, witness = corner_exchange_verdict(WeightTriple(3, 3, 3))
    assert verdict is Verdict.NOT_TILTING and "D(E, E)" in witness
    elapsed = time.time() - t0
    _report(6, elapsed, "corner dichotomy: tilting for 244/236, obstruction at D(E,E) for 333")


def test_criterion_07_replays():
    for wt, vertices in (("244", 9), ("236", 10), ("333", 8)):
        t0 = time.time()
        report = run_replay(wt)
        elapsed = time.time() - t0
        assert report.passed, report.render_text()
        assert fixture(report.target_fixture).n == vertices
        assert elapsed < 10.0, f"budget exceeded for {wt}: {elapsed:.2f}s"
        _report(7, elapsed, f"replay {wt}: every class identity and the target quiver shape")


def test_criterion_08_independent_search():
    t0 = time.time()
    plans = [
        ("cuboid_cluster_244", "target_tubular_244", 5),
        ("cuboid_cluster_236", "target_tubular_236", 7),
        ("tbar_cluster_333", "target_tubular_333", 3),
    ]
    for start, target, depth in plans:
        seq = search(fixture(start), fixture(target), depth)
        assert seq is not None and len(seq) <= depth, (start, seq)
        res = apply_sequence(fixture(start), seq)
        assert is_isomorphic(res, fixture(target)) is not None
    elapsed = time.time() - t0
    assert elapsed < 120.0, f"budget exceeded: {elapsed:.2f}s"
    _report(8, elapsed, "breadth-first search finds validated sequences within depth 5/7/3")


def test_criterion_09_branch_independence():
    t0 = time.time()
    w = WeightTriple(3, 3, 3)
    sigma = w.x(1) + w.x(2) + w.x(3)
    vals = []
    for i in (1, 2, 3):
        j, k = [s for s in (1, 2, 3) if s != i]
        fi = corestriction_companion(sigma, j, k)
        vals.append(fi.k0_class + ExtBundle(w, (1, 1, 1), w.x(i)).k0_class)
    assert vals[0] == vals[1] == vals[2]
    elapsed = time.time() - t0
    _report(9, elapsed, "[F_i] + [E<1,1,1>(x_i)] independent of the branch i")


def test_criterion_10_mutation_cross_check():
    t0 = time.time()
    from wpline.fixtures import fixture_names

    for name in fixture_names():
        q = fixture(name)
        for v in q.ids:
            assert mutate(q, v) == mutate_via_rules(q, v)
            assert mutate(mutate(q, v), v) == q
    rng = random.Random(20240817)
    for _ in range(1000):
        n = rng.randint(2, 6)
        vertices = [(i + 1, f"v{i + 1}") for i in range(n)]
        arrows = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                m = rng.randint(0, 2)
                if m:
                    arrows.append((i, j, m) if rng.random() < 0.5 else (j, i, m))
        q = Quiver.from_arrows(vertices, arrows)
        v = rng.randint(1, n)
        assert mutate(q, v) == mutate_via_rules(q, v)
        assert mutate(mutate(q, v), v) == q
    elapsed = time.time() - t0
    _report(10, elapsed, "exchange-matrix mutation == graph rewriting; double mutation == identity")
