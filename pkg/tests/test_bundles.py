import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpline import (
    ExtBundle,
    StableObject,
    WeightTriple,
    auslander,
    canonical_form,
    desuspend,
    eq_ext,
    injective_hull,
    k0_of,
    orbit,
    projective_cover,
    slope,
    suspend,
)

GENUS_ONE = [(2, 4, 4), (2, 3, 6), (3, 3, 3)]


def boxes(w):
    return list(itertools.product(range(w.p1 - 1), range(w.p2 - 1), range(w.p3 - 1)))


def test_interior_validated():
    w = WeightTriple(3, 3, 3)
    with pytest.raises(ValueError):
        ExtBundle(w, (0, 2, 0), w.zero)


def test_det_and_class_consistency():
    for t in GENUS_ONE:
        w = WeightTriple(*t)
        k0 = k0_of(w)
        for x in boxes(w):
            for z in [w.zero, w.x(2), -w.omega]:
                e = ExtBundle(w, x, z)
                assert e.det == 2 * z + e.interior + w.omega
                assert k0.det_of(e.k0_class) == e.det
                assert k0.rank_of(e.k0_class) == 2


def test_eq_ext_reflexive_and_examples():
    w = WeightTriple(2, 4, 4)
    assert eq_ext(ExtBundle(w, (0, 1, 1), w.zero), ExtBundle(w, (0, 1, 1), w.zero))
    # documented identity: E<0,2,0>(x3) = E(x1 - x2 + x3)
    assert eq_ext(
        ExtBundle(w, (0, 2, 0), w.x(3)),
        auslander(w, w.x(1) - w.x(2) + w.x(3)),
    )
    w3 = WeightTriple(3, 3, 3)
    # documented identity: E<1,0,1> = E(w + x2)
    assert eq_ext(
        ExtBundle(w3, (1, 0, 1), w3.zero),
        auslander(w3, w3.omega + w3.x(2)),
    )


def test_eq_ext_exhaustive_matches_class_equality():
    # closed rule == class equality over box x box x twist window
    for t in GENUS_ONE + [(2, 3, 7)]:
        w = WeightTriple(*t)
        lefts = [ExtBundle(w, x, w.zero) for x in boxes(w)]
        rights = [
            (ExtBundle(w, y, z), ExtBundle(w, y, z).k0_class)
            for y in boxes(w)
            for z in w.window(2)
        ]
        for a in lefts:
            ca = a.k0_class
            for b, cb in rights:
                assert eq_ext(a, b) == (ca == cb), (t, a, b)


def test_orbit_and_canonical():
    w = WeightTriple(3, 3, 3)
    e = auslander(w)
    assert len(orbit(e)) == 4
    for t in GENUS_ONE:
        wt = WeightTriple(*t)
        for x in boxes(wt):
            a = ExtBundle(wt, x, wt.zero)
            assert len(orbit(a)) <= 4
            c = canonical_form(a)
            assert canonical_form(c) == c
            assert eq_ext(a, c)


@given(st.sampled_from(GENUS_ONE), st.integers(0, 7), st.integers(-2, 2))
@settings(max_examples=30)
def test_canonical_separates_classes(t, pick, lshift):
    w = WeightTriple(*t)
    bx = boxes(w)
    a = ExtBundle(w, bx[pick % len(bx)], w.element(0, 1, 0, lshift))
    b = ExtBundle(w, bx[(pick + 3) % len(bx)], w.element(1, 0, 1, -lshift))
    assert eq_ext(a, b) == (canonical_form(a) == canonical_form(b))


def test_hull_of_the_auslander_bundle():
    for t in GENUS_ONE:
        w = WeightTriple(*t)
        hull = injective_hull(auslander(w))
        expected = sorted([w.zero, w.xbar(1), w.xbar(2), w.xbar(3)], key=lambda e: e.sort_key())
        assert hull == expected


def test_cover_examples():
    w = WeightTriple(2, 4, 4)
    cover = projective_cover(ExtBundle(w, (0, 1, 1), w.zero))
    expected = sorted(
        [w.omega, w.x(2) - w.x(3), w.x(3) - w.x(2), -w.omega], key=lambda e: e.sort_key()
    )
    assert cover == expected
    # cover of a twisted Auslander bundle: {z + w} and {z - x_i}
    for t in GENUS_ONE:
        wt = WeightTriple(*t)
        for i in (1, 2, 3):
            z = wt.xbar(i)
            cov = projective_cover(auslander(wt, z))
            exp = sorted(
                [z + wt.omega, z - wt.x(1), z - wt.x(2), z - wt.x(3)],
                key=lambda e: e.sort_key(),
            )
            assert cov == exp


def test_hull_class_has_rank_two_complement():
    for t in GENUS_ONE:
        w = WeightTriple(*t)
        k0 = k0_of(w)
        for x in boxes(w):
            e = ExtBundle(w, x, w.zero)
            hull_sum = sum((k0.reduce_line(h) for h in injective_hull(e)), start=k0.zero)
            cover_sum = sum((k0.reduce_line(h) for h in projective_cover(e)), start=k0.zero)
            assert k0.rank_of(hull_sum - e.k0_class) == 2
            assert k0.rank_of(cover_sum - e.k0_class) == 2


def test_hull_invariant_under_presentation_change():
    for t in GENUS_ONE:
        w = WeightTriple(*t)
        for x in boxes(w):
            a = ExtBundle(w, x, w.x(3))
            hulls = {tuple(e.coeffs for e in injective_hull(p)) for p in orbit(a)}
            assert len(hulls) == 1


def test_suspension_anchors_333():
    w = WeightTriple(3, 3, 3)
    assert eq_ext(
        suspend(ExtBundle(w, (1, 0, 1), w.zero)), ExtBundle(w, (1, 1, 1), w.x(2))
    )
    assert eq_ext(suspend(auslander(w)), ExtBundle(w, (1, 1, 1), -w.omega))


def test_suspension_roundtrip_on_boxes():
    for t in GENUS_ONE:
        w = WeightTriple(*t)
        for x in boxes(w):
            e = ExtBundle(w, x, w.zero)
            assert eq_ext(desuspend(suspend(e)), e)
            assert eq_ext(suspend(desuspend(e)), e)


def test_suspension_bijective_on_classes():
    for t in GENUS_ONE:
        w = WeightTriple(*t)
        images = {canonical_form(suspend(ExtBundle(w, x, w.zero))) for x in boxes(w)}
        assert len(images) == len(boxes(w))


def test_tau_on_objects():
    w = WeightTriple(3, 3, 3)
    k0 = k0_of(w)
    e = ExtBundle(w, (1, 0, 0), w.x(2))
    obj = StableObject.of_bundle(e)
    assert obj.tau().bundle.z == e.z + w.omega
    g = StableObject.formal(w, e.k0_class + k0.reduce_line(w.zero), label="g")
    assert g.tau_inv().tau().k0_class == g.k0_class
    assert k0.det_of(obj.tau().k0_class) == k0.det_of(obj.k0_class) + 2 * w.omega


def test_slopes():
    for t in GENUS_ONE:
        w = WeightTriple(*t)
        assert slope(auslander(w)) == 0
        top = ExtBundle(w, w.top.interior, w.zero)
        from fractions import Fraction

        assert slope(top) == Fraction(w.c.delta(), 2)
    with pytest.raises(ValueError):
        slope(StableObject.zero(WeightTriple(2, 4, 4)))


def test_stable_object_rank_validation():
    w = WeightTriple(2, 4, 4)
    k0 = k0_of(w)
    with pytest.raises(ValueError):
        StableObject(w, "formal", k0.reduce_line(w.zero), 5)


def test_display_form():
    w = WeightTriple(2, 4, 4)
    assert str(ExtBundle(w, (0, 2, 1), w.x(3))) == "E<0,2,1>((0,0,1;0))"
