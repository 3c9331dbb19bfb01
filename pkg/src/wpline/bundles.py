"""Rank-two extension-bundle calculus in the stable category of vector bundles.

An extension bundle E<x>(z) is the middle term of the unique non-split
extension of O(z + x) by O(z + omega), for an interior vector x with
0 <= x_i <= p_i - 2.  Exceptionality makes the Grothendieck class a complete
invariant, so two presentations name the same object exactly when their
classes agree; the closed equality rule (eq_ext) quotients presentations by
a Klein-four family of flips and is cross-checked exhaustively against class
equality by the test suite.

Suspension is computed by class matching: the hull sequence
0 -> X -> I(X) -> X[1] -> 0 determines [X[1]] = [I(X)] - [X], and the unique
interior presentation with that class is recovered by searching the box of
interior vectors against a bounded twist window.  No closed shift formula is
assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .k0 import K0Class, k0_of
from .lgroup import LElement, WeightTriple

SUSPEND_TWIST_WINDOW = 4


@dataclass(frozen=True)
class ExtBundle:
    """Presentation E<x>(z): interior vector x, line-bundle twist z."""

    w: WeightTriple
    x: tuple[int, int, int]
    z: LElement

    def __post_init__(self) -> None:
        for li, pi in zip(self.x, self.w.weights):
            if not 0 <= li <= pi - 2:
                raise ValueError(f"interior vector {self.x} escapes the box for {self.w.weights}")
        if self.z.w.weights != self.w.weights:
            raise ValueError("twist belongs to a different weight triple")

    @property
    def interior(self) -> LElement:
        return self.w.element(*self.x)

    @property
    def rank(self) -> int:
        return 2

    @property
    def det(self) -> LElement:
        return 2 * self.z + self.interior + self.w.omega

    @property
    def k0_class(self) -> K0Class:
        k0 = k0_of(self.w)
        return k0.reduce_line(self.z + self.w.omega) + k0.reduce_line(self.z + self.interior)

    def twist(self, t: LElement) -> "ExtBundle":
        return ExtBundle(self.w, self.x, self.z + t)

    def __str__(self) -> str:
        return f"E<{self.x[0]},{self.x[1]},{self.x[2]}>({self.z})"


def auslander(w: WeightTriple, z: LElement | None = None) -> ExtBundle:
    """The Auslander bundle E(z) = E<0,0,0>(z)."""
    return ExtBundle(w, (0, 0, 0), z if z is not None else w.zero)


# -- equality of presentations ----------------------------------------------


def _flip(w: WeightTriple, x: tuple[int, int, int], j: int) -> tuple[int, int, int]:
    """Keep the j-th interior coordinate, reflect the other two in the box."""
    return tuple(
        x[i] if i == j else w.weights[i] - 2 - x[i] for i in range(3)
    )  # type: ignore[return-value]


def _flip_twist(w: WeightTriple, x: tuple[int, int, int], j: int) -> LElement:
    """Twist difference accompanying the j-th flip: sum_{i != j}(x_i + 1)x_i - c."""
    coeffs = [0, 0, 0]
    for i in range(3):
        if i != j:
            coeffs[i] = x[i] + 1
    return w.element(*coeffs, a=-1)


def orbit(a: ExtBundle) -> list[ExtBundle]:
    """All presentations equal to `a`: identity plus one flip per coordinate."""
    seen: dict[tuple, ExtBundle] = {(a.x, a.z.coeffs): a}
    for j in range(3):
        b = ExtBundle(a.w, _flip(a.w, a.x, j), a.z + _flip_twist(a.w, a.x, j))
        seen.setdefault((b.x, b.z.coeffs), b)
    return list(seen.values())


def eq_ext(a: ExtBundle, b: ExtBundle) -> bool:
    """Closed-rule equality of presentations.

    E<x>(z) = E<y>(z') iff y = x and z' = z, or for some j the interior of b
    is the j-th flip of a's and z' - z is the matching twist difference.
    """
    if a.w.weights != b.w.weights:
        raise ValueError("presentations belong to different weight triples")
    if a.x == b.x and a.z == b.z:
        return True
    dz = b.z - a.z
    for j in range(3):
        if b.x == _flip(a.w, a.x, j) and dz == _flip_twist(a.w, a.x, j):
            return True
    return False


def canonical_form(a: ExtBundle) -> ExtBundle:
    """Lexicographically least (interior, twist) presentation in the orbit."""
    return min(orbit(a), key=lambda e: (e.x, e.z.sort_key()))


def auslander_twist(a: ExtBundle) -> LElement | None:
    """The twist u with a = E(u), if the orbit contains an Auslander presentation."""
    for e in orbit(a):
        if e.x == (0, 0, 0):
            return e.z
    return None


# -- hulls and suspension ----------------------------------------------------


def injective_hull(a: ExtBundle) -> list[LElement]:
    """Line-bundle twists of the hull: {z + x} u {z + omega + (x_i + 1)x_i}."""
    out = [a.z + a.interior]
    for i in range(3):
        out.append(a.z + a.w.omega + (a.x[i] + 1) * a.w.x(i + 1))
    return sorted(out, key=lambda e: e.sort_key())


def projective_cover(a: ExtBundle) -> list[LElement]:
    """Line-bundle twists of the cover: {z + omega} u {z + x - (x_i + 1)x_i}."""
    out = [a.z + a.w.omega]
    for i in range(3):
        out.append(a.z + a.interior - (a.x[i] + 1) * a.w.x(i + 1))
    return sorted(out, key=lambda e: e.sort_key())


@lru_cache(maxsize=None)
def _candidate_index(weights: tuple[int, int, int]) -> dict[tuple[int, ...], list[ExtBundle]]:
    """Class -> presentations over box interiors and a bounded twist window."""
    w = WeightTriple(*weights)
    index: dict[tuple[int, ...], list[ExtBundle]] = {}
    interiors = list(
        itertools.product(range(w.p1 - 1), range(w.p2 - 1), range(w.p3 - 1))
    )
    for z in w.window(SUSPEND_TWIST_WINDOW):
        for x in interiors:
            e = ExtBundle(w, x, z)
            index.setdefault(e.k0_class.coeffs, []).append(e)
    return index


def _match_class(w: WeightTriple, target: K0Class, what: str) -> ExtBundle:
    hits = _candidate_index(w.weights).get(target.coeffs)
    if not hits:
        raise ValueError(f"no extension-bundle presentation matches the {what} class")
    rep = canonical_form(hits[0])
    for h in hits[1:]:
        if not eq_ext(rep, h):
            raise ValueError(f"ambiguous {what}: class matched by inequivalent presentations")
    return rep


def suspend(a: ExtBundle) -> ExtBundle:
    """X[1], via [X[1]] = [I(X)] - [X] and unique class matching."""
    k0 = k0_of(a.w)
    target = sum(
        (k0.reduce_line(h) for h in injective_hull(a)), start=k0.zero
    ) - a.k0_class
    return _match_class(a.w, target, "suspension")


def desuspend(a: ExtBundle) -> ExtBundle:
    """X[-1], via [X[-1]] = [P(X)] - [X] and unique class matching."""
    k0 = k0_of(a.w)
    target = sum(
        (k0.reduce_line(h) for h in projective_cover(a)), start=k0.zero
    ) - a.k0_class
    return _match_class(a.w, target, "desuspension")


# -- stable objects ----------------------------------------------------------


@dataclass(frozen=True)
class StableObject:
    """Tagged stable object: zero, an extension bundle, or a formal class.

    Formal objects carry a Grothendieck class, a rank and the defining
    non-split sequences (provenance) that pin them up to isomorphism.
    """

    w: WeightTriple
    kind: str  # "zero" | "bundle" | "formal"
    k0_class: K0Class
    rank: int
    bundle: ExtBundle | None = None
    label: str = ""
    provenance: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("zero", "bundle", "formal"):
            raise ValueError(f"unknown stable-object kind {self.kind!r}")
        if k0_of(self.w).rank_of(self.k0_class) != self.rank:
            raise ValueError("rank does not match the class")
        if self.kind == "bundle" and self.bundle is None:
            raise ValueError("bundle-tagged object without a presentation")

    @classmethod
    def zero(cls, w: WeightTriple) -> "StableObject":
        return cls(w, "zero", k0_of(w).zero, 0, label="0")

    @classmethod
    def of_bundle(cls, e: ExtBundle, label: str = "") -> "StableObject":
        return cls(e.w, "bundle", e.k0_class, 2, bundle=e, label=label or str(e))

    @classmethod
    def formal(
        cls,
        w: WeightTriple,
        k0_class: K0Class,
        label: str,
        provenance: tuple[str, ...] = (),
    ) -> "StableObject":
        rank = k0_of(w).rank_of(k0_class)
        return cls(w, "formal", k0_class, rank, label=label, provenance=provenance)

    def tau(self) -> "StableObject":
        """Twist by omega (the Auslander-Reiten translation)."""
        return self._twist(self.w.omega, "tau")

    def tau_inv(self) -> "StableObject":
        return self._twist(-self.w.omega, "tau^-1")

    def _twist(self, t: LElement, tag: str) -> "StableObject":
        k0 = k0_of(self.w)
        if self.kind == "zero":
            return self
        if self.kind == "bundle":
            assert self.bundle is not None
            return StableObject.of_bundle(self.bundle.twist(t), label=f"{tag}({self.label})")
        return StableObject(
            self.w,
            "formal",
            k0.twist(self.k0_class, t),
            self.rank,
            label=f"{tag}({self.label})",
            provenance=self.provenance + (f"twist by {t}",),
        )


def slope(obj: StableObject | ExtBundle) -> Fraction:
    """degree/rank of the class; undefined at rank zero."""
    if isinstance(obj, ExtBundle):
        obj = StableObject.of_bundle(obj)
    if obj.rank == 0:
        raise ValueError("slope undefined for rank-zero objects")
    k0 = k0_of(obj.w)
    return Fraction(k0.deg_of(obj.k0_class), obj.rank)
