"""Exact arithmetic in the grading group of a weight-triple weighted projective line.

The group ``L`` is the rank-one abelian group with generators x1, x2, x3 and
relations p1*x1 = p2*x2 = p3*x3 = c.  Every element has a unique normal form

    l1*x1 + l2*x2 + l3*x3 + l*c      with 0 <= l_i < p_i and l an integer,

and all operations here work on normal forms.  An element is *effective*
(written x >= 0) exactly when its normal-form c-coefficient is >= 0; this
induces the partial order used throughout the bundle calculus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import lcm


GENUS_ONE_TRIPLES = {(2, 4, 4), (2, 3, 6), (3, 3, 3)}

# Branch points are fixed to the canonical triple; no dimension count reads them.
CANONICAL_LAMBDA = ("infinity", "0", "1")


@dataclass(frozen=True)
class WeightTriple:
    """A weight triple (p1, p2, p3) with all p_i >= 2."""

    p1: int
    p2: int
    p3: int
    lambda_points: tuple[str, str, str] = field(default=CANONICAL_LAMBDA, compare=False)

    def __post_init__(self) -> None:
        for p in (self.p1, self.p2, self.p3):
            if not isinstance(p, int) or p < 2:
                raise ValueError(f"weights must be integers >= 2, got {p!r}")

    @property
    def weights(self) -> tuple[int, int, int]:
        return (self.p1, self.p2, self.p3)

    @property
    def p(self) -> int:
        """Least common multiple of the weights; fixes the scale of delta."""
        return lcm(self.p1, self.p2, self.p3)

    @property
    def is_genus_one(self) -> bool:
        return tuple(sorted(self.weights)) in {tuple(sorted(t)) for t in GENUS_ONE_TRIPLES}

    # -- constructors -------------------------------------------------------

    def element(self, a1: int = 0, a2: int = 0, a3: int = 0, a: int = 0) -> "LElement":
        """Normal form of a1*x1 + a2*x2 + a3*x3 + a*c.

        Reduction folds each overflowing generator coefficient into c via
        p_i*x_i = c; the result is independent of reduction order.
        """
        ls = []
        l = a
        for ai, pi in zip((a1, a2, a3), self.weights):
            q, r = divmod(ai, pi)
            ls.append(r)
            l += q
        return LElement(self, ls[0], ls[1], ls[2], l)

    @property
    def zero(self) -> "LElement":
        return self.element()

    @property
    def c(self) -> "LElement":
        return self.element(a=1)

    @property
    def omega(self) -> "LElement":
        """The dualizing element c - x1 - x2 - x3; twisting by it is tau."""
        return self.element(-1, -1, -1, 1)

    def x(self, i: int) -> "LElement":
        """The generator x_i for i in {1, 2, 3}."""
        if i not in (1, 2, 3):
            raise ValueError(f"generator index must be 1, 2 or 3, got {i}")
        coeffs = [0, 0, 0]
        coeffs[i - 1] = 1
        return self.element(*coeffs)

    def xbar(self, i: int) -> "LElement":
        """x_i + omega."""
        return self.x(i) + self.omega

    @property
    def top(self) -> "LElement":
        """2*omega + c = sum (p_i - 2) x_i, the upper corner of the bundle box."""
        return self.element(self.p1 - 2, self.p2 - 2, self.p3 - 2)

    # -- enumeration --------------------------------------------------------

    def box_points(self, lo: "LElement", hi: "LElement") -> list["LElement"]:
        """All x with lo <= x <= hi, for box-shaped intervals.

        The interval [lo, hi] is a box exactly when (hi - lo) has normal form
        m1*x1 + m2*x2 + m3*x3 with zero c-coefficient; then the points are
        lo + sum l_i*x_i with 0 <= l_i <= m_i, listed lexicographically in
        (l1, l2, l3).  A positive c-coefficient means the interval is not a
        product and is rejected; a negative one means the interval is empty.
        """
        d = hi - lo
        if d.l > 0:
            raise ValueError("unsupported interval shape: difference has positive c-part")
        if d.l < 0:
            return []
        out = []
        for l1, l2, l3 in itertools.product(range(d.l1 + 1), range(d.l2 + 1), range(d.l3 + 1)):
            out.append(lo + self.element(l1, l2, l3))
        return out

    def box(self) -> list["LElement"]:
        """Interior points 0 <= x <= 2*omega + c, in lexicographic order."""
        return self.box_points(self.zero, self.top)

    def window(self, lmax: int) -> list["LElement"]:
        """All normal forms with |c-coefficient| <= lmax (every residue part)."""
        out = []
        for l1, l2, l3 in itertools.product(range(self.p1), range(self.p2), range(self.p3)):
            for l in range(-lmax, lmax + 1):
                out.append(LElement(self, l1, l2, l3, l))
        return out


@dataclass(frozen=True, order=False)
class LElement:
    """A group element stored in normal form; construct via WeightTriple.element."""

    w: WeightTriple
    l1: int
    l2: int
    l3: int
    l: int

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.l1, self.l2, self.l3, self.l)

    @property
    def interior(self) -> tuple[int, int, int]:
        return (self.l1, self.l2, self.l3)

    def _check(self, other: "LElement") -> None:
        if self.w.weights != other.w.weights:
            raise ValueError("elements belong to different weight triples")

    def __add__(self, other: "LElement") -> "LElement":
        self._check(other)
        return self.w.element(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LElement") -> "LElement":
        return self + (-other)

    def __neg__(self) -> "LElement":
        return self.w.element(*(-a for a in self.coeffs))

    def __mul__(self, n: int) -> "LElement":
        return self.w.element(*(n * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def is_effective(self) -> bool:
        """x >= 0, i.e. x is a sum of generators (c-coefficient >= 0)."""
        return self.l >= 0

    def __le__(self, other: "LElement") -> bool:
        self._check(other)
        return (other - self).is_effective

    def __ge__(self, other: "LElement") -> bool:
        return other <= self

    def delta(self) -> int:
        """The degree homomorphism: delta(x_i) = p/p_i, delta(c) = p."""
        p = self.w.p
        return (
            self.l1 * (p // self.w.p1)
            + self.l2 * (p // self.w.p2)
            + self.l3 * (p // self.w.p3)
            + self.l * p
        )

    def sort_key(self) -> tuple[int, int, int, int]:
        return self.coeffs

    def __str__(self) -> str:
        return f"({self.l1},{self.l2},{self.l3};{self.l})"


def leq(x: LElement, y: LElement) -> bool:
    """Partial order: y - x effective."""
    return x <= y
