"""Graded dimensions of the homogeneous coordinate ring and line-bundle Hom/Ext.

The ring k[x1, x2, x3]/(x3^p3 - x2^p2 + x1^p1) has the monomial basis
x1^a1 x2^a2 x3^a3 with a3 < p3 (eliminating high x3-powers through the single
relation).  Counting solutions of a1*x1 + a2*x2 + a3*x3 = x in that range
collapses to a closed formula on the normal form of x: a3 is pinned to the
x3-residue, and (a1, a2) contribute one solution per split l = s + t with
s, t >= 0, where l is the c-coefficient.  The closed formula is guarded by a
brute-force monomial enumeration in the test suite.
"""

from __future__ import annotations

from .lgroup import LElement


def dim_S(x: LElement) -> int:
    """Dimension of the graded component of degree x: max(0, l + 1)."""
    return max(0, x.l + 1)


def hom_dim_line(x: LElement, y: LElement) -> int:
    """dim Hom(O(x), O(y)) = dim S_{y-x}."""
    return dim_S(y - x)


def ext1_dim_line(x: LElement, y: LElement) -> int:
    """dim Ext^1(O(x), O(y)) = dim Hom(O(y), O(x + omega)) by duality."""
    return dim_S(x + x.w.omega - y)
