"""Newton polygons of Frobenius polynomials and the height read off from them.

Valuations are normalized so that ord(q) = 1.  For a K3 surface of height
h <= 10 the slopes are (h-1)/h and (h+1)/h, each h times, and 1 with
multiplicity 22 - 2h; height infinity (supersingular) means every slope is 1.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .frobenius import DEGREE, FrobeniusPolynomial

__all__ = [
    "MAX_HEIGHT",
    "INFINITY",
    "NewtonPolygon",
    "HeightClass",
    "valuation",
    "lower_hull",
    "polygon_from_points",
    "newton_polygon",
    "height_slopes",
    "height_vertices",
    "classify_height",
    "is_ordinary_from_a1",
    "height_candidates_partial",
]

MAX_HEIGHT = 10
INFINITY = math.inf


def valuation(n: int, p: int):
    """ord_p(n); None stands for +infinity (n == 0)."""
    if n == 0:
        return None
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points):
    """Vertices of the lower convex hull, left to right (monotone chain)."""
    pts = sorted(points)
    hull = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        if hull and hull[-1][0] == pt[0]:
            continue  # same abscissa, higher ordinate
        hull.append(pt)
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    prime: int
    r: int
    points: tuple  # (j, normalized valuation) for nonzero coefficients
    vertices: tuple
    slopes: tuple  # nondecreasing Fractions, one per unit of horizontal run

    def slope_counts(self):
        return Counter(self.slopes)

    def ordinate(self, x):
        """Height of the polygon above abscissa x."""
        verts = self.vertices
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * Fraction(x - x0, x1 - x0)
        raise ValueError(f"{x} outside the polygon")


def polygon_from_points(points, prime=None, r=1):
    pts = tuple(sorted((int(j), Fraction(v)) for j, v in points))
    verts = tuple(lower_hull(pts))
    slopes = []
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        slopes.extend([Fraction(y1 - y0, x1 - x0)] * (x1 - x0))
    return NewtonPolygon(prime, r, pts, verts, tuple(slopes))


def newton_polygon(P: FrobeniusPolynomial, prime: Optional[int] = None, r: Optional[int] = None) -> NewtonPolygon:
    """Lower convex hull of (j, ord(a_j)/r); zero coefficients are omitted.

    By default the valuation is p-adic with r from P, so ord(q) = 1.  Other
    primes (with r = 1) are used for the unit-root check in validation.
    """
    prime = P.p if prime is None else prime
    r = P.r if r is None else r
    points = []
    for j, c in enumerate(P.coeffs):
        v = valuation(c, prime)
        if v is not None:
            points.append((j, Fraction(v, r)))
    return polygon_from_points(points, prime, r)


def height_slopes(h):
    """The slope multiset of height h (h = INFINITY for supersingular), sorted."""
    if h == INFINITY:
        return (Fraction(1),) * DEGREE
    return (Fraction(h - 1, h),) * h + (Fraction(1),) * (DEGREE - 2 * h) + (Fraction(h + 1, h),) * h


def height_vertices(h):
    if h == INFINITY:
        return ((0, Fraction(0)), (DEGREE, Fraction(DEGREE)))
    verts = [(0, Fraction(0)), (h, Fraction(h - 1))]
    if DEGREE - h != h:
        verts.append((DEGREE - h, Fraction(DEGREE - h - 1)))
    verts.append((DEGREE, Fraction(DEGREE)))
    return tuple(verts)


@dataclass(frozen=True)
class HeightClass:
    kind: str  # "ordinary" | "finite" | "supersingular" | "invalid"
    h: Optional[float] = None  # 1..10 or INFINITY
    reason: Optional[str] = None
    offending_slope: Optional[Fraction] = None

    def __str__(self):
        if self.kind == "supersingular":
            return "supersingular (h = infinity)"
        if self.kind == "ordinary":
            return "ordinary (h = 1)"
        if self.kind == "finite":
            return f"height {self.h}"
        return f"invalid: {self.reason}"


def classify_height(polygon: NewtonPolygon) -> HeightClass:
    slopes = list(polygon.slopes)
    if len(slopes) != DEGREE:
        return HeightClass("invalid", reason=f"{len(slopes)} slopes, expected {DEGREE}")
    if all(s == 1 for s in slopes):
        return HeightClass("supersingular", INFINITY)
    first = slopes[0]
    if not 0 <= first < 1:
        return HeightClass("invalid", reason="first slope outside [0, 1)", offending_slope=first)
    h_frac = 1 / (1 - first)
    if h_frac.denominator != 1:
        return HeightClass("invalid", reason="first slope is not (h-1)/h", offending_slope=first)
    h = int(h_frac)
    if h > MAX_HEIGHT:
        return HeightClass("invalid", reason=f"slope pattern of height {h} exceeds the cap {MAX_HEIGHT}",
                           offending_slope=first)
    for got, want in zip(slopes, height_slopes(h)):
        if got != want:
            return HeightClass("invalid", reason=f"slopes do not match the height-{h} pattern",
                               offending_slope=got)
    return HeightClass("ordinary" if h == 1 else "finite", h)


def is_ordinary_from_a1(P: FrobeniusPolynomial) -> bool:
    return P.a1 % P.p != 0


def height_candidates_partial(prefix, p, r=1):
    """Heights consistent with the known coefficients a_1..a_k (k <= 11).

    ``prefix`` is [a_1, ..., a_k] (a_0 = 1 implied).  A height survives when
    every known point lies on or above its polygon and every one of its
    vertices with abscissa <= k is attained by a known point.
    """
    k = len(prefix)
    if not 1 <= k <= 11:
        raise ValueError("prefix length must be 1..11")
    known = {0: Fraction(0)}
    for j, c in enumerate(prefix, start=1):
        v = valuation(int(c), p)
        known[j] = None if v is None else Fraction(v, r)
    out = []
    for h in list(range(1, MAX_HEIGHT + 1)) + [INFINITY]:
        verts = height_vertices(h)
        poly = polygon_from_points(verts)
        if any(v is not None and v < poly.ordinate(j) for j, v in known.items()):
            continue
        if any(x <= k and known.get(x) != y for x, y in verts):
            continue
        out.append(h)
    return out
