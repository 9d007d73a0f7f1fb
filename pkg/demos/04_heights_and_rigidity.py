# Height patterns of Newton polygons, and the trace-rigidity check.

# %%
from fractions import Fraction

from k3ord.weil import (
    FrobeniusPolynomial,
    classify_height,
    height_slopes,
    newton_polygon,
    ogus2_check,
    poly_mul,
    polygon_from_points,
    rigid_polynomial,
    validate_weil,
)

for h in (1, 2, 3, 10):
    poly = polygon_from_points([(0, 0), (h, h - 1), (22 - h, 21 - h), (22, 22)])
    print(h, sorted(set(poly.slopes)), classify_height(poly))

# the h = 11 shape {10/11 x11, 12/11 x11} is excluded for K3 surfaces
print(classify_height(polygon_from_points([(0, 0), (11, 10), (22, 22)])))

# %%
# A genuine Weil polynomial of height 3 over q = 5^3: three quadratics
# 1 - x t + q^2 t^2 with 5^2 || x and eight with q | x.
q = 5**3
factors = [[1, -25, q * q], [1, 50, q * q], [1, -75, q * q]] + [[1, -q, q * q]] * 8
P = FrobeniusPolynomial.from_factors(5, 3, factors)
print(validate_weil(P).ok, classify_height(newton_polygon(P)))
assert newton_polygon(P).slopes == height_slopes(3)

# %%
# Trace rigidity with p = 283, ell = 47 (47 divides 282): the hypotheses pin down
# (1 - p t)^22, while flipping one root to -p breaks the congruence mod ell.
v = ogus2_check(rigid_polynomial(283), 283, 47)
print(v.hypotheses, v.conclusion_holds)

flipped = [1]
for f in [[1, -283]] * 21 + [[1, 283]]:
    flipped = poly_mul(flipped, f)
print(ogus2_check(flipped, 283, 47).hypotheses)
