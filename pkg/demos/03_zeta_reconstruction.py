# From point counts to the full degree-22 Frobenius polynomial, then to its Newton
# polygon, height and cyclotomic factorization.

# %%
from k3ord import QuarticSurface, reduce_mod_p
from k3ord.surface import count_points_fast
from k3ord.weil import (
    PowerSums,
    classify_height,
    coefficients_from_power_sums,
    height_candidates_partial,
    newton_polygon,
    power_sums_from_counts,
    reconstruct_from_power_sums,
    supersingular_exact,
    validate_weil,
)

rs = reduce_mod_p(QuarticSurface.fermat(), 3)
ps = power_sums_from_counts([count_points_fast(rs, n) for n in (1, 2)])
print(ps.values)                                  # (6, 198)
a = coefficients_from_power_sums(ps.values)
print(a, height_candidates_partial(a[1:], 3))     # 3 | a_1: height 1 is already ruled out

# %%
# Counting over F_{3^11} is out of reach here, but s_1 = 6 and s_2 = 198 pin down the
# answer: every alpha^2 = 9 and sum alpha = 6 leaves twelve roots 3 and ten roots -3.
s = [3**n * (12 + 10 * (-1) ** n) for n in range(1, 12)]
assert s[:2] == list(ps.values)
rec = reconstruct_from_power_sums(PowerSums(3, 1, s))
P = rec.polynomial
print(P.coeffs[:4], "...", P.coeffs[-1] == 3**22)

# %%
print(validate_weil(P).ok)
poly = newton_polygon(P)
print(poly.vertices, classify_height(poly))
print(supersingular_exact(P))                     # orders 1 (x12) and 2 (x10)
