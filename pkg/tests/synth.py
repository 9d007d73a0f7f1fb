"""Generators of synthetic surfaces and Frobenius polynomials for the test suite.

The Weil polynomials are products of quadratics 1 - x t + q^2 t^2 with
integer |x| <= 2q, whose two reciprocal roots have absolute value q, and of
the pair (1 - q t)(1 + q t) = 1 - q^2 t^2.  A quadratic with ord_p(x) = k < r
contributes the slopes k/r and 2 - k/r, one with ord_p(x) >= r contributes
two slopes equal to 1.  Taking r = h and k = h - 1 produces the height-h
slope pattern exactly.
"""

from fractions import Fraction
from math import gcd

from k3ord.surface import QuarticSurface
from k3ord.weil import FrobeniusPolynomial, poly_mul

MONOMIALS = [
    (a, b, c, 4 - a - b - c)
    for a in range(5) for b in range(5 - a) for c in range(5 - a - b)
]
SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


def random_surface(rng, max_terms=35, coeff_bound=50, name="random"):
    k = rng.randint(1, max_terms)
    mons = rng.sample(MONOMIALS, k)
    terms = []
    for m in mons:
        c = 0
        while c == 0:
            c = rng.randint(-coeff_bound, coeff_bound)
        terms.append((m, c))
    return QuarticSurface(name, terms)


def _unit_multiple(rng, p, k, bound):
    """Random x with ord_p(x) == k exactly and |x| <= bound."""
    scale = p**k
    top = bound // scale
    choices = [u for u in range(-top, top + 1) if u % p]
    return scale * rng.choice(choices)


def _slope_one_factor(rng, q, p, r):
    kind = rng.randrange(4)
    if kind == 0:
        return [1, 0, q * q]
    if kind == 1:
        return [1, 0, -q * q]  # (1 - q t)(1 + q t), flips the sign of a_22
    # x divisible by p^r = q with |x| <= 2q
    return [1, -q * rng.choice([-2, -1, 1, 2]), q * q]


def weil_poly_with_height(rng, h, p=None):
    """A genuine Weil polynomial whose Newton polygon has the height-h pattern.

    h in 1..10 or None for supersingular.
    """
    p = p or rng.choice(SMALL_PRIMES)
    if h is None:
        r = rng.randint(1, 3)
        q = p**r
        factors = [_slope_one_factor(rng, q, p, r) for _ in range(11)]
    else:
        r = h
        q = p**r
        factors = [[1, -_unit_multiple(rng, p, h - 1, 2 * q), q * q] for _ in range(h)]
        factors += [_slope_one_factor(rng, q, p, r) for _ in range(11 - h)]
    rng.shuffle(factors)
    acc = [1]
    for f in factors:
        acc = poly_mul(acc, f)
    return FrobeniusPolynomial(p, r, acc)


def pattern_table():
    """Independent listing of the valid slope multisets, keyed by height (None = infinity)."""
    table = {None: tuple([Fraction(1)] * 22)}
    for h in range(1, 11):
        lo, hi = Fraction(h - 1, h), Fraction(h + 1, h)
        table[h] = tuple(sorted([lo] * h + [Fraction(1)] * (22 - 2 * h) + [hi] * h))
    return table


PATTERNS = pattern_table()


def expected_height(slopes):
    """The height whose pattern equals ``slopes`` exactly, "invalid" if none."""
    s = tuple(sorted(slopes))
    for h, pat in PATTERNS.items():
        if s == pat:
            return h
    return "invalid"


def profile_polynomial(rng, h, p=None, extra=2):
    """Coefficients realizing the height-h polygon (r = 1); not a Weil polynomial.

    Vertices get exactly the hull valuation, other indices lie on or above
    the hull or vanish.  h = None gives the supersingular line; h = 11 the
    capped-out pattern.
    """
    p = p or rng.choice(SMALL_PRIMES)
    if h is None:
        verts = {0: 0, 22: 22}
    elif h == 11:
        verts = {0: 0, 11: 10, 22: 22}
    else:
        verts = {0: 0, h: h - 1, 22 - h: 21 - h, 22: 22}
    xs = sorted(verts)
    coeffs = []
    for j in range(23):
        if j in verts:
            v = verts[j]
        else:
            if rng.random() < 0.2:
                coeffs.append(0)
                continue
            x0 = max(x for x in xs if x < j)
            x1 = min(x for x in xs if x > j)
            y = Fraction(verts[x0]) + Fraction(verts[x1] - verts[x0], x1 - x0) * (j - x0)
            v = -(-y.numerator // y.denominator) + rng.randint(0, extra)
        unit = rng.choice([u for u in range(-p * 2, p * 2 + 1) if u % p])
        coeffs.append(p**v * unit if j not in (0, 22) else p**v)
    return FrobeniusPolynomial(p, 1, coeffs)


def cyclotomic_multiset(rng, admissible, totient, target=22):
    """Random multiset of orders N with sum phi(N) == target."""
    while True:
        out, total = [], 0
        while total < target:
            fits = [n for n in admissible if totient(n) <= target - total]
            n = rng.choice(fits)
            out.append(n)
            total += totient(n)
        if total == target:
            return sorted(out)


def _mobius(n):
    out, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    return -out if n > 1 else out


def power_sums_from_roots(pairs, k, totient):
    """s_1..s_k for reciprocal roots q*zeta, zeta over the primitive n-th roots, per (q, n).

    Ramanujan sums: the m-th powers of the primitive n-th roots add up to
    mu(n/g) phi(n) / phi(n/g) with g = gcd(m, n).
    """
    sums = []
    for m in range(1, k + 1):
        tot = 0
        for q, n in pairs:
            g = gcd(m, n)
            tot += q**m * _mobius(n // g) * totient(n) // totient(n // g)
        sums.append(tot)
    return sums
