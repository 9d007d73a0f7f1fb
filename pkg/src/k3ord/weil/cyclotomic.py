"""Cyclotomic factors of Frobenius polynomials.

A reciprocal root of the form q * zeta (zeta a root of unity) corresponds to
a factor Phi_N(q t) (up to sign for N = 1).  The supersingular test asks
whether *all* 22 roots have that form, which by Kronecker's theorem is the
same as alpha/q being an algebraic integer for every root.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

from .frobenius import DEGREE, FrobeniusPolynomial

__all__ = [
    "totient",
    "admissible_orders",
    "cyclotomic",
    "reciprocal_cyclotomic",
    "scaled_factor",
    "SupersingularResult",
    "supersingular_exact",
    "AlgebraicPart",
    "algebraic_part",
]


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def admissible_orders(max_degree: int = DEGREE):
    """All N with phi(N) <= max_degree, by totient enumeration up to 4 * max_degree."""
    return tuple(n for n in range(1, 4 * max_degree + 1) if totient(n) <= max_degree)


def _divexact(a, b):
    """a / b for integer polynomials (lowest first); None if b does not divide a."""
    a = list(a)
    if len(a) < len(b):
        return None
    quot = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c, rem = divmod(a[shift + len(b) - 1], lead)
        if rem:
            return None
        quot[shift] = c
        if c:
            for i, bc in enumerate(b):
                a[shift + i] -= c * bc
    if any(a[: len(b) - 1]):
        return None
    return quot


@lru_cache(maxsize=None)
def cyclotomic(n: int):
    """Phi_n as an integer coefficient tuple, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _divexact(num, cyclotomic(d))
    return tuple(num)


def reciprocal_cyclotomic(n: int):
    """prod over primitive n-th roots zeta of (1 - zeta t): constant term 1."""
    if n == 1:
        return (1, -1)
    return cyclotomic(n)  # palindromic for n >= 2


def scaled_factor(n: int, q: int):
    """prod (1 - q zeta t) over primitive n-th roots zeta."""
    return tuple(c * q**i for i, c in enumerate(reciprocal_cyclotomic(n)))


def _peel(poly, factor_of):
    """Strip factor_of(N) for admissible N (ascending) as often as each divides."""
    orders = Counter()
    rest = list(poly)
    for n in admissible_orders():
        f = factor_of(n)
        while len(rest) >= len(f):
            quot = _divexact(rest, f)
            if quot is None:
                break
            rest = quot
            orders[n] += 1
    return rest, orders


@dataclass(frozen=True)
class SupersingularResult:
    yes: bool
    orders: tuple = ()  # sorted cyclotomic orders with multiplicity
    reason: Optional[str] = None
    failing_index: Optional[int] = None

    def __bool__(self):
        return self.yes


def supersingular_exact(P: FrobeniusPolynomial) -> SupersingularResult:
    q = P.q
    scaled = []
    for j, a in enumerate(P.coeffs):
        d, rem = divmod(a, q**j)
        if rem:
            return SupersingularResult(False, reason=f"q^{j} does not divide a_{j}", failing_index=j)
        scaled.append(d)
    rest, orders = _peel(scaled, reciprocal_cyclotomic)
    if len(rest) != 1:
        return SupersingularResult(
            False, tuple(sorted(orders.elements())),
            reason=f"a degree-{len(rest) - 1} factor is not a product of cyclotomic polynomials",
        )
    if rest[0] != 1:
        return SupersingularResult(False, reason=f"leftover constant {rest[0]}")
    return SupersingularResult(True, tuple(sorted(orders.elements())))


@dataclass(frozen=True)
class AlgebraicPart:
    degree: int
    orders: tuple


def algebraic_part(P: FrobeniusPolynomial) -> AlgebraicPart:
    """Largest factor of P whose reciprocal roots are q times roots of unity."""
    q = P.q
    _, orders = _peel(P.coeffs, lambda n: scaled_factor(n, q))
    ords = tuple(sorted(orders.elements()))
    return AlgebraicPart(sum(totient(n) for n in ords), ords)
