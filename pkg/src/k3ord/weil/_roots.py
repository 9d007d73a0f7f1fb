"""Numerical root moduli of integer polynomials, after exact squarefree reduction."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_q(a, b):
    """Polynomial division over Q, lowest degree first."""
    a = [Fraction(c) for c in a]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(_trim(a)) >= len(b):
        c = a[-1] / lead
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
    return _trim(quot), a


def _monic(a):
    return [c / a[-1] for c in a]


_CHECK_PRIME = (1 << 61) - 1


def _coprime_to_derivative_mod(f, m):
    """True if gcd(f, f') is constant modulo the prime m (and m keeps the degree).

    That certifies f squarefree over Q; False is inconclusive.
    """
    try:
        a = [c.numerator * pow(c.denominator, -1, m) % m for c in f]
    except ValueError:  # a denominator divisible by m
        return False
    if a[-1] == 0:
        return False
    b = _trim([i * c % m for i, c in enumerate(a)][1:])
    a = _trim(a)
    while b:
        inv = pow(b[-1], -1, m)
        while len(a) >= len(b):
            c = a[-1] * inv % m
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % m
            _trim(a)
        a, b = b, a
    return len(a) == 1


def squarefree_part(coeffs):
    """f / gcd(f, f') over Q, monic, lowest degree first."""
    f = _trim([Fraction(c) for c in coeffs])
    if len(f) > 2 and _coprime_to_derivative_mod(f, _CHECK_PRIME):
        return _monic(f)
    df = _trim([i * c for i, c in enumerate(f)][1:])
    if not df:
        return _monic(f)
    a, b = f, df
    while b:
        a, b = b, _divmod_q(a, b)[1]
    g = _monic(a)
    quot, rem = _divmod_q(f, g)
    assert not rem
    return _monic(quot)


def unit_circle_defects(coeffs, scale):
    """Max |(|root| * scale) - 1| over the distinct complex roots of sum coeffs[j] t^j.

    With ``scale = q`` this measures how far the roots are from modulus 1/q.
    The polynomial is rescaled to t = u/scale first, so the numbers handled
    in floating point stay near the unit circle.
    """
    scaled = [Fraction(c) / Fraction(scale) ** j for j, c in enumerate(coeffs)]
    sqf = squarefree_part(scaled)
    if len(sqf) <= 1:
        return 0.0
    roots = np.roots([float(c) for c in reversed(sqf)])
    defect = float(np.max(np.abs(np.abs(roots) - 1.0)))
    if defect <= 1e-10 or defect >= 1e-3:
        return defect
    # borderline: numpy may be sloppy on clustered roots, confirm in extended precision
    with mpmath.workdps(50):
        try:
            mp_roots = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(sqf)],
                                        maxsteps=500, extraprec=300)
        except mpmath.libmp.NoConvergence:
            return defect
        return float(max(abs(abs(z) - 1) for z in mp_roots))
