"""Trace-rigidity check for an operator u known only through its characteristic polynomial.

Hypotheses, for P_u(t) = 1 + b_1 t + ... + b_22 t^22, a prime p and a prime
ell > 44:

  (i)   ell divides p - 1
  (ii)  P_u(t) = (1 - t)^22 mod ell   (coefficient shadow of u = Id mod ell)
  (iii) integer coefficients, constant term 1
  (iv)  every reciprocal root has absolute value p
  (v)   p divides b_1

Together they force -b_1 = 22 p, hence every reciprocal root equals p and
P_u(t) = (1 - p t)^22.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..gf import is_prime
from ._roots import unit_circle_defects
from .frobenius import DEGREE, ROOT_TOLERANCE

__all__ = ["Ogus2Verdict", "ogus2_check", "rigid_polynomial", "MIN_ELL"]

MIN_ELL = 2 * DEGREE + 1


def rigid_polynomial(p):
    """(1 - p t)^22, lowest degree first."""
    return tuple(comb(DEGREE, j) * (-p) ** j for j in range(DEGREE + 1))


@dataclass(frozen=True)
class Ogus2Verdict:
    hypotheses: dict  # "i".."v" -> bool
    conclusion_holds: bool

    @property
    def all_hypotheses(self):
        return all(self.hypotheses.values())

    @property
    def invariant_holds(self):
        return self.conclusion_holds or not self.all_hypotheses


def _roots_on_circle(coeffs, p, tol):
    # Exact necessary conditions first: roots of modulus 1/p make |b_22| = p^22, and
    # since conjugation and t -> 1/(p^2 t) then permute the roots, the polynomial
    # satisfies the functional equation b_{22-j} = eps p^{22-2j} b_j.
    top = coeffs[DEGREE]
    if abs(top) != p**DEGREE:
        return False
    eps = 1 if top > 0 else -1
    if any(coeffs[DEGREE - j] != eps * p ** (DEGREE - 2 * j) * coeffs[j] for j in range(DEGREE // 2)):
        return False
    return unit_circle_defects(coeffs, p) <= tol


def ogus2_check(coeffs, p: int, ell: int, tol: float = ROOT_TOLERANCE) -> Ogus2Verdict:
    if not is_prime(ell) or ell < MIN_ELL:
        raise ValueError(f"ell must be a prime > {2 * DEGREE}, got {ell}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    coeffs = list(coeffs)
    if len(coeffs) != DEGREE + 1:
        raise ValueError(f"expected {DEGREE + 1} coefficients")
    integral = all(isinstance(b, int) for b in coeffs) and coeffs[0] == 1
    hyp = {"i": (p - 1) % ell == 0, "iii": integral}
    if integral:
        unipotent_mod_ell = (comb(DEGREE, j) * (-1) ** j for j in range(DEGREE + 1))
        hyp["ii"] = all((b - u) % ell == 0 for b, u in zip(coeffs, unipotent_mod_ell))
        hyp["v"] = coeffs[1] % p == 0
        hyp["iv"] = _roots_on_circle(coeffs, p, tol)
    else:
        hyp["ii"] = hyp["iv"] = hyp["v"] = False
    hyp = {k: hyp[k] for k in ("i", "ii", "iii", "iv", "v")}
    return Ogus2Verdict(hyp, tuple(coeffs) == rigid_polynomial(p))
