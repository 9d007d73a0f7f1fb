"""The degree-22 Frobenius polynomial P_2(t) = 1 + a_1 t + ... + a_22 t^22.

Conventions: q = p^r, reciprocal roots alpha_i with P_2(t) = prod (1 - alpha_i t),
power sums s_n = sum alpha_i^n = #X(F_{q^n}) - 1 - q^{2n}.  The pairing
alpha <-> q^2/alpha gives the functional equation

    a_{22-j} = eps * q^{22-2j} * a_j,    eps = a_22 / q^22 in {+1, -1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..gf import is_prime
from ._roots import unit_circle_defects

__all__ = [
    "DEGREE",
    "ROOT_TOLERANCE",
    "InconsistentInput",
    "FrobeniusPolynomial",
    "WeilReport",
    "PowerSums",
    "Reconstruction",
    "validate_weil",
    "power_sums_from_counts",
    "power_sums_of",
    "coefficients_from_power_sums",
    "reconstruct_from_power_sums",
    "poly_mul",
]

DEGREE = 22
ROOT_TOLERANCE = 1e-8


class InconsistentInput(ValueError):
    """Power sums or coefficients that cannot come from a K3 Frobenius polynomial."""


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class FrobeniusPolynomial:
    p: int
    r: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != DEGREE + 1:
            raise ValueError(f"expected {DEGREE + 1} coefficients, got {len(self.coeffs)}")
        if not is_prime(self.p) or self.r < 1:
            raise ValueError("need a prime p and r >= 1")

    @property
    def q(self):
        return self.p**self.r

    @property
    def a1(self):
        return self.coeffs[1]

    @property
    def epsilon(self):
        top = self.coeffs[DEGREE]
        qq = self.q**DEGREE
        if top == qq:
            return 1
        if top == -qq:
            return -1
        return None

    @classmethod
    def from_factors(cls, p, r, factors):
        """Product of integer polynomials given lowest degree first."""
        acc = [1]
        for f in factors:
            acc = poly_mul(acc, list(f))
        return cls(p, r, acc)


@dataclass
class WeilReport:
    """Per-clause outcome of :func:`validate_weil`.

    Clauses: "a" constant term / integrality, "b" leading coefficient +-q^22,
    "c" exact functional equation, "d" root moduli, "e" unit roots away from p.
    """

    checks: dict = field(default_factory=dict)
    epsilon: Optional[int] = None
    max_root_defect: Optional[float] = None

    @property
    def ok(self):
        return all(passed for passed, _ in self.checks.values())

    @property
    def structural_ok(self):
        return all(self.checks.get(k, (False,))[0] for k in "abc")

    @property
    def numerical_root_failure(self):
        """True when only the floating-point root check failed."""
        return self.structural_ok and not self.checks.get("d", (True,))[0]

    @property
    def failures(self):
        return [(k, msg) for k, (passed, msg) in self.checks.items() if not passed]


def _small_primes_except(p, count):
    out, n = [], 2
    while len(out) < count:
        if n != p and is_prime(n):
            out.append(n)
        n += 1
    return out


def validate_weil(P: FrobeniusPolynomial, tol: float = ROOT_TOLERANCE) -> WeilReport:
    from .newton import newton_polygon

    rep = WeilReport()
    a = P.coeffs
    q = P.q
    if a[0] != 1:
        rep.checks["a"] = (False, f"constant term is {a[0]}, expected 1")
        return rep
    rep.checks["a"] = (True, "")
    eps = P.epsilon
    if eps is None:
        rep.checks["b"] = (False, f"a_22 = {a[DEGREE]} is not +-q^22")
        return rep
    rep.epsilon = eps
    rep.checks["b"] = (True, "")
    bad = [j for j in range(12) if a[DEGREE - j] != eps * q ** (DEGREE - 2 * j) * a[j]]
    if bad:
        rep.checks["c"] = (False, f"functional equation fails at j = {bad[0]}")
        return rep
    rep.checks["c"] = (True, "")
    defect = unit_circle_defects(a, q)
    rep.max_root_defect = defect
    if defect > tol:
        rep.checks["d"] = (False, f"NumericalRootFailure: root modulus off by {defect:.3g} (relative)")
    else:
        rep.checks["d"] = (True, "")
    for ell in _small_primes_except(P.p, 5):
        polygon = newton_polygon(P, prime=ell, r=1)
        if any(s != 0 for s in polygon.slopes):
            rep.checks["e"] = (False, f"nonzero {ell}-adic slope: some root is not an {ell}-adic unit")
            break
    else:
        rep.checks["e"] = (True, "")
    return rep


@dataclass(frozen=True)
class PowerSums:
    p: int
    r: int
    values: tuple  # s_1, s_2, ...

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        q = self.q
        for n, s in enumerate(self.values, start=1):
            if abs(s) > DEGREE * q**n:
                raise InconsistentInput(f"|s_{n}| = {abs(s)} exceeds the Weil bound 22*q^{n}")

    @property
    def q(self):
        return self.p**self.r

    def __len__(self):
        return len(self.values)


def power_sums_from_counts(counts) -> PowerSums:
    """s_n = #X(F_{q^n}) - 1 - q^{2n} from counts over F_q, F_{q^2}, ..., in that order."""
    counts = list(counts)
    if not counts:
        raise ValueError("no counts")
    p, r = counts[0].p, counts[0].n
    for i, c in enumerate(counts, start=1):
        if c.p != p or c.n != r * i:
            raise ValueError("counts must be over F_{q^n} for consecutive n = 1, 2, ...")
    return PowerSums(p, r, [c.s1 for c in counts])


def power_sums_of(P: FrobeniusPolynomial, k: int):
    """s_1..s_k from the coefficients (Newton's identities, forward direction)."""
    a = P.coeffs
    s = []
    for n in range(1, k + 1):
        acc = n * a[n] if n <= DEGREE else 0
        for i in range(1, n):
            if i <= DEGREE:
                acc += a[i] * s[n - i - 1]
        s.append(-acc)
    return s


def coefficients_from_power_sums(values):
    """a_1..a_k from s_1..s_k via  s_n + a_1 s_{n-1} + ... + a_{n-1} s_1 + n a_n = 0."""
    a = [1]
    for n in range(1, len(values) + 1):
        acc = values[n - 1] + sum(a[i] * values[n - i - 1] for i in range(1, n))
        if acc % n:
            raise InconsistentInput(f"Newton identities give a non-integer a_{n}")
        a.append(-acc // n)
    return a


@dataclass
class Reconstruction:
    candidates: list  # FrobeniusPolynomial
    ambiguous: bool
    rejected: dict = field(default_factory=dict)  # epsilon -> failures

    @property
    def polynomial(self):
        if self.ambiguous:
            raise ValueError("two sign candidates remain; supply s_12 to disambiguate")
        return self.candidates[0]


def _complete(p, r, prefix, eps):
    q = p**r
    a = list(prefix[:12]) + [0] * 11
    for j in range(11):
        a[DEGREE - j] = eps * q ** (DEGREE - 2 * j) * a[j]
    return FrobeniusPolynomial(p, r, a)


def reconstruct_from_power_sums(ps: PowerSums, tol: float = ROOT_TOLERANCE) -> Reconstruction:
    if len(ps) < 11:
        raise ValueError("need at least s_1..s_11")
    prefix = coefficients_from_power_sums(ps.values[:11])
    signs = (1,) if prefix[11] != 0 else (1, -1)
    survivors, rejected = [], {}
    for eps in signs:
        cand = _complete(ps.p, ps.r, prefix, eps)
        report = validate_weil(cand, tol)
        if report.ok:
            survivors.append(cand)
        else:
            rejected[eps] = report.failures
    if not survivors:
        raise InconsistentInput(f"no sign candidate passes validation: {rejected}")
    if len(survivors) == 2 and len(ps) >= 12:
        s12 = ps.values[11]
        survivors = [c for c in survivors if power_sums_of(c, 12)[11] == s12]
        if not survivors:
            raise InconsistentInput("s_12 matches neither sign candidate")
    return Reconstruction(survivors, len(survivors) > 1, rejected)
