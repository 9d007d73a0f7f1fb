"""Quartic surfaces in P^3: reduction mod p, singularity scan, point counts.

The Lefschetz relation for a K3 surface over F_q reads

    #X(F_q) = 1 + q^2 + s_1,    s_1 = sum of the 22 reciprocal roots of P_2,

and the linear coefficient of P_2 is a_1 = -s_1.  Since q^2 = 0 mod p, the
surface is ordinary at p exactly when #X(F_p) != 1 (mod p).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Optional

from . import _kernel
from .gf import is_prime, make_extension

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_SCAN_BUDGET",
    "MAX_SCAN_DEPTH",
    "BudgetExceeded",
    "DegenerateReduction",
    "QuarticSurface",
    "ReducedSurface",
    "SmoothnessReport",
    "CountResult",
    "OrdinaryVerdict",
    "default_budget",
    "reduce_mod_p",
    "partials",
    "singular_scan",
    "verify_witness",
    "projective_size",
    "count_points_naive",
    "count_points_fast",
    "count_points",
    "is_ordinary",
]

DEFAULT_BUDGET = 1 << 31
# singular scans evaluate five polynomials per point; keep them cheaper
MAX_SCAN_DEPTH = 4
DEFAULT_SCAN_BUDGET = 1 << 24


class BudgetExceeded(RuntimeError):
    """The requested enumeration exceeds the configured evaluation cap."""


class DegenerateReduction(ValueError):
    """Every coefficient vanishes mod p."""


def default_budget() -> int:
    env = os.environ.get("K3ORD_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class QuarticSurface:
    """A homogeneous quartic form in x0..x3 with integer coefficients.

    ``terms`` is a tuple of ``((e0, e1, e2, e3), coefficient)`` pairs, sorted,
    duplicates merged and zero coefficients dropped.
    """

    name: str
    terms: tuple

    def __init__(self, name, terms):
        merged = {}
        for exps, coeff in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 4 or any(e < 0 for e in exps) or sum(exps) != 4:
                raise ValueError(f"exponent vector {exps} is not a degree-4 monomial in 4 variables")
            merged[exps] = merged.get(exps, 0) + int(coeff)
        clean = tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        if not clean:
            raise ValueError("quartic has no nonzero coefficient")
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "terms", clean)

    @classmethod
    def fermat(cls):
        return cls("fermat", [((4, 0, 0, 0), 1), ((0, 4, 0, 0), 1), ((0, 0, 4, 0), 1), ((0, 0, 0, 4), 1)])

    def __str__(self):
        parts = []
        for e, c in self.terms:
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ReducedSurface:
    base: QuarticSurface
    p: int
    terms: tuple


def reduce_mod_p(surface: QuarticSurface, p: int) -> ReducedSurface:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    terms = tuple((e, c % p) for e, c in surface.terms if c % p)
    if not terms:
        raise DegenerateReduction(f"{surface.name} vanishes identically mod {p}")
    return ReducedSurface(surface, p, terms)


def partials(rs: ReducedSurface):
    """The four partial derivatives, as term lists with coefficients mod p."""
    out = []
    for i in range(4):
        d = []
        for e, c in rs.terms:
            if e[i] == 0:
                continue
            c2 = c * e[i] % rs.p
            if c2:
                e2 = list(e)
                e2[i] -= 1
                d.append((tuple(e2), c2))
        out.append(d)
    return out


def projective_size(q: int) -> int:
    return q**3 + q**2 + q + 1


@dataclass(frozen=True)
class SmoothnessReport:
    """Outcome of the exhaustive singular-point search.

    ``depth`` is the largest extension degree actually scanned, which can be
    below the requested depth when the scan budget truncates the search.
    """

    p: int
    status: str  # "singular_found" | "presumed_smooth"
    depth: int
    requested_depth: int
    witness: Optional[tuple] = None  # coefficient vectors over F_{p^witness_degree}
    witness_degree: Optional[int] = None

    @property
    def singular(self):
        return self.status == "singular_found"

    def witness_point(self):
        if self.witness is None:
            return None
        F = make_extension(self.p, self.witness_degree)
        return tuple(F(c) if F.n > 1 else F(c[0]) for c in self.witness)


def singular_scan(rs: ReducedSurface, depth: int = 2, budget: int | None = None) -> SmoothnessReport:
    """Search P^3(F_{p^j}), j = 1..depth, for points where f and all partials vanish.

    Levels whose point count exceeds ``budget`` are skipped, and so is every
    deeper level; if even j = 1 is over budget, BudgetExceeded is raised.
    """
    if not 1 <= depth <= MAX_SCAN_DEPTH:
        raise ValueError(f"depth must be between 1 and {MAX_SCAN_DEPTH}")
    budget = DEFAULT_SCAN_BUDGET if budget is None else budget
    p = rs.p
    polys = [list(rs.terms)] + partials(rs)
    polys = [t for t in polys if t] or [[]]
    scanned = 0
    for j in range(1, depth + 1):
        F = make_extension(p, j)
        if projective_size(F.q) > budget:
            if j == 1:
                raise BudgetExceeded(f"singular scan over F_{p} needs {projective_size(p)} evaluations")
            break
        point = _kernel.find_common_zero(F, polys)
        scanned = j
        if point is not None:
            return SmoothnessReport(
                p, "singular_found", j, depth,
                witness=tuple(F.coeffs(c) for c in point), witness_degree=j,
            )
    return SmoothnessReport(p, "presumed_smooth", scanned, depth)


def _eval_scalar(F, terms, point):
    acc = 0
    for e, c in terms:
        m = F.embed(c)
        for x, k in zip(point, e):
            if k:
                m = F.mul(m, F.pow(x, k))
        acc = F.add(acc, m)
    return acc


def verify_witness(rs: ReducedSurface, report: SmoothnessReport) -> bool:
    """Re-check a singular witness: nonzero vector where f and all partials vanish."""
    if report.witness is None:
        return False
    F = make_extension(rs.p, report.witness_degree)
    point = [F.encode(c) if F.n > 1 else c[0] for c in report.witness]
    if not any(point):
        return False
    return all(_eval_scalar(F, t, point) == 0 for t in [list(rs.terms)] + partials(rs))


@dataclass(frozen=True)
class CountResult:
    p: int
    n: int
    q: int
    count: int
    s1: int

    @classmethod
    def from_count(cls, p, n, count):
        q = p**n
        return cls(p, n, q, count, count - 1 - q * q)

    @property
    def weil_ok(self):
        return abs(self.s1) <= 22 * self.q


def _field_for(rs, field):
    if isinstance(field, int):
        field = make_extension(rs.p, field)
    if field.p != rs.p:
        raise ValueError(f"field characteristic {field.p} differs from p = {rs.p}")
    return field


def _check_budget(q, budget):
    budget = default_budget() if budget is None else budget
    if projective_size(q) > budget:
        raise BudgetExceeded(f"counting over F_{q} needs {projective_size(q)} evaluations (cap {budget})")


def count_points_naive(rs: ReducedSurface, field, budget: int | None = None) -> CountResult:
    """Reference count: evaluate f at every canonical projective representative.

    ``field`` is an F_{p^n} object or the degree n.
    """
    F = _field_for(rs, field)
    _check_budget(F.q, budget)
    q = F.q
    add, mul = F.add, F.mul
    pw = [[F.pow(x, k) for k in range(5)] for x in range(q)]
    terms = [(e, F.embed(c)) for e, c in rs.terms]
    count = 0
    for lead in range(4):
        for free in itertools.product(range(q), repeat=3 - lead):
            point = (0,) * lead + (1,) + free
            acc = 0
            for e, c in terms:
                m = c
                for x, k in zip(point, e):
                    if k:
                        m = mul(m, pw[x][k])
                acc = add(acc, m)
            if acc == 0:
                count += 1
    return CountResult.from_count(F.p, F.n, count)


def count_points_fast(rs: ReducedSurface, field, budget: int | None = None, workers: int = 1) -> CountResult:
    """Vectorized count; same contract as :func:`count_points_naive`.

    P^3 is split into the charts A^3, A^2, A^1, point; in each chart the
    quartic is expanded in its last free coordinate and swept in blocks.
    """
    F = _field_for(rs, field)
    _check_budget(F.q, budget)
    count = _kernel.count_zeros(F, list(rs.terms), workers=workers)
    return CountResult.from_count(F.p, F.n, count)


count_points = count_points_fast


@dataclass(frozen=True)
class OrdinaryVerdict:
    status: str  # "ordinary" | "non_ordinary" | "bad_reduction"
    p: int
    reason: Optional[str] = None  # "degenerate" | "singular" | "weil_violation"
    count: Optional[CountResult] = None
    smoothness: Optional[SmoothnessReport] = None

    @property
    def ordinary(self):
        return self.status == "ordinary"

    def __str__(self):
        if self.status == "bad_reduction":
            return f"bad_reduction: {self.reason}"
        return self.status


def is_ordinary(surface: QuarticSurface, p: int, depth: int = 2,
                budget: int | None = None, scan_budget: int | None = None,
                workers: int = 1) -> OrdinaryVerdict:
    try:
        rs = reduce_mod_p(surface, p)
    except DegenerateReduction:
        return OrdinaryVerdict("bad_reduction", p, "degenerate")
    report = singular_scan(rs, depth, budget=scan_budget)
    if report.singular:
        return OrdinaryVerdict("bad_reduction", p, "singular", smoothness=report)
    res = count_points_fast(rs, 1, budget=budget, workers=workers)
    if not res.weil_ok:
        return OrdinaryVerdict("bad_reduction", p, "weil_violation", res, report)
    status = "ordinary" if res.s1 % p else "non_ordinary"
    return OrdinaryVerdict(status, p, None, res, report)
