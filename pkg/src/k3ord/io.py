"""JSON file formats for surfaces, Frobenius polynomials and power sums.

Big integers are written as decimal strings so no reader truncates them.

Surface::

    {"name": "fermat", "degree": 4, "variables": 4,
     "terms": [{"exponents": [4, 0, 0, 0], "coefficient": "1"}, ...]}

Polynomial (full, or partial with ``coefficients_prefix`` = a_0..a_k)::

    {"p": 5, "r": 1, "coefficients": ["1", "-3", ...]}

Power sums::

    {"p": 5, "r": 1, "sums": ["-26", ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .surface import QuarticSurface
from .weil import DEGREE, FrobeniusPolynomial, PowerSums

__all__ = [
    "FormatError",
    "PartialPolynomial",
    "load_surface",
    "dump_surface",
    "surface_to_dict",
    "surface_from_dict",
    "load_polynomial",
    "dump_polynomial",
    "polynomial_to_dict",
    "load_power_sums",
    "dump_power_sums",
]


class FormatError(ValueError):
    pass


def _read(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc


def _int(value, what):
    if isinstance(value, bool):
        raise FormatError(f"{what}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise FormatError(f"{what}: expected a decimal integer, got {value!r}")


def surface_from_dict(doc):
    if not isinstance(doc, dict):
        raise FormatError("surface document must be an object")
    if doc.get("degree", 4) != 4:
        raise FormatError("degree must be 4")
    if doc.get("variables", 4) != 4:
        raise FormatError("variables must be 4")
    terms = []
    for i, t in enumerate(doc.get("terms") or []):
        exps = t.get("exponents")
        if not isinstance(exps, list) or len(exps) != 4:
            raise FormatError(f"term {i}: exponents must be a list of 4 integers")
        exps = [_int(e, f"term {i} exponent") for e in exps]
        if any(e < 0 for e in exps) or sum(exps) != 4:
            raise FormatError(f"term {i}: exponents must be nonnegative and sum to 4")
        terms.append((exps, _int(t.get("coefficient"), f"term {i} coefficient")))
    try:
        return QuarticSurface(doc.get("name", "surface"), terms)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def surface_to_dict(surface):
    return {
        "name": surface.name,
        "degree": 4,
        "variables": 4,
        "terms": [{"exponents": list(e), "coefficient": str(c)} for e, c in surface.terms],
    }


def load_surface(path):
    return surface_from_dict(_read(path))


def dump_surface(surface, path):
    Path(path).write_text(json.dumps(surface_to_dict(surface), indent=2) + "\n", encoding="utf-8")


@dataclass(frozen=True)
class PartialPolynomial:
    p: int
    r: int
    prefix: tuple  # a_0..a_k


def _p_r(doc):
    p = _int(doc.get("p"), "p")
    r = _int(doc.get("r", 1), "r")
    return p, r


def load_polynomial(path, allow_partial=False):
    doc = _read(path)
    if not isinstance(doc, dict):
        raise FormatError("polynomial document must be an object")
    p, r = _p_r(doc)
    if "coefficients" in doc:
        coeffs = [_int(c, f"coefficient {j}") for j, c in enumerate(doc["coefficients"])]
        if len(coeffs) != DEGREE + 1:
            raise FormatError(f"expected {DEGREE + 1} coefficients, got {len(coeffs)}")
        try:
            return FrobeniusPolynomial(p, r, coeffs)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    if "coefficients_prefix" in doc and allow_partial:
        prefix = tuple(_int(c, f"coefficient {j}") for j, c in enumerate(doc["coefficients_prefix"]))
        if not 2 <= len(prefix) <= 12:
            raise FormatError("coefficients_prefix must hold a_0..a_k with 1 <= k <= 11")
        return PartialPolynomial(p, r, prefix)
    raise FormatError("polynomial document needs a 'coefficients' list")


def polynomial_to_dict(P):
    return {"p": P.p, "r": P.r, "coefficients": [str(c) for c in P.coeffs]}


def dump_polynomial(P, path):
    Path(path).write_text(json.dumps(polynomial_to_dict(P), indent=2) + "\n", encoding="utf-8")


def load_power_sums(path):
    doc = _read(path)
    p, r = _p_r(doc)
    sums = [_int(s, f"sum {n}") for n, s in enumerate(doc.get("sums") or [], start=1)]
    return PowerSums(p, r, sums)


def dump_power_sums(ps, path):
    doc = {"p": ps.p, "r": ps.r, "sums": [str(s) for s in ps.values]}
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
