"""Exact arithmetic in prime fields F_p and extension fields F_{p^n}.

Elements are stored as canonical integer codes.  For F_p the code is the
residue itself; for F_{p^n} the code of ``c_0 + c_1 t + ... + c_{n-1} t^{n-1}``
is ``c_0 + c_1 p + ... + c_{n-1} p^{n-1}``, so ascending codes give the
odometer order on coefficient vectors.  :class:`FieldElement` wraps a code
together with its owning field for operator-style use.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "FieldError",
    "PrimeField",
    "ExtensionField",
    "FieldElement",
    "is_prime",
    "make_extension",
    "enumerate_field",
    "MAX_DEGREE",
    "LOG_TABLE_LIMIT",
]

MAX_DEGREE = 16
LOG_TABLE_LIMIT = 1 << 20


class FieldError(ValueError):
    """Invalid field construction or mixed-field / non-invertible arithmetic."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Polynomials over F_p as coefficient lists, lowest degree first, no trailing
# zeros (the zero polynomial is []).


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    """Remainder of a modulo m over F_p (m need not be monic)."""
    a = list(a)
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod([c % p for c in out], m, p)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _is_irreducible(f, p):
    """Ben-Or test: f of degree n is irreducible iff gcd(f, t^{p^k} - t) = 1 for k <= n/2."""
    n = len(f) - 1
    t = [0, 1]
    h = t
    for _ in range(n // 2):
        h = _ppowmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def _smallest_irreducible(p, n):
    # monic t^n + c_{n-1} t^{n-1} + ... + c_0, compared from c_{n-1} down to c_0
    for idx in range(p**n):
        low = []
        code = idx
        for _ in range(n):
            code, c = divmod(code, p)
            low.append(c)
        # idx's least significant digit is c_0, its most significant c_{n-1}
        f = low + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------


class PrimeField:
    """The field F_p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"{p!r} is not a prime")
        self.p = p
        self.n = 1
        self.q = p
        self.modulus = (0, 1)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    @property
    def characteristic(self):
        return self.p

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, int(value) % self.p)

    # integer-code arithmetic
    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def embed(self, c: int) -> int:
        """Code of the integer c viewed in the prime subfield."""
        return c % self.p

    def coeffs(self, code):
        return (code,)

    def codes(self):
        return range(self.q)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def format(self, code):
        return str(code)


class ExtensionField:
    """F_{p^n} = F_p[t]/(m(t)) with m the lexicographically smallest monic irreducible.

    Multiplication goes through discrete log / antilog tables when
    ``q <= LOG_TABLE_LIMIT``; otherwise it falls back to schoolbook
    multiplication modulo ``m``.
    """

    def __init__(self, p: int, n: int, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"{p!r} is not a prime")
        if not isinstance(n, int) or not 2 <= n <= MAX_DEGREE:
            raise FieldError(f"extension degree {n!r} outside 2..{MAX_DEGREE}")
        self.p = p
        self.n = n
        self.q = p**n
        if modulus is None:
            modulus = _smallest_irreducible(p, n)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1 or not _is_irreducible(list(modulus), p):
                raise FieldError("modulus must be monic irreducible of degree n")
        self.modulus = modulus
        self._exp = self._log = None
        if self.q <= LOG_TABLE_LIMIT:
            self._build_log_tables()

    def __repr__(self):
        return f"ExtensionField({self.p}, {self.n}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (
            type(other) is ExtensionField
            and (other.p, other.n, other.modulus) == (self.p, self.n, self.modulus)
        )

    def __hash__(self):
        return hash(("F", self.p, self.n, self.modulus))

    @property
    def characteristic(self):
        return self.p

    def __call__(self, value) -> FieldElement:
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.encode(value))

    # coefficient vector <-> code
    def encode(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise FieldError("too many coefficients")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + int(c) % self.p
        return code

    def coeffs(self, code):
        out = []
        for _ in range(self.n):
            code, c = divmod(code, self.p)
            out.append(c)
        return tuple(out)

    def _poly(self, code):
        return _trim(list(self.coeffs(code)))

    def _schoolbook_mul(self, a, b):
        return self.encode(_pmulmod(self._poly(a), self._poly(b), list(self.modulus), self.p))

    def _build_log_tables(self):
        q = self.q
        order = q - 1
        prime_factors = [f for f in range(2, order + 1) if order % f == 0 and is_prime(f)]
        for g in range(self.p, q):
            # g is a generator iff g^(order/f) != 1 for every prime f | order
            if all(self._schoolbook_pow(g, order // f) != 1 for f in prime_factors):
                break
        else:  # q = 2 is never an extension; p^n >= 4 always has a generator >= p
            raise FieldError("no primitive element found")
        exp = np.zeros(order, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for k in range(order):
            exp[k] = x
            log[x] = k
            x = self._schoolbook_mul(x, g)
        self.generator = g
        self._exp, self._log = exp, log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()

    def _schoolbook_pow(self, a, e):
        result, base = 1, a
        while e:
            if e & 1:
                result = self._schoolbook_mul(result, base)
            base = self._schoolbook_mul(base, base)
            e >>= 1
        return result

    @property
    def has_log_tables(self):
        return self._exp is not None

    # integer-code arithmetic
    def add(self, a, b):
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += (x + y) % p * scale
            scale *= p
        return out

    def neg(self, a):
        p = self.p
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += (-x % p) * scale
            scale *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.q - 1)]
        return self._schoolbook_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp_list[-self._log_list[a] % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp_list[self._log_list[a] * e % (self.q - 1)]
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def embed(self, c: int) -> int:
        return c % self.p

    def codes(self):
        return range(self.q)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def format(self, code):
        terms = []
        for i, c in enumerate(self.coeffs(code)):
            if c == 0:
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(mono if c == 1 and i else (str(c) if i == 0 else f"{c}*{mono}"))
        return " + ".join(terms) if terms else "0"


class FieldElement:
    """An element of a finite field with operator overloads."""

    __slots__ = ("field", "code")

    def __init__(self, field, code: int):
        self.field = field
        self.code = code

    @property
    def repr(self):
        """Canonical representation: residue for F_p, coefficient vector for F_{p^n}."""
        if self.field.n == 1:
            return self.code
        return self.field.coeffs(self.code)

    def _check(self, other):
        if isinstance(other, int):
            return self.field.embed(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldError("operands belong to different fields")
        return other.code

    def __add__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.code))

    def __mul__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def __truediv__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(b)))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == self.field.embed(other)
        return (
            isinstance(other, FieldElement)
            and other.field == self.field
            and other.code == self.code
        )

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return self.field.format(self.code)


def make_extension(p: int, n: int):
    """Return F_{p^n}; ``n == 1`` gives a :class:`PrimeField`."""
    if not isinstance(n, int) or not 1 <= n <= MAX_DEGREE:
        raise FieldError(f"extension degree {n!r} outside 1..{MAX_DEGREE}")
    if n == 1:
        return PrimeField(p)
    return _cached_extension(p, n)


@lru_cache(maxsize=64)
def _cached_extension(p, n):
    return ExtensionField(p, n)


def enumerate_field(field):
    """All q elements, zero first, in code (odometer) order."""
    return field.elements()
