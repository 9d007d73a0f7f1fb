"""Vectorized evaluation of small polynomials over every point of a finite field grid.

Field elements are the integer codes of :mod:`k3ord.gf`, held in int64
arrays.  Prime fields use plain modular arithmetic; extension fields use the
field's log/antilog tables for products and an addition table (or digit-wise
addition for large q) for sums.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

# elements per block when sweeping the last coordinate
_BLOCK = 1 << 20
_ADD_TABLE_LIMIT = 2048


class VecField:
    def __init__(self, field):
        self.field = field
        self.p = field.p
        self.q = field.q
        self.prime = field.n == 1
        if not self.prime:
            if not field.has_log_tables:
                raise ValueError(f"vectorized arithmetic needs log tables (q={field.q} too large)")
            self._exp = field._exp
            self._log = field._log
            self._add_table = None
            if self.q <= _ADD_TABLE_LIMIT:
                codes = np.arange(self.q, dtype=np.int64)
                self._add_table = self._digit_add(codes[:, None], codes[None, :])

    def _digit_add(self, a, b):
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        p = self.p
        for i in range(self.field.n):
            scale = p**i
            out += ((a // scale + b // scale) % p) * scale
        return out

    def add(self, a, b):
        if self.prime:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._digit_add(a, b)

    def mul(self, a, b):
        if self.prime:
            return (a * b) % self.p
        res = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        res[(a == 0) | (b == 0)] = 0
        return res

    def scale(self, a, c: int):
        """a * c for an array a and a scalar code c."""
        if self.prime:
            return (a * c) % self.p
        if c == 0:
            return np.zeros_like(a)
        res = self._exp[(self._log[a] + int(self._log[c])) % (self.q - 1)]
        res[a == 0] = 0
        return res

    def powers(self, max_e):
        """table[e][x] = x**e for e <= max_e, x over all codes."""
        codes = np.arange(self.q, dtype=np.int64)
        table = [np.ones(self.q, dtype=np.int64)]
        for _ in range(max_e):
            table.append(self.mul(table[-1], codes))
        return table


def _restrict(polys, k):
    """Substitute x_0..x_{k-1} = 0 and x_k = 1 into each term list.

    Each poly is a list of (exps, coeff); the result keeps only the exponents
    of the free coordinates x_{k+1}..x_3.
    """
    out = []
    for terms in polys:
        acc = {}
        for e, c in terms:
            if any(e[i] for i in range(k)):
                continue
            free = tuple(e[k + 1:])
            acc[free] = acc.get(free, 0) + c
        out.append([(e, c) for e, c in acc.items()])
    return out


def _grid_values(vf, terms, pw, m):
    """Values on F_q^(m-1) of the coefficients g_j in f = sum_j g_j * z^j.

    Returns {j: array over the first m-1 free coordinates, flattened}.
    """
    q = vf.q
    groups = {}
    for e, c in terms:
        c = vf.field.embed(c)
        if c == 0:
            continue
        j = e[-1]
        if m == 1:
            val = np.array([c], dtype=np.int64)
        elif m == 2:
            val = vf.scale(pw[e[0]], c)
        else:
            xa = np.broadcast_to(pw[e[0]][:, None], (q, q)).reshape(-1)
            yb = np.broadcast_to(pw[e[1]][None, :], (q, q)).reshape(-1)
            val = vf.scale(vf.mul(xa, yb), c)
        groups[j] = vf.add(groups[j], val) if j in groups else val
    return groups


def _sweep(vf, groups, size, zs, pw_z):
    """Evaluate sum_j g_j z^j for z in zs; returns a (len(zs), size) value array."""
    vals = np.zeros((len(zs), size), dtype=np.int64)
    for j, g in groups.items():
        zj = pw_z[j][zs]
        vals = vf.add(vals, vf.mul(zj[:, None], g[None, :]))
    return vals


def _chart_blocks(q, size):
    step = max(1, _BLOCK // max(size, 1))
    return [np.arange(s, min(q, s + step), dtype=np.int64) for s in range(0, q, step)]


def count_zeros(field, terms, workers=1):
    """Number of projective points of P^3(F_q) where the quartic vanishes.

    terms: list of (exponent 4-tuple, integer coefficient).
    """
    vf = VecField(field)
    q = vf.q
    pw = vf.powers(4)
    total = 0
    for k in range(4):
        (chart_terms,) = _restrict([terms], k)
        m = 3 - k
        if m == 0:
            val = 0
            for _, c in chart_terms:
                val = field.add(val, field.embed(c))
            total += int(val == 0)
            continue
        groups = _grid_values(vf, chart_terms, pw, m)
        size = q ** (m - 1)
        blocks = _chart_blocks(q, size)

        def work(zs, groups=groups, size=size):
            vals = _sweep(vf, groups, size, zs, pw)
            return int(np.count_nonzero(vals == 0))

        if workers > 1 and len(blocks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(work, blocks))
        else:
            parts = [work(zs) for zs in blocks]
        total += sum(parts)
    return total


def find_common_zero(field, polys):
    """First projective point (as a tuple of codes) where every poly vanishes, else None.

    Charts are scanned in canonical order: x_0 = 1, then (0:1:*:*), ...
    """
    vf = VecField(field)
    q = vf.q
    pw = vf.powers(4)
    for k in range(4):
        restricted = _restrict(polys, k)
        m = 3 - k
        prefix = (0,) * k + (1,)
        if m == 0:
            if all(_scalar_value(field, t) == 0 for t in restricted):
                return prefix
            continue
        size = q ** (m - 1)
        all_groups = [_grid_values(vf, t, pw, m) for t in restricted]
        for zs in _chart_blocks(q, size):
            mask = np.ones((len(zs), size), dtype=bool)
            for groups in all_groups:
                mask &= _sweep(vf, groups, size, zs, pw) == 0
                if not mask.any():
                    break
            hits = np.flatnonzero(mask)
            if hits.size:
                zi, rest = divmod(int(hits[0]), size)
                if m == 3:
                    x, y = divmod(rest, q)
                    free = (x, y, int(zs[zi]))
                elif m == 2:
                    free = (rest, int(zs[zi]))
                else:
                    free = (int(zs[zi]),)
                return prefix + free
    return None


def _scalar_value(field, terms):
    val = 0
    for _, c in terms:
        val = field.add(val, field.embed(c))
    return val
