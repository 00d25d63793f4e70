"""Entries of the inverse through the cofactor formula.

For ``p = min(i, j)`` and ``q = max(i, j)`` the cofactor behind entry
``(i, j)`` of the inverse is

    (-1)^(i+j) * prod(b_p..b_{q-1} if i <= j else c_p..c_{q-1})
               * D(p-1) * D_q(n-q)

and the entry is that numerator divided by ``D(n)``. Division only happens
when ``D(n)`` is a unit of the ring; otherwise the exact numerator and
determinant are returned and the quotient is left empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .continuant import rotate
from .determinant import (
    PeriodicDeterminants,
    _prefix_dets,
    _suffix_dets,
    off_diagonal_products,
)
from .matrix import KToeplitzSpec
from .ring import Ring, ring_power

__all__ = [
    "InverseEntry",
    "InverseMatrix",
    "inv_entry",
    "inv_entry_general",
    "inv_full",
    "inv_full_general",
]


@dataclass(frozen=True)
class InverseEntry:
    i: int
    j: int
    numerator: object
    det: object
    quotient: Optional[object]


@dataclass(frozen=True)
class InverseMatrix:
    """All entries; ``quotients`` is set iff ``det`` is a unit.

    ``numerators`` is set when requested or when ``det`` is not a unit.
    """

    n: int
    det: object
    quotients: Optional[list]
    numerators: Optional[list]

    def entry(self, i: int, j: int) -> InverseEntry:
        num = self.numerators[i - 1][j - 1] if self.numerators is not None else None
        quo = self.quotients[i - 1][j - 1] if self.quotients is not None else None
        return InverseEntry(i, j, num, self.det, quo)


def _check_index(spec: KToeplitzSpec, i: int, j: int):
    if not (1 <= i <= spec.n and 1 <= j <= spec.n):
        raise IndexError(f"entry ({i}, {j}) is outside 1..{spec.n}")


def _finish(R: Ring, i, j, unsigned, det) -> InverseEntry:
    numerator = R.neg(unsigned) if (i + j) % 2 else unsigned
    inv = R.try_invert(det)
    quotient = None if inv is None else R.mul(numerator, inv)
    return InverseEntry(i, j, numerator, det, quotient)


def _times(R: Ring, x, y):
    # None stands for a structural one and is never multiplied
    if x is None:
        return y
    if y is None:
        return x
    return R.mul(x, y)


def inv_entry(spec: KToeplitzSpec, i: int, j: int) -> InverseEntry:
    """One entry in O(log m + k) operations (periodic path).

    ``D(n)`` and ``D(p-1)`` share one continuant table; ``D_q(n-q)`` uses a
    second table on the seeds rotated by ``q`` (same product ``d``). The
    off-diagonal product is ``(x_1...x_k)^(m') * (partial)`` where
    ``q - p = m' k + r'``. Falls back to :func:`inv_entry_general` when
    ``n <= k``.
    """
    _check_index(spec, i, j)
    if spec.n <= spec.k:
        return inv_entry_general(spec, i, j)
    R = spec.ring
    n, k = spec.n, spec.k
    p, q = min(i, j), max(i, j)
    d = off_diagonal_products(spec)
    head = PeriodicDeterminants.from_seeds(R, spec.a, d)
    det = head.det(n)
    left = None if p == 1 else head.det(p - 1)
    if q == n:
        right = None
    else:
        tail = PeriodicDeterminants.from_seeds(R, rotate(spec.a, q), rotate(d, q), head.table.d)
        right = tail.det(n - q)

    prod = None
    length = q - p
    if length:
        seq = spec.b if i <= j else spec.c
        R.int_op()
        periods, rest = divmod(length, k)
        start = p - 1
        run = seq[start % k]
        partial = run if rest == 1 else None
        for t in range(2, (k if periods else rest) + 1):
            run = R.mul(run, seq[(start + t - 1) % k])
            if t == rest:
                partial = run
        prod = partial if not periods else _times(R, ring_power(R, run, periods), partial)
    unsigned = _times(R, _times(R, left, right), prod)
    if unsigned is None:
        unsigned = R.one
    return _finish(R, i, j, unsigned, det)


def inv_entry_general(spec: KToeplitzSpec, i: int, j: int) -> InverseEntry:
    """One entry for ``n <= k`` by plain recurrences; at most ``7n - 5`` operations."""
    _check_index(spec, i, j)
    if spec.n > spec.k:
        raise ValueError("inv_entry_general is for n <= k; use inv_entry")
    R = spec.ring
    n = spec.n
    p, q = min(i, j), max(i, j)
    d = off_diagonal_products(spec, n - 1)
    heads = _prefix_dets(R, spec, d or [R.zero], n)
    det = heads[n]
    left = None if p == 1 else heads[p - 1]
    right = None
    if q < n:
        # trailing block rows q+1..n
        prev, cur = R.one, spec.a_at(n)
        for s in range(n - 2, q - 1, -1):
            prev, cur = cur, R.sub(R.mul(spec.a_at(s + 1), cur), R.mul(d[s], prev))
        right = cur
    prod = None
    if q > p:
        seq = spec.b if i <= j else spec.c
        prod = seq[p - 1]
        for t in range(p, q - 1):
            prod = R.mul(prod, seq[t])
    unsigned = _times(R, _times(R, left, right), prod)
    if unsigned is None:
        unsigned = R.one
    return _finish(R, i, j, unsigned, det)


class _SpanProducts:
    """``seq_p ... seq_{p+len-1}`` (periodic) for every start ``p`` and length.

    First batch: running products of up to ``k-1`` factors from each start
    class and the full period product ``full``. Second batch: powers
    ``full^e``. A span of ``e`` full periods plus ``t`` extra factors is one
    product of the two, computed on first use.
    """

    def __init__(self, R: Ring, seq, n: int):
        k = len(seq)
        self.R, self.k = R, k
        self.partial = []
        for cls in range(min(k, n - 1)):
            row = [None, seq[cls]]
            for t in range(2, min(k - 1, n - 1 - cls) + 1):
                row.append(R.mul(row[-1], seq[(cls + t - 1) % k]))
            self.partial.append(row)
        self.powers = [None]
        top = (n - 1) // k
        if top >= 1:
            full = seq[0] if k == 1 else R.mul(self.partial[0][k - 1], seq[k - 1])
            self.powers.append(full)
            for _ in range(2, top + 1):
                self.powers.append(R.mul(self.powers[-1], full))
        self.cache = {}

    def get(self, p: int, length: int):
        e, t = divmod(length, self.k)
        cls = (p - 1) % self.k
        if e == 0:
            return self.partial[cls][t]
        if t == 0:
            return self.powers[e]
        key = (cls, length)
        val = self.cache.get(key)
        if val is None:
            val = self.cache[key] = self.R.mul(self.partial[cls][t], self.powers[e])
        return val


def _inverse_all(spec: KToeplitzSpec, d, with_numerators: bool) -> InverseMatrix:
    R = spec.ring
    n, k = spec.n, spec.k
    heads = _prefix_dets(R, spec, d, n)
    tails = _suffix_dets(R, spec, d)
    det = heads[n]
    inv = R.try_invert(det)
    want_num = with_numerators or inv is None
    bprod = _SpanProducts(R, spec.b, n)
    cprod = _SpanProducts(R, spec.c, n)
    mul, neg = R.mul, R.neg
    if inv is not None:
        signed_inv = (inv, neg(inv))
    # spans[cls][t] is the product of t factors starting in class cls
    bspans, cspans = {}, {}
    quo_upper, quo_lower, num_upper, num_lower, quo_diag, num_diag = [], [], [], [], [], []
    for p in range(1, n + 1):
        cls = (p - 1) % k
        width = n - p
        if cls not in bspans:
            bspans[cls] = [None] + [bprod.get(p, t) for t in range(1, width + 1)]
            cspans[cls] = [None] + [cprod.get(p, t) for t in range(1, width + 1)]
        bs, cs = bspans[cls], cspans[cls]
        # base[q - p] = D(p-1) * D_q(n-q) for q = p..n; None factors are ones
        right = [tails[n - q] for q in range(p, n)] + [None]
        if p == 1:
            base = [R.one if v is None else v for v in right]
        else:
            left = heads[p - 1]
            base = [left if v is None else mul(left, v) for v in right]
        if inv is not None:
            quo_diag.append(mul(base[0], inv))
            even, odd = signed_inv
            scaled = [mul(base[t], odd if t & 1 else even) for t in range(1, width + 1)]
            quo_upper.append([mul(v, bs[t]) for t, v in enumerate(scaled, 1)])
            quo_lower.append([mul(v, cs[t]) for t, v in enumerate(scaled, 1)])
        if want_num:
            num_diag.append(base[0])
            nb = [mul(base[t], bs[t]) for t in range(1, width + 1)]
            nc = [mul(base[t], cs[t]) for t in range(1, width + 1)]
            num_upper.append([neg(v) if t & 1 else v for t, v in enumerate(nb, 1)])
            num_lower.append([neg(v) if t & 1 else v for t, v in enumerate(nc, 1)])
    quo = _assemble(n, quo_diag, quo_upper, quo_lower) if inv is not None else None
    num = _assemble(n, num_diag, num_upper, num_lower) if want_num else None
    return InverseMatrix(n, det, quo, num)


def _assemble(n: int, diag, upper, lower) -> list:
    # upper[p][t-1] is entry (p, p+t) and lower[p][t-1] entry (p+t, p), 0-based p
    rows = []
    for i in range(n):
        row = [lower[j][i - j - 1] for j in range(i)]
        row.append(diag[i])
        row.extend(upper[i])
        rows.append(row)
    return rows


def inv_full(spec: KToeplitzSpec, with_numerators: bool = False) -> InverseMatrix:
    """Every entry from the two determinant sweeps plus batched span products.

    Falls back to :func:`inv_full_general` when ``n <= k``.
    """
    if spec.n <= spec.k:
        return inv_full_general(spec, with_numerators)
    d = off_diagonal_products(spec)
    return _inverse_all(spec, d, with_numerators)


def inv_full_general(spec: KToeplitzSpec, with_numerators: bool = False) -> InverseMatrix:
    """Every entry for ``n <= k``."""
    if spec.n > spec.k:
        raise ValueError("inv_full_general is for n <= k; use inv_full")
    R = spec.ring
    d = off_diagonal_products(spec, spec.n - 1) or [R.zero]
    return _inverse_all(spec, d, with_numerators)
