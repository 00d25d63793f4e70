"""Determinants of tridiagonal k-Toeplitz matrices over any commutative ring.

Only the products ``d_i = b_i c_i`` enter a determinant, so every algorithm
first forms ``d_1..d_k`` (``k`` multiplications) and then works with
``(a, d)``. Write ``n = m k + r``; ``D(t)`` is the determinant of the leading
``t x t`` block and ``D_s(t)`` that of the ``t x t`` block starting at row
``s + 1``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .continuant import (
    ContinuantTable,
    alpha_extend,
    build_table,
    rotate,
    second_period_alpha,
)
from .fibonacci import FibPair, Mat2, fib_pair_dnc
from .matrix import KToeplitzSpec
from .ring import Ring, ring_power

__all__ = [
    "off_diagonal_products",
    "det_d1",
    "det_d1_all",
    "det_d1_shifted_all",
    "det_d2",
    "det_d3",
    "det_d3_many",
    "det_d4",
    "det_general",
    "det_reducible_factored",
    "det_auto",
    "PeriodicDeterminants",
]


def off_diagonal_products(spec: KToeplitzSpec, count: int | None = None) -> list:
    """``d_i = b_i c_i`` for ``i = 1..count`` (default ``k``), periodic."""
    R = spec.ring
    count = spec.k if count is None else count
    return [R.mul(spec.b_at(i), spec.c_at(i)) for i in range(1, count + 1)]


def _require_periodic(spec: KToeplitzSpec, name: str):
    if spec.n <= spec.k:
        raise ValueError(f"{name} needs n > k (got n={spec.n}, k={spec.k}); use det_general")


def _prefix_dets(R: Ring, spec: KToeplitzSpec, d: Sequence, upto: int) -> list:
    # D(t) = a_t D(t-1) - d_{t-1} D(t-2), D(0) = 1, D(1) = a_1
    k = len(d)
    out = [R.one, spec.a[0]]
    for t in range(2, upto + 1):
        out.append(R.sub(R.mul(spec.a_at(t), out[t - 1]), R.mul(d[(t - 2) % k], out[t - 2])))
    return out[: upto + 1]


def _suffix_dets(R: Ring, spec: KToeplitzSpec, d: Sequence) -> list:
    # out[t] = D_{n-t}(t); D_s(n-s) = a_{s+1} D_{s+1}(n-s-1) - d_{s+1} D_{s+2}(n-s-2)
    n, k = spec.n, len(d)
    out = [R.one, spec.a_at(n)]
    for s in range(n - 2, -1, -1):
        t = n - s
        out.append(R.sub(R.mul(spec.a_at(s + 1), out[t - 1]), R.mul(d[s % k], out[t - 2])))
    return out


def det_d1(spec: KToeplitzSpec):
    """Linear recurrence; exactly ``3n + k - 3`` operations."""
    return det_d1_all(spec)[-1]


def det_d1_all(spec: KToeplitzSpec) -> list:
    """``[D(0), D(1), ..., D(n)]`` in ``3n + k - 3`` operations."""
    R = spec.ring
    d = off_diagonal_products(spec)
    return _prefix_dets(R, spec, d, spec.n)


def det_d1_shifted_all(spec: KToeplitzSpec) -> list:
    """``[D_n(0), D_{n-1}(1), ..., D_0(n)]`` in ``3n + k - 3`` operations.

    Entry ``t`` is the determinant of the trailing ``t x t`` block.
    """
    R = spec.ring
    d = off_diagonal_products(spec)
    return _suffix_dets(R, spec, d)


def _mat2_pow(R: Ring, A: Mat2, e: int) -> Mat2:
    bits = bin(e)[3:]
    R.int_op(len(bits))
    acc = A
    for bit in bits:
        acc = acc.mul(R, acc)
        if bit == "1":
            acc = acc.mul(R, A)
    return acc


def det_d2(spec: KToeplitzSpec):
    """Transfer matrices: entry (1,1) of ``A_r...A_1 A^m`` with ``A = A_k...A_1``.

    ``A_i = [[a_i, -d_{i-1}], [1, 0]]`` (``d_0 = d_k``). Because the second
    row of each factor is ``(1, 0)`` a left multiplication by ``A_i`` costs 6
    operations. At most ``24 floor(log2 m) + 7k - 2`` operations.
    """
    _require_periodic(spec, "det_d2")
    R = spec.ring
    k = spec.k
    d = off_diagonal_products(spec)
    R.int_op()
    m, r = spec.split()
    prod = Mat2(spec.a[0], R.neg(d[k - 1]), R.one, R.zero)
    partial = prod if r == 1 else None
    for i in range(1, k):
        ai, di = spec.a[i], d[i - 1]
        prod = Mat2(
            R.sub(R.mul(ai, prod.e11), R.mul(di, prod.e21)),
            R.sub(R.mul(ai, prod.e12), R.mul(di, prod.e22)),
            prod.e11,
            prod.e12,
        )
        if i + 1 == r:
            partial = prod
    power = _mat2_pow(R, prod, m)
    if r == 0:
        return power.e11
    return R.add(R.mul(partial.e11, power.e11), R.mul(partial.e12, power.e21))


class PeriodicDeterminants:
    """``D(t)`` for many sizes ``t`` sharing one continuant table.

    Sizes up to ``k`` are read from the table. Larger sizes use
    ``U(m) alpha(k+r) - d U(m-1) alpha(r)`` with ``U`` evaluated at
    ``(pi(k), d)``; the Fibonacci pair and ``d U(m-1)`` are cached per
    quotient ``m``, so a further size with a known quotient costs 6
    operations.
    """

    def __init__(self, ring: Ring, table: ContinuantTable):
        self.ring = ring
        self.table = table
        self._pairs: dict[int, tuple[FibPair, object]] = {}

    @classmethod
    def from_seeds(cls, ring: Ring, a: Sequence, d: Sequence, d_product=None):
        return cls(ring, build_table(ring, a, d, d_product))

    def pair(self, m: int) -> tuple[FibPair, object]:
        if m not in self._pairs:
            R, t = self.ring, self.table
            fp = fib_pair_dnc(R, t.pi_k, t.d, m)
            self._pairs[m] = (fp, R.mul(t.d, fp.u_m_minus_1))
        return self._pairs[m]

    def det(self, size: int):
        R, t = self.ring, self.table
        k = t.k
        if size < 0:
            raise ValueError("size must be nonnegative")
        if size <= k:
            return t.alphas[size]
        R.int_op()
        m, r = divmod(size, k)
        fp, d_u = self.pair(m)
        alpha_kr = second_period_alpha(R, t, r)
        return R.sub(R.mul(fp.u_m, alpha_kr), R.mul(d_u, t.alphas[r]))


def det_d3(spec: KToeplitzSpec):
    """Fibonacci formula ``U(m) alpha(k+r) - d U(m-1) alpha(r)``.

    At most ``18 floor(log2 m) + 7k + 11`` ring operations.
    """
    _require_periodic(spec, "det_d3")
    R = spec.ring
    d = off_diagonal_products(spec)
    return PeriodicDeterminants.from_seeds(R, spec.a, d).det(spec.n)


def det_d3_many(spec: KToeplitzSpec, sizes: Iterable[int]) -> list:
    """Determinants of the leading blocks of the given sizes.

    One table build serves every size and one Fibonacci pair serves each
    distinct quotient. Sizes ``<= k`` are accepted and come for free from the
    table.
    """
    R = spec.ring
    d = off_diagonal_products(spec)
    engine = PeriodicDeterminants.from_seeds(R, spec.a, d)
    return [engine.det(s) for s in sizes]


def det_d4(spec: KToeplitzSpec):
    """Second formula ``U(m+1) alpha(r) + U(m) d' alpha_{r+1}(k-r-2)``.

    ``d' = d_k d_1 ... d_r`` is read off the table as
    ``alpha(r+1) beta(r+1) - alpha(r) beta(r+2)``. For ``r = k-1`` the second
    term vanishes and the result is ``U(m+1) alpha(k-1)``.
    """
    _require_periodic(spec, "det_d4")
    R = spec.ring
    k = spec.k
    d = off_diagonal_products(spec)
    t = build_table(R, spec.a, d)
    R.int_op()
    m, r = spec.split()
    fp = fib_pair_dnc(R, t.pi_k, t.d, m + 1)
    first = R.mul(fp.u_m, t.alphas[r])
    if r == k - 1:
        return first
    d_prime = R.sub(R.mul(t.alphas[r + 1], t.betas[r + 1]), R.mul(t.alphas[r], t.betas[r + 2]))
    tail = alpha_extend(R, rotate(spec.a, r + 1), rotate(d, r + 1), k - r - 2)
    return R.add(first, R.mul(R.mul(fp.u_m_minus_1, d_prime), tail))


def det_general(spec: KToeplitzSpec):
    """Plain tridiagonal recurrence for ``n <= k``; exactly ``4n - 3`` operations.

    All of ``d_1..d_n`` are formed even though ``d_n`` is not needed, which
    is what the operation count assumes.
    """
    if spec.n > spec.k:
        raise ValueError("det_general is for n <= k; use det_d3 or det_auto")
    R = spec.ring
    d = off_diagonal_products(spec, spec.n)
    return _prefix_dets(R, spec, d, spec.n)[-1]


def det_reducible_factored(spec: KToeplitzSpec, zero_positions: Sequence[int]):
    """Block-product formula for a matrix with known zero off-diagonal seeds.

    ``zero_positions`` are 1-based indices ``i_1 < ... < i_q <= k`` with
    ``b_{i_j} = 0`` for all ``j`` (or ``c_{i_j} = 0`` for all ``j``; the
    determinant only depends on ``a`` and ``d``, so that case is the
    transpose and is handled identically). Requires ``n > i_1``.

    With ``i_{q+1} = i_1 + k``, ``i_0 = i_q``, and ``r' = r + k, p = 0`` when
    ``r <= i_1``, else ``r' = r`` and ``i_p < r <= i_{p+1}``:

        det = alpha(i_1) * prod_j alpha_{i_j}(i_{j+1} - i_j)^(m + m_j)
              * alpha_{i_p}(r' - i_p)

    where ``m_j = 1`` if ``j < p`` else 0 for ``j < q``, and ``m_q = -1`` if
    ``p = 0`` else 0. ``p = 0`` forces ``m >= 1`` (``r <= i_1 < n``), so the
    exponent ``m - 1`` is never negative.
    """
    R = spec.ring
    k = spec.k
    pos = list(zero_positions)
    if not pos:
        raise ValueError("need at least one zero position")
    if sorted(set(pos)) != pos or pos[0] < 1 or pos[-1] > k:
        raise ValueError("zero positions must be strictly increasing within 1..k")
    in_b = all(R.is_zero(spec.b[i - 1]) for i in pos)
    in_c = all(R.is_zero(spec.c[i - 1]) for i in pos)
    if not (in_b or in_c):
        raise ValueError("every named position must be zero in b (or every one zero in c)")
    if spec.n <= pos[0]:
        raise ValueError("need n > i_1")
    q = len(pos)
    m, r = spec.split()
    d = off_diagonal_products(spec)
    idx = [pos[-1]] + pos + [pos[0] + k]  # idx[j] = i_j for j = 0..q+1

    def alpha_shift(s, size):
        return alpha_extend(R, rotate(spec.a, s), rotate(d, s), size)

    if r <= pos[0]:
        p, r_prime = 0, r + k
    else:
        r_prime = r
        p = max(j for j in range(1, q + 1) if idx[j] < r)

    result = alpha_shift(0, pos[0])
    for j in range(1, q + 1):
        if j < q:
            m_j = 1 if j < p else 0
        else:
            m_j = -1 if p == 0 else 0
        block = alpha_shift(idx[j], idx[j + 1] - idx[j])
        result = R.mul(result, ring_power(R, block, m + m_j))
    return R.mul(result, alpha_shift(idx[p], r_prime - idx[p]))


def det_auto(spec: KToeplitzSpec):
    """``det_general`` for ``n <= k``, otherwise ``det_d3``."""
    if spec.n <= spec.k:
        return det_general(spec)
    return det_d3(spec)
