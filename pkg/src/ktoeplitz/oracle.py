"""Brute-force reference implementations used to check the fast algorithms.

Nothing here calls into the recurrence-based modules: matrices are
materialized densely and determinants come from cofactor expansion and
explicit matrix products. Costs are exponential or cubic, so sizes are
capped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ring import Ring

__all__ = [
    "DenseMatrix",
    "dense_materialize",
    "det_laplace",
    "adjugate_inverse",
    "matvec",
    "matmul",
    "mat_power_naive",
    "block_det_check",
    "charpoly_laplace",
]

LAPLACE_MAX = 12
ADJUGATE_MAX = 8


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major ``n x n`` matrix; ``rows[i][j]`` is entry ``(i+1, j+1)``."""

    n: int
    rows: tuple

    def entry(self, i: int, j: int):
        return self.rows[i - 1][j - 1]

    @classmethod
    def from_rows(cls, rows) -> DenseMatrix:
        rows = tuple(tuple(r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        return cls(len(rows), rows)


def dense_materialize(spec) -> DenseMatrix:
    """Place ``a``, ``b``, ``c`` periodically on the three diagonals."""
    R = spec.ring
    n, k = spec.n, spec.k
    rows = [[R.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = spec.a[i % k]
        if i + 1 < n:
            rows[i][i + 1] = spec.b[i % k]
            rows[i + 1][i] = spec.c[i % k]
    return DenseMatrix.from_rows(rows)


def _minor(rows, drop_row: int, drop_col: int):
    return [
        [v for j, v in enumerate(row) if j != drop_col]
        for i, row in enumerate(rows)
        if i != drop_row
    ]


def _laplace(R: Ring, rows):
    n = len(rows)
    if n == 0:
        return R.one
    if n == 1:
        return rows[0][0]
    total = R.zero
    for j, v in enumerate(rows[0]):
        if R.is_zero(v):
            continue
        term = R.mul(v, _laplace(R, _minor(rows, 0, j)))
        total = R.sub(total, term) if j % 2 else R.add(total, term)
    return total


def det_laplace(ring: Ring, M: DenseMatrix):
    """First-row cofactor expansion (skipping zero entries)."""
    if M.n > LAPLACE_MAX:
        raise ValueError(f"det_laplace is capped at n <= {LAPLACE_MAX}")
    return _laplace(ring, [list(r) for r in M.rows])


def adjugate_inverse(ring: Ring, M: DenseMatrix):
    """``(adj(M), det(M))`` with ``adj[s][r] = (-1)^(r+s) det(minor(r, s))``."""
    if M.n > ADJUGATE_MAX:
        raise ValueError(f"adjugate_inverse is capped at n <= {ADJUGATE_MAX}")
    R = ring
    n = M.n
    rows = [list(r) for r in M.rows]
    adj = [[R.zero] * n for _ in range(n)]
    for r in range(n):
        for s in range(n):
            cof = _laplace(R, _minor(rows, r, s))
            adj[s][r] = R.neg(cof) if (r + s) % 2 else cof
    return DenseMatrix.from_rows(adj), _laplace(R, rows)


def matvec(ring: Ring, M: DenseMatrix, v: Sequence) -> list:
    R = ring
    out = []
    for row in M.rows:
        acc = R.zero
        for x, y in zip(row, v):
            acc = R.add(acc, R.mul(x, y))
        out.append(acc)
    return out


def matmul(ring: Ring, A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    R = ring
    n = A.n
    cols = list(zip(*B.rows))
    rows = []
    for row in A.rows:
        out = []
        for col in cols:
            acc = R.zero
            for x, y in zip(row, col):
                acc = R.add(acc, R.mul(x, y))
            out.append(acc)
        rows.append(out)
    return DenseMatrix(n, tuple(tuple(r) for r in rows))


def mat_power_naive(ring: Ring, A, m: int):
    """``A^m`` for a 2x2 matrix given as ``(e11, e12, e21, e22)`` by ``m-1`` products."""
    R = ring
    if m < 1:
        raise ValueError("m must be positive")
    a11, a12, a21, a22 = A
    p11, p12, p21, p22 = A
    for _ in range(m - 1):
        p11, p12, p21, p22 = (
            R.add(R.mul(p11, a11), R.mul(p12, a21)),
            R.add(R.mul(p11, a12), R.mul(p12, a22)),
            R.add(R.mul(p21, a11), R.mul(p22, a21)),
            R.add(R.mul(p21, a12), R.mul(p22, a22)),
        )
    return (p11, p12, p21, p22)


def block_det_check(ring: Ring, M: DenseMatrix, partition: Sequence[int]):
    """Product of diagonal-block determinants for a block-triangular ``M``.

    ``partition`` lists block sizes summing to ``n``. The blocks above (or
    all blocks below) the diagonal must vanish, which is verified first.
    """
    R = ring
    if sum(partition) != M.n or any(s < 1 for s in partition):
        raise ValueError("partition must be positive sizes summing to n")
    starts = [0]
    for s in partition:
        starts.append(starts[-1] + s)
    block_of = []
    for bi, s in enumerate(partition):
        block_of.extend([bi] * s)
    upper_zero = all(
        R.is_zero(M.rows[i][j])
        for i in range(M.n) for j in range(M.n) if block_of[j] > block_of[i]
    )
    lower_zero = all(
        R.is_zero(M.rows[i][j])
        for i in range(M.n) for j in range(M.n) if block_of[j] < block_of[i]
    )
    if not (upper_zero or lower_zero):
        raise ValueError("matrix is not block triangular for this partition")
    total = R.one
    for bi in range(len(partition)):
        lo, hi = starts[bi], starts[bi + 1]
        block = DenseMatrix.from_rows([row[lo:hi] for row in M.rows[lo:hi]])
        total = R.mul(total, det_laplace(R, block))
    return total


def charpoly_laplace(poly_ring, spec) -> tuple:
    """``det(x I - T)`` by cofactor expansion over a polynomial ring."""
    P = poly_ring
    M = dense_materialize(spec)
    rows = []
    for i, row in enumerate(M.rows):
        out = []
        for j, v in enumerate(row):
            c = P.constant(P.base.neg(v))
            out.append(P.add(P.x, c) if i == j else c)
        rows.append(out)
    return det_laplace(P, DenseMatrix.from_rows(rows))
