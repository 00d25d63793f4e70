"""Continuant polynomials alpha, beta and pi evaluated at ring points.

Throughout, the polynomial variables are substituted as ``x_i <- a_i`` and
``y_i <- -d_i``, so ``alpha(r)`` is the determinant of the leading ``r x r``
block of the periodic tridiagonal matrix with diagonal ``a`` and
off-diagonal products ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ring import Ring

__all__ = [
    "ContinuantTable",
    "build_table",
    "alpha_extend",
    "rotate",
    "shifted_table",
    "continuant_def_oracle",
    "second_period_alpha",
]


@dataclass(frozen=True)
class ContinuantTable:
    """Evaluated ``alpha(0..k)``, ``beta(0..k+1)``, ``pi(k)`` and ``d``.

    ``a`` and ``dvals`` record the evaluation point (``d_1..d_k``).
    """

    k: int
    alphas: tuple
    betas: tuple
    pi_k: object
    d: object
    a: tuple
    dvals: tuple


def build_table(ring: Ring, a: Sequence, d: Sequence, d_product=None) -> ContinuantTable:
    """Build the table with the alpha and beta recurrences.

    ``d`` holds the off-diagonal products ``d_1..d_k``. The product
    ``d_1...d_k`` is obtained as ``alpha(k) beta(k) - alpha(k-1) beta(k+1)``.
    Cost: ``6k - 3`` ring operations for ``k >= 2`` and 5 for ``k = 1``;
    passing an already known ``d_product`` saves the last 3.
    """
    R = ring
    k = len(a)
    if k < 1 or len(d) != k:
        raise ValueError("a and d must have the same positive length")
    al = [R.one, a[0]]
    for r in range(1, k):
        # alpha(r+1) = x_{r+1} alpha(r) + y_r alpha(r-1)
        al.append(R.sub(R.mul(a[r], al[r]), R.mul(d[r - 1], al[r - 1])))
    be = [R.zero, R.zero, R.neg(d[k - 1])]
    for r in range(2, k + 1):
        # beta(r+1) = x_r beta(r) + y_{r-1} beta(r-1); beta(1) = 0
        if r == 2:
            be.append(R.mul(a[1], be[2]))
        else:
            be.append(R.sub(R.mul(a[r - 1], be[r]), R.mul(d[r - 2], be[r - 1])))
    pi_k = R.add(al[k], be[k])
    if d_product is None:
        det_a = R.sub(R.mul(al[k], be[k]), R.mul(al[k - 1], be[k + 1]))
    else:
        det_a = d_product
    return ContinuantTable(k, tuple(al), tuple(be), pi_k, det_a, tuple(a), tuple(d))


def alpha_extend(ring: Ring, a: Sequence, d: Sequence, n: int):
    """``alpha(n)`` past the first period, with ``x_{i+k} = x_i``.

    ``alpha(-1)`` is zero.
    """
    R = ring
    k = len(a)
    if n < -1:
        raise ValueError("n must be >= -1")
    if n == -1:
        return R.zero
    prev, cur = R.zero, R.one
    for r in range(n):
        # alpha(r+1) = a_{r+1} alpha(r) - d_r alpha(r-1); d_0 term vanishes
        if r == 0:
            prev, cur = cur, a[0]
        else:
            prev, cur = cur, R.sub(R.mul(a[r % k], cur), R.mul(d[(r - 1) % k], prev))
    return cur


def rotate(seq: Sequence, s: int) -> tuple:
    """Cyclic left rotation by ``s``; free of ring operations."""
    k = len(seq)
    s %= k
    return tuple(seq[s:]) + tuple(seq[:s])


def shifted_table(ring: Ring, a: Sequence, d: Sequence, s: int) -> ContinuantTable:
    """Table of the seeds rotated left by ``s``."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    return build_table(ring, rotate(a, s), rotate(d, s))


def second_period_alpha(ring: Ring, table: ContinuantTable, r: int):
    """``alpha(k+r) = alpha(k) alpha(r) + alpha(k-1) beta(r+1)`` in 3 operations."""
    if not 0 <= r < table.k:
        raise ValueError("need 0 <= r < k")
    R = ring
    k = table.k
    return R.add(
        R.mul(table.alphas[k], table.alphas[r]),
        R.mul(table.alphas[k - 1], table.betas[r + 1]),
    )


def _gap2_sets(positions: Sequence[int], cyclic_span: int | None = None):
    """Subsets of ``positions`` with pairwise distance >= 2.

    With ``cyclic_span = r`` the positions ``r`` and ``1`` also count as
    adjacent.
    """
    positions = list(positions)
    out = []

    def walk(start, chosen):
        out.append(tuple(chosen))
        for idx in range(start, len(positions)):
            p = positions[idx]
            if chosen and p - chosen[-1] < 2:
                continue
            if cyclic_span is not None and chosen and p == cyclic_span and chosen[0] == 1:
                continue
            chosen.append(p)
            walk(idx + 1, chosen)
            chosen.pop()

    walk(0, [])
    return out


def continuant_def_oracle(ring: Ring, kind: str, r: int, k: int, a: Sequence, d: Sequence):
    """Evaluate alpha, beta or pi from the monomial expansion.

    Every monomial is built directly: start from ``x_1 ... x_r`` and let each
    chosen index ``j`` replace the pair ``x_j x_{j+1}`` by ``y_j``. For pi the
    index ``r`` stands for ``y_k`` and consumes ``x_r`` and ``x_1``; beta
    always carries ``y_k`` in place of ``x_1`` and ``x_r`` and ranges over
    ``x_2 .. x_{r-1}``. Exponential in ``r``; meant for ``r <= 12``.
    """
    R = ring
    if len(a) != k or len(d) != k:
        raise ValueError("a and d must have length k")
    if kind not in ("alpha", "beta", "pi"):
        raise ValueError(f"unknown continuant kind {kind!r}")
    top = k + 1 if kind == "beta" else k
    if r < -1 or r > top or (r == -1 and kind != "alpha"):
        raise ValueError(f"{kind}({r}, {k}) is out of range")
    x = lambda i: a[i - 1]  # noqa: E731
    y = lambda i: R.neg(d[i - 1])  # noqa: E731

    if kind == "alpha":
        if r == -1:
            return R.zero
        variables = list(range(1, r + 1))
        choices = _gap2_sets(range(1, r))
        prefix = R.one
        y_of = y
    elif kind == "beta":
        if r < 2:
            return R.zero
        variables = list(range(2, r))
        choices = _gap2_sets(range(2, r - 1))
        prefix = y(k)
        y_of = y
    else:
        variables = list(range(1, r + 1))
        choices = _gap2_sets(range(1, r + 1), cyclic_span=r) if r >= 2 else _gap2_sets([])
        prefix = R.one
        y_of = lambda j: y(k) if j == r else y(j)  # noqa: E731

    total = R.zero
    for chosen in choices:
        consumed = set()
        term = prefix
        for j in chosen:
            nxt = 1 if (kind == "pi" and j == r) else j + 1
            consumed.update((j, nxt))
            term = R.mul(term, y_of(j))
        for i in variables:
            if i not in consumed:
                term = R.mul(term, x(i))
        total = R.add(total, term)
    return total
