"""Generalized Fibonacci polynomials ``U_m(x, y)`` evaluated in a ring.

``U_0 = 0``, ``U_1 = 1`` and ``U_{m+1} = x U_m - y U_{m-1}``. Three
evaluators are provided (linear recurrence, divide-and-conquer Lucas
iteration, closed-form sum) together with 2x2 matrix powers expressed
through ``U_m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ring import Ring

__all__ = [
    "FibPair",
    "Mat2",
    "fib_pair_recurrence",
    "fib_sequence",
    "fib_pair_dnc",
    "lucas_u",
    "fib_closed_form",
    "mat2_power_via_fib",
    "fib_via_eigen_sum",
]


@dataclass(frozen=True)
class FibPair:
    """``(U_m, U_{m-1})``; for ``m = 0`` the second slot holds zero."""

    u_m: object
    u_m_minus_1: object
    m: int


@dataclass(frozen=True)
class Mat2:
    e11: object
    e12: object
    e21: object
    e22: object

    def trace(self, ring: Ring):
        return ring.add(self.e11, self.e22)

    def det(self, ring: Ring):
        return ring.sub(ring.mul(self.e11, self.e22), ring.mul(self.e12, self.e21))

    def mul(self, ring: Ring, other: Mat2) -> Mat2:
        R = ring
        return Mat2(
            R.add(R.mul(self.e11, other.e11), R.mul(self.e12, other.e21)),
            R.add(R.mul(self.e11, other.e12), R.mul(self.e12, other.e22)),
            R.add(R.mul(self.e21, other.e11), R.mul(self.e22, other.e21)),
            R.add(R.mul(self.e21, other.e12), R.mul(self.e22, other.e22)),
        )

    @classmethod
    def identity(cls, ring: Ring) -> Mat2:
        return cls(ring.one, ring.zero, ring.zero, ring.one)

    def as_tuple(self):
        return (self.e11, self.e12, self.e21, self.e22)


def fib_pair_recurrence(ring: Ring, x, y, m: int) -> FibPair:
    """``(U_m, U_{m-1})`` by iterating the three-term recurrence.

    Costs exactly ``3(m-1)`` ring operations for ``m >= 1``.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    R = ring
    if m == 0:
        return FibPair(R.zero, R.zero, 0)
    prev, cur = R.zero, R.one
    for _ in range(m - 1):
        prev, cur = cur, R.sub(R.mul(x, cur), R.mul(y, prev))
    return FibPair(cur, prev, m)


def fib_sequence(ring: Ring, x, y, m: int) -> list:
    """``[U_0, U_1, ..., U_m]`` from one run of the recurrence."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    R = ring
    out = [R.zero, R.one][: m + 1]
    for _ in range(m - 1):
        out.append(R.sub(R.mul(x, out[-1]), R.mul(y, out[-2])))
    return out


def lucas_u(ring: Ring, x, y, bits: str):
    """One run of the divide-and-conquer Lucas iteration for ``U_m``.

    ``bits`` is the binary expansion of ``m >= 2`` (most significant bit
    first). Each high-loop step costs 9 ring operations and one parity check;
    operations whose results are never read again are skipped.
    """
    R = ring
    two = R.from_int(2)
    s = len(bits) - len(bits.rstrip("0"))
    top = len(bits) - 1
    u_h, v_l, v_h, q_l, q_h = R.one, two, x, R.one, R.one
    # string position i holds the bit of 2^(top-i); the loop covers top .. s+1
    for i in range(top - s):
        R.int_op()
        q_l = R.mul(q_l, q_h)
        if bits[i] == "1":
            q_h = R.mul(q_l, y)
            u_h = R.mul(u_h, v_h)
            v_l = R.sub(R.mul(v_h, v_l), R.mul(x, q_l))
            v_h = R.sub(R.mul(v_h, v_h), R.mul(two, q_h))
        else:
            q_h = q_l
            u_h = R.sub(R.mul(u_h, v_l), q_l)
            v_h = R.sub(R.mul(v_h, v_l), R.mul(x, q_l))
            v_l = R.sub(R.mul(v_l, v_l), R.mul(two, q_l))
    q_l = R.mul(q_l, q_h)
    if s == 0:
        return R.sub(R.mul(u_h, v_l), q_l)
    q_h = R.mul(q_l, y)
    u_h = R.sub(R.mul(u_h, v_l), q_l)
    v_l = R.sub(R.mul(v_h, v_l), R.mul(x, q_l))
    q_l = R.mul(q_l, q_h)
    for _ in range(s - 1):
        u_h = R.mul(u_h, v_l)
        v_l = R.sub(R.mul(v_l, v_l), R.mul(two, q_l))
        q_l = R.mul(q_l, q_l)
    return R.mul(u_h, v_l)


def fib_pair_dnc(ring: Ring, x, y, m: int) -> FibPair:
    """``(U_m, U_{m-1})`` by running the Lucas iteration for ``m`` and ``m-1``.

    At most ``18 floor(log2 m) + 7`` ring operations. Integer bookkeeping:
    ``floor(log2 m)`` divisions for the binary expansion of ``m``, one
    operation for that of ``m-1`` and one parity check per high-loop step.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    R = ring
    if m == 0:
        return FibPair(R.zero, R.zero, 0)
    if m == 1:
        return FibPair(R.one, R.zero, 1)
    bits = bin(m)[2:]
    R.int_op(len(bits) - 1)
    u_m = lucas_u(R, x, y, bits)
    if m == 2:
        return FibPair(u_m, R.one, 2)
    R.int_op()
    u_prev = lucas_u(R, x, y, bin(m - 1)[2:])
    return FibPair(u_m, u_prev, m)


def fib_closed_form(ring: Ring, x, y, m: int):
    """``sum_i (-1)^i C(m-1-i, i) x^(m-1-2i) y^i`` evaluated term by term."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    R = ring
    if m == 0:
        return R.zero
    top = (m - 1) // 2
    # x^(m-1-2i) for i = top..0 in steps of x^2, and y^i for i = 0..top
    xpow = [R.one if (m - 1) % 2 == 0 else x]
    if top:
        x2 = R.mul(x, x)
        for _ in range(top):
            xpow.append(R.mul(xpow[-1], x2))
    ypow = [R.one]
    for _ in range(top):
        ypow.append(R.mul(ypow[-1], y))
    total = R.zero
    for i, binom in enumerate(_binomial_row(m)):
        term = R.mul(R.mul(R.from_int(binom), xpow[top - i]), ypow[i])
        total = R.sub(total, term) if i % 2 else R.add(total, term)
    return total


@lru_cache(maxsize=64)
def _binomial_row(m: int) -> tuple:
    # C(m-1-i, i) for i = 0..(m-1)//2, each from the previous one
    row = [1]
    for i in range((m - 1) // 2):
        row.append(row[-1] * (m - 1 - 2 * i) * (m - 2 - 2 * i) // ((i + 1) * (m - 1 - i)))
    return tuple(row)


def _pow(R: Ring, x, e: int):
    acc = R.one
    for _ in range(e):
        acc = R.mul(acc, x)
    return acc


def mat2_power_via_fib(ring: Ring, A: Mat2, m: int) -> Mat2:
    """``A^m = U_m A - det(A) U_{m-1} I`` with ``U`` taken at ``(tr A, det A)``."""
    if m < 1:
        raise ValueError("m must be positive")
    R = ring
    t = A.trace(R)
    dt = A.det(R)
    pair = fib_pair_dnc(R, t, dt, m)
    u, w = pair.u_m, R.mul(dt, pair.u_m_minus_1)
    return Mat2(
        R.sub(R.mul(u, A.e11), w),
        R.mul(u, A.e12),
        R.mul(u, A.e21),
        R.sub(R.mul(u, A.e22), w),
    )


def fib_via_eigen_sum(ring: Ring, lambda1, lambda2, m: int):
    """``sum_{i=0}^{m-1} lambda1^i lambda2^(m-1-i)``, which is ``U_m(l1+l2, l1*l2)``."""
    if m < 1:
        raise ValueError("m must be positive")
    R = ring
    total = R.zero
    for i in range(m):
        total = R.add(total, R.mul(_pow(R, lambda1, i), _pow(R, lambda2, m - 1 - i)))
    return total
