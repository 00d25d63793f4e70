"""Single inverse entries versus the whole inverse.

An entry needs two continuant tables and a few Fibonacci pairs, so it is
cheap even when n is huge. The full inverse is n^2 entries and is only
built for a small matrix here, then checked against T X = I.
"""

from ktoeplitz import KToeplitzSpec, ZMod, count_ops, inv_entry, inv_full
from ktoeplitz.oracle import DenseMatrix, dense_materialize, matmul

R = ZMod(60)
spec = KToeplitzSpec.from_values(R, 19, [1, 2, 3], [1, -1, 1], [12, 7, 1])

e = inv_entry(spec, 5, 11)
print(f"entry (5, 11): numerator {e.numerator}, det {e.det}, quotient {e.quotient}")

X = inv_full(spec)
T = dense_materialize(spec)
prod = matmul(R, T, DenseMatrix.from_rows(X.quotients))
print("T X is the identity:", all(
    prod.entry(i, j) == (1 if i == j else 0) for i in range(1, 20) for j in range(1, 20)
))

big = spec.with_ring(ZMod(101)).with_n(10**12)
entry, ops = count_ops(inv_entry, big, 3, 10**12 - 7)
print(f"n = 10^12, entry (3, n-7) = {entry.quotient} using {ops.total()} ring operations")

# a determinant that is not a unit keeps the exact numerators
singular = KToeplitzSpec.from_values(ZMod(60), 4, [2, 4], [1, 1], [2, 0])
S = inv_full(singular)
print(f"det {S.det} is not a unit; quotients: {S.quotients}; numerators row 1: {S.numerators[0]}")
