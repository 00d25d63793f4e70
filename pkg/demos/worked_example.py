"""Walk through the 19 x 19 period-3 matrix over Z/60.

Shows the continuant table, the Fibonacci values it feeds, every
determinant algorithm, the characteristic polynomial and the eigenvector
at lambda = 1.
"""

from ktoeplitz import (
    KToeplitzSpec,
    ZMod,
    build_table,
    charpoly,
    det_d1,
    det_d2,
    det_d3,
    det_d4,
    eigencheck,
    eigvec_v,
    fib_pair_dnc,
    off_diagonal_products,
)

R = ZMod(60)
spec = KToeplitzSpec.from_values(R, 19, [1, 2, 3], [1, -1, 1], [12, 7, 1])
m, r = spec.split()
print(f"n = {spec.n} = {m} * {spec.k} + {r} over Z/60")

d = off_diagonal_products(spec)
table = build_table(R, spec.a, d)
print("d_i = b_i c_i:", d)
print("alpha(0..k):", table.alphas)
print("beta(0..k+1):", table.betas)
print("pi(k) =", table.pi_k, " d = d_1...d_k =", table.d)

fp = fib_pair_dnc(R, table.pi_k, table.d, m)
print(f"U({m}) = {fp.u_m}, U({m - 1}) = {fp.u_m_minus_1}")

for fn in (det_d1, det_d2, det_d3, det_d4):
    print(f"{fn.__name__}: {fn(spec)}")

p = charpoly(spec)
print("det(xI - T), highest degree first:", p.descending())

value, z = eigencheck(spec, 1)
print(f"p(1) = {value}, witness z = {z}")
print("eigenvector at 1:", eigvec_v(spec, 1, z))
