"""Scan every residue of Z/60 for eigenvalues of the worked matrix.

lambda is an eigenvalue exactly when p(lambda) is a zero divisor. For each
one the two eigenvector constructions are checked against T v = lambda v.
"""

from ktoeplitz import KToeplitzSpec, ZMod, eigvec_v, eigvec_w, lambda_scan
from ktoeplitz.oracle import dense_materialize, matvec

R = ZMod(60)
spec = KToeplitzSpec.from_values(R, 19, [1, 2, 3], [1, -1, 1], [12, 7, 1])
T = dense_materialize(spec)

non = []
for lam, value, z in lambda_scan(spec):
    if z is None:
        non.append(lam)
        continue
    for build in (eigvec_v, eigvec_w):
        vec = build(spec, lam, z, p_value=value)
        if vec is None:
            print(f"lambda={lam:2} z={z:2} {build.__name__}: all zero")
            continue
        ok = matvec(R, T, vec) == [R.mul(lam, v) for v in vec]
        print(f"lambda={lam:2} z={z:2} {build.__name__}: T v = lambda v is {ok}")

print("not eigenvalues:", non)
