"""Characteristic polynomial, eigenvalue tests and eigenvectors.

``p(x) = det(x I - T)`` is the determinant of the k-Toeplitz matrix with
diagonal ``x - a_i`` and the same off-diagonal products ``d_i``, so the
determinant engine runs unchanged over a polynomial ring. An element
``lam`` is an eigenvalue exactly when ``p(lam)`` is a zero divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .continuant import build_table
from .determinant import det_auto, off_diagonal_products
from .fibonacci import fib_pair_dnc
from .matrix import KToeplitzSpec
from .ring import CountingRing, PolynomialRing, Ring

__all__ = [
    "CharPoly",
    "EigenPair",
    "charpoly",
    "charpoly_factored_special",
    "eigencheck",
    "eigvec_v",
    "eigvec_w",
    "eigenpair",
    "lambda_scan",
]


@dataclass(frozen=True)
class CharPoly:
    """Dense polynomial over ``base``; ``coeffs`` in ascending degree."""

    base: Ring
    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def descending(self) -> list:
        return list(reversed(self.coeffs))

    def evaluate(self, at):
        R = self.base
        acc = R.zero
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, at), c)
        return acc

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.base.eq(self.coeffs[-1], self.base.one)


@dataclass(frozen=True)
class EigenPair:
    lam: object
    z: object
    vector: Optional[tuple]


def _base_of(R: Ring) -> Ring:
    return R.inner if isinstance(R, CountingRing) else R


def _poly_spec(spec: KToeplitzSpec, poly_ring: Ring) -> KToeplitzSpec:
    P = poly_ring
    a = [P.sub(P.x, P.constant(v)) for v in spec.a]
    b = [P.constant(v) for v in spec.b]
    c = [P.constant(v) for v in spec.c]
    return KToeplitzSpec(P, spec.n, spec.k, tuple(a), tuple(b), tuple(c))


def charpoly(spec: KToeplitzSpec, poly_ring: Ring | None = None) -> CharPoly:
    """Expanded monic ``det(x I - T)`` via ``det_auto`` over ``K[x]``.

    Pass a counting wrapper around ``PolynomialRing(K)`` as ``poly_ring`` to
    tally whole-polynomial operations; forming the diagonal ``x - a_i`` adds
    ``k`` subtractions to that tally.
    """
    P = poly_ring if poly_ring is not None else PolynomialRing(_base_of(spec.ring))
    value = det_auto(_poly_spec(spec, P))
    return CharPoly(P.base, tuple(value))


def charpoly_factored_special(spec: KToeplitzSpec, poly_ring: Ring | None = None):
    """For ``n = m k + k - 1``: ``p = U_{m+1}(pi(k), d) * alpha(k-1)``.

    Both continuants are taken at the diagonal ``x - a_i``. Returns
    ``(fib_factor, alpha_factor)`` as :class:`CharPoly` values of degrees
    ``n - k + 1`` and ``k - 1``.
    """
    m, r = spec.split()
    if r != spec.k - 1:
        raise ValueError(f"factorization needs n = -1 mod k (got n={spec.n}, k={spec.k})")
    P = poly_ring if poly_ring is not None else PolynomialRing(_base_of(spec.ring))
    ps = _poly_spec(spec, P)
    d = off_diagonal_products(ps)
    table = build_table(P, ps.a, d)
    fib = fib_pair_dnc(P, table.pi_k, table.d, m + 1).u_m
    return CharPoly(P.base, tuple(fib)), CharPoly(P.base, tuple(table.alphas[spec.k - 1]))


def eigencheck(spec: KToeplitzSpec, lam):
    """``(p(lam), z)`` where ``z`` annihilates ``p(lam)`` or is ``None``."""
    R = spec.ring
    value = det_auto(spec.shifted_diagonal(lam))
    return value, R.annihilator_sample(value)


def _shifted_a(R: Ring, spec: KToeplitzSpec, lam, count: int) -> list:
    return [R.sub(lam, spec.a[i]) for i in range(min(count, spec.k))]


def _check_z(R: Ring, z, p_value):
    if R.is_zero(z):
        raise ValueError("z must be nonzero")
    if not R.is_zero(R.mul(z, p_value)):
        raise ValueError("z does not annihilate p(lambda): lambda/z is not an eigen-witness")


def eigvec_v(spec: KToeplitzSpec, lam, z, p_value=None):
    """``v_i = z * b_i ... b_{n-1} * D^{lam-a}(i-1)``, or ``None`` if all zero.

    ``p_value`` is ``p(lam)`` if the caller already has it (for instance from
    :func:`eigencheck`); otherwise it is obtained from the same recurrence at
    a cost of 3 more operations and one more ``d_i``. Given ``p_value`` the
    cost for ``n >= k + 2`` is ``5n + 2k - 7`` ring operations.
    """
    R = spec.ring
    n, k = spec.n, spec.k
    top = n if p_value is None else n - 1
    sa = _shifted_a(R, spec, lam, top)
    d = [R.mul(spec.b[i], spec.c[i]) for i in range(min(max(top - 1, 0), k))]
    dets = [R.one]
    if top >= 1:
        dets.append(sa[0])
    for t in range(2, top + 1):
        dets.append(R.sub(R.mul(sa[(t - 1) % k], dets[t - 1]), R.mul(d[(t - 2) % k], dets[t - 2])))
    _check_z(R, z, dets[n] if p_value is None else p_value)
    suffix = [None] * (n + 1)
    suffix[n] = z
    for i in range(n - 1, 0, -1):
        suffix[i] = R.mul(suffix[i + 1], spec.b_at(i))
    vec = [suffix[1]] + [R.mul(suffix[i], dets[i - 1]) for i in range(2, n + 1)]
    if all(R.is_zero(x) for x in vec):
        return None
    return tuple(vec)


def eigvec_w(spec: KToeplitzSpec, lam, z, p_value=None):
    """``w_i = z * c_1 ... c_{i-1} * D_i^{lam-a}(n-i)``, or ``None`` if all zero.

    The trailing-block determinants come from the shifted recurrence.
    """
    R = spec.ring
    n, k = spec.n, spec.k
    sa = _shifted_a(R, spec, lam, n)
    lowest = 0 if p_value is None else 1
    d = [R.mul(spec.b[i], spec.c[i]) for i in range(min(n - 1, k))]
    # tail[t] = D_{n-t}(t) for the lam-shifted seeds
    tail = [R.one, sa[(n - 1) % k]]
    for s in range(n - 2, lowest - 1, -1):
        t = n - s
        tail.append(R.sub(R.mul(sa[s % k], tail[t - 1]), R.mul(d[s % k], tail[t - 2])))
    _check_z(R, z, tail[n] if p_value is None else p_value)
    vec = []
    prefix = z
    for i in range(1, n + 1):
        if i > 1:
            prefix = R.mul(prefix, spec.c_at(i - 1))
        vec.append(prefix if i == n else R.mul(prefix, tail[n - i]))
    if all(R.is_zero(x) for x in vec):
        return None
    return tuple(vec)


def eigenpair(spec: KToeplitzSpec, lam, z=None, form: str = "v") -> EigenPair | None:
    """Eigen-witness for ``lam`` (``None`` if ``lam`` is not an eigenvalue).

    ``z`` defaults to the ring's annihilator witness of ``p(lam)``.
    """
    value, witness = eigencheck(spec, lam)
    if z is None:
        z = witness
        if z is None:
            return None
    build = eigvec_v if form == "v" else eigvec_w
    return EigenPair(lam, z, build(spec, lam, z, p_value=value))


def lambda_scan(spec: KToeplitzSpec) -> list:
    """``[(lam, p(lam), z)]`` over every residue of a ``Z/MZ`` ring."""
    R = _base_of(spec.ring)
    if not hasattr(R, "elements"):
        raise ValueError("exhaustive scan needs a finite ring")
    out = []
    for lam in R.elements():
        value, z = eigencheck(spec, lam)
        out.append((lam, value, z))
    return out
