"""The (never materialized) tridiagonal k-Toeplitz matrix description."""

from __future__ import annotations

from dataclasses import dataclass

from .ring import CountingRing, Ring, counted

__all__ = ["KToeplitzSpec", "count_ops"]


@dataclass(frozen=True)
class KToeplitzSpec:
    """``T^k_n(a, b, c)`` over ``ring``.

    Row ``i`` (1-based) has ``a_i`` on the diagonal, ``b_i`` to its right and
    ``c_{i-1}`` to its left, with all seeds extended periodically with period
    ``k``.
    """

    ring: Ring
    n: int
    k: int
    a: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        for name in ("a", "b", "c"):
            seq = getattr(self, name)
            if len(seq) != self.k:
                raise ValueError(f"{name} must have length k={self.k}, got {len(seq)}")
            object.__setattr__(self, name, tuple(seq))

    @classmethod
    def from_values(cls, ring: Ring, n: int, a, b, c) -> KToeplitzSpec:
        """Coerce plain values (e.g. ints) into ``ring``; ``k`` is ``len(a)``."""
        co = ring.coerce
        return cls(ring, n, len(a), tuple(co(v) for v in a), tuple(co(v) for v in b),
                   tuple(co(v) for v in c))

    def split(self) -> tuple[int, int]:
        """``(m, r)`` with ``n = m k + r`` and ``0 <= r < k``."""
        return divmod(self.n, self.k)

    def a_at(self, i: int):
        return self.a[(i - 1) % self.k]

    def b_at(self, i: int):
        return self.b[(i - 1) % self.k]

    def c_at(self, i: int):
        return self.c[(i - 1) % self.k]

    def with_ring(self, ring: Ring) -> KToeplitzSpec:
        return KToeplitzSpec(ring, self.n, self.k, self.a, self.b, self.c)

    def with_n(self, n: int) -> KToeplitzSpec:
        return KToeplitzSpec(self.ring, n, self.k, self.a, self.b, self.c)

    def with_seeds(self, a=None, b=None, c=None) -> KToeplitzSpec:
        return KToeplitzSpec(
            self.ring, self.n, self.k,
            self.a if a is None else tuple(a),
            self.b if b is None else tuple(b),
            self.c if c is None else tuple(c),
        )

    def transpose(self) -> KToeplitzSpec:
        return self.with_seeds(b=self.c, c=self.b)

    def shifted_diagonal(self, lam) -> KToeplitzSpec:
        """Seeds of ``lam I - T`` up to the off-diagonal signs.

        The returned spec has diagonal ``lam - a_i`` and the same ``b, c``;
        its determinant equals ``det(lam I - T)`` because only the products
        ``b_i c_i`` matter. Costs ``k`` subtractions in ``self.ring``.
        """
        R = self.ring
        return self.with_seeds(a=[R.sub(lam, v) for v in self.a])


def count_ops(fn, spec: KToeplitzSpec, *args, **kwargs):
    """Run ``fn(spec', *args)`` on a counting copy of ``spec``.

    Returns ``(result, OpCount)``.
    """
    inner = spec.ring.inner if isinstance(spec.ring, CountingRing) else spec.ring
    ring = counted(inner)
    result = fn(spec.with_ring(ring), *args, **kwargs)
    return result, ring.count.snapshot()

