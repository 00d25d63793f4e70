"""Operation-count measurements against closed-form bounds.

Each measurement builds a pseudo-random spec for ``(n, k)`` from a seeded
generator, runs one algorithm on a counting copy of the ring and compares
the tally with the matching formula in :mod:`ktoeplitz.bounds`.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Optional

from . import bounds
from .determinant import det_d1, det_d2, det_d3, det_general
from .inverse import inv_entry, inv_full
from .matrix import KToeplitzSpec, count_ops
from .ring import Ring, ZMod
from .spectral import eigencheck, eigvec_v

__all__ = ["BenchRow", "ALGOS", "random_spec", "measure", "run_grid"]

ALGOS = ("d1", "general", "d2", "d3", "d3-total", "eig", "entry", "inv")

# inv_full produces n^2 entries; beyond this size it is not run by default
INV_MAX_N = 1000


@dataclass(frozen=True)
class BenchRow:
    algo: str
    n: int
    k: int
    K: Optional[int]
    Z: Optional[int]
    bound: Optional[float]
    exact: bool
    ok: Optional[bool]
    note: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def _sample(R: Ring, rng: random.Random):
    if isinstance(R, ZMod):
        return rng.randrange(R.modulus)
    return R.coerce(rng.randint(-9, 9))


def random_spec(ring: Ring, n: int, k: int, rng: random.Random) -> KToeplitzSpec:
    seeds = [[_sample(ring, rng) for _ in range(k)] for _ in range(3)]
    return KToeplitzSpec(ring, n, k, *map(tuple, seeds))


def _unit_spec(ring: Ring, n: int, k: int, rng: random.Random) -> KToeplitzSpec:
    # retry until the determinant is a unit so the quotient path is exercised
    for _ in range(200):
        spec = random_spec(ring, n, k, rng)
        if ring.try_invert(det_d3(spec) if n > k else det_general(spec)) is not None:
            return spec
    return spec


def _eigen_target(ring: Ring, n: int, k: int, rng: random.Random):
    for _ in range(50):
        spec = random_spec(ring, n, k, rng)
        for _ in range(20):
            lam = _sample(ring, rng)
            value, z = eigencheck(spec, lam)
            if z is not None:
                return spec, lam, z
    return None


def _entry_indices(n: int, rng: random.Random) -> list:
    fixed = [(1, n), (n, 1), (1, 1), (n, n), (n // 2, n // 2 + 1), (2, n - 1)]
    extra = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(10)]
    return [(i, j) for i, j in fixed + extra if 1 <= i <= n and 1 <= j <= n]


def measure(algo: str, n: int, k: int, ring: Ring | None = None, seed: int = 0,
            inv_max_n: int = INV_MAX_N) -> BenchRow:
    """One bench row; ``ok`` is ``None`` when the point does not apply."""
    ring = ring if ring is not None else ZMod(101)
    rng = random.Random(f"{seed}:{algo}:{n}:{k}")
    if algo == "general":
        if n > k:
            return BenchRow(algo, n, k, None, None, None, True, None, "needs n <= k")
        _, c = count_ops(det_general, random_spec(ring, n, k, rng))
        bound = bounds.general_ops(n)
        return BenchRow(algo, n, k, c.total(), c.int_ops, bound, True, c.total() == bound)
    if algo == "d1":
        _, c = count_ops(det_d1, random_spec(ring, n, k, rng))
        bound = bounds.d1_ops(n, k)
        return BenchRow(algo, n, k, c.total(), c.int_ops, bound, True, c.total() == bound)
    if n <= k:
        return BenchRow(algo, n, k, None, None, None, False, None, "needs n > k")
    if algo == "d2":
        _, c = count_ops(det_d2, random_spec(ring, n, k, rng))
        bound = bounds.d2_bound(n, k)
        return BenchRow(algo, n, k, c.total(), c.int_ops, bound, False, c.total() <= bound)
    if algo == "d3":
        _, c = count_ops(det_d3, random_spec(ring, n, k, rng))
        bound = bounds.d3_allowed(n, k)
        return BenchRow(algo, n, k, c.total(), c.int_ops, bound, False, c.total() <= bound)
    if algo == "d3-total":
        _, c = count_ops(det_d3, random_spec(ring, n, k, rng))
        total = c.total() + c.int_ops
        bound = bounds.d3_total_allowed(n, k)
        return BenchRow(algo, n, k, total, c.int_ops, round(bound, 3), False, total <= bound,
                        "K counts ring plus integer operations")
    if algo == "eig":
        found = _eigen_target(ring, n, k, rng)
        if found is None:
            return BenchRow(algo, n, k, None, None, None, False, None, "no eigenvalue found")
        spec, lam, z = found
        _, c = count_ops(eigvec_v, spec, lam, z)
        bound = bounds.eig_bound(n, k)
        return BenchRow(algo, n, k, c.total(), c.int_ops, bound, False, c.total() <= bound)
    if algo == "entry":
        spec = _unit_spec(ring, n, k, rng)
        worst, worst_z = 0, 0
        for i, j in _entry_indices(n, rng):
            _, c = count_ops(inv_entry, spec, i, j)
            worst, worst_z = max(worst, c.total()), max(worst_z, c.int_ops)
        bound = bounds.entry_bound(n, k)
        return BenchRow(algo, n, k, worst, worst_z, bound, False, worst <= bound,
                        "worst over sampled entries")
    if algo == "inv":
        bound = bounds.inv_allowed(n, k)
        if n > inv_max_n:
            return BenchRow(algo, n, k, None, None, bound, False, None,
                            f"not run: output has n^2 = {n * n} entries")
        _, c = count_ops(inv_full, _unit_spec(ring, n, k, rng))
        return BenchRow(algo, n, k, c.total(), c.int_ops, bound, False, c.total() <= bound)
    raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGOS)}")


def run_grid(algos, ns, ks, ring: Ring | None = None, seed: int = 0,
             inv_max_n: int = INV_MAX_N) -> list:
    return [measure(a, n, k, ring, seed, inv_max_n) for a in algos for n in ns for k in ks]
