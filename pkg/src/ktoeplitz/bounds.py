"""Closed-form operation-count bounds, as functions of ``(n, k)``.

``lg(m)`` is ``floor(log2 m)`` (0 for ``m < 2``). The ``*_allowed`` helpers
add the slack this package uses when comparing measurements.
"""

from __future__ import annotations

import math

__all__ = [
    "lg",
    "d1_ops",
    "general_ops",
    "d2_bound",
    "d3_bound",
    "d3_allowed",
    "d3_total_allowed",
    "eig_bound",
    "entry_bound",
    "inv_bound",
    "inv_allowed",
    "geninv_bound",
    "genentry_bound",
]

ENTRY_SLACK = 0
INV_SLACK = 8
D3_TOTAL_SLACK = 40


def lg(m: int) -> int:
    return m.bit_length() - 1 if m >= 1 else 0


def d1_ops(n: int, k: int) -> int:
    return 3 * n + k - 3


def general_ops(n: int) -> int:
    return 4 * n - 3


def d2_bound(n: int, k: int) -> int:
    return 24 * lg(n // k) + 7 * k + 6


def d3_bound(n: int, k: int) -> int:
    return 18 * lg(n // k) + 7 * k + 12


def d3_allowed(n: int, k: int) -> int:
    # the constant 2 in the Lucas doubling step is counted as a multiplication
    return d3_bound(n, k) + 2 * lg(n // k)


def d3_total_allowed(n: int, k: int) -> float:
    """Bound on ring plus integer operations for D3: ``21 log2(n/k) + 7k + 40``."""
    return 21 * math.log2(n / k) + 7 * k + D3_TOTAL_SLACK


def eig_bound(n: int, k: int) -> int:
    return 6 * n + k - 8


def entry_bound(n: int, k: int) -> int:
    return 56 * lg(n // k) + 14 * k + 32 + ENTRY_SLACK


def inv_bound(n: int, k: int) -> float:
    m = n // k
    return 5 * n * n / 2 + 2 * k * k * m + 17 * n / 2 - 4 * m * k + 4 * m + k - 8


def inv_allowed(n: int, k: int) -> float:
    return inv_bound(n, k) + INV_SLACK


def genentry_bound(n: int) -> int:
    return 7 * n - 5


def geninv_bound(n: int) -> float:
    return 7 * n * n / 2 + 13 * n / 2 - 3
