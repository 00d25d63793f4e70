"""Commutative unital rings with exact arithmetic.

Every algorithm in the package talks to its ring through the small method
surface defined by :class:`Ring` (``add``, ``sub``, ``neg``, ``mul``, ...), so
the same code runs over the integers, over ``Z/MZ`` and over polynomial rings,
and can be instrumented by wrapping the ring in a :class:`CountingRing`.

Elements are plain immutable Python values: ``int`` for the integers and for
``Z/MZ`` (canonical representative in ``[0, M)``), and tuples of base
elements for polynomials (ascending degree, no trailing zeros).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "Ring",
    "IntegerRing",
    "ZMod",
    "PolynomialRing",
    "CountingRing",
    "OpCount",
    "counted",
    "ring_power",
    "ring_from_json",
    "ring_to_json",
]


class Ring:
    """Interface shared by all concrete rings."""

    kind = "abstract"

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def eq(self, x, y) -> bool:
        return x == y

    def is_zero(self, x) -> bool:
        return self.eq(x, self.zero)

    def from_int(self, n: int):
        """Canonical image of the integer ``n``."""
        raise NotImplementedError

    def coerce(self, value):
        """Turn a user-supplied value (usually an ``int``) into an element."""
        return self.from_int(value)

    def try_invert(self, x):
        """Return the inverse of ``x`` or ``None`` if ``x`` is not a unit."""
        return None

    def annihilator_sample(self, x):
        """Return some nonzero ``z`` with ``z*x == 0``, or ``None``."""
        return self.one if self.is_zero(x) else None

    def int_op(self, count: int = 1) -> None:
        """Record integer bookkeeping work (binary expansions, parity checks).

        Plain rings ignore it; :class:`CountingRing` tallies it.
        """

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"{type(self).__name__}()"


class IntegerRing(Ring):
    """Arbitrary-precision integers."""

    kind = "integer"

    zero = 0
    one = 1

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def from_int(self, n):
        return int(n)

    def try_invert(self, x):
        return x if x in (1, -1) else None

    def annihilator_sample(self, x):
        return 1 if x == 0 else None

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("integer")


class ZMod(Ring):
    """The ring ``Z/MZ`` with canonical representatives in ``[0, M)``."""

    kind = "zmod"

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.modulus = int(modulus)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return (x + y) % self.modulus

    def sub(self, x, y):
        return (x - y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def mul(self, x, y):
        return x * y % self.modulus

    def from_int(self, n):
        return int(n) % self.modulus

    def try_invert(self, x):
        if gcd(x, self.modulus) != 1:
            return None
        return pow(x, -1, self.modulus)

    def annihilator_sample(self, x):
        g = gcd(x, self.modulus)
        if g == 1:
            return None
        return self.modulus // g

    def elements(self):
        return range(self.modulus)

    def __eq__(self, other):
        return isinstance(other, ZMod) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("zmod", self.modulus))

    def __repr__(self):
        return f"ZMod({self.modulus})"


class PolynomialRing(Ring):
    """Dense univariate polynomials over ``base``.

    An element is a tuple ``(c0, c1, ..., cd)`` meaning ``c0 + c1 x + ... +
    cd x^d`` with ``cd != 0``; the zero polynomial is ``()``.
    """

    kind = "poly"

    def __init__(self, base: Ring):
        self.base = base

    def _trim(self, coeffs):
        base = self.base
        end = len(coeffs)
        while end and base.is_zero(coeffs[end - 1]):
            end -= 1
        return tuple(coeffs[:end])

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (self.base.one,)

    @property
    def x(self):
        """The indeterminate."""
        return (self.base.zero, self.base.one)

    def constant(self, c):
        return self._trim((c,))

    def add(self, p, q):
        base = self.base
        if len(p) < len(q):
            p, q = q, p
        out = list(p)
        for i, c in enumerate(q):
            out[i] = base.add(out[i], c)
        return self._trim(out)

    def neg(self, p):
        return tuple(self.base.neg(c) for c in p)

    def sub(self, p, q):
        base = self.base
        n = max(len(p), len(q))
        out = []
        for i in range(n):
            a = p[i] if i < len(p) else base.zero
            b = q[i] if i < len(q) else base.zero
            out.append(base.sub(a, b))
        return self._trim(out)

    def mul(self, p, q):
        if not p or not q:
            return ()
        base = self.base
        out = [base.zero] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if base.is_zero(a):
                continue
            for j, b in enumerate(q):
                out[i + j] = base.add(out[i + j], base.mul(a, b))
        return self._trim(out)

    def from_int(self, n):
        return self.constant(self.base.from_int(n))

    def coerce(self, value):
        if isinstance(value, (tuple, list)):
            return self._trim([self.base.coerce(c) for c in value])
        return self.constant(self.base.coerce(value))

    def degree(self, p) -> int:
        """Degree of ``p``; ``-1`` for the zero polynomial."""
        return len(p) - 1

    def evaluate(self, p, at):
        """Horner evaluation of ``p`` at a base-ring element."""
        base = self.base
        acc = base.zero
        for c in reversed(p):
            acc = base.add(base.mul(acc, at), c)
        return acc

    def try_invert(self, p):
        # Only unit constants are recognised as units.
        if len(p) != 1:
            return None
        inv = self.base.try_invert(p[0])
        return None if inv is None else (inv,)

    def annihilator_sample(self, p):
        if not p:
            return self.one
        # McCoy: a zero divisor of R[x] is killed by a nonzero constant.
        if isinstance(self.base, ZMod):
            g = self.base.modulus
            for c in p:
                g = gcd(g, c)
            if g == 1:
                return None
            return (self.base.modulus // g,)
        return None

    def format(self, p) -> str:
        return "[" + ", ".join(self.base.format(c) for c in reversed(p)) + "]"

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.base == self.base

    def __hash__(self):
        return hash(("poly", self.base))

    def __repr__(self):
        return f"PolynomialRing({self.base!r})"


@dataclass(slots=True)
class OpCount:
    """Tally of ring operations (``adds``..``divs``) and integer bookkeeping.

    ``try_invert`` counts as one division.
    """

    adds: int = 0
    subs: int = 0
    muls: int = 0
    divs: int = 0
    int_ops: int = 0

    def total(self) -> int:
        return self.adds + self.subs + self.muls + self.divs

    def reset(self) -> None:
        self.adds = self.subs = self.muls = self.divs = self.int_ops = 0

    def snapshot(self) -> OpCount:
        return OpCount(self.adds, self.subs, self.muls, self.divs, self.int_ops)

    def __sub__(self, other: OpCount) -> OpCount:
        return OpCount(
            self.adds - other.adds,
            self.subs - other.subs,
            self.muls - other.muls,
            self.divs - other.divs,
            self.int_ops - other.int_ops,
        )

    def as_dict(self) -> dict:
        return {"K": self.total(), "Z": self.int_ops}


class CountingRing(Ring):
    """Transparent wrapper that counts every arithmetic call on ``inner``.

    Equality tests, constants and coercions are free. A wrapped polynomial
    ring counts whole-polynomial operations, one per call.
    """

    def __init__(self, inner: Ring):
        if isinstance(inner, CountingRing):
            inner = inner.inner
        self.inner = inner
        self.count = OpCount()
        self._add, self._sub, self._neg, self._mul = inner.add, inner.sub, inner.neg, inner.mul

    @property
    def kind(self):
        return self.inner.kind

    @property
    def zero(self):
        return self.inner.zero

    @property
    def one(self):
        return self.inner.one

    def add(self, x, y):
        self.count.adds += 1
        return self._add(x, y)

    def sub(self, x, y):
        self.count.subs += 1
        return self._sub(x, y)

    def neg(self, x):
        # negation is a subtraction from zero
        self.count.subs += 1
        return self._neg(x)

    def mul(self, x, y):
        self.count.muls += 1
        return self._mul(x, y)

    def eq(self, x, y):
        return self.inner.eq(x, y)

    def is_zero(self, x):
        return self.inner.is_zero(x)

    def from_int(self, n):
        return self.inner.from_int(n)

    def coerce(self, value):
        return self.inner.coerce(value)

    def try_invert(self, x):
        self.count.divs += 1
        return self.inner.try_invert(x)

    def annihilator_sample(self, x):
        return self.inner.annihilator_sample(x)

    def int_op(self, count=1):
        self.count.int_ops += count

    def format(self, x):
        return self.inner.format(x)

    def __getattr__(self, name):
        # Forward ring-specific helpers (modulus, base, evaluate, ...).
        return getattr(self.inner, name)

    def __repr__(self):
        return f"CountingRing({self.inner!r})"


def counted(ring: Ring) -> CountingRing:
    """Wrap ``ring`` so that its arithmetic is tallied in ``.count``."""
    return CountingRing(ring)


def ring_power(ring: Ring, x, e: int):
    """``x**e`` by left-to-right square-and-multiply.

    Uses at most ``2*floor(log2 e)`` multiplications and ``floor(log2 e)``
    integer operations (one per bit below the leading one).
    """
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if e == 0:
        return ring.one
    bits = bin(e)[3:]
    ring.int_op(len(bits))
    acc = x
    for bit in bits:
        acc = ring.mul(acc, acc)
        if bit == "1":
            acc = ring.mul(acc, x)
    return acc


def ring_from_json(obj: dict) -> Ring:
    kind = obj.get("kind")
    if kind == "integer":
        return IntegerRing()
    if kind == "zmod":
        modulus = obj.get("modulus")
        if not isinstance(modulus, int) or isinstance(modulus, bool):
            raise ValueError("zmod ring needs an integer 'modulus'")
        return ZMod(modulus)
    raise ValueError(f"unknown ring kind: {kind!r}")


def ring_to_json(ring: Ring) -> dict:
    if isinstance(ring, CountingRing):
        ring = ring.inner
    if isinstance(ring, IntegerRing):
        return {"kind": "integer"}
    if isinstance(ring, ZMod):
        return {"kind": "zmod", "modulus": ring.modulus}
    raise ValueError(f"ring {ring!r} has no wire form")
