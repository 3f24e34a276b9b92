"""Exact commutative rings, ideals, excision algebras and ring homomorphisms.

Ring objects are immutable descriptors.  They operate on bare *payloads*
(Python ints, Fractions, tuples) so that the matrix kernels can run on raw
values; :class:`Elem` wraps a payload together with its ring for callers who
prefer operator syntax.

Payload conventions
-------------------
==================  =====================================================
Integers            ``int``
Rationals           ``fractions.Fraction``
IntegersMod(m)      ``int`` in ``[0, m)``
Polynomial          tuple of base payloads, no trailing zeros (``()`` is 0)
Localized(R, f)     ``(numerator, k)`` meaning ``numerator / f**k``
QuotientEuclidean   reduced base payload
Excision(R, I)      ``(r, i)`` with ``i`` in ``I``
Double(R, I)        ``(a, b)`` with ``a - b`` in ``I``
==================  =====================================================
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Any, Optional, Sequence

from .errors import (
    CertificateRequired,
    DescriptorMismatch,
    NotADomain,
    NotAUnit,
    NotDivisible,
    NotEnumerable,
    NotEuclidean,
    QuotientNotComputable,
)

__all__ = [
    "Ring", "Integers", "Rationals", "IntegersMod", "Polynomial", "Localized",
    "QuotientEuclidean", "ZeroRing", "Excision", "Double", "Ideal", "Elem",
    "RingHom", "IdentityHom", "EvalAt", "ResidueMod", "LocalizationInclusion",
    "ConstantInclusion", "ProjectPi", "BarSplit", "CanonicalInclusion",
    "DoubleU", "DoubleV", "ExcisionLocalizationIso", "ZZ", "QQ",
    "ring_arith", "unit_inverse", "exact_divide", "ideal_member", "double_iso",
    "unit_kernel_C", "quotient_ring", "split_ideal",
]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


class Ring:
    """Common interface; concrete rings override what they support."""

    is_field = False
    is_domain = False
    is_euclidean = False
    #: exact_div is a total decision procedure (raises NotDivisible when needed)
    has_exact_division = False
    #: ideal membership decidable via a gcd of the generators
    gcd_membership = False

    # -- basic arithmetic -------------------------------------------------
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def is_one(self, a) -> bool:
        return self.eq(a, self.one)

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def coerce(self, x):
        """Accept ints, Elems of this ring, or payloads; return a canonical payload."""
        if isinstance(x, Elem):
            if x.ring != self:
                raise DescriptorMismatch(f"{x.ring} is not {self}")
            return x.value
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return self.from_int(x)
        return self.canon(x)

    def canon(self, a):
        return a

    def __call__(self, x) -> "Elem":
        return Elem(self, self.coerce(x))

    # -- units and division -------------------------------------------------
    def is_unit(self, a) -> bool:
        try:
            self.inv(a)
        except NotAUnit:
            return False
        return True

    def inv(self, a):
        raise NotAUnit(f"{self.fmt(a)} in {self}")

    def is_nilpotent(self, a) -> bool:
        return self.is_zero(a)

    def exact_div(self, a, b):
        if not self.is_domain:
            raise NotADomain(str(self))
        if self.is_field:
            if self.is_zero(b):
                raise NotDivisible(f"{self.fmt(a)} / 0")
            return self.mul(a, self.inv(b))
        raise NotDivisible(f"no exact division in {self}")

    def divides(self, b, a) -> bool:
        try:
            self.exact_div(a, b)
        except NotDivisible:
            return False
        return True

    # -- Euclidean structure ------------------------------------------------
    def divmod(self, a, b):
        raise NotEuclidean(str(self))

    def norm(self, a) -> int:
        raise NotEuclidean(str(self))

    def normalize_associate(self, a):
        """Preferred associate used for gcds (nonnegative, monic, ...)."""
        return a

    def xgcd(self, a, b):
        """Return ``(g, s, t)`` with ``s*a + t*b == g``, ``g`` a normalized gcd."""
        if not self.is_euclidean:
            raise NotEuclidean(str(self))
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while not self.is_zero(r1):
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        g = self.normalize_associate(r0)
        if not self.eq(g, r0) and not self.is_zero(r0):
            c = self.exact_div(g, r0)
            s0, t0 = self.mul(s0, c), self.mul(t0, c)
        return g, s0, t0

    def gcd(self, a, b):
        return self.xgcd(a, b)[0]

    # -- presentation -------------------------------------------------------
    def fmt(self, a) -> str:
        return str(a)

    def random(self, rng, height: int = 9):
        return self.from_int(rng.randint(-height, height))

    def random_unit(self, rng, height: int = 9):
        for _ in range(1000):
            x = self.random(rng, height)
            if self.is_unit(x):
                return x
        return self.one


# ---------------------------------------------------------------------------
# concrete rings


@dataclass(frozen=True)
class Integers(Ring):
    is_domain = True
    is_euclidean = True
    has_exact_division = True
    gcd_membership = True

    zero = 0
    one = 1
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    def from_int(self, n):
        return int(n)

    def canon(self, a):
        if isinstance(a, Fraction):
            if a.denominator != 1:
                raise DescriptorMismatch(f"{a} is not an integer")
            return int(a.numerator)
        return int(a)

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a in (1, -1):
            return a
        raise NotAUnit(f"{a} in Z")

    def exact_div(self, a, b):
        if b == 0:
            raise NotDivisible(f"{a} / 0")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{a} / {b}")
        return q

    def divmod(self, a, b):
        return divmod(a, b)

    def norm(self, a):
        return abs(a)

    def normalize_associate(self, a):
        return abs(a)

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class Rationals(Ring):
    is_field = True
    is_domain = True
    is_euclidean = True
    has_exact_division = True
    gcd_membership = True

    zero = Fraction(0)
    one = Fraction(1)
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    def from_int(self, n):
        return Fraction(n)

    def canon(self, a):
        return Fraction(a)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 in Q")
        return 1 / a

    def divmod(self, a, b):
        return a / b, Fraction(0)

    def norm(self, a):
        return 0 if a == 0 else 1

    def normalize_associate(self, a):
        return Fraction(0) if a == 0 else Fraction(1)

    def fmt(self, a):
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def random(self, rng, height=9):
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class IntegersMod(Ring):
    modulus: int
    gcd_membership = True

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")

    @property
    def is_field(self):
        return _is_prime(self.modulus)

    is_domain = is_euclidean = has_exact_division = is_field

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, n):
        return int(n) % self.modulus

    def canon(self, a):
        return int(a) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def is_unit(self, a):
        return math.gcd(a, self.modulus) == 1

    def inv(self, a):
        if math.gcd(a, self.modulus) != 1:
            raise NotAUnit(f"{a} mod {self.modulus}")
        return pow(a, -1, self.modulus)

    def is_nilpotent(self, a):
        return pow(a, self.modulus.bit_length(), self.modulus) == 0

    def divmod(self, a, b):
        if not self.is_field:
            raise NotEuclidean(str(self))
        return self.mul(a, self.inv(b)), 0

    def norm(self, a):
        return 0 if a == 0 else 1

    def normalize_associate(self, a):
        return 0 if a == 0 else 1

    def units(self):
        return [u for u in range(self.modulus) if math.gcd(u, self.modulus) == 1]

    def random(self, rng, height=9):
        return rng.randrange(self.modulus)

    def __str__(self):
        return f"Zmod {self.modulus}"


@dataclass(frozen=True)
class ZeroRing(Ring):
    """The quotient R/R; only used as the target of a residue map."""

    zero = 0
    one = 0

    def from_int(self, n):
        return 0

    def canon(self, a):
        return 0

    def add(self, a, b):
        return 0

    mul = sub = add

    def neg(self, a):
        return 0

    def is_unit(self, a):
        return True

    def inv(self, a):
        return 0

    def reduce(self, x):
        return 0

    def __str__(self):
        return "zero"


@dataclass(frozen=True)
class Polynomial(Ring):
    base: Ring
    var: str = "X"

    @property
    def is_domain(self):
        return self.base.is_domain

    @property
    def is_euclidean(self):
        return self.base.is_field

    @property
    def has_exact_division(self):
        return self.base.is_domain and self.base.has_exact_division

    @property
    def gcd_membership(self):
        return self.base.is_field

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return self.trim((self.base.one,))

    def trim(self, coeffs):
        coeffs = list(coeffs)
        bz = self.base.is_zero
        while coeffs and bz(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def from_int(self, n):
        return self.trim((self.base.from_int(n),))

    def canon(self, a):
        if isinstance(a, (list, tuple)):
            return self.trim(self.base.coerce(c) for c in a)
        return self.trim((self.base.coerce(a),))

    def constant(self, c):
        return self.trim((c,))

    def x(self):
        return self.trim((self.base.zero, self.base.one))

    def eq(self, a, b):
        if len(a) != len(b):
            return False
        beq = self.base.eq
        return all(beq(x, y) for x, y in zip(a, b))

    def is_zero(self, a):
        return len(a) == 0

    def add(self, a, b):
        z = self.base.zero
        badd = self.base.add
        return self.trim(badd(x, y) for x, y in zip_longest(a, b, fillvalue=z))

    def sub(self, a, b):
        z = self.base.zero
        bsub = self.base.sub
        return self.trim(bsub(x, y) for x, y in zip_longest(a, b, fillvalue=z))

    def neg(self, a):
        bneg = self.base.neg
        return tuple(bneg(x) for x in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        base = self.base
        badd, bmul = base.add, base.mul
        out = [base.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = badd(out[i + j], bmul(x, y))
        return self.trim(out)

    def scale(self, c, a):
        bmul = self.base.mul
        return self.trim(bmul(c, x) for x in a)

    def degree(self, a) -> int:
        return len(a) - 1

    def evaluate(self, a, point):
        base = self.base
        acc = base.zero
        for c in reversed(a):
            acc = base.add(base.mul(acc, point), c)
        return acc

    def is_nilpotent(self, a):
        return all(self.base.is_nilpotent(c) for c in a)

    def is_unit(self, a):
        if not a or not self.base.is_unit(a[0]):
            return False
        return all(self.base.is_nilpotent(c) for c in a[1:])

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{self.fmt(a)} in {self}")
        c0inv = self.base.inv(a[0])
        if len(a) == 1:
            return (c0inv,)
        # a = c0 (1 + N) with N nilpotent: sum the finite geometric series
        n = self.scale(c0inv, a)
        nil = self.sub(n, self.one)
        term, total = self.one, self.one
        minus_nil = self.neg(nil)
        for _ in range(4096):
            term = self.mul(term, minus_nil)
            if not term:
                return self.scale(c0inv, total)
            total = self.add(total, term)
        raise NotAUnit(f"{self.fmt(a)} in {self}")

    def divmod(self, a, b):
        if not self.base.is_field:
            raise NotEuclidean(str(self))
        if not b:
            raise NotDivisible("division by zero polynomial")
        base = self.base
        lead_inv = base.inv(b[-1])
        rem = list(a)
        q = [base.zero] * max(len(a) - len(b) + 1, 0)
        while len(rem) >= len(b) and rem:
            shift = len(rem) - len(b)
            c = base.mul(rem[-1], lead_inv)
            q[shift] = c
            for k, bc in enumerate(b):
                rem[shift + k] = base.sub(rem[shift + k], base.mul(c, bc))
            rem = list(self.trim(rem))
        return self.trim(q), self.trim(rem)

    def exact_div(self, a, b):
        if not self.is_domain:
            raise NotADomain(str(self))
        if not b:
            raise NotDivisible("division by zero polynomial")
        base = self.base
        rem = list(a)
        q = [base.zero] * max(len(a) - len(b) + 1, 0)
        while rem:
            shift = len(rem) - len(b)
            if shift < 0:
                raise NotDivisible(f"{self.fmt(a)} / {self.fmt(b)}")
            c = base.exact_div(rem[-1], b[-1])
            q[shift] = c
            for k, bc in enumerate(b):
                rem[shift + k] = base.sub(rem[shift + k], base.mul(c, bc))
            rem = list(self.trim(rem))
        return self.trim(q)

    def norm(self, a):
        return len(a)

    def normalize_associate(self, a):
        if not a or not self.base.is_field:
            return a
        return self.scale(self.base.inv(a[-1]), a)

    def fmt(self, a):
        return "[" + ",".join(self.base.fmt(c) for c in a) + "]"

    def random(self, rng, height=9, degree=3):
        d = rng.randint(-1, degree)
        return self.trim(self.base.random(rng, height) for _ in range(d + 1))

    def __str__(self):
        return f"poly {self.base} {self.var}"


@dataclass(frozen=True)
class Localized(Ring):
    """``base[1/f]`` for a non-zero-divisor ``f`` (``denom``, a base payload)."""

    base: Ring
    denom: Any

    @property
    def is_domain(self):
        return self.base.is_domain

    @property
    def is_field(self):
        return self.base.is_field

    @property
    def has_exact_division(self):
        return self.base.is_domain and self.base.is_euclidean

    @property
    def gcd_membership(self):
        return self.base.is_euclidean

    @property
    def zero(self):
        return (self.base.zero, 0)

    @property
    def one(self):
        return (self.base.one, 0)

    def from_int(self, n):
        return (self.base.from_int(n), 0)

    def canon(self, a):
        if not (isinstance(a, tuple) and len(a) == 2 and isinstance(a[1], int)):
            a = (self.base.coerce(a), 0)
        num, k = a
        base = self.base
        if base.is_zero(num):
            return (base.zero, 0)
        if base.is_domain and base.has_exact_division:
            while k > 0:
                try:
                    num = base.exact_div(num, self.denom)
                except NotDivisible:
                    break
                k -= 1
        return (num, k)

    def _fpow(self, k):
        return self.base.pow(self.denom, k)

    def eq(self, a, b):
        (x, k), (y, l) = a, b
        base = self.base
        return base.eq(base.mul(x, self._fpow(l)), base.mul(y, self._fpow(k)))

    def is_zero(self, a):
        # f is a non-zero-divisor, so x / f^k == 0 iff x == 0
        return self.base.is_zero(a[0])

    def add(self, a, b):
        (x, k), (y, l) = a, b
        base = self.base
        if k < l:
            x = base.mul(x, self._fpow(l - k))
        elif l < k:
            y = base.mul(y, self._fpow(k - l))
        return self.canon((base.add(x, y), max(k, l)))

    def neg(self, a):
        return (self.base.neg(a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return self.canon((self.base.mul(a[0], b[0]), a[1] + b[1]))

    def _strip(self, a):
        """Split ``a = core * rest`` where ``rest`` divides a power ``f**j``.

        Returns ``(core, cofactor, j)`` with ``rest * cofactor == f**j``.
        """
        base = self.base
        core, rest, j = a, base.one, 0
        while True:
            g = base.gcd(core, self.denom)
            if base.is_unit(g):
                break
            core = base.exact_div(core, g)
            rest = base.mul(rest, g)
            j += 1
        cof = base.exact_div(self._fpow(j), rest)
        return core, cof, j

    def is_unit(self, a):
        base = self.base
        if base.is_unit(a[0]):
            return True
        if not base.is_euclidean or base.is_zero(a[0]):
            return False
        return base.is_unit(self._strip(a[0])[0])

    def inv(self, a):
        num, k = a
        base = self.base
        if base.is_unit(num):
            return self.canon((base.mul(base.inv(num), self._fpow(k)), 0))
        if not base.is_euclidean or base.is_zero(num):
            raise NotAUnit(f"{self.fmt(a)} in {self}")
        core, cof, j = self._strip(num)
        if not base.is_unit(core):
            raise NotAUnit(f"{self.fmt(a)} in {self}")
        return self.canon((base.mul(base.mul(self._fpow(k), cof), base.inv(core)), j))

    def exact_div(self, a, b):
        if not self.has_exact_division:
            raise NotADomain(str(self))
        base = self.base
        (x, k), (y, l) = a, b
        if base.is_zero(y):
            raise NotDivisible("division by zero")
        core, cof, j = self._strip(y)
        # a / b = x f^l / (y f^k) = x f^l cof / (core f^(k+j))
        top = base.mul(base.mul(x, self._fpow(l)), cof)
        return self.canon((base.exact_div(top, core), k + j))

    def element(self, num, k=0):
        return self.canon((self.base.coerce(num), k))

    def fmt(self, a):
        num, k = a
        return self.base.fmt(num) if k == 0 else f"{self.base.fmt(num)}@{k}"

    def random(self, rng, height=9):
        return self.canon((self.base.random(rng, height), rng.randint(0, 2)))

    def __str__(self):
        return f"loc {self.base} {self.base.fmt(self.denom)}"


@dataclass(frozen=True)
class QuotientEuclidean(Ring):
    """``base / (modulus)`` for a Euclidean ``base``."""

    base: Ring
    modulus: Any

    def __post_init__(self):
        if not self.base.is_euclidean:
            raise NotEuclidean(str(self.base))
        object.__setattr__(self, "modulus", self.base.normalize_associate(self.modulus))

    @property
    def zero(self):
        return self.base.zero

    @property
    def one(self):
        return self.reduce(self.base.one)

    def reduce(self, x):
        return self.base.divmod(x, self.modulus)[1]

    def from_int(self, n):
        return self.reduce(self.base.from_int(n))

    def canon(self, a):
        return self.reduce(self.base.coerce(a))

    def eq(self, a, b):
        return self.base.eq(a, b)

    def add(self, a, b):
        return self.reduce(self.base.add(a, b))

    def sub(self, a, b):
        return self.reduce(self.base.sub(a, b))

    def neg(self, a):
        return self.reduce(self.base.neg(a))

    def mul(self, a, b):
        return self.reduce(self.base.mul(a, b))

    def is_unit(self, a):
        return self.base.is_unit(self.base.gcd(a, self.modulus))

    def inv(self, a):
        g, s, _ = self.base.xgcd(a, self.modulus)
        if not self.base.is_unit(g):
            raise NotAUnit(f"{self.fmt(a)} in {self}")
        return self.reduce(self.base.mul(s, self.base.inv(g)))

    def fmt(self, a):
        return self.base.fmt(a)

    def random(self, rng, height=9):
        return self.reduce(self.base.random(rng, height))

    def __str__(self):
        return f"quot {self.base} {self.base.fmt(self.modulus)}"


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal.

    ``mode`` is ``"gcd"`` (membership decided through a gcd of the
    generators), ``"certificate"`` (membership claims need coefficient
    vectors) or ``"split"`` (the ideal ``0 (+) I`` of an excision ring).
    """

    ring: Ring
    generators: tuple
    mode: str = "gcd"

    @classmethod
    def of(cls, ring: Ring, generators: Sequence, mode: Optional[str] = None) -> "Ideal":
        gens = tuple(ring.coerce(g) for g in generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        if mode is None:
            mode = "gcd" if ring.gcd_membership else "certificate"
        if mode == "gcd" and not ring.gcd_membership:
            raise ValueError(f"gcd membership is not available over {ring}")
        return cls(ring, gens, mode)

    # -- gcd-mode helpers ---------------------------------------------------
    def generator(self):
        """Single generator of the ideal (gcd mode only)."""
        R = self.ring
        if self.mode != "gcd":
            raise CertificateRequired("ideal is not gcd-decidable")
        if isinstance(R, IntegersMod):
            g = R.modulus
            for x in self.generators:
                g = math.gcd(g, x)
            return g % R.modulus if g != R.modulus else 0
        if isinstance(R, Localized):
            base = R.base
            g = base.zero
            for num, _ in self.generators:
                g = base.gcd(g, num)
            if base.is_zero(g):
                return R.zero
            return (R._strip(g)[0], 0)
        g = R.zero
        for x in self.generators:
            g = R.gcd(g, x)
        return g

    def _int_generator(self):
        # for Zmod m: the divisor d of m with I = <d>
        g = self.ring.modulus
        for x in self.generators:
            g = math.gcd(g, x)
        return g

    def member(self, x, cert: Optional[Sequence] = None) -> bool:
        R = self.ring
        x = R.coerce(x)
        if cert is not None:
            if len(cert) != len(self.generators):
                return False
            total = R.sum(R.mul(R.coerce(c), g) for c, g in zip(cert, self.generators))
            return R.eq(total, x)
        if self.mode == "certificate":
            raise CertificateRequired(f"membership in {self.fmt()} needs a certificate")
        if self.mode == "split":
            r, i = x
            base = R.base
            return base.is_zero(r) and R.ideal.member(i)
        if isinstance(R, IntegersMod):
            return x % self._int_generator() == 0
        if isinstance(R, Localized):
            g = self.generator()
            if R.base.is_zero(g[0]):
                return R.is_zero(x)
            return R.base.divides(g[0], x[0])
        g = self.generator()
        if R.is_zero(g):
            return R.is_zero(x)
        return R.divides(g, x)

    def express(self, x):
        """Coefficients ``c`` with ``sum(c_i * gen_i) == x`` (Euclidean rings)."""
        R = self.ring
        x = R.coerce(x)
        if isinstance(R, IntegersMod):
            coeffs = _int_express(list(self.generators) + [R.modulus], x)
            if coeffs is None:
                raise NotDivisible(f"{x} not in {self.fmt()}")
            return [c % R.modulus for c in coeffs[:-1]]
        if not R.is_euclidean:
            raise NotEuclidean(str(R))
        g, coeffs = R.zero, []
        for gen in self.generators:
            g, s, t = R.xgcd(g, gen)
            coeffs = [R.mul(s, c) for c in coeffs] + [t]
        if R.is_zero(g):
            if R.is_zero(x):
                return [R.zero] * len(self.generators)
            raise NotDivisible(f"{R.fmt(x)} not in {self.fmt()}")
        q = R.exact_div(x, g)
        return [R.mul(q, c) for c in coeffs]

    def is_zero_ideal(self) -> bool:
        return all(self.ring.is_zero(g) for g in self.generators)

    def is_whole(self) -> bool:
        if self.mode == "split":
            return False
        return self.member(self.ring.one)

    def random_member(self, rng, height: int = 3):
        R = self.ring
        if self.mode == "split":
            i = R.ideal.random_member(rng, height)
            return (R.base.zero, i)
        total = R.zero
        for g in self.generators:
            total = R.add(total, R.mul(R.random(rng, height), g))
        return total

    def localize(self, target: "Localized") -> "Ideal":
        hom = LocalizationInclusion(self.ring, target)
        return Ideal.of(target, [hom(g) for g in self.generators])

    def fmt(self) -> str:
        return "<" + ",".join(self.ring.fmt(g) for g in self.generators) + ">"

    def __str__(self):
        return self.fmt()


def _int_express(gens, x):
    g, coeffs = 0, []
    for gen in gens:
        g, s, t = _int_xgcd(g, gen)
        coeffs = [s * c for c in coeffs] + [t]
    if g == 0:
        return [0] * len(gens) if x == 0 else None
    if x % g:
        return None
    q = x // g
    return [q * c for c in coeffs]


def _int_xgcd(a, b):
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


# ---------------------------------------------------------------------------
# excision algebra and double ring


@dataclass(frozen=True)
class Excision(Ring):
    """``R (+) I`` with product ``(r,i)(s,j) = (rs, rj + si + ij)``."""

    base: Ring
    ideal: Ideal

    def __post_init__(self):
        if self.ideal.ring != self.base:
            raise DescriptorMismatch("ideal lives in a different ring")

    @property
    def zero(self):
        return (self.base.zero, self.base.zero)

    @property
    def one(self):
        return (self.base.one, self.base.zero)

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero)

    def canon(self, a):
        if isinstance(a, tuple) and len(a) == 2:
            return (self.base.coerce(a[0]), self.base.coerce(a[1]))
        return (self.base.coerce(a), self.base.zero)

    def make(self, r, i, cert=None):
        """Build ``(r, i)`` after checking that ``i`` lies in the ideal."""
        r, i = self.base.coerce(r), self.base.coerce(i)
        if not self.ideal.member(i, cert):
            raise DescriptorMismatch(f"{self.base.fmt(i)} is not in {self.ideal.fmt()}")
        return (r, i)

    def eq(self, a, b):
        beq = self.base.eq
        return beq(a[0], b[0]) and beq(a[1], b[1])

    def add(self, a, b):
        badd = self.base.add
        return (badd(a[0], b[0]), badd(a[1], b[1]))

    def sub(self, a, b):
        bsub = self.base.sub
        return (bsub(a[0], b[0]), bsub(a[1], b[1]))

    def neg(self, a):
        bneg = self.base.neg
        return (bneg(a[0]), bneg(a[1]))

    def mul(self, a, b):
        base = self.base
        badd, bmul = base.add, base.mul
        (r, i), (s, j) = a, b
        return (bmul(r, s), badd(badd(bmul(r, j), bmul(s, i)), bmul(i, j)))

    def is_unit(self, a):
        base = self.base
        return base.is_unit(a[0]) and base.is_unit(base.add(a[0], a[1]))

    def inv(self, a):
        base = self.base
        r, i = a
        if not self.is_unit(a):
            raise NotAUnit(f"{self.fmt(a)} in {self}")
        rinv = base.inv(r)
        return (rinv, base.sub(base.inv(base.add(r, i)), rinv))

    def is_nilpotent(self, a):
        base = self.base
        return base.is_nilpotent(a[0]) and base.is_nilpotent(base.add(a[0], a[1]))

    def fmt(self, a):
        return f"({self.base.fmt(a[0])}|{self.base.fmt(a[1])})"

    def random(self, rng, height=9):
        return (self.base.random(rng, height), self.ideal.random_member(rng, max(1, height // 3)))

    def __str__(self):
        return f"excision {self.base} {self.ideal.fmt()}"


@dataclass(frozen=True)
class Double(Ring):
    """``D(R, I) = {(a, b) : a - b in I}`` with componentwise operations."""

    base: Ring
    ideal: Ideal

    @property
    def zero(self):
        return (self.base.zero, self.base.zero)

    @property
    def one(self):
        return (self.base.one, self.base.one)

    def from_int(self, n):
        c = self.base.from_int(n)
        return (c, c)

    def canon(self, a):
        if isinstance(a, tuple) and len(a) == 2:
            return (self.base.coerce(a[0]), self.base.coerce(a[1]))
        c = self.base.coerce(a)
        return (c, c)

    def make(self, a, b, cert=None):
        a, b = self.base.coerce(a), self.base.coerce(b)
        if not self.ideal.member(self.base.sub(a, b), cert):
            raise DescriptorMismatch("components are not congruent modulo the ideal")
        return (a, b)

    def eq(self, a, b):
        beq = self.base.eq
        return beq(a[0], b[0]) and beq(a[1], b[1])

    def add(self, a, b):
        badd = self.base.add
        return (badd(a[0], b[0]), badd(a[1], b[1]))

    def sub(self, a, b):
        bsub = self.base.sub
        return (bsub(a[0], b[0]), bsub(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def mul(self, a, b):
        bmul = self.base.mul
        return (bmul(a[0], b[0]), bmul(a[1], b[1]))

    def is_unit(self, a):
        return self.base.is_unit(a[0]) and self.base.is_unit(a[1])

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{self.fmt(a)} in {self}")
        return (self.base.inv(a[0]), self.base.inv(a[1]))

    def fmt(self, a):
        return f"({self.base.fmt(a[0])}&{self.base.fmt(a[1])})"

    def random(self, rng, height=9):
        a = self.base.random(rng, height)
        return (a, self.base.add(a, self.ideal.random_member(rng, max(1, height // 3))))

    def __str__(self):
        return f"double {self.base} {self.ideal.fmt()}"


def split_ideal(ring: Excision) -> Ideal:
    """The kernel ``0 (+) I`` of the retraction ``(r, i) -> r``."""
    gens = tuple((ring.base.zero, g) for g in ring.ideal.generators)
    return Ideal(ring, gens, "split")


ZZ = Integers()
QQ = Rationals()


# ---------------------------------------------------------------------------
# element wrapper


class Elem:
    """A payload bound to its ring, with operator overloading."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _other(self, other):
        if isinstance(other, Elem):
            if other.ring != self.ring:
                raise DescriptorMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        return self.ring.coerce(other)

    def __add__(self, other):
        return Elem(self.ring, self.ring.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Elem(self.ring, self.ring.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Elem(self.ring, self.ring.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Elem(self.ring, self.ring.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.value))

    def __pow__(self, k):
        return Elem(self.ring, self.ring.pow(self.value, k))

    def __eq__(self, other):
        try:
            return self.ring.eq(self.value, self._other(other))
        except DescriptorMismatch:
            return False

    def __hash__(self):
        return hash(self.ring)

    def inverse(self):
        return Elem(self.ring, self.ring.inv(self.value))

    def __repr__(self):
        return f"Elem({self.ring}, {self.ring.fmt(self.value)})"

    def __str__(self):
        return self.ring.fmt(self.value)


# ---------------------------------------------------------------------------
# homomorphisms


class RingHom:
    """Unital ring homomorphism acting on payloads."""

    source: Ring
    target: Ring

    def __call__(self, x):
        raise NotImplementedError

    def elem(self, e: Elem) -> Elem:
        if e.ring != self.source:
            raise DescriptorMismatch(f"{self} expects {self.source}, got {e.ring}")
        return Elem(self.target, self(e.value))

    def __repr__(self):
        return f"{type(self).__name__}({self.source} -> {self.target})"


@dataclass(frozen=True, repr=False)
class IdentityHom(RingHom):
    source: Ring

    @property
    def target(self):
        return self.source

    def __call__(self, x):
        return x


@dataclass(frozen=True, repr=False)
class EvalAt(RingHom):
    source: Polynomial
    point: Any

    @property
    def target(self):
        return self.source.base

    def __call__(self, x):
        return self.source.evaluate(x, self.point)


@dataclass(frozen=True, repr=False)
class ResidueMod(RingHom):
    """Reduction ``R -> R/I`` onto IntegersMod, QuotientEuclidean or ZeroRing."""

    source: Ring
    target: Ring

    def __call__(self, x):
        T = self.target
        if isinstance(T, IntegersMod):
            return x % T.modulus
        if isinstance(T, QuotientEuclidean):
            return T.reduce(x)
        if isinstance(T, ZeroRing):
            return 0
        return x


@dataclass(frozen=True, repr=False)
class LocalizationInclusion(RingHom):
    """``R -> R_f`` or ``R_f -> R_g`` when ``g = f * c``."""

    source: Ring
    target: Localized

    def __post_init__(self):
        T = self.target
        if self.source == T.base:
            return
        if isinstance(self.source, Localized) and self.source.base == T.base:
            T.base.exact_div(T.denom, self.source.denom)
            return
        raise DescriptorMismatch(f"no localization map {self.source} -> {T}")

    def __call__(self, x):
        T = self.target
        if self.source == T.base:
            return T.canon((x, 0))
        cof = T.base.exact_div(T.denom, self.source.denom)
        num, k = x
        return T.canon((T.base.mul(num, T.base.pow(cof, k)), k))


@dataclass(frozen=True, repr=False)
class ConstantInclusion(RingHom):
    source: Ring
    target: Polynomial

    def __call__(self, x):
        return self.target.constant(x)


@dataclass(frozen=True, repr=False)
class ProjectPi(RingHom):
    """``R (+) I -> R``, ``(r, i) -> r + i``."""

    source: Excision

    @property
    def target(self):
        return self.source.base

    def __call__(self, x):
        return self.source.base.add(x[0], x[1])


@dataclass(frozen=True, repr=False)
class BarSplit(RingHom):
    """``R (+) I -> R``, ``(r, i) -> r``; kernel is ``0 (+) I``."""

    source: Excision

    @property
    def target(self):
        return self.source.base

    def __call__(self, x):
        return x[0]


@dataclass(frozen=True, repr=False)
class CanonicalInclusion(RingHom):
    """``R -> R (+) I``, ``r -> (r, 0)``."""

    target: Excision

    @property
    def source(self):
        return self.target.base

    def __call__(self, x):
        return (x, self.target.base.zero)


@dataclass(frozen=True, repr=False)
class DoubleU(RingHom):
    """``u(a, i) = (a, a + i)``."""

    source: Excision

    @property
    def target(self):
        return Double(self.source.base, self.source.ideal)

    def __call__(self, x):
        return (x[0], self.source.base.add(x[0], x[1]))


@dataclass(frozen=True, repr=False)
class DoubleV(RingHom):
    """``v(x, y) = (x, y - x)``."""

    source: Double

    @property
    def target(self):
        return Excision(self.source.base, self.source.ideal)

    def __call__(self, x):
        return (x[0], self.source.base.sub(x[1], x[0]))


@dataclass(frozen=True, repr=False)
class ExcisionLocalizationIso(RingHom):
    """``(R (+) I)_{(f,0)} -> R_f (+) I_f``, ``(r, i) / (f,0)^k -> (r/f^k, i/f^k)``."""

    source: Localized

    def __post_init__(self):
        exc = self.source.base
        if not isinstance(exc, Excision) or not exc.base.is_zero(self.source.denom[1]):
            raise DescriptorMismatch("source must be (R (+) I) localized at (f, 0)")

    @property
    def target(self):
        exc = self.source.base
        loc = Localized(exc.base, self.source.denom[0])
        return Excision(loc, exc.ideal.localize(loc))

    def __call__(self, x):
        (r, i), k = x
        loc = self.target.base
        return (loc.canon((r, k)), loc.canon((i, k)))


def quotient_ring(ideal: Ideal):
    """Return ``(R/I, reduction)`` when the quotient is computable."""
    R = ideal.ring
    if ideal.mode != "gcd":
        raise QuotientNotComputable(f"{R} / {ideal.fmt()}")
    if isinstance(R, Integers):
        g = ideal.generator()
        if g == 0:
            return R, IdentityHom(R)
        if g == 1:
            T = ZeroRing()
        else:
            T = IntegersMod(g)
        return T, ResidueMod(R, T)
    if isinstance(R, IntegersMod):
        d = ideal._int_generator()
        if d == R.modulus:
            return R, IdentityHom(R)
        T = ZeroRing() if d == 1 else IntegersMod(d)
        return T, ResidueMod(R, T)
    if isinstance(R, Rationals):
        if ideal.is_zero_ideal():
            return R, IdentityHom(R)
        return ZeroRing(), ResidueMod(R, ZeroRing())
    if isinstance(R, Polynomial) and R.base.is_field:
        g = ideal.generator()
        if not g:
            return R, IdentityHom(R)
        if len(g) == 1:
            return ZeroRing(), ResidueMod(R, ZeroRing())
        T = QuotientEuclidean(R, g)
        return T, ResidueMod(R, T)
    raise QuotientNotComputable(f"{R} / {ideal.fmt()}")


# ---------------------------------------------------------------------------
# element-level operations


def _check_same(x: Elem, y: Elem):
    if x.ring != y.ring:
        raise DescriptorMismatch(f"{x.ring} vs {y.ring}")


def ring_arith(op: str, x: Elem, y: Optional[Elem] = None) -> Elem:
    """Apply ``op`` in {"add", "mul", "neg", "sub"} to elements of one ring."""
    op = op.lower()
    if op == "neg":
        return -x
    if y is None:
        raise ValueError(f"{op} needs two operands")
    _check_same(x, y)
    R = x.ring
    fn = {"add": R.add, "mul": R.mul, "sub": R.sub}[op]
    return Elem(R, fn(x.value, y.value))


def unit_inverse(x: Elem) -> Elem:
    return x.inverse()


def exact_divide(a: Elem, b: Elem) -> Elem:
    _check_same(a, b)
    R = a.ring
    if not R.is_domain:
        raise NotADomain(str(R))
    return Elem(R, R.exact_div(a.value, b.value))


def ideal_member(ideal: Ideal, x, cert=None) -> bool:
    if isinstance(x, Elem) and x.ring != ideal.ring:
        raise DescriptorMismatch(f"{x.ring} vs {ideal.ring}")
    return ideal.member(x, cert)


def double_iso(direction: str, x: Elem) -> Elem:
    """Apply ``u`` (excision -> double) or ``v`` (double -> excision)."""
    direction = direction.upper()
    if direction == "U":
        if not isinstance(x.ring, Excision):
            raise DescriptorMismatch("U expects an excision element")
        return DoubleU(x.ring).elem(x)
    if direction == "V":
        if not isinstance(x.ring, Double):
            raise DescriptorMismatch("V expects a double-ring element")
        return DoubleV(x.ring).elem(x)
    raise ValueError("direction must be U or V")


def unit_kernel_C(R: Ring, ideal: Ideal) -> list:
    """Units of ``R`` congruent to 1 modulo ``ideal`` (finite rings only)."""
    if not isinstance(R, IntegersMod):
        raise NotEnumerable(str(R))
    if ideal.ring != R:
        raise DescriptorMismatch("ideal lives in a different ring")
    return [u for u in R.units() if ideal.member(R.sub(u, R.one))]
