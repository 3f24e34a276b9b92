"""Dense exact matrices over the rings of :mod:`relksp.rings`."""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    DescriptorMismatch,
    NotAlternating,
    NotInvertible,
    NotSquare,
    OddSize,
    SizeMismatch,
)
from .rings import Elem, Ideal, Ring, RingHom


class Matrix:
    """Immutable matrix; ``rows`` is a tuple of tuples of ring payloads."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise SizeMismatch("ragged matrix")

    @classmethod
    def build(cls, ring: Ring, rows: Iterable[Iterable]) -> "Matrix":
        """Coerce ints/Elems/payloads into canonical payloads."""
        return cls(ring, [[ring.coerce(x) for x in r] for r in rows])

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls(ring, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, m: int, n: int = None) -> "Matrix":
        n = m if n is None else n
        return cls(ring, [[ring.zero] * n for _ in range(m)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry(self, i: int, j: int) -> Elem:
        return Elem(self.ring, self.rows[i][j])

    def lists(self):
        return [list(r) for r in self.rows]

    def column(self, j: int):
        return [r[j] for r in self.rows]

    def _check(self, other: "Matrix"):
        if self.ring != other.ring:
            raise DescriptorMismatch(f"{self.ring} vs {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.ring != other.ring or self.shape != other.shape:
            return False
        eq = self.ring.eq
        return all(eq(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.ring, self.shape))

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise SizeMismatch(f"{self.shape} + {other.shape}")
        add = self.ring.add
        return Matrix(self.ring, [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise SizeMismatch(f"{self.shape} - {other.shape}")
        sub = self.ring.sub
        return Matrix(self.ring, [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        neg = self.ring.neg
        return Matrix(self.ring, [[neg(a) for a in r] for r in self.rows])

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise SizeMismatch(f"{self.shape} @ {other.shape}")
        R = self.ring
        add, mul, is_zero, zero = R.add, R.mul, R.is_zero, R.zero
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if not is_zero(a)]
            row = []
            for c in cols:
                acc = zero
                for k, a in nz:
                    b = c[k]
                    if not is_zero(b):
                        acc = add(acc, mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(R, out)

    def scale(self, c) -> "Matrix":
        mul = self.ring.mul
        return Matrix(self.ring, [[mul(c, a) for a in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, list(zip(*self.rows)) if self.rows else [])

    T = property(transpose)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows])

    def vecmul(self, v: Sequence) -> list:
        """Row vector times matrix."""
        R = self.ring
        out = []
        for j in range(self.ncols):
            acc = R.zero
            for i, x in enumerate(v):
                acc = R.add(acc, R.mul(x, self.rows[i][j]))
            out.append(acc)
        return out

    def fmt(self) -> str:
        f = self.ring.fmt
        return "[" + ",".join("[" + ",".join(f(x) for x in r) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"Matrix({self.ring}, {self.fmt()})"


# ---------------------------------------------------------------------------
# standard forms


def chi(ring: Ring, n: int) -> Matrix:
    """``chi_n``: ``n`` copies of ``[[0,1],[-1,0]]`` on the diagonal."""
    M = Matrix.zeros(ring, 2 * n).lists()
    for k in range(n):
        M[2 * k][2 * k + 1] = ring.one
        M[2 * k + 1][2 * k] = ring.neg(ring.one)
    return Matrix(ring, M)


def sigma(ring: Ring, n: int) -> Matrix:
    """``sigma_n``: ``n`` copies of ``[[0,1],[1,0]]`` on the diagonal."""
    M = Matrix.zeros(ring, 2 * n).lists()
    for k in range(n):
        M[2 * k][2 * k + 1] = ring.one
        M[2 * k + 1][2 * k] = ring.one
    return Matrix(ring, M)


def standard_form(kind: str, n: int, ring: Ring) -> Matrix:
    kind = kind.lower()
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "chi":
        return chi(ring, n)
    if kind == "sigma":
        return sigma(ring, n)
    if kind == "identity":
        return Matrix.identity(ring, n)
    raise ValueError(f"unknown standard form {kind!r}")


def perp(A: Matrix, B: Matrix) -> Matrix:
    """Block-diagonal sum ``A (+) B``."""
    if A.ring != B.ring:
        raise DescriptorMismatch(f"{A.ring} vs {B.ring}")
    if not (A.is_square() and B.is_square()):
        raise NotSquare("perp needs square blocks")
    z = A.ring.zero
    m, n = A.nrows, B.nrows
    rows = [list(r) + [z] * n for r in A.rows]
    rows += [[z] * m + list(r) for r in B.rows]
    return Matrix(A.ring, rows)


def perp_all(*blocks: Matrix) -> Matrix:
    out = blocks[0]
    for b in blocks[1:]:
        out = perp(out, b)
    return out


def apply_hom(h: RingHom, A: Matrix) -> Matrix:
    if A.ring != h.source:
        raise DescriptorMismatch(f"{h!r} cannot act on a matrix over {A.ring}")
    return Matrix(h.target, [[h(x) for x in r] for r in A.rows])


# ---------------------------------------------------------------------------
# determinant and characteristic polynomial


def charpoly(A: Matrix) -> list:
    """Coefficients ``[1, c1, ..., cn]`` of ``det(t I - A)`` (Berkowitz, division free)."""
    if not A.is_square():
        raise NotSquare(str(A.shape))
    R = A.ring
    a = A.rows
    n = A.nrows
    p = [R.one]
    for k in range(1, n + 1):
        d = a[k - 1][k - 1]
        row = a[k - 1][: k - 1]
        col = [a[i][k - 1] for i in range(k - 1)]
        toeplitz = [R.one, R.neg(d)]
        v = col
        for _ in range(k - 1):
            s = R.zero
            for x, y in zip(row, v):
                s = R.add(s, R.mul(x, y))
            toeplitz.append(R.neg(s))
            v = [R.sum(R.mul(a[i][j], v[j]) for j in range(k - 1)) for i in range(k - 1)]
        newp = []
        for i in range(k + 1):
            acc = R.zero
            for j in range(min(i + 1, len(p))):
                acc = R.add(acc, R.mul(toeplitz[i - j], p[j]))
            newp.append(acc)
        p = newp
    return p


def _det_gauss(R: Ring, rows) -> object:
    m = [list(r) for r in rows]
    n = len(m)
    det = R.one
    for c in range(n):
        piv = next((r for r in range(c, n) if not R.is_zero(m[r][c])), None)
        if piv is None:
            return R.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = R.neg(det)
        det = R.mul(det, m[c][c])
        inv = R.inv(m[c][c])
        for r in range(c + 1, n):
            if R.is_zero(m[r][c]):
                continue
            f = R.mul(m[r][c], inv)
            m[r] = [R.sub(x, R.mul(f, y)) for x, y in zip(m[r], m[c])]
    return det


def _det_bareiss(R: Ring, rows) -> object:
    m = [list(r) for r in rows]
    n = len(m)
    sign = R.one
    prev = R.one
    for c in range(n - 1):
        piv = next((r for r in range(c, n) if not R.is_zero(m[r][c])), None)
        if piv is None:
            return R.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = R.neg(sign)
        for r in range(c + 1, n):
            for k in range(c + 1, n):
                num = R.sub(R.mul(m[c][c], m[r][k]), R.mul(m[r][c], m[c][k]))
                m[r][k] = R.exact_div(num, prev)
        prev = m[c][c]
    return R.mul(sign, m[n - 1][n - 1])


def det(A: Matrix):
    """Exact determinant (payload).

    Fields use Gaussian elimination, domains with exact division use Bareiss,
    and everything else uses the division-free Berkowitz recurrence.
    """
    if not A.is_square():
        raise NotSquare(str(A.shape))
    R = A.ring
    n = A.nrows
    if n == 0:
        return R.one
    if R.is_field:
        return _det_gauss(R, A.rows)
    if R.is_domain and R.has_exact_division:
        return _det_bareiss(R, A.rows)
    p = charpoly(A)
    return p[n] if n % 2 == 0 else R.neg(p[n])


def det_cofactor(A: Matrix):
    """Division-free Laplace expansion over column subsets (reference oracle)."""
    if not A.is_square():
        raise NotSquare(str(A.shape))
    R = A.ring
    n = A.nrows
    # minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
    minors = {0: R.one}
    for r in range(n):
        nxt = {}
        for mask, val in minors.items():
            if R.is_zero(val):
                continue
            higher = 0
            for c in range(n - 1, -1, -1):
                bit = 1 << c
                if mask & bit:
                    higher += 1
                    continue
                term = R.mul(val, A.rows[r][c])
                if higher % 2:
                    term = R.neg(term)
                key = mask | bit
                nxt[key] = R.add(nxt.get(key, R.zero), term)
        minors = nxt
    return minors.get((1 << n) - 1, R.zero)


def inverse(A: Matrix) -> Matrix:
    if not A.is_square():
        raise NotSquare(str(A.shape))
    R = A.ring
    n = A.nrows
    if R.is_field:
        m = [list(r) + [R.one if i == j else R.zero for j in range(n)] for i, r in enumerate(A.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if not R.is_zero(m[r][c])), None)
            if piv is None:
                raise NotInvertible("singular matrix")
            m[c], m[piv] = m[piv], m[c]
            inv = R.inv(m[c][c])
            m[c] = [R.mul(inv, x) for x in m[c]]
            for r in range(n):
                if r != c and not R.is_zero(m[r][c]):
                    f = m[r][c]
                    m[r] = [R.sub(x, R.mul(f, y)) for x, y in zip(m[r], m[c])]
        return Matrix(R, [row[n:] for row in m])
    # Cayley-Hamilton: A^-1 = -c_n^-1 (A^{n-1} + c1 A^{n-2} + ... + c_{n-1} I)
    p = charpoly(A)
    if not R.is_unit(p[n]):
        raise NotInvertible("determinant is not a unit")
    I = Matrix.identity(R, n)
    B = I
    for i in range(1, n):
        B = (A @ B) + I.scale(p[i])
    return B.scale(R.neg(R.inv(p[n])))


# ---------------------------------------------------------------------------
# Pfaffian


def is_alternating(A: Matrix) -> bool:
    if not A.is_square():
        return False
    R = A.ring
    n = A.nrows
    for i in range(n):
        if not R.is_zero(A.rows[i][i]):
            return False
        for j in range(i + 1, n):
            if not R.eq(A.rows[i][j], R.neg(A.rows[j][i])):
                return False
    return True


def pfaffian(A: Matrix):
    """Pfaffian by first-row expansion, memoized on the remaining index set."""
    if not A.is_square():
        raise NotSquare(str(A.shape))
    if A.nrows % 2:
        raise OddSize(f"size {A.nrows}")
    if not is_alternating(A):
        raise NotAlternating("matrix is not alternating")
    R = A.ring
    a = A.rows
    memo = {0: R.one}

    def pf(mask):
        hit = memo.get(mask)
        if hit is not None:
            return hit
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        total = R.zero
        negate = False
        bits = rest
        while bits:
            low = bits & -bits
            j = low.bit_length() - 1
            bits ^= low
            if not R.is_zero(a[i][j]):
                term = R.mul(a[i][j], pf(rest & ~low))
                total = R.sub(total, term) if negate else R.add(total, term)
            negate = not negate
        memo[mask] = total
        return total

    return pf((1 << A.nrows) - 1)


# ---------------------------------------------------------------------------
# predicates


def is_symplectic(A: Matrix, form: Matrix = None) -> bool:
    """``A^T form A == form`` (``form`` defaults to the standard ``chi``)."""
    if not A.is_square():
        return False
    if form is None:
        if A.nrows % 2:
            return False
        form = chi(A.ring, A.nrows // 2)
    if form.shape != A.shape:
        raise SizeMismatch(f"{A.shape} vs form {form.shape}")
    return A.transpose() @ form @ A == form


def is_relative(A: Matrix, ideal: Ideal, certs=None) -> bool:
    """Every entry of ``A - I`` lies in ``ideal``."""
    if ideal.ring != A.ring:
        raise DescriptorMismatch(f"{ideal.ring} vs {A.ring}")
    if not A.is_square():
        return False
    R = A.ring
    for i, r in enumerate(A.rows):
        for j, x in enumerate(r):
            d = R.sub(x, R.one) if i == j else x
            if R.is_zero(d):
                continue
            cert = certs[i][j] if certs is not None else None
            if not ideal.member(d, cert):
                return False
    return True


def is_invertible(A: Matrix) -> bool:
    if not A.is_square():
        return False
    return A.ring.is_unit(det(A))


def predicates(A: Matrix, kind: str, arg=None) -> bool:
    kind = kind.lower()
    if kind == "alternating":
        return is_alternating(A)
    if kind == "symplectic":
        if not A.is_square():
            raise NotSquare(str(A.shape))
        return is_symplectic(A, arg)
    if kind == "relative":
        if not A.is_square():
            raise NotSquare(str(A.shape))
        return is_relative(A, arg)
    if kind == "invertible":
        if not A.is_square():
            raise NotSquare(str(A.shape))
        return is_invertible(A)
    if kind == "special":
        return A.is_square() and A.ring.is_one(det(A))
    raise ValueError(f"unknown predicate {kind!r}")
