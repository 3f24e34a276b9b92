"""ESD transvections, symplectic Steinberg words and their evaluation.

The symplectic pairing on ``R^(2n)`` is ``<u, w> = sum_i eps(i) u_i w_s(i)``,
i.e. ``u^T chi_n w``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .elementary import (
    SYMPLECTIC,
    ElementaryWord,
    PlainGen,
    eps,
    sigma_index,
)
from .errors import BadIndex, NotIsotropicPair, SizeMismatch
from .matrices import Matrix
from .rings import Ideal, Ring, quotient_ring


def pairing(R: Ring, u: Sequence, w: Sequence):
    if len(u) != len(w):
        raise SizeMismatch(f"{len(u)} vs {len(w)}")
    acc = R.zero
    for i in range(1, len(u) + 1):
        x, y = u[i - 1], w[sigma_index(i) - 1]
        if R.is_zero(x) or R.is_zero(y):
            continue
        t = R.mul(x, y)
        acc = R.add(acc, t) if i % 2 else R.sub(acc, t)
    return acc


def _esd_apply(R, u, v, a, w):
    uw = pairing(R, u, w)
    coef = R.add(pairing(R, v, w), R.mul(a, uw))
    return [R.add(R.add(wk, R.mul(coef, uk)), R.mul(uw, vk)) for wk, uk, vk in zip(w, u, v)]


def esd_transform(R: Ring, u: Sequence, v: Sequence, a, w: Optional[Sequence] = None):
    """``T(u, v, a)`` applied to ``w``, or its matrix when ``w`` is omitted.

    ``T(u,v,a)(w) = w + (<v,w> + a<u,w>) u + <u,w> v``; requires ``<u,v> = 0``.
    """
    u = [R.coerce(x) for x in u]
    v = [R.coerce(x) for x in v]
    a = R.coerce(a)
    if len(u) != len(v) or len(u) % 2:
        raise SizeMismatch("vectors must share an even length")
    if not R.is_zero(pairing(R, u, v)):
        raise NotIsotropicPair("<u, v> is not zero")
    if w is not None:
        return _esd_apply(R, u, v, a, [R.coerce(x) for x in w])
    n = len(u)
    cols = []
    for k in range(n):
        basis = [R.one if r == k else R.zero for r in range(n)]
        cols.append(_esd_apply(R, u, v, a, basis))
    return Matrix(R, [[cols[k][r] for k in range(n)] for r in range(n)])


def unit_vector(R: Ring, size: int, i: int) -> list:
    return [R.one if k == i - 1 else R.zero for k in range(size)]


def transvection_generator(R: Ring, size: int, i: int, j: int, a) -> Matrix:
    """Matrix of ``T_ij(a)``: ``T(e_i, 0, eps_i a)`` if ``j = s(i)``, else ``T(e_i, eps_s(j) a e_s(j), 0)``."""
    if not (1 <= i <= size and 1 <= j <= size) or i == j:
        raise BadIndex(f"({i},{j}) for size {size}")
    a = R.coerce(a)
    ei = unit_vector(R, size, i)
    if j == sigma_index(i):
        return esd_transform(R, ei, [R.zero] * size, a if eps(i) > 0 else R.neg(a))
    sj = sigma_index(j)
    coef = a if eps(sj) > 0 else R.neg(a)
    v = [coef if k == sj - 1 else R.zero for k in range(size)]
    return esd_transform(R, ei, v, R.zero)


# ---------------------------------------------------------------------------
# Steinberg words


@dataclass(frozen=True)
class StAtom:
    i: int
    j: int
    a: Any
    exp: int = 1


@dataclass(frozen=True)
class SteinbergWord:
    ring: Ring
    n: int
    atoms: tuple = ()

    def __post_init__(self):
        if self.n < 3:
            raise BadIndex("Steinberg words need half rank n >= 3")
        object.__setattr__(self, "atoms", tuple(self.atoms))
        size = 2 * self.n
        for at in self.atoms:
            if not (1 <= at.i <= size and 1 <= at.j <= size) or at.i == at.j:
                raise BadIndex(f"({at.i},{at.j}) for StSp_{size}")
            if at.exp not in (1, -1):
                raise ValueError("exponent must be +1 or -1")

    @classmethod
    def of(cls, ring, n, *items):
        """Build from ``(i, j, a)`` or ``(i, j, a, exp)`` tuples."""
        atoms = []
        for it in items:
            i, j, a = it[:3]
            exp = it[3] if len(it) > 3 else 1
            atoms.append(StAtom(i, j, ring.coerce(a), exp))
        return cls(ring, n, tuple(atoms))

    def __add__(self, other: "SteinbergWord") -> "SteinbergWord":
        if (self.ring, self.n) != (other.ring, other.n):
            raise SizeMismatch("words of different shape")
        return SteinbergWord(self.ring, self.n, self.atoms + other.atoms)

    def inverse(self) -> "SteinbergWord":
        return SteinbergWord(self.ring, self.n, tuple(StAtom(a.i, a.j, a.a, -a.exp) for a in reversed(self.atoms)))

    def __len__(self):
        return len(self.atoms)

    def to_elementary(self) -> ElementaryWord:
        R = self.ring
        atoms = tuple(PlainGen(a.i, a.j, a.a if a.exp == 1 else R.neg(a.a)) for a in self.atoms)
        return ElementaryWord(R, SYMPLECTIC, 2 * self.n, atoms)

    def map_args(self, target: Ring, f) -> "SteinbergWord":
        return SteinbergWord(target, self.n, tuple(StAtom(a.i, a.j, f(a.a), a.exp) for a in self.atoms))

    def fmt(self) -> str:
        f = self.ring.fmt
        parts = []
        for a in self.atoms:
            suffix = "^-1" if a.exp == -1 else ""
            parts.append(f"X({a.i},{a.j},{f(a.a)}){suffix}")
        return " ".join(parts)


def steinberg_phi(w: SteinbergWord) -> Matrix:
    """Evaluate ``X_ij(a) -> T_ij(a)``; ``X_ij(a)^-1`` evaluates as ``T_ij(-a)``.

    Uses the column-operation kernel for ``se_ij``; the ESD suite checks that
    every ``T_ij`` matrix coincides with ``se_ij``.
    """
    return w.to_elementary().evaluate()


def steinberg_phi_esd(w: SteinbergWord) -> Matrix:
    """Reference evaluation by multiplying transvection matrices."""
    R = w.ring
    size = 2 * w.n
    M = Matrix.identity(R, size)
    for a in w.atoms:
        arg = a.a if a.exp == 1 else R.neg(a.a)
        M = M @ transvection_generator(R, size, a.i, a.j, arg)
    return M


def kernel_check(w: SteinbergWord) -> bool:
    return steinberg_phi(w) == Matrix.identity(w.ring, 2 * w.n)


def residue_trivial(w: SteinbergWord, ideal: Ideal) -> bool:
    """``phi`` of the word reduced modulo ``ideal`` is the identity."""
    T, red = quotient_ring(ideal)
    return kernel_check(w.map_args(T, red))


def symbol_build(kind: str, ring: Ring, r, s=None, i: int = None, j: int = None, n: int = 3) -> SteinbergWord:
    """Literal symbol words ``sw``, ``sh``, ``{r,s}`` (curly) and ``[r,s]`` (square)."""
    R = ring
    kind = kind.lower()
    r = R.coerce(r)
    R.inv(r)  # raises NotAUnit
    if s is not None:
        s = R.coerce(s)
        R.inv(s)  # raises NotAUnit
    if kind == "curly":
        i, j = i or 1, j or 3
    elif kind == "square":
        i, j = i or 1, j or 2
    if i is None or j is None:
        raise BadIndex(f"{kind} needs explicit indices")

    def sw(x):
        return SteinbergWord(R, n, (StAtom(i, j, x), StAtom(j, i, R.neg(R.inv(x))), StAtom(i, j, x)))

    def sh(x):
        return sw(x) + sw(R.neg(R.one))

    if kind == "sw":
        return sw(r)
    if kind == "sh":
        return sh(r)
    if kind in ("curly", "square"):
        if s is None:
            raise ValueError(f"{kind} symbol needs two units")
        return sh(R.mul(r, s)) + sh(r).inverse() + sh(s).inverse()
    raise ValueError(f"unknown symbol kind {kind!r}")


# ---------------------------------------------------------------------------
# relation instances (shared by the elementary and Steinberg suites)

RELATIONS = ("R0", "R1", "R2", "R3", "R4", "R5")


def _comm(x, y):
    """Commutator ``x y x^-1 y^-1`` on atom lists ``(i, j, a, exp)``."""
    inv = lambda w: [(i, j, a, -e) for (i, j, a, e) in reversed(w)]
    return x + y + inv(x) + inv(y)


def relation_instance(name: str, R: Ring, size: int, rng, sample):
    """Random instance ``(lhs, rhs)`` of a defining relation, as atom lists.

    ``sample(rng)`` draws ring arguments.  Index side conditions are enforced
    by rejection sampling.
    """
    s = sigma_index
    idx = lambda: rng.randint(1, size)
    a, b = sample(rng), sample(rng)
    name = name.upper().replace("E", "R")
    if name == "R0":
        while True:
            i, j = idx(), idx()
            if i != j:
                break
        c = a if eps(i) * eps(j) < 0 else R.neg(a)
        return [(i, j, a, 1)], [(s(j), s(i), c, 1)]
    if name == "R1":
        while True:
            i, j = idx(), idx()
            if i != j:
                break
        return [(i, j, a, 1), (i, j, b, 1)], [(i, j, R.add(a, b), 1)]
    if name == "R2":
        while True:
            i, j, h, k = idx(), idx(), idx(), idx()
            if i != j and h != k and h not in (j, s(i)) and k not in (i, s(j)):
                break
        return _comm([(i, j, a, 1)], [(h, k, b, 1)]), []
    if name == "R3":
        while True:
            i, j, k = idx(), idx(), idx()
            if len({i, j, k}) == 3 and i not in (s(j), s(k)) and j != s(k):
                break
        return _comm([(i, j, a, 1)], [(j, k, b, 1)]), [(i, k, R.mul(a, b), 1)]
    if name == "R4":
        while True:
            i, j = idx(), idx()
            if j not in (i, s(i)):
                break
        ab = R.mul(a, b)
        c = R.mul(ab, b)
        if eps(i) * eps(j) < 0:
            c = R.neg(c)
        return _comm([(i, s(i), a, 1)], [(s(i), j, b, 1)]), [(i, j, ab, 1), (s(j), j, c, 1)]
    if name == "R5":
        while True:
            i, j = idx(), idx()
            if j not in (i, s(i)):
                break
        two_ab = R.mul(R.from_int(2), R.mul(a, b))
        return _comm([(i, j, a, 1)], [(j, s(i), b, 1)]), [(i, s(i), two_ab, 1)]
    raise ValueError(f"unknown relation {name!r}")


def relation_word(name: str, R: Ring, n: int, rng, sample) -> SteinbergWord:
    """``lhs . rhs^-1`` for a random relation instance; lies in the kernel of phi."""
    lhs, rhs = relation_instance(name, R, 2 * n, rng, sample)
    left = SteinbergWord.of(R, n, *lhs)
    right = SteinbergWord.of(R, n, *rhs)
    return left + right.inverse()
