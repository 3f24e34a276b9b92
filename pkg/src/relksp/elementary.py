"""Elementary generators, elementary words and row reduction.

Indices are 1-based throughout, matching the usual matrix-unit notation.
For the symplectic family the involution on indices swaps ``2k-1`` and
``2k``, and ``eps(i) = (-1)**(i+1)``.

A word is a sequence of atoms; evaluating it multiplies the atom matrices in
order.  Evaluation never forms dense products: each generator acts on the
current matrix by one or two column operations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence, Union

from .errors import (
    BadIndex,
    DescriptorMismatch,
    NeedsDimensionThree,
    NotInvertible,
    NotRelative,
    NotUnimodular,
    NotEuclidean,
    SizeMismatch,
)
from .matrices import Matrix, inverse
from .rings import (
    ConstantInclusion,
    Ideal,
    IntegersMod,
    Polynomial,
    Ring,
    RingHom,
)

LINEAR = "linear"
SYMPLECTIC = "symplectic"
FAMILIES = (LINEAR, SYMPLECTIC)


def sigma_index(i: int) -> int:
    return i + 1 if i % 2 else i - 1


def eps(i: int) -> int:
    return 1 if i % 2 else -1


@dataclass(frozen=True)
class PlainGen:
    i: int
    j: int
    a: Any


@dataclass(frozen=True)
class ConjGen:
    """``outer * gen(i, j, a) * outer^-1``; ``cert`` optionally proves ``a`` in the ideal."""

    outer: "ElementaryWord"
    i: int
    j: int
    a: Any
    cert: Optional[tuple] = None


Atom = Union[PlainGen, ConjGen]


def _check_index(family: str, size: int, i: int, j: int):
    if not (1 <= i <= size and 1 <= j <= size) or i == j:
        raise BadIndex(f"({i},{j}) for size {size}")


@dataclass(frozen=True)
class ElementaryWord:
    ring: Ring
    family: str
    size: int
    atoms: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.size < 1 or (self.family == SYMPLECTIC and self.size % 2):
            raise BadIndex(f"bad size {self.size} for {self.family}")
        object.__setattr__(self, "atoms", tuple(self.atoms))
        for atom in self.atoms:
            _check_index(self.family, self.size, atom.i, atom.j)
            if isinstance(atom, ConjGen):
                o = atom.outer
                if (o.ring, o.family, o.size) != (self.ring, self.family, self.size):
                    raise DescriptorMismatch("conjugator does not match the word")

    @classmethod
    def of(cls, ring, family, size, atoms=()):
        return cls(ring, family, size, tuple(atoms))

    def with_atoms(self, atoms) -> "ElementaryWord":
        return ElementaryWord(self.ring, self.family, self.size, tuple(atoms))

    def __add__(self, other: "ElementaryWord") -> "ElementaryWord":
        if (self.ring, self.family, self.size) != (other.ring, other.family, other.size):
            raise DescriptorMismatch("cannot concatenate words of different shape")
        return self.with_atoms(self.atoms + other.atoms)

    def __len__(self):
        return len(self.atoms)

    def inverse(self) -> "ElementaryWord":
        return word_inverse(self)

    def evaluate(self) -> Matrix:
        return word_eval(self)

    def apply_to_rows(self, rows):
        """Right-multiply the list-of-lists ``rows`` by this word in place."""
        for atom in self.atoms:
            _apply_atom(self.ring, self.family, rows, atom)
        return rows

    def apply_to_vector(self, v: Sequence) -> list:
        rows = [list(v)]
        self.apply_to_rows(rows)
        return rows[0]

    def count(self) -> int:
        """Total number of generator applications, conjugators included."""
        total = 0
        for atom in self.atoms:
            total += 1
            if isinstance(atom, ConjGen):
                total += 2 * atom.outer.count()
        return total


def _apply_gen(R: Ring, family: str, rows, i: int, j: int, a):
    if R.is_zero(a):
        return
    add, mul, is_zero = R.add, R.mul, R.is_zero
    i0, j0 = i - 1, j - 1
    if family == LINEAR or i == sigma_index(j):
        for r in rows:
            x = r[i0]
            if not is_zero(x):
                r[j0] = add(r[j0], mul(x, a))
        return
    # se_ij(a) = I + a E_ij - (-1)^(i+j) a E_{s(j) s(i)}
    b = a if (i + j) % 2 else R.neg(a)
    si0, sj0 = sigma_index(i) - 1, sigma_index(j) - 1
    for r in rows:
        x, y = r[i0], r[sj0]
        if not is_zero(x):
            r[j0] = add(r[j0], mul(x, a))
        if not is_zero(y):
            r[si0] = add(r[si0], mul(y, b))


def _apply_atom(R: Ring, family: str, rows, atom: Atom, sign: bool = False):
    a = R.neg(atom.a) if sign else atom.a
    if isinstance(atom, PlainGen):
        _apply_gen(R, family, rows, atom.i, atom.j, a)
        return
    outer = atom.outer
    for inner in outer.atoms:
        _apply_atom(R, family, rows, inner)
    _apply_gen(R, family, rows, atom.i, atom.j, a)
    for inner in reversed(outer.atoms):
        _apply_atom(R, family, rows, inner, sign=True)


def atom_inverse(R: Ring, atom: Atom) -> Atom:
    if isinstance(atom, PlainGen):
        return PlainGen(atom.i, atom.j, R.neg(atom.a))
    cert = None if atom.cert is None else tuple(R.neg(c) for c in atom.cert)
    return ConjGen(atom.outer, atom.i, atom.j, R.neg(atom.a), cert)


def word_inverse(w: ElementaryWord) -> ElementaryWord:
    return w.with_atoms(atom_inverse(w.ring, a) for a in reversed(w.atoms))


def word_eval(w: ElementaryWord) -> Matrix:
    R = w.ring
    rows = Matrix.identity(R, w.size).lists()
    w.apply_to_rows(rows)
    return Matrix(R, rows)


def elem_generator(family: str, size: int, i: int, j: int, a, ring: Ring) -> Matrix:
    """Generator matrix built entry by entry (independent of the column kernel)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == SYMPLECTIC and size % 2:
        raise BadIndex(f"odd size {size} for the symplectic family")
    _check_index(family, size, i, j)
    a = ring.coerce(a)
    M = Matrix.identity(ring, size).lists()
    M[i - 1][j - 1] = ring.add(M[i - 1][j - 1], a)
    if family == SYMPLECTIC and i != sigma_index(j):
        coef = a if (i + j) % 2 else ring.neg(a)
        si, sj = sigma_index(i) - 1, sigma_index(j) - 1
        M[sj][si] = ring.add(M[sj][si], coef)
    return Matrix(ring, M)


def gen_word(ring: Ring, family: str, size: int, *triples) -> ElementaryWord:
    """Word of plain generators from ``(i, j, a)`` triples."""
    return ElementaryWord(ring, family, size, tuple(PlainGen(i, j, ring.coerce(a)) for i, j, a in triples))


def map_word(w: ElementaryWord, target: Ring, outer_map, inner_map=None, cert_map=None) -> ElementaryWord:
    """Rebuild ``w`` over ``target``.

    Conjugator arguments go through ``outer_map``; top-level generator
    arguments through ``inner_map`` (defaults to ``outer_map``).
    """
    inner_map = inner_map or outer_map

    def outer_word(o: ElementaryWord) -> ElementaryWord:
        return map_word(o, target, outer_map)

    atoms = []
    for atom in w.atoms:
        if isinstance(atom, PlainGen):
            atoms.append(PlainGen(atom.i, atom.j, inner_map(atom.a)))
        else:
            cert = None
            if atom.cert is not None and cert_map is not None:
                cert = tuple(cert_map(c) for c in atom.cert)
            atoms.append(ConjGen(outer_word(atom.outer), atom.i, atom.j, inner_map(atom.a), cert))
    return ElementaryWord(target, w.family, w.size, tuple(atoms))


def apply_hom_word(h: RingHom, w: ElementaryWord) -> ElementaryWord:
    if w.ring != h.source:
        raise DescriptorMismatch(f"{h!r} cannot act on a word over {w.ring}")
    return map_word(w, h.target, h, cert_map=h)


def is_relative_word(w: ElementaryWord, ideal: Ideal) -> bool:
    """Every atom is a generator with argument in ``ideal`` or a conjugate of one."""
    if ideal.ring != w.ring:
        raise DescriptorMismatch(f"{ideal.ring} vs {w.ring}")
    for atom in w.atoms:
        cert = atom.cert if isinstance(atom, ConjGen) else None
        if not ideal.member(atom.a, cert):
            return False
    return True


# ---------------------------------------------------------------------------
# Whitehead factorizations


def _block_upper(R, n, M, atoms):
    for i in range(n):
        for j in range(n):
            if not R.is_zero(M[i][j]):
                atoms.append(PlainGen(i + 1, n + j + 1, M[i][j]))


def _block_lower(R, n, M, atoms):
    for i in range(n):
        for j in range(n):
            if not R.is_zero(M[i][j]):
                atoms.append(PlainGen(n + i + 1, j + 1, M[i][j]))


def whitehead_word(gamma: Matrix) -> ElementaryWord:
    """Linear word of size ``2n`` evaluating to ``gamma (+) gamma^-1``.

    Uses ``[[I,g],[0,I]] [[I,0],[-g^-1,I]] [[I,g],[0,I]] [[0,-I],[I,0]]`` and
    writes the rotation as ``[[I,-I],[0,I]] [[I,0],[I,I]] [[I,-I],[0,I]]``.
    """
    if not gamma.is_square():
        raise NotInvertible("non-square matrix")
    R = gamma.ring
    n = gamma.nrows
    ginv = inverse(gamma)
    g = gamma.rows
    neg_ginv = [[R.neg(x) for x in r] for r in ginv.rows]
    minus_id = [[R.neg(R.one) if i == j else R.zero for j in range(n)] for i in range(n)]
    plus_id = Matrix.identity(R, n).rows
    atoms = []
    _block_upper(R, n, g, atoms)
    _block_lower(R, n, neg_ginv, atoms)
    _block_upper(R, n, g, atoms)
    _block_upper(R, n, minus_id, atoms)
    _block_lower(R, n, plus_id, atoms)
    _block_upper(R, n, minus_id, atoms)
    return ElementaryWord(R, LINEAR, 2 * n, tuple(atoms))


def relative_diag_word(ring: Ring, size: int, p: int, q: int, u, cert=None) -> ElementaryWord:
    """Relative linear word for ``diag`` with ``u`` at ``p`` and ``u^-1`` at ``q``.

    For a unit ``u`` congruent to 1 modulo an ideal every argument below lies in
    that ideal:  ``e_qp(1 - u^-1) . e_qp(-1) e_pq(u - 1) e_qp(1) . e_pq(-(u - 1) u^-1)``.
    ``cert`` optionally proves ``u - 1`` in the ideal.
    """
    R = ring
    u = R.coerce(u)
    uinv = R.inv(u)
    x = R.sub(u, R.one)
    outer = ElementaryWord(R, LINEAR, size, (PlainGen(q, p, R.neg(R.one)),))
    atoms = (
        PlainGen(q, p, R.sub(R.one, uinv)),
        ConjGen(outer, p, q, x, cert),
        PlainGen(p, q, R.neg(R.mul(x, uinv))),
    )
    return ElementaryWord(R, LINEAR, size, atoms)


def homotopy_word(w: ElementaryWord, var: str = "X") -> ElementaryWord:
    """Replace each top-level argument ``a`` by ``X*a`` over ``R[X]``.

    Conjugators are carried over as constants, so evaluation at ``X = 0``
    is the identity and at ``X = 1`` is the original matrix.
    """
    R = w.ring
    P = Polynomial(R, var)
    const = ConstantInclusion(R, P)

    def times_x(a):
        return P.trim((R.zero, a))

    return map_word(w, P, const, times_x, cert_map=times_x)


# ---------------------------------------------------------------------------
# unimodular rows


def _solve_unimodular(R: Ring, v: Sequence):
    """Witness ``w`` with ``sum v_i w_i = 1`` when a gcd method exists, else None."""
    try:
        if isinstance(R, IntegersMod) or R.is_euclidean:
            return [R.coerce(c) for c in Ideal.of(R, v, "gcd").express(R.one)]
    except Exception:
        return None
    return None


@dataclass(frozen=True)
class UnimodularRow:
    """Row ``v`` with a witness ``w`` (``sum v_i w_i = 1``), optionally relative to ``ideal``."""

    ring: Ring
    entries: tuple
    witness: tuple
    ideal: Optional[Ideal] = None
    certs: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        R = self.ring
        object.__setattr__(self, "entries", tuple(R.coerce(x) for x in self.entries))
        object.__setattr__(self, "witness", tuple(R.coerce(x) for x in self.witness))
        if len(self.entries) != len(self.witness) or not self.entries:
            raise SizeMismatch("row and witness lengths differ")
        if not R.is_one(R.sum(R.mul(a, b) for a, b in zip(self.entries, self.witness))):
            raise NotUnimodular("witness does not pair to 1")
        if self.ideal is not None:
            if self.ideal.ring != R:
                raise DescriptorMismatch("ideal lives in a different ring")
            if not self.is_relative():
                raise NotRelative("row is not congruent to e1 modulo the ideal")

    @classmethod
    def make(cls, ring: Ring, entries, witness=None, ideal=None, certs=None) -> "UnimodularRow":
        entries = [ring.coerce(x) for x in entries]
        if witness is None:
            witness = _solve_unimodular(ring, entries)
            if witness is None:
                raise NotUnimodular("no witness supplied and none could be computed")
        return cls(ring, tuple(entries), tuple(witness), ideal, certs)

    @property
    def n(self) -> int:
        return len(self.entries)

    def offsets(self):
        """``(v_1 - 1, v_2, ..., v_n)``: the entries that must lie in the ideal."""
        R = self.ring
        return [R.sub(self.entries[0], R.one)] + list(self.entries[1:])

    def is_relative(self) -> bool:
        ideal = self.ideal
        for k, x in enumerate(self.offsets()):
            if self.ring.is_zero(x):
                continue
            cert = self.certs[k] if self.certs is not None else None
            if not ideal.member(x, cert):
                return False
        return True

    def is_e1(self) -> bool:
        R = self.ring
        return R.is_one(self.entries[0]) and all(R.is_zero(x) for x in self.entries[1:])

    def fmt(self) -> str:
        f = self.ring.fmt
        return "[" + ",".join(f(x) for x in self.entries) + "] witness [" + ",".join(f(x) for x in self.witness) + "]"


def e1(R: Ring, n: int) -> list:
    return [R.one] + [R.zero] * (n - 1)


def reduce_to_principal(v: UnimodularRow):
    """Return ``(word, v')`` with ``v . word = v' = (1 - a1, a1 a2, ..., a1 an)``.

    The word is the product of ``e_1k(-a_k)``; ``v'`` is relative to ``<a1>``.
    """
    if v.ideal is None:
        raise NotRelative("row carries no ideal")
    R = v.ring
    a = v.offsets()
    a1 = R.neg(a[0])
    n = v.n
    word = ElementaryWord(R, LINEAR, n, tuple(PlainGen(1, k + 1, R.neg(a[k])) for k in range(1, n)))
    image = word.apply_to_vector(v.entries)
    # new witness: word^-1 applied to the witness column
    winv = word_eval(word_inverse(word))
    new_w = [R.sum(R.mul(winv.rows[i][j], v.witness[j]) for j in range(n)) for i in range(n)]
    ideal = Ideal.of(R, [a1])
    certs = ((R.neg(R.one),),) + tuple((a[k],) for k in range(1, n))
    return word, UnimodularRow(R, tuple(image), tuple(new_w), ideal, certs)


def row_reduce_euclidean(v, ring: Optional[Ring] = None) -> ElementaryWord:
    """Word ``w`` with ``v . word_eval(w) = e1`` by Euclid on the columns.

    Works for every ``n >= 2``: a unit ``u`` left in the first slot is
    cleared with ``e_12(1) e_21(u^-1 - 1) e_12(-u)``.
    """
    if isinstance(v, UnimodularRow):
        R, entries = v.ring, list(v.entries)
    else:
        R, entries = ring, [ring.coerce(x) for x in v]
    if not (R.is_euclidean):
        raise NotEuclidean(str(R))
    n = len(entries)
    atoms = []

    def op(i, j, lam):
        # column j += lam * column i  (0-based here)
        if R.is_zero(lam):
            return
        entries[j] = R.add(entries[j], R.mul(lam, entries[i]))
        atoms.append(PlainGen(i + 1, j + 1, lam))

    while True:
        nz = [k for k in range(n) if not R.is_zero(entries[k])]
        if not nz:
            raise NotUnimodular("zero row")
        if len(nz) == 1:
            break
        p = min(nz, key=lambda k: (R.norm(entries[k]), k))
        for q in nz:
            if q != p:
                quo, _ = R.divmod(entries[q], entries[p])
                op(p, q, R.neg(quo))
    p = nz[0]
    u = entries[p]
    if not R.is_unit(u):
        raise NotUnimodular(f"gcd {R.fmt(u)} is not a unit")
    uinv = R.inv(u)
    if p != 0:
        op(p, 0, uinv)
        op(0, p, R.neg(u))
    elif not R.is_one(u):
        if n < 2:
            raise NeedsDimensionThree("a 1x1 unit cannot be cleared by elementary operations")
        op(0, 1, R.one)
        op(1, 0, R.sub(uinv, R.one))
        op(0, 1, R.neg(u))
    return ElementaryWord(R, LINEAR, n, tuple(atoms))
