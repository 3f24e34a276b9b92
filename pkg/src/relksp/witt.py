"""Representative-level calculus for elementary symplectic Witt groups.

Classes are never canonicalized.  Equivalence is always witnessed by an
:class:`EquivCertificate` ``(t, word)`` meaning

    A (+) chi_{n+t} == eps^T (B (+) chi_{m+t}) eps,   eps = word_eval(word)

for ``A`` of size ``2m`` and ``B`` of size ``2n``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .elementary import (
    LINEAR,
    ElementaryWord,
    PlainGen,
    is_relative_word,
    relative_diag_word,
    word_eval,
)
from .errors import (
    CertificateInvalid,
    DescriptorMismatch,
    ExhaustedBudget,
    HypothesisFailed,
    NotAlternating,
    NotInKernelC,
    NotInvertible,
    NotRelative,
    OddSize,
    PfaffianNotUnit,
    SizeMismatch,
)
from .matrices import (
    Matrix,
    chi,
    inverse,
    is_alternating,
    is_relative,
    perp,
    pfaffian,
    sigma,
)
from .rings import Ideal, Ring


@dataclass(frozen=True, eq=False)
class AltRep:
    """Invertible alternating matrix, optionally congruent to ``chi`` modulo ``ideal``."""

    matrix: Matrix
    ideal: Optional[Ideal] = None

    def __post_init__(self):
        M = self.matrix
        if M.nrows % 2 or not M.is_square():
            raise OddSize(f"size {M.shape}")
        if not is_alternating(M):
            raise NotAlternating("representative is not alternating")
        pf = pfaffian(M)
        if not M.ring.is_unit(pf):
            raise NotInvertible("Pfaffian is not a unit")
        object.__setattr__(self, "_pf", pf)
        if self.ideal is not None:
            if self.ideal.ring != M.ring:
                raise DescriptorMismatch("ideal lives in a different ring")
            shifted = M - chi(M.ring, M.nrows // 2) + Matrix.identity(M.ring, M.nrows)
            if not is_relative(shifted, self.ideal):
                raise NotRelative("representative is not congruent to chi")

    @property
    def ring(self) -> Ring:
        return self.matrix.ring

    @property
    def half(self) -> int:
        return self.matrix.nrows // 2

    @property
    def pf(self):
        return self._pf

    @property
    def pfaffian_one(self) -> bool:
        return self.ring.is_one(self._pf)

    def __eq__(self, other):
        return isinstance(other, AltRep) and self.matrix == other.matrix and self.ideal == other.ideal

    __hash__ = None


@dataclass(frozen=True)
class EquivCertificate:
    t: int
    word: ElementaryWord

    def padded(self) -> "EquivCertificate":
        """The same witness after one more ``chi_1`` block on both sides."""
        return EquivCertificate(self.t + 1, widen_word(self.word, 2))


def widen_word(w: ElementaryWord, extra: int) -> ElementaryWord:
    """``w (+) I_extra``: the same atoms acting on a larger space."""
    def grow(word):
        atoms = []
        for a in word.atoms:
            if isinstance(a, PlainGen):
                atoms.append(a)
            else:
                atoms.append(type(a)(grow(a.outer), a.i, a.j, a.a, a.cert))
        return ElementaryWord(word.ring, word.family, word.size + extra, tuple(atoms))
    return grow(w)


def _same_context(A: AltRep, B: AltRep):
    if A.ring != B.ring:
        raise DescriptorMismatch(f"{A.ring} vs {B.ring}")
    if A.ideal != B.ideal:
        raise DescriptorMismatch("representatives are relative to different ideals")


def witt_perp(A: AltRep, B: AltRep) -> AltRep:
    _same_context(A, B)
    return AltRep(perp(A.matrix, B.matrix), A.ideal)


def witt_inverse_rep(A: AltRep) -> AltRep:
    """``sigma_n A^-1 sigma_n``."""
    s = sigma(A.ring, A.half)
    return AltRep(s @ inverse(A.matrix) @ s, A.ideal)


def witt_pf(A: AltRep):
    """Pfaffian of a relative representative, checked to lie in ``C``."""
    R = A.ring
    pf = A.pf
    if not R.is_unit(pf):
        raise PfaffianNotUnit(R.fmt(pf))
    if A.ideal is not None and not A.ideal.member(R.sub(pf, R.one)):
        raise PfaffianNotUnit(f"Pf - 1 = {R.fmt(R.sub(pf, R.one))} is not in {A.ideal.fmt()}")
    return pf


def alpha_unit(R: Ring, a) -> Matrix:
    a = R.coerce(a)
    return Matrix(R, [[R.zero, a], [R.neg(a), R.zero]])


def pf_section(R: Ring, a, ideal: Ideal) -> AltRep:
    """The representative ``[[0, a], [-a, 0]]`` of a unit ``a`` congruent to 1."""
    a = R.coerce(a)
    if not R.is_unit(a) or not ideal.member(R.sub(a, R.one)):
        raise NotInKernelC(f"{R.fmt(a)} is not a unit congruent to 1 modulo {ideal.fmt()}")
    return AltRep(alpha_unit(R, a), ideal)


def hyperbolic_H(alpha: Matrix, ideal: Optional[Ideal] = None) -> AltRep:
    if not alpha.is_square():
        raise SizeMismatch(str(alpha.shape))
    if alpha.nrows % 2:
        raise OddSize(f"size {alpha.nrows}")
    c = chi(alpha.ring, alpha.nrows // 2)
    return AltRep(alpha.transpose() @ c @ alpha, ideal)


def check_equiv(A: AltRep, B: AltRep, cert: EquivCertificate) -> bool:
    _same_context(A, B)
    R = A.ring
    m, n, t = A.half, B.half, cert.t
    w = cert.word
    size = 2 * (m + n + t)
    if w.size != size or w.ring != R:
        raise SizeMismatch(f"certificate word has size {w.size}, expected {size}")
    if w.family != LINEAR:
        return False
    if A.ideal is not None and not is_relative_word(w, A.ideal):
        return False
    lhs = perp(A.matrix, chi(R, n + t)) if n + t else A.matrix
    inner = perp(B.matrix, chi(R, m + t)) if m + t else B.matrix
    e = word_eval(w)
    return lhs == e.transpose() @ inner @ e


def whitehead_certificate(R: Ring, ideal: Ideal, a, b):
    """Representatives and certificate for ``[alpha_ab] = [alpha_a] + [alpha_b]``.

    With ``D = diag(b^-1, 1, b, 1)`` one has
    ``D^T (alpha_ab (+) chi_1) D = alpha_a (+) alpha_b``; the certificate word
    evaluates to ``D^-1 (+) I_4`` and is relative.
    """
    a, b = R.coerce(a), R.coerce(b)
    A = AltRep(perp(alpha_unit(R, R.mul(a, b)), chi(R, 1)), ideal)
    B = AltRep(perp(alpha_unit(R, a), alpha_unit(R, b)), ideal)
    word = relative_diag_word(R, 8, 1, 3, b)
    return A, B, EquivCertificate(0, word)


def _relative_arguments(R: Ring, ideal: Ideal, height: int):
    out = []
    for c in range(1, height + 1):
        for sgn in (1, -1):
            for g in ideal.generators:
                x = R.mul(R.from_int(sgn * c), g)
                if not R.is_zero(x) and not any(R.eq(x, y) for y in out):
                    out.append(x)
    return out


def search_equiv(A: AltRep, B: AltRep, budget: int = 10_000, max_atoms: int = 3, max_height: int = 3,
                 paddings=(0, 1)) -> EquivCertificate:
    """Enumerate relative words by atom count, then coefficient height.

    Every candidate is verified with :func:`check_equiv`; the first valid one
    in this fixed order is returned.  ``ExhaustedBudget`` means "unknown".
    """
    _same_context(A, B)
    R = A.ring
    ideal = A.ideal
    spent = 0
    for t in paddings:
        size = 2 * (A.half + B.half + t)
        empty = ElementaryWord(R, LINEAR, size)
        if spent >= budget:
            raise ExhaustedBudget(f"budget {budget} spent")
        spent += 1
        cert = EquivCertificate(t, empty)
        if check_equiv(A, B, cert):
            return cert
    for count in range(1, max_atoms + 1):
        seen_below = []
        for height in range(1, max_height + 1):
            if ideal is not None:
                args = _relative_arguments(R, ideal, height)
            else:
                args = [R.from_int(s * c) for c in range(1, height + 1) for s in (1, -1)]
            fresh = [x for x in args if not any(R.eq(x, y) for y in seen_below)]
            for t in paddings:
                size = 2 * (A.half + B.half + t)
                local_pairs = [(i, j) for i in range(1, size + 1) for j in range(1, size + 1) if i != j]
                gens = [(i, j, x) for (i, j) in local_pairs for x in args]
                for combo in itertools.product(gens, repeat=count):
                    if fresh and not any(any(R.eq(g[2], y) for y in fresh) for g in combo):
                        continue
                    if spent >= budget:
                        raise ExhaustedBudget(f"budget {budget} spent")
                    spent += 1
                    word = ElementaryWord(R, LINEAR, size, tuple(PlainGen(i, j, x) for i, j, x in combo))
                    cert = EquivCertificate(t, word)
                    if check_equiv(A, B, cert):
                        return cert
            seen_below = args
    raise ExhaustedBudget(f"no certificate within {max_atoms} atoms and height {max_height}")


def kernel_of_H_construct(alpha: Matrix, gamma: AltRep, s: int, eps_word: ElementaryWord,
                          ideal: Optional[Ideal] = None) -> Matrix:
    """Build ``alpha'`` symplectic for ``phi = chi_{n+s} (+) gamma``.

    Requires ``eps^T (alpha^T chi_n alpha (+) chi_s) eps = chi_{s+n}`` with
    ``eps = word_eval(eps_word)``.  Then
    ``alpha' = (alpha (+) I_{2s + 2k}) (eps (+) I_{2k})`` where ``gamma`` has
    size ``2k``.
    """
    R = alpha.ring
    if alpha.nrows % 2 or not alpha.is_square():
        raise OddSize(str(alpha.shape))
    n = alpha.nrows // 2
    k = gamma.half
    if eps_word.size != 2 * (n + s) or eps_word.ring != R:
        raise CertificateInvalid(f"certificate word has size {eps_word.size}, expected {2 * (n + s)}")
    if ideal is not None and not is_relative_word(eps_word, ideal):
        raise CertificateInvalid("certificate word is not relative")
    e = word_eval(eps_word)
    H = alpha.transpose() @ chi(R, n) @ alpha
    inner = perp(H, chi(R, s)) if s else H
    if e.transpose() @ inner @ e != chi(R, n + s):
        raise CertificateInvalid("eps^T (H(alpha) + chi_s) eps != chi")
    left = perp(alpha, Matrix.identity(R, 2 * s + 2 * k))
    right = perp(e, Matrix.identity(R, 2 * k))
    result = left @ right
    phi = perp(chi(R, n + s), gamma.matrix)
    if result.transpose() @ phi @ result != phi:
        raise CertificateInvalid("constructed matrix is not symplectic for chi (+) gamma")
    return result


def kernel_form(alpha: Matrix, gamma: AltRep, s: int) -> Matrix:
    """The form ``chi_{n+s} (+) gamma`` preserved by the constructed matrix."""
    return perp(chi(alpha.ring, alpha.nrows // 2 + s), gamma.matrix)


def extract_block(delta: Matrix, theta1: AltRep, theta2: AltRep) -> Matrix:
    """Lower-right block ``beta`` of ``delta`` under the stated hypotheses.

    Hypotheses: the first column of ``delta`` is ``e1`` and
    ``delta^T (chi_1 (+) theta1) delta = chi_1 (+) theta2``.  The conclusion
    ``q = 1``, ``v = 0`` (second row) and ``beta^T theta1 beta = theta2`` is
    asserted before returning.
    """
    R = delta.ring
    size = delta.nrows
    if not delta.is_square() or size != 2 + theta1.matrix.nrows or theta1.matrix.shape != theta2.matrix.shape:
        raise HypothesisFailed("sizes do not match")
    col = delta.column(0)
    if not (R.is_one(col[0]) and all(R.is_zero(x) for x in col[1:])):
        raise HypothesisFailed("first column of delta is not e1")
    c1 = chi(R, 1)
    if delta.transpose() @ perp(c1, theta1.matrix) @ delta != perp(c1, theta2.matrix):
        raise HypothesisFailed("delta does not carry chi_1 + theta1 to chi_1 + theta2")
    q = delta.rows[1][1]
    v = delta.rows[1][2:]
    beta = delta.submatrix(range(2, size), range(2, size))
    if not R.is_one(q) or any(not R.is_zero(x) for x in v):
        raise HypothesisFailed("block form conclusion q = 1, v = 0 failed")
    if beta.transpose() @ theta1.matrix @ beta != theta2.matrix:
        raise HypothesisFailed("beta^T theta1 beta != theta2")
    return beta
