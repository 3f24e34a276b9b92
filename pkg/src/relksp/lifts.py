"""Lifts of relative rows, matrices and words to the excision algebra ``R (+) I``.

A relative object over ``(R, I)`` lifts to one over ``(R (+) I, 0 (+) I)``:
the identity part is carried by the first coordinate and the ideal part by
the second, so that ``ProjectPi`` recovers the original.
"""
from __future__ import annotations

import itertools
from typing import Optional

from .elementary import (
    ElementaryWord,
    UnimodularRow,
    is_relative_word,
    map_word,
)
from .errors import (
    NotADomain,
    NotRelative,
    NotSpecial,
    SizeMismatch,
    WitnessNotFound,
)
from .matrices import Matrix, apply_hom, chi, det, inverse, is_relative, is_symplectic
from .rings import (
    BarSplit,
    CanonicalInclusion,
    Excision,
    ExcisionLocalizationIso,
    Ideal,
    IntegersMod,
    LocalizationInclusion,
    Localized,
    ProjectPi,
    Ring,
    split_ideal,
)

__all__ = [
    "UnimodularRow", "vaserstein_witness", "lift_row", "lift_entries", "lift_matrix",
    "lift_alt", "lift_word", "normalize_relative", "localization_compat", "project",
]

DEFAULT_WITNESS_BOUND = 64
_MAX_CANDIDATES = 200_000


def _is_vaserstein(R: Ring, ideal: Ideal, witness) -> bool:
    offsets = [R.sub(witness[0], R.one)] + list(witness[1:])
    try:
        return all(R.is_zero(x) or ideal.member(x) for x in offsets)
    except Exception:
        return False


def vaserstein_witness(v: UnimodularRow, bound: int = DEFAULT_WITNESS_BOUND):
    """Witness ``(1 + w1, w2, ..., wn)`` with every ``w_k`` in the ideal.

    The condition ``v1 (1 + w1) + sum_{k>=2} v_k w_k = 1`` is linear in the
    ``w_k``; writing ``w_k = sum_l c_kl g_l`` over the ideal generators it
    asks for ``1 - v1`` in the ideal generated by the products ``v_k g_l``.
    Euclidean bases solve it by extended gcd, others by enumerating
    ``c_kl`` with ``|c_kl| <= bound``.
    """
    R, ideal = v.ring, v.ideal
    if ideal is None:
        raise NotRelative("row carries no ideal")
    if _is_vaserstein(R, ideal, v.witness):
        return list(v.witness)
    n = v.n
    gens = ideal.generators
    products = [R.mul(vk, g) for vk in v.entries for g in gens]
    target = R.sub(R.one, v.entries[0])
    coeffs = None
    if isinstance(R, IntegersMod) or R.is_euclidean:
        try:
            coeffs = Ideal.of(R, products, "gcd").express(target)
        except Exception:
            coeffs = None
    if coeffs is None:
        coeffs = _enumerate(R, products, target, bound)
    if coeffs is None:
        raise WitnessNotFound(f"no witness with coefficients up to {bound}")
    r = len(gens)
    w = []
    for k in range(n):
        wk = R.sum(R.mul(coeffs[k * r + l], gens[l]) for l in range(r))
        w.append(wk)
    w[0] = R.add(R.one, w[0])
    total = R.sum(R.mul(a, b) for a, b in zip(v.entries, w))
    if not R.is_one(total):
        raise WitnessNotFound("witness verification failed")
    return w


def _enumerate(R, products, target, bound):
    m = len(products)
    tried = 0
    for h in range(bound + 1):
        rng = range(-h, h + 1)
        for combo in itertools.product(rng, repeat=m):
            if max((abs(c) for c in combo), default=0) != h:
                continue
            tried += 1
            if tried > _MAX_CANDIDATES:
                return None
            s = R.sum(R.mul(R.from_int(c), p) for c, p in zip(combo, products))
            if R.eq(s, target):
                return [R.from_int(c) for c in combo]
    return None


def lift_row(v: UnimodularRow, witness=None, bound: int = DEFAULT_WITNESS_BOUND) -> UnimodularRow:
    """``v_L = ((1, v1 - 1), (0, v2), ..., (0, vn))`` with its lifted witness."""
    R, ideal = v.ring, v.ideal
    if ideal is None:
        raise NotRelative("row carries no ideal")
    if witness is not None:
        witness = [R.coerce(x) for x in witness]
        if not _is_vaserstein(R, ideal, witness):
            raise WitnessNotFound("supplied witness is not congruent to e1")
        if not R.is_one(R.sum(R.mul(a, b) for a, b in zip(v.entries, witness))):
            raise WitnessNotFound("supplied witness does not pair to 1")
    else:
        witness = vaserstein_witness(v, bound)
    E = Excision(R, ideal)
    offs = v.offsets()
    woffs = [R.sub(witness[0], R.one)] + list(witness[1:])
    entries = [(R.one, offs[0])] + [(R.zero, x) for x in offs[1:]]
    wl = [(R.one, woffs[0])] + [(R.zero, x) for x in woffs[1:]]
    return UnimodularRow(E, tuple(entries), tuple(wl), split_ideal(E))


def lift_entries(M: Matrix, ideal: Ideal) -> Matrix:
    """Entrywise ``x -> (0, x)`` for a matrix with entries in the ideal."""
    R = M.ring
    E = Excision(R, ideal)
    return Matrix(E, [[(R.zero, x) for x in r] for r in M.rows])


def lift_matrix(alpha: Matrix, ideal: Ideal, kind: Optional[str] = None, base: Optional[Matrix] = None,
                check: bool = True) -> Matrix:
    """``alpha_L = base + (alpha - base)_L`` with ``base`` the identity by default.

    ``kind`` is ``"sl"`` or ``"sp"`` to verify ``det(alpha_L) = (1,0)`` or
    ``alpha_L^T chi alpha_L = chi`` before returning.
    """
    R = alpha.ring
    if not alpha.is_square():
        raise SizeMismatch("lift needs a square matrix")
    if base is None:
        base = Matrix.identity(R, alpha.nrows)
    diff = alpha - base
    if check and not is_relative(diff + Matrix.identity(R, alpha.nrows), ideal):
        raise NotRelative("matrix is not congruent to the base modulo the ideal")
    E = Excision(R, ideal)
    incl = CanonicalInclusion(E)
    lifted = apply_hom(incl, base) + lift_entries(diff, ideal)
    if kind == "sl":
        if not E.is_one(det(lifted)):
            raise NotSpecial("det of the lift is not (1,0)")
    elif kind == "sp":
        if not is_symplectic(lifted):
            raise NotSpecial("lift is not symplectic")
    return lifted


def lift_alt(alpha: Matrix, ideal: Ideal) -> Matrix:
    """``chi + (alpha - chi)_L`` for an alternating matrix congruent to ``chi``."""
    if alpha.nrows % 2:
        raise SizeMismatch("alternating representatives have even size")
    return lift_matrix(alpha, ideal, base=chi(alpha.ring, alpha.nrows // 2))


def lift_word(w: ElementaryWord, ideal: Ideal) -> ElementaryWord:
    """Conjugator arguments ``r -> (r, 0)``; generator arguments ``a -> (0, a)``."""
    if not is_relative_word(w, ideal):
        raise NotRelative("word has a generator argument outside the ideal")
    R = w.ring
    E = Excision(R, ideal)
    return map_word(w, E, lambda r: (r, R.zero), lambda a: (R.zero, a))


def project(M: Matrix) -> Matrix:
    return apply_hom(ProjectPi(M.ring), M)


def normalize_relative(gamma: Matrix) -> Matrix:
    """``Gamma . incl(bar(Gamma))^-1``: congruent to I modulo ``0 (+) I``."""
    E = gamma.ring
    bar = apply_hom(BarSplit(E), gamma)
    return gamma @ apply_hom(CanonicalInclusion(E), inverse(bar))


def localization_compat(alpha: Matrix, ideal: Ideal, f) -> bool:
    """Compare ``(alpha_L)_(f,0)`` with ``(alpha_f)_L`` through the canonical isomorphism."""
    R = alpha.ring
    if not R.is_domain:
        raise NotADomain(str(R))
    f = R.coerce(f)
    lifted = lift_matrix(alpha, ideal)
    E = lifted.ring
    LE = Localized(E, (f, R.zero))
    left = apply_hom(LocalizationInclusion(E, LE), lifted)
    iso = ExcisionLocalizationIso(LE)
    left = apply_hom(iso, left)
    Rf = Localized(R, f)
    alpha_f = apply_hom(LocalizationInclusion(R, Rf), alpha)
    right = lift_matrix(alpha_f, ideal.localize(Rf), check=False)
    return left == right
