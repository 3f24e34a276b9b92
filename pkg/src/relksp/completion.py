"""Unimodular-row completion and symplectic patching."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .elementary import (
    LINEAR,
    ElementaryWord,
    PlainGen,
    UnimodularRow,
    e1,
    row_reduce_euclidean,
    word_eval,
)
from .errors import (
    ExhaustedBudget,
    HypothesisFailed,
    Incompatible,
    NotComaximal,
    NotDivisible,
    NotRelative,
    SizeMismatch,
)
from .lifts import lift_row, normalize_relative, project
from .matrices import Matrix, apply_hom, is_relative, is_symplectic
from .rings import (
    Excision,
    Ideal,
    LocalizationInclusion,
    Localized,
    Ring,
)


# ---------------------------------------------------------------------------
# patching


def _reconstruct_divide(R: Ring, num, k: int, s):
    return R.exact_div(num, R.pow(s, k))


def _reconstruct_bezout(R: Ring, a, k: int, s, b, m: int, t):
    sk, tm = R.pow(s, k), R.pow(t, m)
    g, u, v = R.xgcd(sk, tm)
    if not R.is_unit(g):
        raise NotComaximal("powers of s and t are not comaximal")
    ginv = R.inv(g)
    # x = x (s^k u + t^m v) / g = (a u + b v) / g
    return R.mul(R.add(R.mul(a, u), R.mul(b, v)), ginv)


def patch_symplectic(s, t, alpha1: Matrix, alpha2: Matrix, ideal: Optional[Ideal] = None,
                     symplectic: bool = True) -> Matrix:
    """Glue ``alpha1`` over ``R_s`` and ``alpha2`` over ``R_t`` into ``alpha`` over ``R``.

    Each entry is recovered twice: by exact division ``a / s^k`` and through
    a Bezout relation ``s^k u + t^m v = 1``.  The two must agree.
    """
    L1, L2 = alpha1.ring, alpha2.ring
    if not (isinstance(L1, Localized) and isinstance(L2, Localized) and L1.base == L2.base):
        raise SizeMismatch("inputs must be localizations of one ring")
    R = L1.base
    s, t = R.coerce(s), R.coerce(t)
    if not (R.eq(L1.denom, s) and R.eq(L2.denom, t)):
        raise SizeMismatch("localizations do not match s and t")
    if alpha1.shape != alpha2.shape:
        raise SizeMismatch(f"{alpha1.shape} vs {alpha2.shape}")
    if not R.is_unit(R.gcd(s, t)):
        raise NotComaximal(f"{R.fmt(s)} and {R.fmt(t)}")
    Lst = Localized(R, R.mul(s, t))
    img1 = apply_hom(LocalizationInclusion(L1, Lst), alpha1)
    img2 = apply_hom(LocalizationInclusion(L2, Lst), alpha2)
    if img1 != img2:
        raise Incompatible("the two matrices differ over R_st")
    rows = []
    for r1, r2 in zip(alpha1.rows, alpha2.rows):
        row = []
        for (a, k), (b, m) in zip(r1, r2):
            x = _reconstruct_divide(R, a, k, s)
            y = _reconstruct_bezout(R, a, k, s, b, m, t)
            if not R.eq(x, y):
                raise NotDivisible("reconstructions disagree")
            row.append(x)
        rows.append(row)
    alpha = Matrix(R, rows)
    if apply_hom(LocalizationInclusion(R, L1), alpha) != alpha1 or apply_hom(LocalizationInclusion(R, L2), alpha) != alpha2:
        raise Incompatible("patched matrix does not localize back")
    if symplectic and not is_symplectic(alpha):
        raise HypothesisFailed("patched matrix is not symplectic")
    if ideal is not None and not is_relative(alpha, ideal):
        raise NotRelative("patched matrix is not relative")
    return alpha


def localize_matrix(alpha: Matrix, f) -> Matrix:
    R = alpha.ring
    return apply_hom(LocalizationInclusion(R, Localized(R, R.coerce(f))), alpha)


# ---------------------------------------------------------------------------
# completers


def _excision_relative_word(v: UnimodularRow) -> Optional[ElementaryWord]:
    """Constructive completion of a lifted relative row over ``R (+) <m>``.

    The row keeps the shape ``((1, *), (0, *), ...)`` under two kinds of
    column operation: ``x_j += (lam, 0) x_i`` for ``i != 1`` and
    ``x_j += (0, lam) x_1`` for ``lam`` in the ideal.  On the projection
    ``p = pi(v)`` these are ``p_j += lam p_i``.  Euclid on columns ``2..n``
    leaves one entry ``g``; adding ``m p_1`` to a spare column and running
    Euclid again leaves a generator ``d`` of the ideal (``gcd(g, m p_1) = m``
    since ``p_1`` is coprime to ``g``), after which ``p_1 = 1 + m r`` and the
    last entry are cleared.
    """
    E = v.ring
    if not isinstance(E, Excision) or v.n < 3:
        return None
    R = E.base
    if not R.is_euclidean or v.ideal is None or v.ideal.mode != "split":
        return None
    x = v.entries
    if not (R.is_one(x[0][0]) and all(R.is_zero(c[0]) for c in x[1:])):
        return None
    try:
        m = E.ideal.generator()
    except Exception:
        return None
    n = v.n
    p = [R.add(c[0], c[1]) for c in x]
    atoms = []

    def free(i, j, lam):
        if R.is_zero(lam):
            return
        p[j] = R.add(p[j], R.mul(lam, p[i]))
        atoms.append(PlainGen(i + 1, j + 1, (lam, R.zero)))

    def restricted(j, lam):
        if R.is_zero(lam):
            return
        p[j] = R.add(p[j], R.mul(lam, p[0]))
        atoms.append(PlainGen(1, j + 1, (R.zero, lam)))

    def euclid(cols):
        while True:
            nz = [k for k in cols if not R.is_zero(p[k])]
            if len(nz) <= 1:
                return nz[0] if nz else None
            piv = min(nz, key=lambda k: (R.norm(p[k]), k))
            for k in nz:
                if k != piv:
                    q, _ = R.divmod(p[k], p[piv])
                    free(piv, k, R.neg(q))

    if R.is_zero(m):
        return ElementaryWord(E, LINEAR, n) if all(R.is_zero(c) for c in p[1:]) and R.is_one(p[0]) else None
    piv = euclid(list(range(1, n)))
    spare = next(k for k in range(1, n) if k != piv)
    restricted(spare, m)
    piv = euclid(list(range(1, n)))
    d = p[piv]
    if not R.divides(m, d) or not R.is_unit(R.exact_div(d, m)):
        return None
    r = R.exact_div(R.sub(p[0], R.one), d)
    if not R.is_zero(r):
        free(piv, 0, R.neg(r))
    restricted(piv, R.neg(d))
    if not (R.is_one(p[0]) and all(R.is_zero(c) for c in p[1:])):
        return None
    return ElementaryWord(E, LINEAR, n, tuple(atoms))


def _verify_word(v: UnimodularRow, w: ElementaryWord) -> bool:
    R = v.ring
    image = w.apply_to_vector(v.entries)
    return all(R.eq(a, b) for a, b in zip(image, e1(R, v.n)))


def _enumerate_words(v: UnimodularRow, budget: int, spent: int, max_height: int = 2, max_atoms: int = 4):
    R = v.ring
    n = v.n
    coeffs = [R.from_int(s * c) for c in range(1, max_height + 1) for s in (1, -1)]
    if isinstance(R, Excision):
        # keep to shape-preserving operations so every candidate stays meaningful
        base = R.base
        gens_ideal = [(base.zero, base.mul(base.from_int(s * c), g))
                      for g in R.ideal.generators for c in range(1, max_height + 1) for s in (1, -1)]
        cands = [(i, j, (c, base.zero)) for i in range(2, n + 1) for j in range(1, n + 1) if i != j
                 for c in [base.from_int(s * h) for h in range(1, max_height + 1) for s in (1, -1)]]
        cands += [(1, j, lam) for j in range(2, n + 1) for lam in gens_ideal]
    else:
        cands = [(i, j, c) for i in range(1, n + 1) for j in range(1, n + 1) if i != j for c in coeffs]
    for count in range(1, max_atoms + 1):
        for combo in itertools.product(cands, repeat=count):
            if spent >= budget:
                raise ExhaustedBudget(f"budget {budget} spent")
            spent += 1
            w = ElementaryWord(R, LINEAR, n, tuple(PlainGen(i, j, c) for i, j, c in combo))
            if _verify_word(v, w):
                return w
    raise ExhaustedBudget(f"no completion within {max_atoms} atoms")


def bounded_search_completer(v: UnimodularRow, budget: int = 100_000) -> ElementaryWord:
    """Word ``w`` with ``v . word_eval(w) = e1``, verified, or ``ExhaustedBudget``.

    Strategies in order, each costing one unit of budget: the empty word,
    Euclidean column reduction, the excision construction; then plain
    enumeration by atom count and coefficient height.
    """
    R = v.ring
    empty = ElementaryWord(R, LINEAR, v.n)
    if v.is_e1():
        return empty
    spent = 0
    if budget <= spent:
        raise ExhaustedBudget("budget 0 on a nontrivial row")
    spent += 1
    if R.is_euclidean:
        try:
            w = row_reduce_euclidean(v)
            if _verify_word(v, w):
                return w
        except Exception:
            pass
    if budget <= spent:
        raise ExhaustedBudget(f"budget {budget} spent")
    spent += 1
    w = _excision_relative_word(v)
    if w is not None and _verify_word(v, w):
        return w
    return _enumerate_words(v, budget, spent)


@dataclass(frozen=True)
class CompletionResult:
    gamma: Matrix
    lifted_row: UnimodularRow
    word: ElementaryWord
    normalized: Matrix


def _row_times(R: Ring, v, M: Matrix):
    return M.vecmul(list(v))


def _is_e1(R: Ring, vec) -> bool:
    return R.is_one(vec[0]) and all(R.is_zero(x) for x in vec[1:])


def complete_row_via_excision(v: UnimodularRow, completer: Optional[Callable] = None, budget: int = 100_000,
                              witness=None) -> CompletionResult:
    """Lift, complete over ``R (+) I``, normalize modulo ``0 (+) I``, project.

    The invariant ``v_L . Gamma = e1`` is re-checked after every stage and the
    projected matrix is checked to be relative to ``I``.
    """
    if v.ideal is None:
        raise NotRelative("row carries no ideal")
    completer = completer or bounded_search_completer
    vl = lift_row(v, witness)
    E = vl.ring
    word = completer(vl, budget)
    Gamma = word_eval(word)
    if not _is_e1(E, _row_times(E, vl.entries, Gamma)):
        raise HypothesisFailed("completer output does not send v_L to e1")
    normed = normalize_relative(Gamma)
    if not _is_e1(E, _row_times(E, vl.entries, normed)):
        raise HypothesisFailed("normalization broke v_L . Gamma = e1")
    gamma = project(normed)
    if not verify_completion(v, gamma):
        raise HypothesisFailed("projected matrix fails verification")
    return CompletionResult(gamma, vl, word, normed)


def verify_completion(v: UnimodularRow, gamma: Union[Matrix, ElementaryWord]) -> bool:
    if isinstance(gamma, ElementaryWord):
        gamma = word_eval(gamma)
    if gamma.nrows != v.n or not gamma.is_square():
        raise SizeMismatch(f"row of length {v.n} vs matrix {gamma.shape}")
    R = v.ring
    if gamma.ring != R:
        return False
    if not _is_e1(R, _row_times(R, v.entries, gamma)):
        return False
    if v.ideal is not None and not is_relative(gamma, v.ideal):
        return False
    return True
