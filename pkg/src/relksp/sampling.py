"""Seeded random generators for rings elements, words and representatives."""
from __future__ import annotations

import math
import random
from typing import Optional

from .elementary import LINEAR, SYMPLECTIC, ConjGen, ElementaryWord, PlainGen, word_eval
from .matrices import Matrix, chi, perp
from .rings import Ideal, Integers, Polynomial, Ring


def rng_for(seed, *labels) -> random.Random:
    """Independent deterministic stream per (seed, label...) combination."""
    return random.Random(":".join([str(seed)] + [str(x) for x in labels]))


def element(R: Ring, rng, height: int = 9):
    if isinstance(R, Polynomial):
        return R.random(rng, height, degree=3)
    return R.random(rng, height)


def ideal_element(ideal: Ideal, rng, height: int = 3):
    return ideal.random_member(rng, height)


def _pair(rng, size):
    i = rng.randint(1, size)
    j = rng.randint(1, size - 1)
    return i, j if j < i else j + 1


def random_word(R: Ring, family: str, size: int, rng, length: int = 4, ideal: Optional[Ideal] = None,
                height: int = 3, conj_rate: float = 0.5) -> ElementaryWord:
    """Random word; with an ideal, every atom is relative (plain in I or conjugated)."""
    atoms = []
    for _ in range(length):
        i, j = _pair(rng, size)
        if ideal is None:
            atoms.append(PlainGen(i, j, element(R, rng, height)))
            continue
        a = ideal_element(ideal, rng, height)
        if rng.random() < conj_rate:
            outer = random_word(R, family, size, rng, rng.randint(1, 2), None, height)
            atoms.append(ConjGen(outer, i, j, a))
        else:
            atoms.append(PlainGen(i, j, a))
    return ElementaryWord(R, family, size, tuple(atoms))


def random_symplectic(R: Ring, size: int, rng, length: int = 4, ideal: Optional[Ideal] = None) -> Matrix:
    return word_eval(random_word(R, SYMPLECTIC, size, rng, length, ideal))


def random_linear(R: Ring, size: int, rng, length: int = 4, ideal: Optional[Ideal] = None) -> Matrix:
    return word_eval(random_word(R, LINEAR, size, rng, length, ideal))


def random_alternating(R: Ring, size: int, rng, height: int = 9) -> Matrix:
    M = [[R.zero] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            x = element(R, rng, height)
            M[i][j] = x
            M[j][i] = R.neg(x)
    return Matrix(R, M)


def random_alt_rep(R: Ring, half: int, rng, ideal: Ideal, unit=None, length: int = 3) -> Matrix:
    """``g^T (alpha_c (+) chi_{half-1}) g`` for a relative linear ``g``; Pf = c."""
    base = chi(R, half)
    if unit is not None:
        first = Matrix(R, [[R.zero, unit], [R.neg(unit), R.zero]])
        base = perp(first, chi(R, half - 1)) if half > 1 else first
    g = random_linear(R, 2 * half, rng, length, ideal)
    return g.transpose() @ base @ g


def random_unimodular(R: Integers, n: int, rng, height: int = 30) -> list:
    while True:
        v = [rng.randint(-height, height) for _ in range(n)]
        g = 0
        for x in v:
            g = math.gcd(g, x)
        if g == 1:
            return v


def random_unimodular_relative(n: int, m: int, rng, height: int = 6) -> list:
    """Integer row congruent to ``e1`` modulo ``m`` with gcd 1."""
    while True:
        v = [1 + m * rng.randint(-height, height)] + [m * rng.randint(-height, height) for _ in range(n - 1)]
        g = 0
        for x in v:
            g = math.gcd(g, x)
        if g == 1:
            return v
