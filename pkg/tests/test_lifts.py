import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from relksp.elementary import SYMPLECTIC, ConjGen, ElementaryWord, PlainGen, UnimodularRow, gen_word, word_eval
from relksp.errors import NotRelative, NotSpecial
from relksp.lifts import (
    lift_alt,
    lift_entries,
    lift_matrix,
    lift_row,
    lift_word,
    localization_compat,
    normalize_relative,
    project,
    vaserstein_witness,
)
from relksp.matrices import Matrix, apply_hom, chi, det, inverse, is_symplectic, perp, sigma
from relksp.rings import ZZ, BarSplit, CanonicalInclusion, Excision, Ideal, IntegersMod
from relksp.sampling import random_alt_rep, random_linear, random_symplectic, random_word

I2 = Ideal.of(ZZ, [2])
E2 = Excision(ZZ, I2)


def test_lift_row_example():
    v = UnimodularRow.make(ZZ, [3, 2], ideal=I2)
    L = lift_row(v)
    assert L.entries == ((1, 2), (0, 2))
    assert L.witness == ((1, -2), (0, 2))
    E = L.ring
    assert E.sum(E.mul(a, b) for a, b in zip(L.entries, L.witness)) == (1, 0)


def test_lift_of_e1():
    v = UnimodularRow.make(ZZ, [1, 0, 0], ideal=I2)
    L = lift_row(v)
    assert L.entries == ((1, 0), (0, 0), (0, 0))
    assert L.witness == ((1, 0), (0, 0), (0, 0))


def test_non_relative_row_rejected():
    with pytest.raises(NotRelative):
        UnimodularRow.make(ZZ, [2, 3], ideal=I2)


def test_witness_over_zmod():
    Z8 = IntegersMod(8)
    v = UnimodularRow.make(Z8, [5, 4], ideal=Ideal.of(Z8, [4]))
    w = vaserstein_witness(v)
    assert Z8.is_one(Z8.sum(Z8.mul(a, b) for a, b in zip(v.entries, w)))


def test_lift_matrix_example():
    a = Matrix(ZZ, [[1, 2], [0, 1]])
    L = lift_matrix(a, I2, "sl")
    assert L == Matrix(E2, [[(1, 0), (0, 2)], [(0, 0), (1, 0)]])
    assert det(L) == (1, 0)
    assert lift_matrix(Matrix.identity(ZZ, 3), I2) == Matrix.identity(E2, 3)


def test_lift_matrix_rejects_non_relative():
    with pytest.raises(NotRelative):
        lift_matrix(Matrix(ZZ, [[1, 1], [0, 1]]), I2)


def test_lift_matrix_rejects_non_special():
    with pytest.raises(NotSpecial):
        lift_matrix(Matrix(ZZ, [[3, 0], [0, 1]]), I2, "sl")


def test_lift_of_relative_symplectic():
    rng = random.Random(4)
    for _ in range(10):
        a = random_symplectic(ZZ, 4, rng, 4, I2)
        L = lift_matrix(a, I2, "sp")
        assert is_symplectic(L)
        assert project(L) == a


def test_lift_word_maps_arguments():
    outer = gen_word(ZZ, SYMPLECTIC, 4, (1, 3, 5))
    w = ElementaryWord(ZZ, SYMPLECTIC, 4, (ConjGen(outer, 1, 2, 4),))
    lw = lift_word(w, I2)
    atom = lw.atoms[0]
    assert atom.outer.atoms == (PlainGen(1, 3, (5, 0)),)
    assert atom.a == (0, 4)
    assert len(lift_word(ElementaryWord(ZZ, SYMPLECTIC, 4), I2)) == 0


def test_lift_word_rejects_argument_outside_ideal():
    with pytest.raises(NotRelative):
        lift_word(gen_word(ZZ, SYMPLECTIC, 4, (1, 2, 3)), I2)


def test_normalize_relative():
    G = lift_matrix(Matrix(ZZ, [[1, 2], [0, 1]]), I2)
    assert normalize_relative(G) == G
    beta = Matrix(ZZ, [[2, 1], [1, 1]])
    incl = apply_hom(CanonicalInclusion(E2), beta)
    assert normalize_relative(incl) == Matrix.identity(E2, 2)


def test_localization_compat_examples():
    a = Matrix(ZZ, [[1, 2], [0, 1]])
    assert localization_compat(a, I2, 1)
    assert localization_compat(a, I2, 3)
    rng = random.Random(8)
    for f in (2, 3, 5):
        assert localization_compat(random_linear(ZZ, 3, rng, 3, I2), I2, f)


def test_lifts_multiplication_identity():
    rng = random.Random(1)
    beta = Matrix(ZZ, [[2 * rng.randint(-3, 3) for _ in range(2)] for _ in range(4)])
    c = chi(ZZ, 2)
    cL = apply_hom(CanonicalInclusion(E2), c)
    assert cL @ lift_entries(beta, I2) == lift_entries(c @ beta, I2)


def test_tilde_operation_identity():
    rng = random.Random(6)
    for _ in range(10):
        a = random_alt_rep(ZZ, 2, rng, I2)
        s = sigma(ZZ, 2)
        sL = apply_hom(CanonicalInclusion(E2), s)
        assert lift_alt(s @ inverse(a) @ s, I2) == sL @ inverse(lift_alt(a, I2)) @ sL


@given(st.randoms(use_true_random=False), st.sampled_from([2, 3, 6]))
@settings(max_examples=40, deadline=None)
def test_lift_then_project_is_identity(rng, m):
    I = Ideal.of(ZZ, [m])
    a = random_linear(ZZ, 3, rng, 4, I)
    L = lift_matrix(a, I, "sl")
    assert project(L) == a
    assert apply_hom(BarSplit(L.ring), L) == Matrix.identity(ZZ, 3)


@given(st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_lift_alt_respects_perp(rng):
    a = random_alt_rep(ZZ, 1, rng, I2, rng.choice((1, -1)))
    b = random_alt_rep(ZZ, 2, rng, I2)
    assert lift_alt(perp(a, b), I2) == perp(lift_alt(a, I2), lift_alt(b, I2))


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4), st.sampled_from([2, 3, 5]))
def test_lifted_rows_pair_to_one(offsets, m):
    v = [1 + m * offsets[0]] + [m * x for x in offsets[1:]]
    if math.gcd(*v) != 1:
        return
    row = UnimodularRow.make(ZZ, v, ideal=Ideal.of(ZZ, [m]))
    L = lift_row(row)
    E = L.ring
    assert E.is_one(E.sum(E.mul(a, b) for a, b in zip(L.entries, L.witness)))
    assert [a + b for a, b in L.entries] == v


def test_word_lift_projects_back():
    rng = random.Random(12)
    for _ in range(10):
        w = random_word(ZZ, SYMPLECTIC, 4, rng, 3, I2)
        M = word_eval(lift_word(w, I2))
        assert project(M) == word_eval(w)
