import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from relksp.elementary import (
    LINEAR,
    SYMPLECTIC,
    ConjGen,
    ElementaryWord,
    PlainGen,
    UnimodularRow,
    elem_generator,
    eps,
    gen_word,
    homotopy_word,
    is_relative_word,
    reduce_to_principal,
    relative_diag_word,
    row_reduce_euclidean,
    sigma_index,
    whitehead_word,
    word_eval,
)
from relksp.errors import BadIndex, NotUnimodular
from relksp.matrices import Matrix, apply_hom, det, inverse, is_relative, is_symplectic, perp
from relksp.rings import ZZ, EvalAt, Ideal, IntegersMod
from relksp.sampling import random_word


def unit_matrix(n, entries):
    M = Matrix.identity(ZZ, n).lists()
    for (i, j), a in entries.items():
        M[i - 1][j - 1] += a
    return Matrix(ZZ, M)


def test_index_conventions():
    assert [sigma_index(i) for i in range(1, 7)] == [2, 1, 4, 3, 6, 5]
    assert [eps(i) for i in range(1, 5)] == [1, -1, 1, -1]


def test_generator_on_the_pair_diagonal():
    assert elem_generator(SYMPLECTIC, 4, 1, 2, 7, ZZ) == unit_matrix(4, {(1, 2): 7})


def test_generator_with_mirrored_entry():
    assert elem_generator(SYMPLECTIC, 6, 1, 3, 5, ZZ) == unit_matrix(6, {(1, 3): 5, (4, 2): -5})


def test_linear_generator():
    assert elem_generator(LINEAR, 3, 1, 2, 4, ZZ) == unit_matrix(3, {(1, 2): 4})


def test_bad_indices():
    with pytest.raises(BadIndex):
        elem_generator(LINEAR, 3, 2, 2, 1, ZZ)
    with pytest.raises(BadIndex):
        gen_word(ZZ, SYMPLECTIC, 4, (1, 5, 1))


def test_word_evaluation_basics():
    assert word_eval(ElementaryWord(ZZ, SYMPLECTIC, 4)) == Matrix.identity(ZZ, 4)
    w = gen_word(ZZ, SYMPLECTIC, 6, (1, 3, 2), (1, 3, 5))
    assert word_eval(w) == elem_generator(SYMPLECTIC, 6, 1, 3, 7, ZZ)


def test_conjugated_atom_evaluates_to_conjugate():
    outer = gen_word(ZZ, SYMPLECTIC, 4, (1, 3, 2), (4, 1, -1))
    w = ElementaryWord(ZZ, SYMPLECTIC, 4, (ConjGen(outer, 1, 2, 6),))
    g = word_eval(outer)
    assert word_eval(w) == g @ elem_generator(SYMPLECTIC, 4, 1, 2, 6, ZZ) @ inverse(g)


def test_whitehead_of_a_scalar():
    F5 = IntegersMod(5)
    w = whitehead_word(Matrix(F5, [[2]]))
    assert word_eval(w) == Matrix(F5, [[2, 0], [0, 3]])


def test_whitehead_of_identity():
    assert word_eval(whitehead_word(Matrix.identity(ZZ, 3))) == Matrix.identity(ZZ, 6)


def test_whitehead_random_gl2_mod7():
    F7 = IntegersMod(7)
    rng = random.Random(3)
    done = 0
    while done < 20:
        g = Matrix(F7, [[rng.randrange(7) for _ in range(2)] for _ in range(2)])
        if F7.is_zero(det(g)):
            continue
        assert word_eval(whitehead_word(g)) == perp(g, inverse(g))
        done += 1


def test_relative_diagonal_word():
    Z8 = IntegersMod(8)
    I = Ideal.of(Z8, [4])
    w = relative_diag_word(Z8, 4, 1, 3, 5)
    assert is_relative_word(w, I)
    expected = Matrix(Z8, [[5, 0, 0, 0], [0, 1, 0, 0], [0, 0, 5, 0], [0, 0, 0, 1]])
    assert word_eval(w) == expected


def test_homotopy_of_single_generator():
    w = gen_word(ZZ, SYMPLECTIC, 4, (1, 2, 3))
    h = homotopy_word(w)
    M = word_eval(h)
    assert apply_hom(EvalAt(h.ring, 1), M) == word_eval(w)
    assert apply_hom(EvalAt(h.ring, 0), M) == Matrix.identity(ZZ, 4)
    assert len(homotopy_word(ElementaryWord(ZZ, LINEAR, 3))) == 0


def test_reduce_to_principal_example():
    v = UnimodularRow.make(ZZ, [-1, 4, 6], ideal=Ideal.of(ZZ, [2]))
    word, v2 = reduce_to_principal(v)
    assert list(v2.entries) == [-1, 8, 12]
    assert word.apply_to_vector(v.entries) == [-1, 8, 12]
    assert v2.ideal.member(8) and v2.is_relative()


def test_reduce_to_principal_trivial_cases():
    v = UnimodularRow.make(ZZ, [1, 6, 4], ideal=Ideal.of(ZZ, [2]))
    assert list(reduce_to_principal(v)[1].entries) == [1, 0, 0]
    e = UnimodularRow.make(ZZ, [1, 0, 0], ideal=Ideal.of(ZZ, [2]))
    assert list(reduce_to_principal(e)[1].entries) == [1, 0, 0]


def test_euclidean_reduction():
    w = row_reduce_euclidean([3, 5, 0], ZZ)
    assert w.apply_to_vector([3, 5, 0]) == [1, 0, 0]
    assert len(row_reduce_euclidean([1, 0, 0], ZZ)) == 0
    with pytest.raises(NotUnimodular):
        row_reduce_euclidean([2, 4], ZZ)


def test_euclidean_reduction_leaves_no_stray_unit():
    w = row_reduce_euclidean([-1, 0], ZZ)
    assert w.apply_to_vector([-1, 0]) == [1, 0]


@pytest.mark.parametrize("i", range(1, 7))
@pytest.mark.parametrize("j", range(1, 7))
def test_every_generator_is_symplectic(i, j):
    if i != j:
        assert is_symplectic(elem_generator(SYMPLECTIC, 6, i, j, 3, ZZ))


@given(st.lists(st.integers(-40, 40), min_size=2, max_size=5))
def test_euclid_on_random_rows(v):
    if math.gcd(*v) != 1:
        return
    w = row_reduce_euclidean(v, ZZ)
    assert w.apply_to_vector(v) == [1] + [0] * (len(v) - 1)


@given(st.randoms(use_true_random=False), st.sampled_from([LINEAR, SYMPLECTIC]))
@settings(max_examples=50)
def test_relative_words_give_relative_matrices(rng, family):
    I = Ideal.of(ZZ, [3])
    w = random_word(ZZ, family, 4, rng, 3, I)
    M = word_eval(w)
    assert is_relative(M, I)
    assert M @ word_eval(w.inverse()) == Matrix.identity(ZZ, 4)
    if family == SYMPLECTIC:
        assert is_symplectic(M)


@given(st.randoms(use_true_random=False))
@settings(max_examples=50)
def test_apply_to_vector_matches_matrix_product(rng):
    w = random_word(ZZ, SYMPLECTIC, 6, rng, 4)
    v = [rng.randint(-5, 5) for _ in range(6)]
    assert w.apply_to_vector(v) == list(word_eval(w).vecmul(v))


def test_plain_atoms_are_hashable_values():
    assert PlainGen(1, 2, 3) == PlainGen(1, 2, 3)
