import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from relksp.completion import (
    bounded_search_completer,
    complete_row_via_excision,
    localize_matrix,
    patch_symplectic,
    verify_completion,
)
from relksp.elementary import SYMPLECTIC, UnimodularRow, elem_generator, word_eval
from relksp.errors import ExhaustedBudget, Incompatible, NotComaximal, NotRelative
from relksp.matrices import Matrix, is_relative
from relksp.rings import ZZ, Ideal, IntegersMod, Localized, Polynomial
from relksp.sampling import random_symplectic, random_unimodular_relative

I2 = Ideal.of(ZZ, [2])


def test_patch_round_trip_example():
    a = elem_generator(SYMPLECTIC, 4, 1, 2, 6, ZZ)
    out = patch_symplectic(2, 3, localize_matrix(a, 2), localize_matrix(a, 3), Ideal.of(ZZ, [6]))
    assert out == a


def test_patch_single_entry():
    L2, L3 = Localized(ZZ, 2), Localized(ZZ, 3)
    a1 = Matrix(L2, [[L2.canon((12, 2))]])
    a2 = Matrix(L3, [[L3.canon((27, 2))]])
    assert patch_symplectic(2, 3, a1, a2, symplectic=False) == Matrix(ZZ, [[3]])


def test_patch_rejects_mismatch():
    a = elem_generator(SYMPLECTIC, 4, 1, 2, 6, ZZ)
    b = elem_generator(SYMPLECTIC, 4, 1, 2, 12, ZZ)
    with pytest.raises(Incompatible):
        patch_symplectic(2, 3, localize_matrix(a, 2), localize_matrix(b, 3))


def test_patch_needs_comaximal_elements():
    a = Matrix.identity(ZZ, 2)
    with pytest.raises(NotComaximal):
        patch_symplectic(2, 4, localize_matrix(a, 2), localize_matrix(a, 4))


def test_patch_over_polynomials():
    P = Polynomial(IntegersMod(5), "T")
    I = Ideal.of(P, [[0, 1]])
    rng = random.Random(3)
    a = random_symplectic(P, 4, rng, 3, I)
    s, t = P.canon([0, 1]), P.canon([1, 1])
    assert patch_symplectic(s, t, localize_matrix(a, s), localize_matrix(a, t), I) == a


def test_search_completer_examples():
    e = UnimodularRow.make(ZZ, [1, 0, 0])
    assert len(bounded_search_completer(e)) == 0
    v = UnimodularRow.make(ZZ, [3, 5, 0])
    assert verify_completion(v, bounded_search_completer(v))
    with pytest.raises(ExhaustedBudget):
        bounded_search_completer(v, budget=0)


def test_excision_completion_examples():
    e = UnimodularRow.make(ZZ, [1, 0, 0], ideal=I2)
    assert complete_row_via_excision(e).gamma == Matrix.identity(ZZ, 3)
    I5 = Ideal.of(ZZ, [5])
    v = UnimodularRow.make(ZZ, [6, 5, 10], ideal=I5)
    res = complete_row_via_excision(v)
    assert verify_completion(v, res.gamma)
    assert is_relative(res.gamma, I5)
    with pytest.raises(ExhaustedBudget):
        complete_row_via_excision(v, budget=0)


def test_excision_completion_needs_an_ideal():
    with pytest.raises(NotRelative):
        complete_row_via_excision(UnimodularRow.make(ZZ, [3, 5, 0]))


def test_verify_completion_true_and_false():
    v = UnimodularRow.make(ZZ, [1, 2, 0], ideal=I2)
    good = Matrix(ZZ, [[1, -2, 0], [0, 1, 0], [0, 0, 1]])
    assert verify_completion(v, good)
    assert not verify_completion(v, Matrix.identity(ZZ, 3))
    not_relative = Matrix(ZZ, [[1, -2, 0], [0, 1, 0], [1, 0, 1]])
    assert not verify_completion(v, not_relative)


def test_edge_row_minus_e1():
    v = UnimodularRow.make(ZZ, [-1, 0, 0], ideal=I2)
    res = complete_row_via_excision(v)
    assert verify_completion(v, res.gamma)


@given(st.randoms(use_true_random=False), st.sampled_from([2, 3, 5, 6]), st.integers(3, 4))
@settings(max_examples=40, deadline=None)
def test_random_relative_rows_complete(rng, m, n):
    row = random_unimodular_relative(n, m, rng)
    assert math.gcd(*row) == 1
    I = Ideal.of(ZZ, [m])
    v = UnimodularRow.make(ZZ, row, ideal=I)
    res = complete_row_via_excision(v)
    assert verify_completion(v, res.gamma)
    assert is_relative(res.gamma, I)
    assert res.lifted_row.entries[0][0] == 1


@given(st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_completer_word_is_verified(rng):
    v = UnimodularRow.make(ZZ, random_unimodular_relative(3, 4, rng), ideal=Ideal.of(ZZ, [4]))
    w = bounded_search_completer(v)
    assert list(word_eval(w).vecmul(list(v.entries))) == [1, 0, 0]
