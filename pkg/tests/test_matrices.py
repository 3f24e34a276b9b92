import random

import pytest
from hypothesis import given, settings, strategies as st

from relksp.elementary import SYMPLECTIC, elem_generator
from relksp.errors import NotAlternating, NotInvertible, OddSize
from relksp.matrices import (
    Matrix,
    apply_hom,
    chi,
    det,
    det_cofactor,
    inverse,
    is_alternating,
    perp,
    pfaffian,
    predicates,
    sigma,
    standard_form,
)
from relksp.rings import QQ, ZZ, EvalAt, Ideal, IntegersMod, Polynomial
from relksp.sampling import random_alternating

Z7 = IntegersMod(7)


def test_standard_forms():
    assert standard_form("chi", 1, ZZ) == Matrix(ZZ, [[0, 1], [-1, 0]])
    assert standard_form("sigma", 1, ZZ) == Matrix(ZZ, [[0, 1], [1, 0]])
    assert standard_form("identity", 3, ZZ) == Matrix.identity(ZZ, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sigma_chi_sigma_is_chi_inverse(n):
    assert sigma(ZZ, n) @ chi(ZZ, n) @ sigma(ZZ, n) == inverse(chi(ZZ, n))


def test_small_determinants():
    assert det(chi(ZZ, 1)) == 1
    assert det(sigma(ZZ, 1)) == -1
    assert det(Matrix.identity(ZZ, 5)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pfaffian_of_chi(n):
    assert pfaffian(chi(ZZ, n)) == 1


def test_pfaffian_of_two_by_two():
    assert pfaffian(Matrix(ZZ, [[0, 13], [-13, 0]])) == 13


def test_pfaffian_errors():
    with pytest.raises(NotAlternating):
        pfaffian(Matrix(ZZ, [[1, 1], [-1, 0]]))
    with pytest.raises(OddSize):
        pfaffian(Matrix(ZZ, [[0]]))


def test_pfaffian_squared_is_det_6x6():
    rng = random.Random(11)
    for _ in range(20):
        A = random_alternating(ZZ, 6, rng)
        assert pfaffian(A) ** 2 == det(A) == det_cofactor(A)


def test_perp():
    assert perp(Matrix.identity(ZZ, 2), Matrix.identity(ZZ, 3)) == Matrix.identity(ZZ, 5)
    assert perp(chi(ZZ, 1), chi(ZZ, 1)) == chi(ZZ, 2)


def test_pfaffian_of_perp():
    rng = random.Random(5)
    for _ in range(20):
        A, B = random_alternating(Z7, 4, rng), random_alternating(Z7, 2, rng)
        assert pfaffian(perp(A, B)) == Z7.mul(pfaffian(A), pfaffian(B))


def test_eval_at_zero_on_polynomial_matrix():
    P = Polynomial(ZZ)
    M = Matrix(P, [[P.one, P.canon([0, 3])], [P.zero, P.one]])
    assert apply_hom(EvalAt(P, 0), M) == Matrix.identity(ZZ, 2)


def test_predicates():
    assert predicates(elem_generator(SYMPLECTIC, 4, 1, 2, 5, ZZ), "symplectic")
    assert predicates(chi(ZZ, 3), "alternating")
    assert predicates(Matrix(ZZ, [[1, 2], [0, 1]]), "relative", Ideal.of(ZZ, [2]))
    assert not predicates(Matrix(ZZ, [[1, 3], [0, 1]]), "relative", Ideal.of(ZZ, [2]))
    assert predicates(Matrix(ZZ, [[2, 1], [1, 1]]), "invertible")
    assert not predicates(Matrix(ZZ, [[2, 0], [0, 1]]), "invertible")


def test_inverse():
    A = Matrix(ZZ, [[2, 1], [1, 1]])
    assert A @ inverse(A) == Matrix.identity(ZZ, 2)
    with pytest.raises(NotInvertible):
        inverse(Matrix(ZZ, [[2, 0], [0, 1]]))
    P = Polynomial(IntegersMod(8))
    B = Matrix(P, [[P.canon([1, 2]), P.canon([0, 1])], [P.zero, P.one]])
    assert B @ inverse(B) == Matrix.identity(P, 2)


entries = st.integers(-9, 9)


@st.composite
def square(draw, n):
    return Matrix(ZZ, [[draw(entries) for _ in range(n)] for _ in range(n)])


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=80)
def test_det_matches_cofactor_oracle(A):
    assert det(A) == det_cofactor(A)


@given(st.integers(1, 4).flatmap(square), st.integers(1, 4).flatmap(square))
@settings(max_examples=60)
def test_det_multiplicative_when_sizes_match(A, B):
    if A.nrows == B.nrows:
        assert det(A @ B) == det(A) * det(B)


@given(st.integers(1, 3), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_pfaffian_under_congruence(half, rng):
    n = 2 * half
    A = random_alternating(ZZ, n, rng)
    B = Matrix(ZZ, [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
    C = B.transpose() @ A @ B
    assert is_alternating(C)
    assert pfaffian(C) == det(B) * pfaffian(A)


@given(st.integers(1, 4), st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_pfaffian_of_transpose(half, rng):
    A = random_alternating(QQ, 2 * half, rng, height=5)
    assert pfaffian(A.transpose()) == (-1) ** half * pfaffian(A)
