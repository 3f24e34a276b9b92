import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from relksp.elementary import LINEAR, ElementaryWord, PlainGen, gen_word, word_eval
from relksp.errors import CertificateInvalid, ExhaustedBudget, HypothesisFailed, NotInKernelC, NotRelative
from relksp.matrices import Matrix, chi, det, is_relative, perp, pfaffian
from relksp.rings import QQ, ZZ, Ideal, IntegersMod, unit_kernel_C
from relksp.sampling import random_alt_rep, random_linear, random_symplectic, random_word
from relksp.witt import (
    AltRep,
    EquivCertificate,
    alpha_unit,
    check_equiv,
    extract_block,
    hyperbolic_H,
    kernel_form,
    kernel_of_H_construct,
    pf_section,
    search_equiv,
    whitehead_certificate,
    widen_word,
    witt_inverse_rep,
    witt_perp,
    witt_pf,
)

Z8 = IntegersMod(8)
I4 = Ideal.of(Z8, [4])
I2 = Ideal.of(ZZ, [2])
F5 = IntegersMod(5)


def rep(M, ideal=None):
    return AltRep(M, ideal)


def test_perp_of_chi():
    assert witt_perp(rep(chi(ZZ, 1)), rep(chi(ZZ, 1))).matrix == chi(ZZ, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inverse_of_chi(n):
    assert witt_inverse_rep(rep(chi(ZZ, n))).matrix == chi(ZZ, n)


def test_pf_character():
    assert witt_pf(rep(chi(Z8, 2), I4)) == 1
    A = rep(perp(alpha_unit(Z8, 5), chi(Z8, 1)), I4)
    assert witt_pf(A) == 5


def test_relative_reps_have_pf_in_C():
    rng = random.Random(3)
    C = unit_kernel_C(Z8, I4)
    for _ in range(20):
        A = rep(random_alt_rep(Z8, 2, rng, I4, rng.choice(C)), I4)
        assert witt_pf(A) in C


def test_pf_section():
    assert pf_section(Z8, 1, I4).matrix == chi(Z8, 1)
    for a in unit_kernel_C(Z8, I4):
        assert pfaffian(pf_section(Z8, a, I4).matrix) == a
    with pytest.raises(NotInKernelC):
        pf_section(Z8, 3, I4)


def test_alt_rep_must_be_congruent_to_chi():
    with pytest.raises(NotRelative):
        rep(alpha_unit(ZZ, -1), Ideal.of(ZZ, [3]))


def test_hyperbolic_examples():
    rng = random.Random(1)
    a = random_symplectic(ZZ, 4, rng, 5)
    assert hyperbolic_H(a).matrix == chi(ZZ, 2)
    d = Matrix.build(QQ, [[2, 0, 0, 0], [0, 3, 0, 0], [0, 0, 1, 0], [0, 0, 0, Fraction(1, 6)]])
    H = hyperbolic_H(d)
    assert H.pf == det(d) == 1


def test_pf_of_hyperbolic_in_sl4_mod5():
    rng = random.Random(9)
    for _ in range(10):
        a = random_linear(F5, 4, rng, 5)
        assert hyperbolic_H(a).pf == 1


def test_check_equiv_trivial_and_wrong():
    A = rep(chi(ZZ, 1), I2)
    empty = ElementaryWord(ZZ, LINEAR, 4)
    assert check_equiv(A, A, EquivCertificate(0, empty))
    wrong = ElementaryWord(ZZ, LINEAR, 4, (PlainGen(1, 3, 2),))
    assert not check_equiv(A, A, EquivCertificate(0, wrong))


def test_padding_by_chi():
    A = rep(random_alt_rep(ZZ, 1, random.Random(2), I2, -1), I2)
    padded = witt_perp(A, rep(chi(ZZ, 1), I2))
    cert = EquivCertificate(0, ElementaryWord(ZZ, LINEAR, 6))
    assert check_equiv(padded, A, cert)
    assert check_equiv(padded, A, cert.padded())


@pytest.mark.parametrize("a", [1, 5])
@pytest.mark.parametrize("b", [1, 5])
def test_whitehead_certificate(a, b):
    A, B, cert = whitehead_certificate(Z8, I4, a, b)
    assert check_equiv(A, B, cert)
    D = Matrix(Z8, [[Z8.inv(b), 0, 0, 0], [0, 1, 0, 0], [0, 0, b, 0], [0, 0, 0, 1]])
    assert D.transpose() @ A.matrix @ D == B.matrix


def test_search_finds_trivial_and_planted():
    A = rep(chi(ZZ, 1), I2)
    assert len(search_equiv(A, A).word) == 0
    eps = ElementaryWord(ZZ, LINEAR, 4, (PlainGen(1, 3, 2),))
    B = rep(chi(ZZ, 2), I2)
    e = word_eval(eps)
    planted = rep(e.transpose() @ B.matrix @ e, I2)
    cert = search_equiv(planted, B, budget=20_000, max_atoms=1, max_height=1, paddings=(0,))
    assert check_equiv(planted, B, cert)
    with pytest.raises(ExhaustedBudget):
        search_equiv(planted, B, budget=1)


def test_kernel_of_H_trivial_certificate():
    rng = random.Random(5)
    a = random_symplectic(ZZ, 4, rng, 3)
    gamma = rep(chi(ZZ, 1))
    out = kernel_of_H_construct(a, gamma, 0, ElementaryWord(ZZ, LINEAR, 4))
    assert out == perp(a, Matrix.identity(ZZ, 2))
    form = kernel_form(a, gamma, 0)
    assert out.transpose() @ form @ out == form


def test_kernel_of_H_planted_mod5():
    rng = random.Random(7)
    sp = random_symplectic(F5, 4, rng, 4)
    gw = random_word(F5, LINEAR, 4, rng, 4)
    alpha = sp @ word_eval(gw)
    gamma = rep(random_alt_rep(F5, 2, rng, Ideal.of(F5, [1])))
    out = kernel_of_H_construct(alpha, gamma, 1, widen_word(gw.inverse(), 2))
    form = kernel_form(alpha, gamma, 1)
    assert out.transpose() @ form @ out == form
    with pytest.raises(CertificateInvalid):
        kernel_of_H_construct(alpha, gamma, 1, widen_word(gw, 2) + gen_word(F5, LINEAR, 6, (1, 2, 1)))


def test_extract_block_examples():
    T = rep(chi(ZZ, 1), I2)
    assert extract_block(Matrix.identity(ZZ, 4), T, T) == Matrix.identity(ZZ, 2)
    rng = random.Random(4)
    beta0 = random_linear(ZZ, 2, rng, 3, I2)
    T2 = rep(beta0.transpose() @ T.matrix @ beta0, I2)
    delta = perp(Matrix.identity(ZZ, 2), beta0)
    assert extract_block(delta, T, T2) == beta0
    bad = Matrix(ZZ, [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(HypothesisFailed):
        extract_block(bad, T, T)


@given(st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_inverse_rep_has_pf_one(rng):
    A = rep(random_alt_rep(ZZ, rng.randint(1, 3), rng, I2), I2)
    assert witt_inverse_rep(A).pfaffian_one
    assert is_relative(witt_inverse_rep(A).matrix - chi(ZZ, A.half) + Matrix.identity(ZZ, 2 * A.half), I2)


@given(st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_pf_multiplicative(rng):
    A = rep(random_alt_rep(Z8, 1, rng, I4, rng.choice((1, 5))), I4)
    B = rep(random_alt_rep(Z8, 2, rng, I4, rng.choice((1, 5))), I4)
    assert witt_perp(A, B).pf == Z8.mul(A.pf, B.pf)
