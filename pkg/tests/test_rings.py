from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from relksp.errors import (
    CertificateRequired,
    DescriptorMismatch,
    NotAUnit,
    NotDivisible,
    NotEnumerable,
)
from relksp.rings import (
    QQ,
    ZZ,
    BarSplit,
    CanonicalInclusion,
    Double,
    DoubleU,
    DoubleV,
    Elem,
    EvalAt,
    Excision,
    ExcisionLocalizationIso,
    Ideal,
    IntegersMod,
    Localized,
    LocalizationInclusion,
    Polynomial,
    ProjectPi,
    QuotientEuclidean,
    double_iso,
    exact_divide,
    ideal_member,
    quotient_ring,
    ring_arith,
    split_ideal,
    unit_inverse,
    unit_kernel_C,
)

Z2 = Ideal.of(ZZ, [2])
E2 = Excision(ZZ, Z2)
Z8 = IntegersMod(8)
QX = Polynomial(QQ)
F5X = Polynomial(IntegersMod(5))

small = st.integers(-50, 50)


def ex(r, i):
    return Elem(E2, E2.make(r, i))


def test_excision_product_by_hand():
    assert ring_arith("mul", ex(3, 2), ex(1, -2)).value == (3, -8)


def test_excision_identity_element():
    x = ex(7, 4)
    assert ring_arith("mul", x, ex(1, 0)) == x


def test_mod8_square_of_five():
    assert ring_arith("mul", Z8(5), Z8(5)) == Z8(1)


def test_unit_inverses():
    assert unit_inverse(ex(1, 0)).value == (1, 0)
    assert unit_inverse(Z8(3)) == Z8(3)
    with pytest.raises(NotAUnit):
        unit_inverse(ZZ(2))


def test_exact_divide():
    assert exact_divide(ZZ(6), ZZ(2)) == ZZ(3)
    assert exact_divide(QX([-1, 0, 1]), QX([-1, 1])).value == (1, 1)
    with pytest.raises(NotDivisible):
        exact_divide(ZZ(5), ZZ(2))


def test_ideal_membership():
    assert ideal_member(Z2, 6)
    assert not ideal_member(Z2, 3)
    assert ideal_member(split_ideal(E2), (0, 4))
    assert not ideal_member(split_ideal(E2), (2, 4))


def test_membership_with_certificate():
    R = Polynomial(ZZ)
    I = Ideal.of(R, [[2], [0, 1]])
    assert I.mode == "certificate"
    assert I.member([2, 3], cert=[[1], [3]])
    assert not I.member([1], cert=[[0], [0]])
    with pytest.raises(CertificateRequired):
        I.member([2])


def test_double_iso_examples():
    u = double_iso("U", ex(3, 2))
    assert u.value == (3, 5)
    assert double_iso("V", u).value == (3, 2)
    with pytest.raises(DescriptorMismatch):
        double_iso("V", ex(3, 2))


def test_unit_kernel_C():
    assert unit_kernel_C(Z8, Ideal.of(Z8, [4])) == [1, 5]
    assert unit_kernel_C(Z8, Ideal.of(Z8, [1])) == [1, 3, 5, 7]
    assert unit_kernel_C(Z8, Ideal.of(Z8, [0])) == [1]
    with pytest.raises(NotEnumerable):
        unit_kernel_C(ZZ, Z2)


def test_double_membership_is_enforced():
    D = Double(ZZ, Z2)
    assert D.make(3, 5) == (3, 5)
    with pytest.raises(DescriptorMismatch):
        D.make(3, 4)


def test_rationals_and_formatting():
    assert QQ.fmt(Fraction(-3, 4)) == "-3/4"
    assert F5X.fmt(F5X.canon([1, 7, 0])) == "[1,2]"
    assert E2.fmt((3, -2)) == "(3|-2)"


def test_polynomial_division_and_units_with_nilpotents():
    P = Polynomial(Z8)
    u = P.canon([1, 2])  # 1 + 2X is a unit since 2X is nilpotent
    assert P.is_unit(u)
    assert P.is_one(P.mul(u, P.inv(u)))
    q, r = F5X.divmod(F5X.canon([1, 0, 1]), F5X.canon([1, 1]))
    assert F5X.eq(F5X.add(F5X.mul(q, [1, 1]), r), [1, 0, 1])


def test_localization_canonical_form():
    L = Localized(ZZ, 6)
    assert L.canon((12, 2)) == (2, 1)  # 12/36 = 2/6
    assert L.eq((5, 1), (30, 2))
    assert L.is_unit((3, 0))
    assert not L.is_unit((5, 0))
    assert L.inv((2, 0)) == (3, 1)


def test_quotient_of_polynomials():
    T, red = quotient_ring(Ideal.of(F5X, [[2, 0, 1]]))
    assert isinstance(T, QuotientEuclidean)
    x = red(F5X.canon([0, 0, 1]))
    assert T.eq(x, T.coerce([3]))


def test_homs_on_excision():
    x = (3, 4)
    assert ProjectPi(E2)(x) == 7
    assert BarSplit(E2)(x) == 3
    assert CanonicalInclusion(E2)(5) == (5, 0)
    assert EvalAt(QX, 2)(QX.canon([1, 1, 1])) == 7


def test_excision_localization_iso():
    LE = Localized(E2, (3, 0))
    iso = ExcisionLocalizationIso(LE)
    x = LE.canon(((2, 4), 1))
    assert iso(x) == ((2, 1), (4, 1))


@given(small, small, small, small)
def test_excision_product_matches_formula(r, i, s, j):
    a, b = E2.make(r, 2 * i), E2.make(s, 2 * j)
    i, j = 2 * i, 2 * j
    assert E2.mul(a, b) == (r * s, r * j + s * i + i * j)


@given(small, small, small, small)
def test_double_iso_is_ring_hom(r, i, s, j):
    U = DoubleU(E2)
    V = DoubleV(U.target)
    a, b = (r, 2 * i), (s, 2 * j)
    assert U(E2.mul(a, b)) == U.target.mul(U(a), U(b))
    assert V(U(a)) == a


@given(small, small)
def test_projection_is_multiplicative(x, y):
    pi = ProjectPi(E2)
    a, b = (x, 2 * y), (y, 2 * x)
    assert pi(E2.mul(a, b)) == pi(a) * pi(b)


@given(st.lists(st.integers(-20, 20), max_size=5), st.lists(st.integers(-20, 20), max_size=5))
@settings(max_examples=60)
def test_polynomial_ring_laws(p, q):
    a, b = F5X.canon(p), F5X.canon(q)
    assert F5X.eq(F5X.mul(a, b), F5X.mul(b, a))
    assert F5X.eq(F5X.sub(F5X.add(a, b), b), a)


@given(st.integers(-30, 30), st.integers(0, 3), st.integers(-30, 30), st.integers(0, 3))
def test_localization_inclusion_is_multiplicative(a, k, b, m):
    L2, L6 = Localized(ZZ, 2), Localized(ZZ, 6)
    h = LocalizationInclusion(L2, L6)
    x, y = L2.canon((a, k)), L2.canon((b, m))
    assert L6.eq(h(L2.mul(x, y)), L6.mul(h(x), h(y)))
