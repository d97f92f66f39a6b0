import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orefields import fields
from orefields.fields import (
    FieldElem, FieldError, FieldSpec, GF, QQ, Qsqrt, arith, frobenius,
    in_prime_subfield, least_irreducible, make_field, norm_to_prime,
    with_parameter,
)
from _support import rand_elem, rand_nonzero


def poly_has_root_mod(coeffs, ell):
    # exhaustive root check, the independent oracle for small irreducibility
    for x in range(ell):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % ell
        if acc == 0:
            return True
    return False


class TestMakeField:
    def test_f9_from_spec_poly(self):
        # theta^2 + 1 over GF(3): no roots, hence irreducible
        assert not poly_has_root_mod((1, 0, 1), 3)
        F9 = make_field(FieldSpec(characteristic=3, ext_degree=2, ext_poly=(1, 0, 1)))
        assert F9.char == 3 and F9.degree == 2
        theta = F9.gen()
        assert theta * theta == F9.from_int(-1)

    def test_rationals(self):
        Q = make_field(FieldSpec())
        assert Q.char == 0
        assert Q.coerce(Fraction(1, 2)) + Q.coerce(Fraction(1, 2)) == Q.one()

    def test_f2_parameter(self):
        F2a = make_field(FieldSpec(characteristic=2, parameter=True))
        a = F2a.gen()
        assert not a.is_zero() and (a + a).is_zero()

    def test_default_modulus_is_least(self):
        assert least_irreducible(3, 2) == (1, 0, 1)      # w^2 + 1
        assert least_irreducible(2, 3) == (1, 1, 0, 1)   # w^3 + w + 1

    def test_reducible_poly_rejected(self):
        with pytest.raises(FieldError):
            make_field(FieldSpec(characteristic=3, ext_degree=2, ext_poly=(2, 0, 1)))

    def test_non_squarefree_radicand_rejected(self):
        with pytest.raises(FieldError):
            make_field(FieldSpec(sqrt_d=12))
        with pytest.raises(FieldError):
            make_field(FieldSpec(sqrt_d=1))

    def test_composite_characteristic_rejected(self):
        with pytest.raises(FieldError):
            make_field(FieldSpec(characteristic=6))


class TestArith:
    def test_f9_defining_relation(self):
        F9 = GF(3, 2)
        theta = F9.gen()
        assert arith(theta, theta, "*") == F9.from_int(-1)

    def test_quadratic_norm_identity(self):
        K = Qsqrt(2)
        s = K.gen()
        assert (1 + s) * (1 - s) == K.from_int(-1)

    def test_parameter_self_division(self):
        F2a = with_parameter(GF(2))
        a = F2a.gen()
        assert arith(a, a, "/") == F2a.one()

    def test_division_by_zero(self):
        Q = QQ()
        with pytest.raises(ZeroDivisionError):
            arith(Q.one(), Q.zero(), "/")

    def test_field_mismatch(self):
        with pytest.raises(FieldError):
            GF(3).one() + GF(5).one()


class TestPrimeSubfield:
    def test_parameter_not_in_prime(self):
        assert not in_prime_subfield(with_parameter(GF(5)).gen())

    def test_rational_in_quadratic(self):
        K = Qsqrt(2)
        assert in_prime_subfield(K.coerce(Fraction(3, 4)))
        assert not in_prime_subfield(K.gen())

    def test_generator_not_in_prime(self):
        F9 = GF(3, 2)
        theta = F9.gen()
        # normal form (0, 1) is none of the prime elements (c, 0)
        assert theta.rep not in {(c, 0) for c in range(3)}
        assert not in_prime_subfield(theta)


class TestFrobenius:
    def test_f9_generator(self):
        F9 = GF(3, 2)
        theta = F9.gen()
        sq = theta * theta           # repeated-squaring oracle
        assert frobenius(theta) == sq * theta == -theta

    def test_parameter(self):
        F2a = with_parameter(GF(2))
        a = F2a.gen()
        assert frobenius(a) == a * a

    def test_one(self):
        assert frobenius(GF(7).one()) == GF(7).one()

    def test_characteristic_zero_rejected(self):
        with pytest.raises(FieldError):
            frobenius(QQ().one())

    def test_fermat_on_prime_field(self):
        for ell in (2, 3, 5, 7):
            F = GF(ell)
            for v in range(ell):
                assert frobenius(F.from_int(v)) == F.from_int(v)

    @pytest.mark.parametrize("ell,deg", [(2, 2), (3, 2), (5, 2), (2, 3), (3, 3)])
    def test_ring_morphism(self, ell, deg):
        rng = random.Random(11)
        F = GF(ell, deg)
        for _ in range(25):
            a, b = rand_elem(rng, F), rand_elem(rng, F)
            assert frobenius(a + b) == frobenius(a) + frobenius(b)
            assert frobenius(a * b) == frobenius(a) * frobenius(b)


class TestNorm:
    def test_f9_generator(self):
        F9 = GF(3, 2)
        theta = F9.gen()
        # power oracle: theta * theta^3 = theta^4
        assert norm_to_prime(theta) == GF(3).from_int((theta ** 4).rep[0])
        assert norm_to_prime(theta) == GF(3).one()

    def test_norm_of_one(self):
        assert norm_to_prime(GF(5, 2).one()) == GF(5).one()

    def test_kernel_size_f9(self):
        F9 = GF(3, 2)
        kernel = [e for e in F9.all_elements()
                  if not e.is_zero() and norm_to_prime(e) == GF(3).one()]
        assert len(kernel) == 4

    def test_requires_extension(self):
        with pytest.raises(FieldError):
            norm_to_prime(GF(5).one())

    @pytest.mark.parametrize("ell", [2, 3, 5, 7])
    @pytest.mark.parametrize("deg", [2, 3])
    def test_multiplicative_and_surjective(self, ell, deg):
        F = GF(ell, deg)
        Fp = GF(ell)
        values = set()
        elems = list(F.all_elements())
        for e in elems:
            if not e.is_zero():
                values.add(norm_to_prime(e).rep)
        assert values == set(range(1, ell))
        rng = random.Random(ell * 10 + deg)
        for _ in range(30):
            a, b = rand_nonzero(rng, F), rand_nonzero(rng, F)
            assert norm_to_prime(a * b) == norm_to_prime(a) * norm_to_prime(b)


FIELDS = [
    QQ(),
    GF(5),
    GF(3, 2),
    Qsqrt(2),
    Qsqrt(-3),
    with_parameter(GF(2)),
    with_parameter(QQ()),
    with_parameter(Qsqrt(2)),
]


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_field_axioms_random(field):
    rng = random.Random(hash(str(field)) & 0xFFFF)
    for _ in range(20):
        a, b, c = (rand_elem(rng, field) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + field.zero() == a
        assert a * field.one() == a
        assert (a - a).is_zero()
        if not a.is_zero():
            assert a * a.inverse() == field.one()


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20),
       st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_quadratic_field_axioms_hypothesis(a1, b1, a2, b2):
    K = Qsqrt(5)
    u = FieldElem(K, (a1, b1))
    v = FieldElem(K, (a2, b2))
    assert u + v == v + u
    assert u * v == v * u
    if not v.is_zero():
        assert (u / v) * v == u


@given(st.integers(min_value=-40, max_value=40),
       st.integers(min_value=-40, max_value=40))
def test_prime_field_hypothesis(x, y):
    F = GF(7)
    a, b = F.from_int(x), F.from_int(y)
    assert a + b == F.from_int(x + y)
    assert a * b == F.from_int(x * y)


def test_in_prime_subfield_matches_frobenius_fixed_points():
    # inside GF(l), frobenius is the identity, so membership is preserved
    F25 = GF(5, 2)
    for e in F25.all_elements():
        if in_prime_subfield(e):
            assert frobenius(e) == e


def test_elements_are_hashable_and_canonical():
    K = with_parameter(GF(3))
    a = K.gen()
    lhs = (a ** 2 - 1) / (a - 1)
    rhs = a + 1
    assert lhs == rhs and hash(lhs) == hash(rhs)


def test_frobenius_preserves_prime_subfield_membership():
    for ell, deg in ((2, 2), (3, 2), (5, 2), (2, 3)):
        F = GF(ell, deg)
        for e in F.all_elements():
            assert in_prime_subfield(frobenius(e)) == in_prime_subfield(e)
