import math
import random
from fractions import Fraction

import pytest

from orefields.fields import GF, QQ, Qsqrt, with_parameter
from orefields.presentations import CaseSpec, algebra_make
from orefields.skewpoly import (
    SkewPoly, commutator, is_central_against, skew_mul, skew_pow, valuation_v,
)
from _support import rand_skew


def g_pres(field, alpha):
    return algebra_make(CaseSpec("g", field, field.coerce(alpha)))


def q_pres_t(field):
    return algebra_make(CaseSpec("q", field), coords="yt")


@pytest.fixture
def generic2():
    K = with_parameter(GF(2))
    return g_pres(K, K.gen())


class TestSkewMul:
    def test_x_times_y(self, generic2):
        x, y, _ = generic2.gens
        assert skew_mul(x, y) == y * x + y

    def test_x_squared_times_y_char0(self):
        pres = g_pres(QQ(), 7)
        x, y, _ = pres.gens
        assert skew_mul(x ** 2, y) == y * x ** 2 + y * x * 2 + y

    def test_x_times_t_unipotent(self):
        pres = q_pres_t(QQ())
        x, _, t = pres.gens
        assert skew_mul(x, t) == t * x + 1

    def test_degree_additive(self):
        rng = random.Random(3)
        K = with_parameter(GF(3))
        pres = g_pres(K, K.gen())
        for _ in range(20):
            f, g = rand_skew(rng, pres.D), rand_skew(rng, pres.D)
            assert (f * g).degree() == f.degree() + g.degree()

    def test_associative_distributive(self):
        rng = random.Random(4)
        pres = g_pres(QQ(), Fraction(2, 3))
        for _ in range(12):
            f, g, h = (rand_skew(rng, pres.D, maxdeg=1) for _ in range(3))
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h

    def test_x_commutator_is_derivation(self):
        rng = random.Random(5)
        K = with_parameter(GF(5))
        pres = g_pres(K, K.gen())
        from _support import rand_laurent_monomial
        for _ in range(15):
            f = rand_laurent_monomial(rng, pres.ctx)
            fs = pres.embed(f)
            assert commutator(pres.x, fs) == pres.embed(pres.D(f))


class TestCommutator:
    def test_x_z_scaling(self):
        K = Qsqrt(2)
        pres = g_pres(K, K.gen())
        x, _, z = pres.gens
        assert commutator(x, z) == z * K.gen()

    def test_y_z_commute(self, generic2):
        _, y, z = generic2.gens
        assert commutator(y, z).is_zero()

    @pytest.mark.parametrize("ell", [2, 3, 5])
    def test_invariant_commutes_with_y(self, ell):
        K = with_parameter(GF(ell))
        pres = g_pres(K, K.gen())
        x, y, _ = pres.gens
        assert commutator(x ** ell - x, y).is_zero()


class TestSkewPow:
    def test_plain_powers(self, generic2):
        x = generic2.x
        assert skew_pow(x, 3).coeffs == {3: generic2.ctx.one()}
        assert skew_pow(x, 0) == SkewPoly.one(generic2.D)

    def test_char3_invariant_commutes(self):
        F3 = GF(3)
        pres = g_pres(F3, 1)
        x, y, _ = pres.gens
        t = skew_pow(x, 3) - x
        assert commutator(t, y).is_zero()

    @pytest.mark.parametrize("i", range(1, 7))
    def test_power_bracket_with_t(self, i):
        pres = q_pres_t(QQ())
        x, _, t = pres.gens
        assert commutator(x ** i, t) == x ** (i - 1) * i


class TestShiftIdentities:
    @pytest.mark.parametrize("i", range(1, 7))
    def test_translation_identities(self, i):
        K = with_parameter(QQ())
        pres = g_pres(K, K.gen())
        x, y, z = pres.gens
        ac = pres.embed(pres.ctx.const(K.gen()))
        assert x ** i * y == y * (x + 1) ** i
        assert x ** i * z == z * (x + ac) ** i

    @pytest.mark.parametrize("ell", [2, 3, 5])
    def test_invariants_commute(self, ell):
        K = with_parameter(GF(ell))
        pres = g_pres(K, K.gen())
        x, y, z = pres.gens
        a = K.gen()
        t1 = x ** ell - x
        ta = x ** ell - x * pres.ctx.const(a ** (ell - 1))
        assert t1 * y == y * t1
        assert ta * z == z * ta

    @pytest.mark.parametrize("ell", [2, 3])
    def test_unipotent_invariant_shift(self, ell):
        pres = q_pres_t(GF(ell))
        x, _, t = pres.gens
        inv = x ** ell - x
        assert inv * t == t * inv - 1


class TestValuation:
    def test_x(self, generic2):
        assert valuation_v(generic2.x) == -1

    def test_coefficients_have_zero_valuation(self, generic2):
        assert valuation_v(generic2.coeff_monomial(5, -2)) == 0

    def test_zero(self, generic2):
        assert valuation_v(SkewPoly.zero(generic2.D)) == math.inf

    def test_additive(self):
        rng = random.Random(12)
        pres = g_pres(QQ(), Fraction(1, 3))
        for _ in range(15):
            f, g = rand_skew(rng, pres.D), rand_skew(rng, pres.D)
            assert valuation_v(f * g) == valuation_v(f) + valuation_v(g)


class TestCentrality:
    def test_char2_central_element(self):
        K = with_parameter(GF(2))
        pres = g_pres(K, K.gen())
        a = K.gen()
        x = pres.x
        mu = a ** 2 + a
        c = (x ** 2 - x) ** 2 - (x ** 2 - x) * pres.ctx.const(mu)
        assert is_central_against(c, pres.gens)

    def test_char3_generic_invariant_not_central(self):
        K = with_parameter(GF(3))
        pres = g_pres(K, K.gen())
        a = K.gen()
        x, y, z = pres.gens
        t = x ** 3 - x
        assert not is_central_against(t, pres.gens)
        assert commutator(t, z) == z * (a ** 3 - a)
        assert commutator(t, y).is_zero()

    def test_coefficients_commute(self, generic2):
        _, y, z = generic2.gens
        assert is_central_against(y, [y, z])


def test_x_times_ratio_coefficient_in_yz_coordinates():
    # t = z/y as a coefficient of the (y, z) presentation: x*t = t*x + 1
    pres = q_pres_yz(QQ())
    t = pres.ctx.monomial(-1, 1)
    ts = pres.embed(t)
    assert pres.x * ts == ts * pres.x + 1


def q_pres_yz(field):
    return algebra_make(CaseSpec("q", field))


def test_mixed_derivations_rejected():
    K = with_parameter(GF(3))
    pres_g = g_pres(K, K.gen())
    pres_q = algebra_make(CaseSpec("q", GF(3)))
    with pytest.raises(ValueError):
        pres_g.x * pres_q.x
    with pytest.raises(ValueError):
        pres_g.x + pres_q.y
