"""Seeded random generators for field elements, rational functions and
skew polynomials, shared across the test modules."""

from fractions import Fraction

from orefields.fields import (
    ExtensionField, ParameterField, PrimeField, QuadraticField, RationalField,
)
from orefields.ratfunc import FunctionField2
from orefields.skewpoly import SkewPoly


def rand_fraction(rng, span=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_elem(rng, field):
    if isinstance(field, RationalField):
        return field.coerce(rand_fraction(rng))
    if isinstance(field, PrimeField):
        return field.from_int(rng.randrange(field.char))
    if isinstance(field, ExtensionField):
        return field.element(tuple(rng.randrange(field.char)
                                   for _ in range(field.degree)))
    if isinstance(field, QuadraticField):
        return field.element((rand_fraction(rng), rand_fraction(rng)))
    if isinstance(field, ParameterField):
        a = field.gen()
        num = field.zero()
        for i in range(rng.randint(1, 3)):
            num = num + a ** i * rand_base_int(rng, field)
        den = field.one()
        if rng.random() < 0.4:
            den = a + rand_nonzero_base_int(rng, field)
        return num / den
    raise TypeError(f"no generator for {field}")


def rand_base_int(rng, field):
    if field.char:
        return field.from_int(rng.randrange(field.char))
    return field.coerce(rand_fraction(rng, 4))


def rand_nonzero_base_int(rng, field):
    while True:
        c = rand_base_int(rng, field)
        if not c.is_zero():
            return c


def rand_nonzero(rng, field):
    while True:
        e = rand_elem(rng, field)
        if not e.is_zero():
            return e


def rand_poly2(rng, ctx, maxdeg=2, terms=3):
    out = ctx.zero()
    for _ in range(rng.randint(1, terms)):
        i, j = rng.randint(0, maxdeg), rng.randint(0, maxdeg)
        out = out + ctx.monomial(i, j, rand_nonzero(rng, ctx.field))
    return out


def rand_ratfunc(rng, ctx, maxdeg=2):
    num = rand_poly2(rng, ctx, maxdeg)
    while num.is_zero():
        num = rand_poly2(rng, ctx, maxdeg)
    if rng.random() < 0.5:
        return num
    den = ctx.one() + ctx.monomial(rng.randint(0, 1), rng.randint(0, 1),
                                   rand_nonzero(rng, ctx.field))
    if den.is_zero():
        den = ctx.one()
    return num / den


def rand_laurent_monomial(rng, ctx, span=2):
    return ctx.monomial(rng.randint(-span, span), rng.randint(-span, span),
                        rand_nonzero(rng, ctx.field))


def rand_skew(rng, D, maxdeg=2):
    ctx = D.ctx
    coeffs = {}
    for i in range(maxdeg + 1):
        if rng.random() < 0.7:
            coeffs[i] = rand_laurent_monomial(rng, ctx)
    if not coeffs:
        coeffs[0] = ctx.one()
    return SkewPoly(D, coeffs)


def fmt_ctx(field, names=("y", "z")):
    return FunctionField2(field, names)
