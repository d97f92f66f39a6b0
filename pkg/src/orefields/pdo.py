"""Truncated formal pseudodifferential operators k(v1,v2)((u; delta)).

A series is a finite map exponent -> coefficient together with a
precision N: coefficients are exact for every exponent <= N and unknown
beyond.  The commutation law is

    u*a = a*u + sum_{j>=1} delta^j(a) u^{j+1}

for coefficients a, and u^{-1}*a = a*u^{-1} - delta(a), which is exact.
Positive powers push through with  u^m a = sum_j C(m-1+j, j) delta^j(a)
u^{m+j}; negative powers with the finite alternating binomial sum.  Every
operation propagates precision pessimistically, so all stored
coefficients are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ratfunc import Derivation, RatFunc2
from .skewpoly import SkewPoly

DEFAULT_PRECISION = 8


class PdoSeries:
    """sum_n a_n u^n with left coefficients, exact through exponent prec."""

    __slots__ = ("derivation", "terms", "prec")

    def __init__(self, derivation: Derivation, terms=None, prec: int = DEFAULT_PRECISION):
        self.derivation = derivation
        self.prec = prec
        cleaned = {}
        for n, c in (terms or {}).items():
            if n <= prec and not c.is_zero():
                cleaned[n] = c
        self.terms = cleaned

    # -- constructors ----------------------------------------------------------
    @classmethod
    def zero(cls, derivation, prec=DEFAULT_PRECISION):
        return cls(derivation, {}, prec)

    @classmethod
    def one(cls, derivation, prec=DEFAULT_PRECISION):
        return cls(derivation, {0: derivation.ctx.one()}, prec)

    @classmethod
    def u(cls, derivation, prec=DEFAULT_PRECISION, power: int = 1):
        return cls(derivation, {power: derivation.ctx.one()}, prec)

    @classmethod
    def from_ratfunc(cls, derivation, f: RatFunc2, prec=DEFAULT_PRECISION):
        return cls(derivation, {0: f}, prec)

    @property
    def ctx(self):
        return self.derivation.ctx

    def _coerce(self, other):
        if isinstance(other, PdoSeries):
            if other.derivation != self.derivation:
                raise ValueError("series over different derivations")
            return other
        if isinstance(other, RatFunc2):
            return PdoSeries(self.derivation, {0: other}, self.prec)
        c = self.ctx.field.try_coerce(other)
        if c is None:
            return None
        return PdoSeries(self.derivation, {0: self.ctx.const(other)}, self.prec)

    # -- structure ---------------------------------------------------------------
    def valuation(self):
        """Least exponent with a (known) nonzero coefficient; +infinity if
        the series is zero through its precision."""
        return min(self.terms) if self.terms else math.inf

    def coefficient(self, n: int) -> RatFunc2:
        return self.terms.get(n, self.ctx.zero())

    def truncate(self, prec: int) -> PdoSeries:
        return PdoSeries(self.derivation, self.terms, min(self.prec, prec))

    def is_zero_mod_prec(self):
        return not self.terms

    def approx_eq(self, other) -> bool:
        """Equality of all coefficients through the weaker precision."""
        o = self._coerce(other)
        n = min(self.prec, o.prec)
        keys = {k for k in self.terms if k <= n} | {k for k in o.terms if k <= n}
        zero = self.ctx.zero()
        return all(self.terms.get(k, zero) == o.terms.get(k, zero) for k in keys)

    # -- arithmetic ----------------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        out = dict(self.terms)
        for n, c in o.terms.items():
            s = out.get(n)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(n, None)
            else:
                out[n] = s
        return PdoSeries(self.derivation, out, prec)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return PdoSeries(self.derivation,
                         {n: -c for n, c in self.terms.items()}, self.prec)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self.derivation
        field = self.ctx.field
        bounds = [self.prec + o.prec + 1]
        if o.terms:
            bounds.append(self.prec + min(o.terms))
        if self.terms:
            bounds.append(o.prec + min(self.terms))
        N = min(bounds)
        out = {}

        def accum(n, c):
            if c.is_zero():
                return
            prev = out.get(n)
            s = c if prev is None else prev + c
            if s.is_zero():
                out.pop(n, None)
            else:
                out[n] = s

        for m, am in self.terms.items():
            for n, bn in o.terms.items():
                base = m + n
                if base > N:
                    continue
                if m == 0:
                    accum(base, am * bn)
                elif m > 0:
                    d = bn
                    for j in range(N - base + 1):
                        if j > 0:
                            d = D(d)
                        if d.is_zero():
                            break
                        accum(base + j, am * d * field.from_int(math.comb(m - 1 + j, j)))
                else:
                    k = -m
                    d = bn
                    for j in range(k + 1):
                        if j > 0:
                            d = D(d)
                        if base + j > N:
                            break
                        if d.is_zero():
                            break
                        sign = -1 if j % 2 else 1
                        accum(base + j, am * d * field.from_int(sign * math.comb(k, j)))
        return PdoSeries(D, out, N)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers take nonnegative integer exponents")
        result = PdoSeries.one(self.derivation, self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.prec == o.prec and self.terms == o.terms

    __hash__ = None

    def inverse(self) -> PdoSeries:
        return pdo_inv(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * pdo_inv(o)

    def __str__(self):
        parts = []
        for n in sorted(self.terms):
            c = str(self.terms[n])
            if any(op in c[1:] for op in "+-/"):
                c = f"({c})"
            if n == 0:
                parts.append(c)
            else:
                us = "u" if n == 1 else f"u^{n}"
                parts.append(us if c == "1" else f"{c}*{us}")
        parts.append(f"O(u^{self.prec + 1})")
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        return f"<pdo {self}>"


# ---------------------------------------------------------------------------
# operation-style entry points

def pdo_mul(a: PdoSeries, b: PdoSeries) -> PdoSeries:
    return a * b


def pdo_valuation(a: PdoSeries):
    return a.valuation()


def pdo_from_skew(f: SkewPoly, prec: int = DEFAULT_PRECISION) -> PdoSeries:
    """Image of sum f_i x^i under x -> u^{-1}; exact and finite, since the
    coefficients already sit on the left.  The series derivation is
    delta = -D for the skew derivation D, so that u^{-1} a = a u^{-1} + D(a)
    matches x a = a x + D(a)."""
    return PdoSeries(f.derivation.negate(), {-i: c for i, c in f.coeffs.items()}, prec)


def pdo_inv(a: PdoSeries, prec: int | None = None) -> PdoSeries:
    """Two-sided inverse up to precision; valuation negates.

    Solves the coefficient equations of a * b = 1 order by order; each new
    coefficient enters through the leading term only, so the system is
    triangular over k(v1, v2).
    """
    if not a.terms:
        raise ZeroDivisionError("inverse of a series that is zero through its precision")
    va = min(a.terms)
    target = a.prec - 2 * va if prec is None else prec
    if target < -va:
        raise ValueError("insufficient precision to express the inverse")
    D = a.derivation
    lead_inv = a.terms[va].inverse()
    terms = {-va: lead_inv}
    for e in range(-va + 1, target + 1):
        partial = PdoSeries(D, terms, e)
        prod = (a * partial).coefficient(e + va)
        want = a.ctx.one() if e + va == 0 else a.ctx.zero()
        delta = want - prod
        if not delta.is_zero():
            terms[e] = lead_inv * delta
    return PdoSeries(D, terms, target)


@dataclass
class LeadingConstraintReport:
    """Outcome of the lowest-order consistency extraction on a candidate
    generator triple (X^{-1}, Y, Z) for target bracket scalar beta."""

    ok: bool
    c1: RatFunc2 | None
    y0: RatFunc2 | None
    z0: RatFunc2 | None
    failures: list

    def __bool__(self):
        return self.ok


def leading_constraint_check(Xinv: PdoSeries, Y: PdoSeries, Z: PdoSeries,
                             beta, D: Derivation) -> LeadingConstraintReport:
    """Extract the leading data c1 = [u]Xinv, y0 = [1]Y, z0 = [1]Z and test
    the first-order constraints c1 = D(y0)/y0, beta*c1 = D(z0)/z0, along
    with the full commutation identities
        Y*Xinv - Xinv*Y = Xinv*Y*Xinv
        Z*Xinv - Xinv*Z = beta * Xinv*Z*Xinv
    through the available precision."""
    field = D.ctx.field
    beta = field.coerce(beta)
    delta = D.negate()
    for series in (Xinv, Y, Z):
        if series.derivation != delta:
            raise ValueError("series must carry the commutation derivation -D")
    if min(p.prec for p in (Xinv, Y, Z)) < 1:
        raise ValueError("precision too low to extract the leading constraint")
    if Xinv.valuation() != 1:
        raise ValueError(f"X^-1 must have valuation 1, got {Xinv.valuation()}")
    if Y.valuation() != 0 or Z.valuation() != 0:
        raise ValueError("Y and Z must have valuation 0")

    failures = []
    c1 = Xinv.coefficient(1)
    y0 = Y.coefficient(0)
    z0 = Z.coefficient(0)
    if y0.is_constant():
        failures.append("y0 is a constant; it must generate a nontrivial eigenline")
    if z0.is_constant():
        failures.append("z0 is a constant; it must generate a nontrivial eigenline")
    if not failures:
        if D(y0) / y0 != c1:
            failures.append("c1 != D(y0)/y0")
        if D(z0) / z0 != beta * c1:
            failures.append("beta*c1 != D(z0)/z0")
    rel_y = Y * Xinv - Xinv * Y - Xinv * Y * Xinv
    if not rel_y.is_zero_mod_prec():
        failures.append("Y-relation fails at some computed order")
    rel_z = Z * Xinv - Xinv * Z - (Xinv * Z * Xinv) * beta
    if not rel_z.is_zero_mod_prec():
        failures.append("Z-relation fails at some computed order")
    return LeadingConstraintReport(not failures, c1, y0, z0, failures)
