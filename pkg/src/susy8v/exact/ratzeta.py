"""Canonical rational functions of the single parameter z over Q.

Polynomial kernels (multiplication, gcd, exact division) are delegated to
FLINT through ``python-flint``; everything above that is local.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm

import flint

from ..errors import DivisionByZero, ZeroFunction

Rat = Fraction
PolyZeta = flint.fmpq_poly

_ZERO = flint.fmpq_poly(0)
_ONE = flint.fmpq_poly(1)
INFINITY = "inf"


def to_fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, (int, flint.fmpz)):
        return flint.fmpq(c)
    raise TypeError(f"not a rational scalar: {c!r}")


def to_fraction(c) -> Fraction:
    c = to_fmpq(c)
    return Fraction(int(c.p), int(c.q))


def _as_qpoly(value) -> flint.fmpq_poly:
    if isinstance(value, flint.fmpq_poly):
        return value
    if isinstance(value, flint.fmpz_poly):
        return flint.fmpq_poly(value)
    if isinstance(value, (list, tuple)):
        return flint.fmpq_poly([to_fmpq(c) for c in value])
    return flint.fmpq_poly([to_fmpq(value)])


def _canonical(num: flint.fmpq_poly, den: flint.fmpq_poly):
    if num.is_zero():
        return _ZERO, _ONE
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num = num / g
            den = den / g
    # den -> primitive integer polynomial with positive leading coefficient
    dnum = den.numer()
    c = dnum.content()
    if dnum.coeffs()[-1] < 0:
        c = -c
    scale = flint.fmpq(den.denom()) / flint.fmpq(c)
    if scale != 1:
        num = num * scale
        den = den * scale
    return num, den


class RatZeta:
    """An element of Q(z) kept in lowest terms.

    ``num`` may carry rational coefficients; ``den`` is an integer
    polynomial with content 1 and positive leading coefficient, so two
    equal values always have identical ``(num, den)``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatZeta) and den == 1:
            self.num, self.den = num.num, num.den
        else:
            n, d = _as_qpoly(num), _as_qpoly(den)
            if d.is_zero():
                raise DivisionByZero("zero denominator")
            self.num, self.den = _canonical(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num, den) -> RatZeta:
        obj = cls.__new__(cls)
        obj.num, obj.den = _canonical(num, den)
        obj._hash = None
        return obj

    @classmethod
    def z(cls) -> RatZeta:
        return cls(flint.fmpq_poly([0, 1]))

    @classmethod
    def coerce(cls, value) -> RatZeta:
        if isinstance(value, RatZeta):
            return value
        return cls(value)

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatZeta._raw(self.num + other.num, self.den)
        return RatZeta._raw(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        obj = RatZeta.__new__(RatZeta)
        obj.num, obj.den, obj._hash = -self.num, self.den, None
        return obj

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            obj = RatZeta.__new__(RatZeta)
            obj.num, obj.den, obj._hash = self.num * other.num, _ONE, None
            return obj
        return RatZeta._raw(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise DivisionByZero("division by the zero function")
        return RatZeta._raw(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inverse(self) -> RatZeta:
        if self.num.is_zero():
            raise DivisionByZero("inverse of the zero function")
        return RatZeta._raw(self.den, self.num)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        obj = RatZeta.__new__(RatZeta)
        obj.num, obj.den, obj._hash = self.num**e, self.den**e, None
        return obj

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return to_fraction(self.num[0])

    def derivative(self) -> RatZeta:
        """Formal d/dz by the quotient rule, renormalised."""
        if self.den.is_one():
            obj = RatZeta.__new__(RatZeta)
            obj.num, obj.den, obj._hash = self.num.derivative(), _ONE, None
            return obj
        n, d = self.num, self.den
        return RatZeta._raw(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, c) -> Fraction:
        c = to_fmpq(c)
        d = self.den(c)
        if d == 0:
            raise DivisionByZero(f"pole at z = {c}")
        return to_fraction(self.num(c) / d)

    def compose(self, r: RatZeta) -> RatZeta:
        """Return self(r(z)) exactly."""
        r = RatZeta.coerce(r)
        a, b = r.num, r.den
        dn, dd = max(self.num.degree(), 0), max(self.den.degree(), 0)
        top = max(dn, dd)
        apow = [_ONE]
        bpow = [_ONE]
        for _ in range(top):
            apow.append(apow[-1] * a)
            bpow.append(bpow[-1] * b)

        def homog(p, deg):
            acc = _ZERO
            for i, c in enumerate(p.coeffs()):
                if c != 0:
                    acc += c * apow[i] * bpow[deg - i]
            return acc

        num = homog(self.num, dn)
        den = homog(self.den, dd)
        if dd > dn:
            num = num * bpow[dd - dn]
        elif dn > dd:
            den = den * bpow[dn - dd]
        if den.is_zero():
            raise DivisionByZero("composition lands on a pole")
        return RatZeta._raw(num, den)

    def valuation(self, point) -> int:
        """Order of vanishing at z = point (a rational) or at INFINITY."""
        if self.num.is_zero():
            raise ZeroFunction("valuation of the zero function")
        if point == INFINITY or point is None:
            return self.den.degree() - self.num.degree()
        return _multiplicity(self.num, point) - _multiplicity(self.den, point)

    def numerator(self) -> flint.fmpq_poly:
        return self.num

    def denominator(self) -> flint.fmpq_poly:
        return self.den

    def integer_parts(self) -> tuple[flint.fmpz_poly, flint.fmpz_poly]:
        """(A, B) in Z[z] with value A/B, gcd of contents 1, lc(B) > 0."""
        n = self.num
        m = n.denom()
        a = n.numer()
        b = self.den.numer() * m
        g = flint.fmpz(a.content()).gcd(b.content()) if not a.is_zero() else b.content()
        if g != 1:
            a, b = a / g, b / g
        return a, b

    def coeff_lists(self) -> tuple[list[int], list[int]]:
        a, b = self.integer_parts()
        return [int(c) for c in a.coeffs()], [int(c) for c in b.coeffs()]

    @classmethod
    def from_coeff_lists(cls, num, den) -> RatZeta:
        return cls(flint.fmpq_poly([int(c) for c in num]), flint.fmpq_poly([int(c) for c in den]))

    def __str__(self):
        a, b = self.integer_parts()
        if b.is_one():
            return format_zpoly(a)
        return f"({format_zpoly(a)}) / ({format_zpoly(b)})"

    def __repr__(self):
        return f"RatZeta({self})"


def _coerce(value):
    if isinstance(value, RatZeta):
        return value
    if isinstance(value, (int, Fraction, flint.fmpq, flint.fmpz, flint.fmpq_poly, flint.fmpz_poly)):
        return RatZeta(value)
    return NotImplemented


def _multiplicity(p: flint.fmpq_poly, point) -> int:
    c = to_fraction(point)
    lin = flint.fmpq_poly([-c.numerator, c.denominator])
    k = 0
    while p.degree() > 0:
        q, r = divmod(p, lin)
        if not r.is_zero():
            break
        p = q
        k += 1
    return k


def format_zpoly(p, var: str = "z") -> str:
    """Canonical text for an integer (or rational) polynomial in one variable."""
    coeffs = list(p.coeffs())
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        terms.append((c, {var: deg} if deg else {}))
    return format_terms(terms)


def format_terms(terms) -> str:
    """Render ``[(coeff, {var: exp})]`` already in display order."""
    if not terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(terms):
        c = to_fraction(c)
        neg = c < 0
        mag = -c if neg else c
        factors = [v if e == 1 else f"{v}^{e}" for v, e in mono.items() if e]
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def lcm_denominators(values) -> int:
    return reduce(lcm, (to_fraction(v).denominator for v in values), 1)


Z = RatZeta.z()
ONE = RatZeta(1)
ZERO = RatZeta(0)
