"""Sparse polynomials in x1..xN with coefficients in Q(z).

A value is stored as ``num / den`` with ``num`` in Q[x1..xN, z] (a FLINT
``fmpq_mpoly``) and ``den`` a primitive integer polynomial in z that shares
no factor with ``num``.  That pair is canonical, so equality is structural.
"""
from __future__ import annotations

from functools import lru_cache

import flint
from flint.utils.flint_exceptions import DomainError

from ..errors import DivisionByZero, InexactDivision
from .ratzeta import RatZeta, format_terms, to_fmpq, _canonical

ZVAR = "z"


@lru_cache(maxsize=None)
def context(names: tuple[str, ...]) -> flint.fmpq_mpoly_ctx:
    return flint.fmpq_mpoly_ctx.get(tuple(names) + (ZVAR,), "deglex")


def xnames(n: int, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def _zpoly_to_mpoly(p: flint.fmpq_poly, ctx) -> flint.fmpq_mpoly:
    nv = ctx.nvars() - 1
    return ctx.from_dict({(0,) * nv + (i,): c for i, c in enumerate(p.coeffs()) if c != 0})


def zcontent(num: flint.fmpq_mpoly, nv: int) -> flint.fmpq_poly:
    """gcd over Q[z] of the z-coefficients of ``num`` viewed in Q[z][x]."""
    groups: dict[tuple, dict[int, object]] = {}
    for exp, c in num.to_dict().items():
        groups.setdefault(exp[:nv], {})[exp[nv]] = c
    g = None
    for coeffs in groups.values():
        top = max(coeffs)
        p = flint.fmpq_poly([coeffs.get(i, 0) for i in range(top + 1)])
        g = p if g is None else g.gcd(p)
        if g.degree() == 0:
            return flint.fmpq_poly(1)
    return g if g is not None else flint.fmpq_poly(0)


class MPolyX:
    __slots__ = ("names", "num", "den", "_hash")

    def __init__(self, names, num, den=None, *, canonical=False):
        self.names = tuple(names)
        ctx = context(self.names)
        den = flint.fmpq_poly(1) if den is None else den
        if isinstance(den, RatZeta):
            if not den.is_polynomial():
                raise TypeError("den must be a polynomial in z")
            den = den.num
        if isinstance(num, RatZeta):
            den = den * num.den
            num = _zpoly_to_mpoly(num.num, ctx)
        elif not isinstance(num, flint.fmpq_mpoly):
            num = ctx.constant(to_fmpq(num))
        if not canonical:
            num, den = _normalise(num, den, ctx)
        self.num = num
        self.den = den
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def const(cls, names, value) -> MPolyX:
        value = RatZeta.coerce(value)
        ctx = context(tuple(names))
        return cls(names, _zpoly_to_mpoly(value.num, ctx), value.den, canonical=True)

    @classmethod
    def var(cls, names, i: int) -> MPolyX:
        ctx = context(tuple(names))
        return cls(names, ctx.gens()[i], canonical=True)

    @classmethod
    def from_terms(cls, names, terms: dict) -> MPolyX:
        names = tuple(names)
        ctx = context(names)
        acc = cls(names, ctx.constant(0), canonical=True)
        for exp, coeff in terms.items():
            acc = acc + cls.monomial(names, exp, coeff)
        return acc

    @classmethod
    def monomial(cls, names, exp, coeff=1) -> MPolyX:
        coeff = RatZeta.coerce(coeff)
        ctx = context(tuple(names))
        n = ctx.from_dict({tuple(exp) + (i,): c for i, c in enumerate(coeff.num.coeffs()) if c != 0})
        return cls(names, n, coeff.den)

    def ctx(self):
        return context(self.names)

    def nvars(self) -> int:
        return len(self.names)

    # arithmetic -------------------------------------------------------
    def _lift(self, other) -> MPolyX:
        if isinstance(other, MPolyX):
            if other.names != self.names:
                raise ValueError(f"variable mismatch {self.names} vs {other.names}")
            return other
        return MPolyX.const(self.names, other)

    def __add__(self, other):
        o = self._lift(other)
        ctx = self.ctx()
        if self.den == o.den:
            return MPolyX(self.names, self.num + o.num, self.den)
        return MPolyX(
            self.names,
            self.num * _zpoly_to_mpoly(o.den, ctx) + o.num * _zpoly_to_mpoly(self.den, ctx),
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return MPolyX(self.names, -self.num, self.den, canonical=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return MPolyX(self.names, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        return MPolyX(self.names, self.num**e, self.den**e, canonical=True)

    def __truediv__(self, other):
        if isinstance(other, MPolyX):
            return mpoly_exact_div(self, other)
        other = RatZeta.coerce(other)
        if other.is_zero():
            raise DivisionByZero("division of a polynomial by zero")
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, MPolyX):
            try:
                other = self._lift(other)
            except TypeError:
                return False
        return self.names == other.names and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, str(self.num), str(self.den)))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # structure --------------------------------------------------------
    def terms(self) -> dict[tuple[int, ...], RatZeta]:
        """Exponent vector -> nonzero coefficient, in descending graded-lex order."""
        nv = len(self.names)
        groups: dict[tuple, dict[int, object]] = {}
        for exp, c in self.num.to_dict().items():
            groups.setdefault(exp[:nv], {})[exp[nv]] = c
        out = {}
        for exp in sorted(groups, key=lambda e: (sum(e), e), reverse=True):
            coeffs = groups[exp]
            p = flint.fmpq_poly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])
            out[exp] = RatZeta(p, self.den)
        return out

    def coefficients(self) -> list[RatZeta]:
        return list(self.terms().values())

    def degree(self, i: int) -> int:
        if self.num.is_zero():
            return -1
        return self.num.degrees()[i]

    def total_degree(self) -> int:
        if self.num.is_zero():
            return -1
        return max(sum(e[: len(self.names)]) for e in self.num.to_dict())

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms())

    def constant_value(self) -> RatZeta:
        t = self.terms()
        if any(any(e) for e in t):
            raise ValueError("polynomial is not constant")
        return t.get((0,) * len(self.names), RatZeta(0))

    def subs(self, values: dict[int, object]) -> MPolyX:
        """Substitute Q(z) values for some of the x variables."""
        acc = MPolyX.const(self.names, 0)
        for exp, c in self.terms().items():
            coeff = c
            rest = list(exp)
            for i, v in values.items():
                if exp[i]:
                    coeff = coeff * RatZeta.coerce(v) ** exp[i]
                rest[i] = 0
            acc = acc + MPolyX.monomial(self.names, rest, coeff)
        return acc

    def evaluate(self, values) -> RatZeta:
        return self.subs(dict(enumerate(values))).constant_value()

    def rename(self, names) -> MPolyX:
        names = tuple(names)
        if len(names) != len(self.names):
            raise ValueError("rename must keep the number of variables")
        ctx = context(names)
        return MPolyX(names, ctx.from_dict(self.num.to_dict()), self.den, canonical=True)

    def permute(self, perm) -> MPolyX:
        """Return f(x_{perm[0]}, x_{perm[1]}, ...)."""
        ctx = self.ctx()
        gens = ctx.gens()
        images = [gens[p] for p in perm] + [gens[-1]]
        return MPolyX(self.names, self.num.compose(*images), self.den, canonical=True)

    def zderivative(self) -> MPolyX:
        ctx = self.ctx()
        zi = len(self.names)
        dnum = self.num.derivative(zi)
        dden = _zpoly_to_mpoly(self.den.derivative(), ctx)
        return MPolyX(self.names, dnum * _zpoly_to_mpoly(self.den, ctx) - self.num * dden, self.den**2)

    def derivative(self, i: int) -> MPolyX:
        return MPolyX(self.names, self.num.derivative(i), self.den)

    def integer_parts(self):
        """(A, B): A in Z[x, z], B in Z[z], value A/B, contents coprime, lc(B) > 0."""
        num = self.num
        dnum = num.to_dict()
        m = 1
        for c in dnum.values():
            m = m * int(c.q) // _gcd(m, int(c.q))
        A = {e: int(c.p) * (m // int(c.q)) for e, c in dnum.items()}
        B = [int(c) * m for c in self.den.numer().coeffs()]
        g = 0
        for v in list(A.values()) + B:
            g = _gcd(g, v)
        if g > 1:
            A = {e: v // g for e, v in A.items()}
            B = [v // g for v in B]
        return A, B

    def __str__(self):
        A, B = self.integer_parts()
        names = self.names + (ZVAR,)
        order = sorted(A, key=lambda e: (sum(e), e), reverse=True)
        num = format_terms([(A[e], dict(zip(names, e))) for e in order])
        if B == [1]:
            return num
        den = format_terms([(c, {ZVAR: i} if i else {}) for i, c in reversed(list(enumerate(B))) if c])
        return f"({num}) / ({den})"

    def __repr__(self):
        return f"MPolyX[{', '.join(self.names)}]({self})"


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _normalise(num, den, ctx):
    den = flint.fmpq_poly(den) if not isinstance(den, flint.fmpq_poly) else den
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return num, flint.fmpq_poly(1)
    if den.degree() > 0:
        g = num.gcd(_zpoly_to_mpoly(den, ctx))
        if not g.is_constant():
            num = num / g
            # g involves z only
            gz = flint.fmpq_poly([0] * 0)
            gd = g.to_dict()
            nv = ctx.nvars() - 1
            top = max(e[nv] for e in gd)
            gz = flint.fmpq_poly([gd.get((0,) * nv + (i,), 0) for i in range(top + 1)])
            den = den / gz
    _, den2 = _canonical(flint.fmpq_poly(1), den)
    scale = den2.coeffs()[-1] / den.coeffs()[-1]
    if scale != 1:
        num = num * scale
    return num, den2


def mpoly_exact_div(a: MPolyX, b: MPolyX) -> MPolyX:
    """Quotient q with q*b == a; raises InexactDivision on a remainder."""
    if a.names != b.names:
        raise ValueError("variable mismatch")
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    ctx = a.ctx()
    nv = len(a.names)
    c = zcontent(b.num, nv)
    bprim = b.num / _zpoly_to_mpoly(c, ctx)
    try:
        q = a.num / bprim
    except DomainError as exc:
        raise InexactDivision(f"{b} does not divide {a}") from exc
    return MPolyX(a.names, q * _zpoly_to_mpoly(b.den, ctx), a.den * c)
