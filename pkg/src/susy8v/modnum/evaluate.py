"""Numeric evaluation of the exact objects at complex points."""
from __future__ import annotations

import mpmath

from ..exact import MPolyX, RatZeta


def _mpq(c):
    return mpmath.mpf(int(c.p)) / int(c.q)


def _poly_at(p, z):
    acc = mpmath.mpf(0)
    for c in reversed(p.coeffs()):
        acc = acc * z + _mpq(c)
    return acc


def eval_ratzeta(r: RatZeta, zeta):
    """r(zeta) at the ambient precision."""
    r = RatZeta.coerce(r)
    return _poly_at(r.numerator(), zeta) / _poly_at(r.denominator(), zeta)


class CompiledPoly:
    """An MPolyX in x_1..x_m over Q(zeta) prepared for repeated evaluation."""

    def __init__(self, poly: MPolyX):
        self.nvars = len(poly.names)
        self.terms = [(tuple(int(e) for e in exp), c) for exp, c in poly.num.to_dict().items()]
        self.den = poly.den

    def __call__(self, xs, zeta):
        if len(xs) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(xs)}")
        acc = mpmath.mpf(0)
        for exp, c in self.terms:
            term = _mpq(c) * zeta ** exp[-1]
            for x, e in zip(xs, exp[:-1]):
                if e:
                    term *= x**e
            acc += term
        return acc / _poly_at(self.den, zeta)


def compile_value(value):
    """A callable (xs, zeta) -> number for a RatZeta, MPolyX or XRational."""
    if isinstance(value, RatZeta):
        return lambda xs, zeta: eval_ratzeta(value, zeta)
    if isinstance(value, MPolyX):
        return CompiledPoly(value)
    num, den = CompiledPoly(value.num), CompiledPoly(value.denominator())
    return lambda xs, zeta: num(xs, zeta) / den(xs, zeta)


def vandermonde(xs):
    acc = mpmath.mpf(1)
    for j in range(len(xs)):
        for i in range(j):
            acc *= xs[j] - xs[i]
    return acc


def weierstrass_p(u, tau):
    """wp(u | 1, tau) from the Jacobi theta quotient."""
    u, tau = mpmath.mpmathify(u), mpmath.mpmathify(tau)
    q = mpmath.exp(1j * mpmath.pi * tau)
    t2, t3 = mpmath.jtheta(2, 0, q), mpmath.jtheta(3, 0, q)
    v = mpmath.pi * u
    ratio = t2 * t3 * mpmath.jtheta(4, v, q) / mpmath.jtheta(1, v, q)
    return mpmath.pi**2 * (ratio**2 - (t2**4 + t3**4) / 3)


def weierstrass_p_lattice(u, tau, radius: int = 40):
    """wp(u | 1, tau) by truncated lattice summation.

    Converges slowly; only meant as a coarse cross-check of weierstrass_p.
    """
    u, tau = mpmath.mpmathify(u), mpmath.mpmathify(tau)
    acc = 1 / u**2
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            if a == 0 and b == 0:
                continue
            w = a + b * tau
            acc += 1 / (u - w) ** 2 - 1 / w**2
    return acc
