"""Polynomial families expressed through T_n^(k) and t^(k).

Families whose natural argument is not zeta are returned as functions of
zeta; ``PARAMETRISATION`` records the substitution that was applied.
"""
from __future__ import annotations

from fractions import Fraction

import flint

from ..errors import InexactDivision, InvalidIndex, NonPolynomial
from ..exact import MPolyX, RatZeta, Z, det_bareiss, mpoly_exact_div, xnames
from .cusps import delta
from .determinant import bigT
from .symmetry import substitute
from .tnk import Tnk, XRational, tk
from .weights import G

PARAMETRISATION = {
    "s_n": "z = zeta/((zeta+2)(2zeta+1))",
    "sbar_n": "z = zeta/((zeta+2)(2zeta+1))",
    "zj_p_n": "y = 1/(2zeta+1)",
    "zj_q_n": "y = 1/(2zeta+1)",
    "H_2n": "zeta_Z = 2zeta+1",
    "f_n": "argument (2zeta+1)^2",
}

HALF_Z = Z / 2 + 1


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def times_polynomial(value, factor: MPolyX) -> MPolyX:
    """value * factor as a polynomial in x; NonPolynomial if a denominator survives."""
    if not isinstance(value, XRational):
        return factor * value
    try:
        return mpoly_exact_div(value.num * factor, value.denominator())
    except InexactDivision as exc:
        raise NonPolynomial("product keeps a denominator in x") from exc


def S_n(n: int) -> MPolyX:
    m = 2 * n + 1
    names = xnames(m)
    factor = MPolyX.const(names, RatZeta(Fraction(2) ** n) / (1 - Z))
    for j in range(m):
        factor = factor * (MPolyX.var(names, j) - Z)
    return times_polynomial(Tnk(((0, 0, 0, -1), n)).value, factor)


def P_n(n: int) -> MPolyX:
    pref = RatZeta(_sign(n // 2)) * HALF_Z ** (n * (n - 1) - delta(n - 1)) / (
        (1 - Z) * Z ** (n * (n - 1)) * (Z + 1) ** (n * (n - 2)) * (2 * Z + 1) ** delta(n - 1)
    )
    names = xnames(1)
    return times_polynomial(Tnk(((n, n, 0, -1), n)).value, (MPolyX.var(names, 0) - Z) * pref)


def p_n(n: int) -> RatZeta:
    pref = RatZeta(_sign(n // 2)) * HALF_Z ** (n * (n - 1) - delta(n - 1)) / (
        (1 - Z) * Z ** (n * (n - 1)) * (Z + 1) ** (n * n - 2 * n - 1) * (2 * Z + 1) ** delta(n)
    )
    return pref * tk((n + 1, n, 0, -1))


def y_n(n: int) -> RatZeta:
    pref = RatZeta(_sign(n // 2)) * HALF_Z ** ((n - 1) ** 2 - delta(n - 2)) / (
        Fraction(2) ** ((n + 3) // 2)
        * (1 - Z)
        * Z ** (n * (n - 1))
        * (Z + 1) ** (n * n - 2 * n - 1)
        * (2 * Z + 1) ** delta(n + 1)
    )
    return pref * tk((n + 2, n - 1, 0, -1))


def ptilde_n(n: int) -> RatZeta:
    pref = RatZeta(_sign(n // 2 + 1) * Fraction(2) ** ((n - 1) // 2)) * HALF_Z ** (n * n - 1 - delta(n)) / (
        (1 - Z) * Z ** (n * n - 1) * (Z + 1) ** (n * n - 2 * n - 1) * (2 * Z + 1) ** delta(n - 1)
    )
    return pref * tk((n, n + 1, 0, -1))


def _bm_scale(n: int) -> RatZeta:
    return ((Z + 2) * (2 * Z + 1) / 2) ** delta(n)


def s_n(n: int) -> RatZeta:
    """s_n(zeta/((zeta+2)(2zeta+1))) as a function of zeta."""
    pref = RatZeta(_sign(n // 2)) * HALF_Z ** (n * (n - 1) - delta(n - 1)) / (
        Z ** (n * (n - 1)) * (Z + 1) ** (n * (n - 1)) * (2 * Z + 1) ** delta(n - 1)
    )
    return pref * tk((n, n, 0, 0)) / _bm_scale(n)


def sbar_n(n: int) -> RatZeta:
    """sbar_n(zeta/((zeta+2)(2zeta+1))) as a function of zeta."""
    pref = RatZeta(_sign(n // 2 + 1) * Fraction(2) ** (n - 1)) * HALF_Z ** (n * n - 1 - delta(n - 1)) / (
        Z ** (n * n - 1) * (Z + 1) ** (n * (n - 1)) * (2 * Z + 1) ** delta(n - 1)
    )
    return pref * tk((n, n, 1, -1)) / _bm_scale(n)


def phi_map():
    """phi(x) = zeta/(zeta+2) (1 - 2(zeta+1) x) as (a, b) with phi = a x + b."""
    c = Z / (Z + 2)
    return -2 * (Z + 1) * c, c


def H_2n(n: int) -> MPolyX:
    """H_2n(x_1..x_2n) with zeta_Z = 2zeta+1, from T_n composed with phi."""
    T = bigT(n)
    a, b = phi_map()
    degs = [T.degree(j) for j in range(2 * n)]
    image = substitute(T, None, (a, b, 0, 1), degs)
    return image * ((Z + 2) / (Z * (Z + 1))) ** (n * (n - 1))


def zj_p_n(n: int) -> RatZeta:
    """p_n(1/(2zeta+1)) as a function of zeta."""
    C = RatZeta(Fraction(2) ** n) if n >= 0 else RatZeta(Fraction(3) ** (n + 1) / Fraction(2) ** (n + 2))
    pref = RatZeta(_sign(n)) * C * (Z + 2) ** (n * n - n - 1) / (
        Z ** (n * n - 2 * n - 1) * (Z + 1) ** (n * (n - 1)) * (2 * Z + 1) ** (n * n + n + 1)
    )
    return pref * tk((-1, 2 * n + 1, 0, 0))


def zj_q_n(n: int) -> RatZeta:
    """q_n(1/(2zeta+1)) as a function of zeta."""
    D = RatZeta(1) if n >= -1 else RatZeta(Fraction(3) ** (n + 2) / Fraction(2) ** (2 * n + 3))
    return D * ((Z + 2) / (Z * (Z + 1) * (2 * Z + 1))) ** (n * (n + 1)) * tk((0, 2 * n + 2, 0, 0))


def f_n(n: int) -> list[Fraction]:
    """Coefficients (low to high) of f_n with t^(0,2n,0,0) = (z(z+1)/(z+2))^{n(n-1)} f_n((2z+1)^2)."""
    g = tk((0, 2 * n, 0, 0)) * ((Z + 2) / (Z * (Z + 1))) ** (n * (n - 1))
    if not g.is_polynomial():
        raise NonPolynomial(f"t^(0,{2 * n},0,0) leaves a denominator after the prefactor")
    # u = 2 zeta + 1; f_n(u^2) must be even in u
    in_u = g.compose((Z - 1) / 2)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in in_u.numerator().coeffs()]
    lead = in_u.denominator().coeffs()
    scale = Fraction(int(lead[0].p), int(lead[0].q))
    if any(coeffs[1::2]):
        raise NonPolynomial("extraction is not a polynomial in (2zeta+1)^2")
    return [c / scale for c in coeffs[0::2]]


def f_n_poly(n: int):
    """f_n as a flint fmpq_poly in its own argument."""
    return flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in f_n(n)])


FAMILIES = {
    "S_n": S_n,
    "P_n": P_n,
    "p_n": p_n,
    "y_n": y_n,
    "ptilde_n": ptilde_n,
    "s_n": s_n,
    "sbar_n": sbar_n,
    "H_2n": H_2n,
    "zj_p_n": zj_p_n,
    "zj_q_n": zj_q_n,
    "f_n": f_n_poly,
}


def family_eval(which: str, n: int):
    try:
        fn = FAMILIES[which]
    except KeyError:
        raise InvalidIndex(f"unknown family {which!r}") from None
    return fn(n)


def _peel_in_z(value: RatZeta, limit: int = 64) -> flint.fmpq_poly:
    """Polynomial s with s(zeta/((zeta+2)(2zeta+1))) = value."""
    zmap = Z / ((Z + 2) * (2 * Z + 1))
    coeffs = []
    rest = value
    for _ in range(limit):
        if rest.is_zero():
            return flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in coeffs])
        c0 = rest(0)
        coeffs.append(c0)
        rest = (rest - c0) / zmap
    raise NonPolynomial("no polynomial in z reproduces the given function")


def _in_y(value: RatZeta) -> flint.fmpq_poly:
    """Polynomial p with p(1/(2zeta+1)) = value."""
    p = value.compose((1 - Z) / (2 * Z))
    if not p.is_polynomial():
        raise NonPolynomial("not a polynomial in y = 1/(2zeta+1)")
    return p.numerator() / p.denominator()


def spp_probe(n: int) -> bool:
    """Whether s_{2n+1}(y^2) = p_n(y) p_n(-y) holds exactly (reported, never asserted)."""
    s = _peel_in_z(s_n(2 * n + 1))
    p = _in_y(zj_p_n(n))
    y = flint.fmpq_poly([0, 1])
    return s(y * y) == p(y) * p(-y)


# independent determinant definitions


def _cleared_det(xs, ys, entry_num, weight) -> MPolyX:
    """prod G / Vandermondes * det(entry/weight), with rows cleared of denominators."""
    n = len(xs)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = entry_num(xs[i], ys[j])
            for jj in range(n):
                if jj != j:
                    acc = acc * weight(xs[i], ys[jj])
            row.append(acc)
        rows.append(row)
    value = det_bareiss(rows)
    for vs in (xs, ys):
        for i in range(n):
            for j in range(i + 1, n):
                value = mpoly_exact_div(value, vs[j] - vs[i])
    return value


def F_weight(x, y, w):
    return (Z + 2) * x * y * w - Z * (x * y + y * w + x * w + x + y + w) + Z * (2 * Z + 1)


def S_n_determinant(n: int) -> MPolyX:
    """S_n(x_1..x_n, y_1..y_n, z) straight from its determinant definition."""
    names = xnames(2 * n + 1)
    xs = [MPolyX.var(names, j) for j in range(n)]
    ys = [MPolyX.var(names, n + j) for j in range(n)]
    w = MPolyX.var(names, 2 * n)
    if n == 0:
        return MPolyX.const(names, 1)
    return _cleared_det(xs, ys, lambda x, y: F_weight(x, y, w), G)


def h_weight(x, y):
    zz = 2 * Z + 1
    return 1 - (3 + zz * zz) * x * y + (1 - zz * zz) * x * y * (x + y)


def H_2n_determinant(n: int) -> MPolyX:
    names = xnames(2 * n)
    xs = [MPolyX.var(names, j) for j in range(n)]
    ys = [MPolyX.var(names, n + j) for j in range(n)]
    if n == 0:
        return MPolyX.const(names, 1)
    return _cleared_det(xs, ys, lambda x, y: MPolyX.const(names, 1), h_weight)


def pdet_ad(m: int = 1):
    """a(x, zeta) and d(zeta) of the Painleve-type PDE for T_n; d carries the factor m."""
    names = xnames(1)
    x = MPolyX.var(names, 0)
    a = (x - 2 * Z - 1) * (x - 1) * ((Z + 2) * x - Z) * ((Z + 2) * x - Z * (2 * Z + 1))
    d = 2 * m * Z * (Z - 1) * (Z + 1) * (Z + 2) * (2 * Z + 1)
    return a, d
