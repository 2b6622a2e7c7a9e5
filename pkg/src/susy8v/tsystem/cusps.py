"""Behaviour of T_n^(k) at the cusps: orders at the hyperbolic cusps, the trigonometric limit."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

import flint

from ..errors import InvalidIndex, ZeroFunction
from ..exact import INFINITY, RatZeta, Z
from .tnk import KIndex, Tnk

CUSPS = (0, -1, INFINITY)


def delta(n: int) -> int:
    """[n^2/4], read as the floor."""
    return n * n // 4


def cusp_exponent(k, n: int, m: int) -> int:
    """The predicted order L of T_n^(k) at zeta = 0."""
    k0, k1, k2, k3 = k
    s = k1 + k2
    base = s * (2 * n - s - 1)
    bound = m + abs(k0 + k3 + 1)
    if abs(s + 1) <= bound:
        return base
    if s + 1 <= -bound:
        return base + (n + 1) * (n - k0 - k3)
    return base + (n + 1 - m) * (s - n)


def content_valuation(value, point) -> int:
    """Valuation at ``point`` of a T-value (for m > 0 the Gauss valuation of num minus den)."""
    if isinstance(value, RatZeta):
        if value.is_zero():
            raise ZeroFunction("valuation of the zero function")
        return value.valuation(point)
    if value.is_zero():
        raise ZeroFunction("valuation of the zero function")
    num = min(c.valuation(point) for c in value.num.coefficients())
    den = min(c.valuation(point) for c in value.denominator().coefficients())
    return num - den


def cusp_order(k, cusp, m: int, n: int) -> tuple[int, int]:
    """(measured, predicted) order of T_n^(k) at a hyperbolic cusp 0, -1 or infinity."""
    k = tuple(int(v) for v in k)
    if 2 * n - sum(k) != m:
        raise InvalidIndex(f"m = {m} does not match 2n - |k| = {2 * n - sum(k)}")
    measured = content_valuation(Tnk((k, n)).value, cusp)
    k0, k1, k2, k3 = k
    if cusp == 0:
        predicted = cusp_exponent(k, n, m)
    elif cusp == -1:
        predicted = cusp_exponent((k2, k1, k0, k3), n, m)
    elif cusp == INFINITY:
        predicted = cusp_exponent((k1, k0, k2, k3), n, m) - 2 * n * (n - 1) - (k0 + k2) * (n - 1)
    else:
        raise InvalidIndex(f"{cusp!r} is not a hyperbolic cusp")
    return measured, predicted


# symplectic characters


def _det(rows):
    size = len(rows)
    if size == 0:
        return 1
    total = 0
    for perm in permutations(range(size)):
        sign = 1
        for i in range(size):
            for j in range(i + 1, size):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term
    return total


@lru_cache(maxsize=None)
def _staircase_character(size: int):
    """(polynomial, shift) with chi = polynomial * prod t_j^shift for the staircase partition."""
    if size == 0:
        return None, 0
    names = tuple(f"t{j + 1}" for j in range(size))
    ctx = flint.fmpq_mpoly_ctx.get(names, "lex")
    ts = ctx.gens()
    lam = [(size - i) // 2 for i in range(1, size + 1)]
    ells = [lam[i] + size - i for i in range(size)]
    rho = [size - i for i in range(size)]

    def cleared(exps):
        top = max(exps)
        return [[ts[j] ** (top + e) - ts[j] ** (top - e) for j in range(size)] for e in exps], top

    num_rows, num_top = cleared(ells)
    den_rows, den_top = cleared(rho)
    q, r = divmod(_det(num_rows), _det(den_rows))
    if r != 0:
        raise ArithmeticError("Weyl character quotient is not exact")
    return q, den_top - num_top


def symplectic_character(values) -> Fraction:
    """sp(2N) character with partition [(N-1)/2], [(N-2)/2], ..., 0 at nonzero rationals t_j."""
    values = [Fraction(v) for v in values]
    poly, shift = _staircase_character(len(values))
    if poly is None:
        return Fraction(1)
    val = poly(*[flint.fmpq(v.numerator, v.denominator) for v in values])
    out = Fraction(int(val.p), int(val.q))
    for v in values:
        out *= v**shift
    return out


def _limit_coefficient(c: RatZeta, e: int) -> Fraction | None:
    """lim_{z -> -2} ((z+2)/6)^e c(z), or None when it diverges."""
    if c.is_zero():
        return Fraction(0)
    shifted = c.compose(Z - 2)
    v = shifted.valuation(0)
    if v + e < 0:
        return None
    if v + e > 0:
        return Fraction(0)
    return (shifted * Z**e)(0) / Fraction(6) ** e


def trig_limit(index: KIndex):
    """The zeta -> -2 limit of the scaled T_n^(k) as a polynomial in x with rational coefficients."""
    k0, k1, k2, k3 = index.k
    e = (k1 + k2) * (index.n - 1) - delta(k1 + k2 - 1)
    value = Tnk(index).value
    if isinstance(value, RatZeta):
        return {(): _limit_coefficient(value, e)}
    if value.den:
        raise InvalidIndex("trigonometric limit needs all k_j >= 0")
    out = {}
    for exp, c in value.num.terms().items():
        lim = _limit_coefficient(c, e)
        if lim is None:
            return None
        if lim:
            out[exp] = lim
    return out


def x_from_t(t) -> Fraction:
    """Free variable x matching the character argument t (t + 1/t = -(x + 1))."""
    t = Fraction(t)
    return -(t + 1 / t) - 1


def trig_limit_check(k, n: int, m: int | None = None) -> bool:
    """Exact check of the zeta -> -2 symplectic-character limit."""
    k = tuple(int(v) for v in k)
    if any(v < 0 for v in k):
        raise InvalidIndex("trig_limit_check needs all k_j >= 0")
    index = KIndex(k, n)
    if m is not None and m != index.m:
        raise InvalidIndex(f"m = {m} does not match 2n - |k| = {index.m}")
    m = index.m
    k0, k1, k2, k3 = k
    lhs = trig_limit(index)
    if lhs is None:
        return False
    const = (Fraction((-1) ** k2 * 2**n) / Fraction(3) ** k1) ** (n - 1)
    const *= symplectic_character([1] * k1 + [-1] * k2)
    fixed = [1] * k0 + [-1] * k3
    lam_top = (m + k0 + k3 - 1) // 2 if m + k0 + k3 else 0
    d = max(max((int(max(e)) for e in lhs if e), default=0), lam_top)
    nodes = [Fraction(2 + j) for j in range(d + 1)]
    for point in combinations_with_replacement(nodes, m):
        xs = [x_from_t(t) for t in point]
        left = sum(
            (c * _monomial(xs, e) for e, c in lhs.items()),
            Fraction(0),
        )
        right = const * symplectic_character(list(point) + fixed)
        if left != right:
            return False
    return True


def _monomial(xs, exps) -> Fraction:
    out = Fraction(1)
    for x, e in zip(xs, exps):
        out *= x ** int(e)
    return out
