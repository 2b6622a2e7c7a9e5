"""The Toda-type recursion along k + n(e0 + e1) and the fourth-order ODE for f_n."""
from __future__ import annotations

import flint

from ..errors import NonPolynomial
from ..exact import RatZeta, Z
from ..tsystem.families import f_n_poly
from ..tsystem.tnk import tk

TODA_A = Z * (Z + 1) ** 2 * (Z - 1) ** 2 * (Z + 2) * (2 * Z + 1)
TODA_B = 2 * (Z + 1) ** 2 * (Z - 1) * (Z**3 - 3 * Z**2 - 6 * Z - 1)


def toda_sequence(k, n: int) -> tuple[int, ...]:
    k0, k1, k2, k3 = k
    return (k0 + n, k1 + n, k2, k3)


def toda_step(k, n: int, store=None) -> tuple[RatZeta, RatZeta]:
    """(left-hand side, C_n) of the Toda-type recursion at t_n = t^(k0+n, k1+n, k2, k3).

    Values come from ``store`` when present, otherwise from determinants.
    C_n must be a polynomial in zeta.
    """

    def t(j):
        kk = toda_sequence(k, j)
        if store is not None and kk in store:
            return store.get(kk)
        return tk(kk)

    k0, k1 = k[0], k[1]
    lo, mid, hi = t(n - 1), t(n), t(n + 1)
    d1 = mid.derivative()
    d2 = d1.derivative()
    lhs = -(2 * k0 + 2 * n + 1) * (2 * k1 + 2 * n + 1) * (Z + 2) ** 2 / Z**2 * hi * lo
    cn = (lhs - TODA_A * (d2 * mid - d1 * d1) - TODA_B * d1 * mid) / (mid * mid)
    if not cn.is_polynomial():
        raise NonPolynomial(f"C_{n} for k={tuple(k)} has a denominator: {cn}")
    return lhs, cn


def fn_ode_residual(f, n: int) -> flint.fmpq_poly:
    """The bilinear fourth-order expression applied to a polynomial f (zero for f = f_n)."""
    z = flint.fmpq_poly([0, 1])
    d1 = f.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    d4 = d3.derivative()
    zm1, zm9 = z - 1, z - 9
    out = z * zm1**3 * zm9**3 * (d4 * f - 4 * d3 * d1 + 3 * d2 * d2)
    out += (7 * z - 3) * zm1**2 * zm9**3 * (d3 * f - d2 * d1)
    out -= 2 * zm1 * zm9 * ((z + 1) * zm9**2 * n**2 + 2 * zm9**2 * n - 5 * z**3 + 105 * z**2 - 483 * z + 351) * d2 * f
    out += 2 * zm1 * zm9 * ((z + 1) * zm9**2 * n**2 + 2 * zm9**2 * n - z**3 + 9 * z**2 - 111 * z + 135) * d1 * d1
    out -= (
        2 * zm9 * (z**3 - 39 * z**2 + 139 * z + 27) * n**2
        + 8 * zm9 * (3 * z**2 + 2 * z + 27) * n
        - 2 * z**4
        + 72 * z**3
        - 876 * z**2
        + 2184 * z
        - 1890
    ) * d1 * f
    out -= 2 * n * (n - 1) * ((5 * z - 21) * zm9 * n**2 - (z + 15) * zm9 * n + z**2 + 22 * z + 9) * f * f
    return out


def fn_ode_check(n: int) -> flint.fmpq_poly:
    """Residual of the f_n ODE on the extracted f_n; identically zero when the identity holds."""
    return fn_ode_residual(f_n_poly(n), n)
