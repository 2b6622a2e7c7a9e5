"""The weight polynomials G, Q, R and the half-period values xi_j."""
from __future__ import annotations

from functools import lru_cache

from ..exact import MPolyX, RatZeta, Z


def G(x, y):
    return (Z + 2) * x * y * (x + y) - Z * (x * x + y * y) - 2 * (Z**2 + 3 * Z + 1) * x * y + Z * (2 * Z + 1) * (x + y)


def Q(x, y):
    return y * (y - 2 * Z - 1) * ((Z + 2) * y - 3 * Z) - x * ((Z + 2) * y - Z) * (2 * Z + 1 - 3 * y)


def R(x, y):
    return (
        3 * (Z + 2) ** 2 * x * x * y * y
        + Z * (Z + 2) * (2 * Z + 1) * (x * x + y * y)
        - 2 * (Z**2 + 4 * Z + 1) * ((Z + 2) * x * y + Z * (2 * Z + 1)) * (x + y)
        + 4 * (Z**4 + 4 * Z**3 + 8 * Z**2 + 4 * Z + 1) * x * y
        + 3 * Z**2 * (2 * Z + 1) ** 2
    )


WEIGHTS = {"G": G, "Q": Q, "R": R}

XI = (2 * Z + 1, Z / (Z + 2), Z * (2 * Z + 1) / (Z + 2), RatZeta(1))


def xi_vector() -> tuple[RatZeta, RatZeta, RatZeta, RatZeta]:
    return XI


def weight_polys(which: str, x, y):
    """G, Q or R evaluated at x, y (RatZeta values or MPolyX polynomials)."""
    try:
        f = WEIGHTS[which]
    except KeyError:
        raise ValueError(f"unknown weight {which!r}") from None
    return f(x, y)


@lru_cache(maxsize=None)
def coefficient_table(which: str) -> dict[tuple[int, int], RatZeta]:
    """Coefficients of x^a y^b in the chosen weight."""
    names = ("x", "y")
    x, y = MPolyX.var(names, 0), MPolyX.var(names, 1)
    return dict(weight_polys(which, x, y).terms())


@lru_cache(maxsize=None)
def G_xi(i: int, j: int) -> RatZeta:
    return G(XI[i], XI[j])
