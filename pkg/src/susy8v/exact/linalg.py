"""Fraction-free determinants over exact rings."""
from __future__ import annotations

from fractions import Fraction

import flint
from flint.utils.flint_exceptions import DomainError

from ..errors import InexactDivision
from .mpoly import MPolyX, mpoly_exact_div
from .ratzeta import RatZeta


def exact_div(a, b):
    """a / b where the quotient is known to lie in the ring of a and b."""
    if isinstance(a, MPolyX):
        return mpoly_exact_div(a, b if isinstance(b, MPolyX) else MPolyX.const(a.names, b))
    if isinstance(a, (RatZeta, Fraction)):
        return a / b
    if isinstance(a, (flint.fmpq_poly, flint.fmpz_poly, flint.fmpq_mpoly, flint.fmpz_mpoly)):
        try:
            return a / b
        except DomainError as exc:
            raise InexactDivision(str(exc)) from exc
        except ValueError as exc:
            raise InexactDivision(str(exc)) from exc
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(f"{b} does not divide {a}")
        return q
    return a / b


def _is_zero(a) -> bool:
    if hasattr(a, "is_zero"):
        return a.is_zero()
    return a == 0


def det_bareiss(matrix):
    """Determinant by Bareiss fraction-free elimination with row pivoting.

    Entries may be ints, Fractions, RatZeta, MPolyX or FLINT polynomials;
    every intermediate division is exact in the entries' ring.
    """
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    m = [list(row) for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[0][0] * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else exact_div(num, prev)
        prev = pivot
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def det_cofactor(matrix):
    """Laplace expansion along the first row; the reference oracle for small sizes."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    acc = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc
