"""Exact interpolation of symmetric polynomials with coefficients in Q(z).

A symmetric polynomial of degree at most d in each of m variables is a
combination of monomial symmetric functions m_lambda, lambda inside the
m x d box.  Evaluating at all multisets of d+1 distinct nodes gives a
square, invertible rational system.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

import flint

from ..errors import InexactDivision
from ..exact import MPolyX, RatZeta, xnames


def partitions_in_box(m: int, d: int) -> list[tuple[int, ...]]:
    return [tuple(reversed(c)) for c in combinations_with_replacement(range(d + 1), m)]


@lru_cache(maxsize=None)
def _distinct_perms(lam: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(set(permutations(lam))))


def monomial_symmetric_value(lam, point) -> Fraction:
    acc = Fraction(0)
    for exps in _distinct_perms(tuple(lam)):
        term = Fraction(1)
        for x, e in zip(point, exps):
            term *= Fraction(x) ** e
        acc += term
    return acc


def monomial_symmetric(lam, names) -> MPolyX:
    return MPolyX.from_terms(names, {e: 1 for e in _distinct_perms(tuple(lam))})


@lru_cache(maxsize=None)
def _inverse_system(m: int, d: int, nodes: tuple[int, ...]):
    lams = partitions_in_box(m, d)
    pts = list(combinations_with_replacement(nodes, m))
    mat = flint.fmpq_mat(len(pts), len(lams), [
        flint.fmpq(v.numerator, v.denominator)
        for p in pts
        for v in (monomial_symmetric_value(lam, p) for lam in lams)
    ])
    return lams, pts, mat.inv()


def interpolate_symmetric(f, m: int, d: int, *, nodes=None, names=None, check_point=None) -> MPolyX:
    """Symmetric polynomial P in m variables with P(point) = f(point).

    ``f`` receives a nondecreasing tuple of integers.  When ``check_point``
    is given, P is re-evaluated there and compared with ``f``.
    """
    names = names or xnames(m)
    if m == 0:
        return MPolyX.const(names, f(()))
    nodes = tuple(nodes or range(2, d + 3))
    lams, pts, inv = _inverse_system(m, d, nodes)
    values = [RatZeta.coerce(f(p)) for p in pts]
    terms: dict[tuple[int, ...], RatZeta] = {}
    for i, lam in enumerate(lams):
        acc = RatZeta(0)
        for j, v in enumerate(values):
            c = inv[i, j]
            if c != 0:
                acc = acc + v * c
        if not acc.is_zero():
            for e in _distinct_perms(lam):
                terms[e] = acc
    poly = MPolyX.from_terms(names, terms)
    if check_point is not None:
        got = poly.evaluate([RatZeta(c) for c in check_point])
        want = RatZeta.coerce(f(tuple(sorted(check_point))))
        if got != want:
            raise InexactDivision("interpolated polynomial fails the extra-point check")
    return poly
