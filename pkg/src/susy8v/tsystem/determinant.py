"""Fully symbolic T(left; right) from the split determinant formula.

Rows carry x_1..x_n, columns carry x_{n+1}..x_{2n}.  The first ``k`` rows
and the first ``l`` columns hold the left variables.  Each row is multiplied
by its G-products and cross factors so that the matrix becomes polynomial;
the four block Vandermondes are then removed by exact division.

The right/right block uses -R/G.  With +R the (2,0) and (1,1) splits of
the n=2 case disagree, and the m=0 value t^(0,-1,-1,0) changes sign.
"""
from __future__ import annotations

from functools import lru_cache

from ..config import BOUNDS
from ..errors import SizeBound
from ..exact import MPolyX, det_bareiss, xnames
from .weights import G, Q, R


def _prod(items, one):
    acc = one
    for it in items:
        acc = acc * it
    return acc


def vandermonde(vs, one):
    return _prod((vs[j] - vs[i] for i in range(len(vs)) for j in range(i + 1, len(vs))), one)


def split_matrix(xs, ys, k: int, l: int):
    """Polynomial matrix whose determinant is T times the block Vandermondes."""
    n = len(xs)
    one = xs[0] ** 0
    g = [[G(xs[i], ys[j]) for j in range(n)] for i in range(n)]
    rows = []
    for i in range(n):
        x = xs[i]
        row = []
        for j in range(n):
            y = ys[j]
            others = _prod((g[i][jj] for jj in range(n) if jj != j), one)
            if i < k:
                cross = _prod((ys[jj] - x for jj in range(l, n) if jj != j), one)
                entry = others * cross if j < l else Q(x, y) * others * cross
            else:
                cross = _prod((x - ys[jj] for jj in range(l) if jj != j), one)
                entry = Q(y, x) * others * cross if j < l else -R(x, y) * others * cross
            row.append(entry)
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def splitT(n: int, k: int, l: int) -> MPolyX:
    """T(x_1..x_k, x_{n+1}..x_{n+l}; remaining variables) in 2n variables."""
    if n < 0 or not (0 <= k <= n and 0 <= l <= n):
        raise ValueError(f"invalid split n={n}, k={k}, l={l}")
    if n > BOUNDS.symbolic_n:
        raise SizeBound(f"n={n} exceeds the symbolic bound {BOUNDS.symbolic_n}")
    names = xnames(2 * n) if n else ("x1",)
    if n == 0:
        return MPolyX.const(names, 1)
    v = [MPolyX.var(names, i) for i in range(2 * n)]
    one = MPolyX.const(names, 1)
    xs, ys = v[:n], v[n:]
    det = det_bareiss(split_matrix(xs, ys, k, l))
    den = vandermonde(xs[:k], one) * vandermonde(xs[k:], one) * vandermonde(ys[:l], one) * vandermonde(ys[l:], one)
    return det / den


def bigT(n: int) -> MPolyX:
    """The symmetric polynomial T(x_1..x_{2n}); all variables on the left."""
    return splitT(n, n, n)


def split_variables(n: int, k: int, l: int) -> tuple[list[int], list[int]]:
    """Variable indices (0-based) on the left and on the right for a split."""
    left = list(range(k)) + list(range(n, n + l))
    right = list(range(k, n)) + list(range(n + l, 2 * n))
    return left, right
