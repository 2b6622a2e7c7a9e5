"""T(left; right) at points of Q(z), allowing repeated points.

Rows (and columns) that share a point are replaced by Taylor coefficients
of the block entry functions at that point.  This is the exact limit of the
determinant divided by the within-group Vandermonde factors; the
between-group factors are divided out explicitly.  Every block entry is
analytic at the points used here: left and right point sets are disjoint,
and G does not vanish on them.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from ..config import BOUNDS
from ..errors import DivisionByZero, SizeBound
from ..exact import RatZeta, det_bareiss
from .weights import G, coefficient_table

ONE = RatZeta(1)


# truncated bivariate series {(r, s): coeff}, r <= rmax, s <= smax ----------


def _shifted(which: str, p: RatZeta, q: RatZeta, rmax: int, smax: int, swap=False):
    """Taylor coefficients of weight(p + h, q + k) (arguments swapped if asked)."""
    out: dict[tuple[int, int], RatZeta] = {}
    ppow = _powers(p, 4)
    qpow = _powers(q, 4)
    for (a, b), c in coefficient_table(which).items():
        if swap:
            a, b = b, a
        for r in range(min(a, rmax) + 1):
            for s in range(min(b, smax) + 1):
                term = c * (comb(a, r) * comb(b, s)) * ppow[a - r] * qpow[b - s]
                out[(r, s)] = out.get((r, s), 0) + term
    return {key: v for key, v in out.items() if not RatZeta.coerce(v).is_zero()}


def _powers(v: RatZeta, top: int):
    out = [ONE]
    for _ in range(top):
        out.append(out[-1] * v)
    return out


def _mul(f, g, rmax, smax):
    out: dict[tuple[int, int], RatZeta] = {}
    for (r1, s1), a in f.items():
        for (r2, s2), b in g.items():
            r, s = r1 + r2, s1 + s2
            if r <= rmax and s <= smax:
                out[(r, s)] = out[(r, s)] + a * b if (r, s) in out else a * b
    return {key: v for key, v in out.items() if not v.is_zero()}


def _inverse(f, rmax, smax):
    c0 = f.get((0, 0))
    if c0 is None or c0.is_zero():
        raise DivisionByZero("entry function has a pole at the evaluation point")
    inv0 = c0.inverse()
    rest = {key: -v * inv0 for key, v in f.items() if key != (0, 0)}
    out = {(0, 0): inv0}
    power = {(0, 0): inv0}
    for _ in range(rmax + smax):
        power = _mul(power, rest, rmax, smax)
        if not power:
            break
        for key, v in power.items():
            out[key] = out[key] + v if key in out else v
    return out


@lru_cache(maxsize=4096)
def entry_series(block: str, p: RatZeta, q: RatZeta, rmax: int, smax: int):
    """Taylor table of the block entry function at (p, q).

    block is one of "LL", "LR", "RL", "RR" (row side, column side).
    """
    inv_g = _inverse(_shifted("G", p, q, rmax, smax), rmax, smax)
    if block == "LL":
        return inv_g
    if block == "RR":
        r = {key: -v for key, v in _shifted("R", p, q, rmax, smax).items()}
        return _mul(r, inv_g, rmax, smax)
    # LR: Q(x, y)/((y - x) G);  RL: Q(y, x)/((x - y) G)
    diff = {(0, 0): q - p, (1, 0): RatZeta(-1), (0, 1): ONE}
    if block == "RL":
        diff = {key: -v for key, v in diff.items()}
    if diff[(0, 0)].is_zero():
        raise DivisionByZero("left and right points coincide")
    num = _shifted("Q", p, q, rmax, smax, swap=(block == "RL"))
    return _mul(_mul(num, inv_g, rmax, smax), _inverse(diff, rmax, smax), rmax, smax)


def _groups(points):
    """[(point, multiplicity)] preserving first-appearance order."""
    order: list[RatZeta] = []
    counts: dict[RatZeta, int] = {}
    for p in points:
        p = RatZeta.coerce(p)
        if p not in counts:
            order.append(p)
            counts[p] = 0
        counts[p] += 1
    return [(p, counts[p]) for p in order]


def _between(groups) -> RatZeta:
    acc = ONE
    for a in range(len(groups)):
        for b in range(a + 1, len(groups)):
            acc = acc * (groups[b][0] - groups[a][0]) ** (groups[a][1] * groups[b][1])
    return acc


def _deal(groups, n_rows: int, n_cols: int):
    """Split a point multiset between rows and columns, alternating within groups."""
    rows: list[RatZeta] = []
    cols: list[RatZeta] = []
    turn = 0
    for p, mult in groups:
        for _ in range(mult):
            to_rows = (turn == 0 and len(rows) < n_rows) or len(cols) >= n_cols
            (rows if to_rows else cols).append(p)
            turn ^= 1
    return rows, cols


def split_value(left, right, *, split=None) -> RatZeta:
    """Exact T(left; right) for left/right lists of points in Q(z)."""
    left = [RatZeta.coerce(p) for p in left]
    right = [RatZeta.coerce(p) for p in right]
    total = len(left) + len(right)
    if total % 2:
        raise ValueError("T needs an even number of arguments")
    n = total // 2
    if n == 0:
        return ONE
    if n > BOUNDS.confluent_n:
        raise SizeBound(f"determinant size {n} exceeds {BOUNDS.confluent_n}")
    nl = len(left)
    if split is None:
        k = min(n, max(nl - n, (nl + 1) // 2))
    else:
        k = split
    l = nl - k
    if not (0 <= k <= n and 0 <= l <= n):
        raise ValueError(f"no split with k={k} for {nl} left points")
    row_l, col_l = _deal(_groups(left), k, l)
    row_r, col_r = _deal(_groups(right), n - k, n - l)
    blocks = {"rowL": _groups(row_l), "rowR": _groups(row_r), "colL": _groups(col_l), "colR": _groups(col_r)}
    row_spec = [("L", p, m) for p, m in blocks["rowL"]] + [("R", p, m) for p, m in blocks["rowR"]]
    col_spec = [("L", q, m) for q, m in blocks["colL"]] + [("R", q, m) for q, m in blocks["colR"]]

    matrix = []
    for rside, p, rm in row_spec:
        tables = [entry_series(rside + cside, p, q, rm - 1, cm - 1) for cside, q, cm in col_spec]
        for r in range(rm):
            row = []
            for (cside, q, cm), tab in zip(col_spec, tables):
                for s in range(cm):
                    row.append(tab.get((r, s), RatZeta(0)))
            matrix.append(row)
    det = det_bareiss(matrix)
    if isinstance(det, int):
        det = RatZeta(det)

    # prefactor: cross factors and the full G product, with multiplicities
    pref = ONE
    for p, rm in blocks["rowL"]:
        for q, cm in blocks["colR"]:
            pref = pref * (q - p) ** (rm * cm)
    for p, rm in blocks["rowR"]:
        for q, cm in blocks["colL"]:
            pref = pref * (p - q) ** (rm * cm)
    for _, p, rm in row_spec:
        for _, q, cm in col_spec:
            pref = pref * G(p, q) ** (rm * cm)
    den = ONE
    for g in blocks.values():
        den = den * _between(g)
    return pref * det / den
