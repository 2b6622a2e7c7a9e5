"""The normalising sequence Y_k."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial


@lru_cache(maxsize=None)
def Yseq(k: int) -> Fraction:
    """Closed product form of Y_k, valid for all integers k."""
    if k >= 0:
        acc = Fraction(1)
        for j in range(1, k + 1):
            acc *= Fraction(factorial(2 * j - 1), factorial(j - 1))
        return acc
    acc = Fraction((-1) ** ((k * (k + 1) // 2) % 2), 1) / Fraction(2) ** (2 * k + 1)
    for j in range(1, -k):
        acc *= Fraction(factorial(2 * j - 1), factorial(j - 1))
    return acc


def Yseq_recursive(k: int) -> Fraction:
    """Y_k from Y_{k+1} Y_{k-1} = 2(2k+1) Y_k^2 and Y_0 = Y_1 = 1."""
    lo, hi = Fraction(1), Fraction(1)  # Y_0, Y_1
    if k in (0, 1):
        return Fraction(1)
    if k > 1:
        for j in range(1, k):
            lo, hi = hi, 2 * (2 * j + 1) * hi * hi / lo
        return hi
    for j in range(0, k, -1):
        # Y_{j-1} = 2(2j+1) Y_j^2 / Y_{j+1}
        lo, hi = 2 * (2 * j + 1) * lo * lo / hi, lo
    return lo
