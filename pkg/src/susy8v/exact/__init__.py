from .grammar import parse, parse_ratzeta
from .linalg import det_bareiss, det_cofactor, exact_div
from .mpoly import MPolyX, mpoly_exact_div, xnames
from .ratzeta import INFINITY, ONE, ZERO, PolyZeta, Rat, RatZeta, Z


def ratzeta_arith(a, b, op: str) -> RatZeta:
    a, b = RatZeta.coerce(a), RatZeta.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def valuation(f, point) -> int:
    return RatZeta.coerce(f).valuation(point)


__all__ = [
    "INFINITY",
    "ONE",
    "ZERO",
    "MPolyX",
    "PolyZeta",
    "Rat",
    "RatZeta",
    "Z",
    "det_bareiss",
    "det_cofactor",
    "exact_div",
    "mpoly_exact_div",
    "parse",
    "parse_ratzeta",
    "ratzeta_arith",
    "valuation",
    "xnames",
]
