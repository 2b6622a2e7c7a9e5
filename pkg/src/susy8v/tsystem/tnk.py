"""The lattice functions T_n^(k) and t^(k)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import flint

from ..config import BOUNDS
from ..errors import InexactDivision, InvalidIndex, ParityError, SizeBound, ZeroFunction
from ..exact import MPolyX, RatZeta, Z, mpoly_exact_div, xnames
from .confluent import split_value
from .interp import interpolate_symmetric
from .weights import G_xi, XI


@dataclass(frozen=True)
class KIndex:
    k: tuple[int, int, int, int]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        if len(self.k) != 4:
            raise InvalidIndex("k must have four entries")
        if self.m < 0:
            raise InvalidIndex(f"m = 2n - |k| = {self.m} is negative for k={self.k}, n={self.n}")

    @classmethod
    def for_t(cls, k) -> KIndex:
        total = sum(k)
        if total % 2:
            raise ParityError(f"|k| = {total} is odd")
        return cls(tuple(k), total // 2)

    @property
    def m(self) -> int:
        return 2 * self.n - sum(self.k)

    @property
    def kplus(self) -> tuple[int, ...]:
        return tuple(max(v, 0) for v in self.k)

    @property
    def kminus(self) -> tuple[int, ...]:
        return tuple(max(-v, 0) for v in self.k)

    @property
    def size(self) -> int:
        """Size of the underlying determinant."""
        return self.n + sum(self.kminus)


# linear factors of G(x, xi_i) in x, one per i (xi_1 gives a constant)
def _linear_factor(i: int, names, j: int) -> MPolyX | None:
    x = MPolyX.var(names, j)
    if i == 0:
        return x
    if i == 2:
        return (Z + 2) * x - (2 * Z + 1)
    if i == 3:
        return x - Z
    return None


# G(x, xi_i) = c_i * factor_i(x)^2
_G_XI_CONST = {
    0: 2 * (Z + 1) ** 2,
    1: 2 * Z**2 * (Z + 1) ** 2 / (Z + 2) ** 2,
    2: 2 * Z**2 / (Z + 2) ** 2,
    3: RatZeta(2),
}


class XRational:
    """num / den with den a product of the linear factors of G(x_j, xi_i).

    ``den`` maps (variable index, i) to an exponent; all constants live in
    ``num``.  After reduction no listed factor divides ``num``, so the pair is
    canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPolyX, den: dict[tuple[int, int], int] | None = None, reduce=True):
        self.num = num
        self.den = {key: e for key, e in (den or {}).items() if e}
        if reduce:
            self._reduce()

    @property
    def names(self):
        return self.num.names

    def _reduce(self):
        for key in sorted(self.den):
            j, i = key
            f = _linear_factor(i, self.names, j)
            while self.den.get(key):
                try:
                    q = mpoly_exact_div(self.num, f)
                except InexactDivision:
                    break
                self.num = q
                self.den[key] -= 1
        self.den = {key: e for key, e in self.den.items() if e}

    @classmethod
    def from_fraction(cls, num: MPolyX, den: MPolyX) -> XRational:
        """Divide out every listed linear factor of ``den``; the rest must be a constant."""
        exps: dict[tuple[int, int], int] = {}
        for j in range(len(num.names)):
            for i in (0, 2, 3):
                f = _linear_factor(i, num.names, j)
                while True:
                    try:
                        den = mpoly_exact_div(den, f)
                    except InexactDivision:
                        break
                    exps[(j, i)] = exps.get((j, i), 0) + 1
        if not den.is_constant():
            raise ValueError("denominator has factors outside the G(x, xi) family")
        return cls(num / den.constant_value(), exps)

    def denominator(self) -> MPolyX:
        acc = MPolyX.const(self.names, 1)
        for (j, i), e in self.den.items():
            acc = acc * _linear_factor(i, self.names, j) ** e
        return acc

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, XRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, tuple(sorted(self.den.items()))))

    def __mul__(self, other):
        if isinstance(other, XRational):
            den = dict(self.den)
            for key, e in other.den.items():
                den[key] = den.get(key, 0) + e
            return XRational(self.num * other.num, den)
        return XRational(self.num * other, dict(self.den), reduce=False)

    __rmul__ = __mul__

    def evaluate(self, values) -> RatZeta:
        return self.num.evaluate(values) / self.denominator().evaluate(values)

    def cross_equal(self, num: MPolyX, den: MPolyX) -> bool:
        """Whether self == num / den, checked by cross-multiplication."""
        return self.num * den == num * self.denominator()

    def __str__(self):
        _, B = self.num.integer_parts()
        scale = RatZeta(_zpoly(B))
        den = self.denominator() * scale
        if den == 1:
            return str(self.num)
        return f"({self.num * scale}) / ({den})"

    def __repr__(self):
        return f"XRational({self})"


def _zpoly(coeffs):
    return flint.fmpq_poly(coeffs)


@dataclass(frozen=True)
class TValue:
    index: KIndex
    value: object  # RatZeta when m == 0, XRational otherwise
    provenance: str = "determinant"

    @property
    def m(self) -> int:
        return self.index.m

    def __str__(self):
        return str(self.value)


def _prefactor(idx: KIndex) -> RatZeta:
    kp, km = idx.kplus, idx.kminus
    total_minus = sum(km)
    c = RatZeta((-1) ** comb(total_minus, 2)) / 2**total_minus
    for i in range(4):
        for j in range(4):
            e = km[i] * kp[j]
            if e:
                c = c / G_xi(i, j) ** e
    return c


def _fixed_points(idx: KIndex):
    left = [XI[i] for i in range(4) for _ in range(idx.kplus[i])]
    right = [XI[i] for i in range(4) for _ in range(idx.kminus[i])]
    return left, right


def degree_bound(idx: KIndex) -> int:
    """Degree in each free variable of T(x, xi^{k+}; xi^{k-})."""
    left = idx.m + sum(idx.kplus)
    return 3 * idx.size - left - 1


def specialized_numerator(idx: KIndex) -> MPolyX:
    """T(x_1..x_m, xi^{k+}; xi^{k-}) as a symmetric polynomial in x."""
    if idx.size > BOUNDS.confluent_n:
        raise SizeBound(f"determinant size {idx.size} exceeds {BOUNDS.confluent_n}")
    if idx.m > BOUNDS.free_vars:
        raise SizeBound(f"{idx.m} free variables exceed {BOUNDS.free_vars}")
    left, right = _fixed_points(idx)
    d = degree_bound(idx)
    check = tuple(range(d + 5, d + 5 + 2 * idx.m, 2))
    return interpolate_symmetric(lambda pts: split_value(list(pts) + left, right), idx.m, d, check_point=check)


@lru_cache(maxsize=None)
def _tnk_cached(k: tuple[int, ...], n: int) -> TValue:
    idx = KIndex(k, n)
    pref = _prefactor(idx)
    if idx.m == 0:
        left, right = _fixed_points(idx)
        if idx.size > BOUNDS.confluent_n:
            raise SizeBound(f"determinant size {idx.size} exceeds {BOUNDS.confluent_n}")
        value = pref * split_value(left, right)
        if value.is_zero():
            raise ZeroFunction(f"t^{k} vanished identically")
        return TValue(idx, value)
    P = specialized_numerator(idx)
    km = idx.kminus
    const = pref
    for i in range(4):
        if km[i]:
            const = const / _G_XI_CONST[i] ** (km[i] * idx.m)
    den = {(j, i): 2 * km[i] for j in range(idx.m) for i in (0, 2, 3) if km[i]}
    value = XRational(P * const, den)
    if value.is_zero():
        raise ZeroFunction(f"T_{n}^{k} vanished identically")
    return TValue(idx, value)


def Tnk(index) -> TValue:
    """T_n^(k) for a KIndex or a (k, n) pair."""
    if not isinstance(index, KIndex):
        k, n = index
        index = KIndex(tuple(k), n)
    return _tnk_cached(index.k, index.n)


def tk(k) -> RatZeta:
    idx = KIndex.for_t(k)
    return Tnk(idx).value
