"""Tau-function bookkeeping: the normaliser phi_l, the map l -> k, factor matching, cusp exponents."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import MissingDependency
from ..exact import INFINITY, RatZeta, Z
from ..tsystem.tnk import tk
from .backlund import l0_of, q_lattice

CUSP_FACTORS = {"z": Z, "z-1": Z - 1, "z+1": Z + 1, "z+2": Z + 2, "2z+1": 2 * Z + 1}


@dataclass(frozen=True)
class TauExponent:
    """phi_l = coeff * e^{pi i root24 / 12} * 2^{pow2third/3} * u^powU v^powV * prod tau_j^powTau[j]."""

    powU: int
    powV: int
    powTau: tuple[int, int, int, int, int]
    coeff: RatZeta
    root24: int
    pow2third: int = 0


def _binom2(a: int) -> int:
    return a * (a - 1) // 2


def _binom3(a: int) -> int:
    return a * (a - 1) * (a - 2) // 6


def _half(twice: int) -> int:
    if twice % 2:
        raise ArithmeticError(f"exponent {twice}/2 is not an integer")
    return twice // 2


def tau_normalizer(l) -> TauExponent:
    l1, l2, l3, l4 = (int(v) for v in l)
    l0 = l0_of((l1, l2, l3, l4))
    sign = _binom3(l1 + 1) + _binom3(l3 + 1) + _binom3(l4 + 1) + (_binom2(l3 + 1) + l1 * l3 + l2) * l4
    ipow = _binom2(l3 + 1) + _binom2(l4 + 1) - l1 * l1 * l3 + l1 * l4 * l4 + l2 + l3 + l4
    coeff = RatZeta(Fraction(-1 if sign % 2 else 1, 2 ** (l0 * (l0 - 1) + l1 * l1 + l3 * l3 + l4 * l4)))
    coeff = (
        coeff
        * Z ** (l4 * l4 - l0 * (l0 - 1) - (l0 + l2) * (l2 + l4))
        * (Z + 1) ** (l3 * l3 - l0 * (l0 - 1) - (l0 + l2) * (l2 + l3))
        * (Z - 1) ** ((l0 + l2) * (l1 + l4) - (l2 + l3) ** 2 - l3)
        * (Z + 2) ** (-3 * l2 * (l0 + l2 + l4) - (l0 + l4) * (l4 + 1))
        * (2 * Z + 1) ** (-(l0 * l0) - l1 * (l0 + l1 + 3 * l2 + 1) - l2)
    )
    pow_u = _half((l1 - l3) * (l1 + l3 + 2 * l4 - 1)) + 2 * l2 * (l0 + l2)
    pow_v = _half((l1 - l4) * (l1 + l4 + 2 * l3 - 1)) + 2 * l2 * (l0 + l2)
    return TauExponent(pow_u, pow_v, (l0 + 1, l1, l2, l3, l4), coeff, (6 * ipow) % 24)


def klr_map(l) -> tuple[int, int, int, int]:
    l1, l2, l3, l4 = l
    return (-l1 - l2 - l4, -l2, -l1 - l2 - l3, -l2 - l3 - l4)


def klr_inverse(k) -> tuple[int, int, int, int]:
    k0, k1, k2, k3 = k
    if sum(k) % 2:
        raise ValueError(f"|k| = {sum(k)} is odd")
    l2 = -k1
    # k0 + k2 - k3 = -2 l1 - l2
    l1 = (-k0 - k2 + k3 - l2) // 2
    l4 = -k0 - l1 - l2
    l3 = -k2 - l1 - l2
    return l1, l2, l3, l4


def tqf_indices(l):
    """(numerator pair, denominator pair) of tau indices in the q-ratio identity."""
    l1, l2, l3, l4 = l
    num = ((l1, l2, l3, l4 + 1), (l1, l2 + 1, l3, l4 - 1))
    den = ((l1 + 1, l2, l3, l4), (l1 - 1, l2 + 1, l3, l4))
    return num, den


def cusp_monomial_split(value: RatZeta):
    """(constant, {factor: exponent}, rest) with value = constant * monomial * rest."""
    exps = {}
    rest = value
    for name, f in CUSP_FACTORS.items():
        e = rest.valuation(-f(0) / f.derivative()(0)) if not rest.is_zero() else 0
        if e:
            rest = rest / f**e
            exps[name] = e
    num, den = rest.numerator(), rest.denominator()
    if num.degree() == 0 and den.degree() == 0:
        c = num[0] / den[0]
        return Fraction(int(c.p), int(c.q)), exps, RatZeta(1)
    return None, exps, rest


def factor_match_tqf(l, store=None) -> bool:
    """Whether q_l * t(den pair) / t(num pair) is a constant times a cusp monomial."""
    num, den = tqf_indices(l)

    def t(L):
        k = klr_map(L)
        if store is None:
            return tk(k)
        if k not in store:
            raise MissingDependency(f"t^{k} for tau index {L} is not in the lattice")
        return store.get(k)

    quotient = q_lattice(l) * t(den[0]) * t(den[1]) / (t(num[0]) * t(num[1]))
    const, _, _ = cusp_monomial_split(quotient)
    return const is not None


def _chi(v: int) -> int:
    return v % 2


def scc_exponents(l) -> dict:
    """Measured and predicted orders of q_l and q_l - 1 at the cusps, with an overall verdict."""
    l1, l2, l3, l4 = l
    l0 = abs(l0_of(l))
    q = q_lattice(l)
    qm1 = q - 1
    pole = 1 + _chi(l3 + l4)
    predicted = {
        ("q", 0): 1 + l0 * (l4 == 0),
        ("q", -2): 1 + _chi(l1 + l3),
        ("q", Fraction(-1, 2)): -pole,
        ("q", 1): 0,
        ("q", -1): 0,
        ("q-1", -1): 1 + l0 * (l3 == 0),
        ("q-1", 1): 1 + _chi(l1 + l4),
        ("q-1", Fraction(-1, 2)): -pole,
        ("q-1", 0): 0,
        ("q-1", -2): 0,
    }
    measured = {}
    for (which, point) in predicted:
        f = q if which == "q" else qm1
        measured[(which, point)] = f.valuation(point)
    # q grows like zeta^(1 + |l0| [l1 = 0]) at infinity
    predicted[("q", "inf")] = -(1 + l0 * (l1 == 0))
    measured[("q", "inf")] = q.valuation(INFINITY)
    ok = all(measured[key] == predicted[key] for key in predicted)
    return {"measured": measured, "predicted": predicted, "ok": ok}
