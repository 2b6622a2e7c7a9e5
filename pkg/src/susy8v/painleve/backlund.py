"""Backlund transformations of Painleve VI acting on concrete solutions in Q(zeta).

A state records the images of alpha_0..alpha_4, q, p, t under a solution map X.
Applying a generator g replaces X by X o g, i.e. evaluates the table row of g
at the current values.  For a word g_1 g_2 ... g_r the generators are therefore
applied to the state from left to right.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import DegenerateState, InvalidIndex
from ..exact import RatZeta, Z

GENERATORS = ("s0", "s1", "s2", "s3", "s4", "r1", "r3", "r4")

T_WORDS = {
    1: ("r1", "s1", "s2", "s3", "s4", "s2", "s1"),
    2: ("s0", "s2", "s1", "s3", "s4", "s2", "s1", "s3", "s4", "s2"),
    3: ("r3", "s3", "s2", "s1", "s4", "s2", "s3"),
    4: ("r4", "s4", "s2", "s1", "s3", "s2", "s4"),
}

T_OF_ZETA = Z * (Z + 2) ** 3 / (2 * Z + 1) ** 3


@dataclass(frozen=True)
class PVIState:
    alpha: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]
    q: RatZeta
    p: RatZeta
    t: RatZeta

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(Fraction(a) for a in self.alpha))
        a0, a1, a2, a3, a4 = self.alpha
        if a0 + a1 + 2 * a2 + a3 + a4 != 1:
            raise InvalidIndex(f"alpha {self.alpha} violates a0 + a1 + 2 a2 + a3 + a4 = 1")


def picard_seed() -> PVIState:
    return PVIState(
        (0, 0, Fraction(1, 2), 0, 0),
        Z * (Z + 2) / (2 * Z + 1),
        (2 * Z + 1) / (2 * (1 - Z) * (Z + 2)),
        T_OF_ZETA,
    )


def _nonzero(value: RatZeta, what: str) -> RatZeta:
    if value.is_zero():
        raise DegenerateState(f"{what} vanishes identically")
    return value


def backlund_apply(g: str, state: PVIState) -> PVIState:
    a0, a1, a2, a3, a4 = state.alpha
    q, p, t = state.q, state.p, state.t
    if g == "s0":
        return PVIState((-a0, a1, a2 + a0, a3, a4), q, p - a0 / _nonzero(q - t, "q - t"), t)
    if g == "s1":
        return PVIState((a0, -a1, a2 + a1, a3, a4), q, p, t)
    if g == "s2":
        if a2 == 0:
            return PVIState((a0, a1, a2, a3, a4), q, p, t)
        return PVIState((a0 + a2, a1 + a2, -a2, a3 + a2, a4 + a2), q + a2 / _nonzero(p, "p"), p, t)
    if g == "s3":
        return PVIState((a0, a1, a2 + a3, -a3, a4), q, p - a3 / _nonzero(q - 1, "q - 1"), t)
    if g == "s4":
        return PVIState((a0, a1, a2 + a4, a3, -a4), q, p - a4 / _nonzero(q, "q"), t)
    if g == "r1":
        qt = _nonzero(q - t, "q - t")
        return PVIState((a1, a0, a2, a4, a3), t * (q - 1) / qt, (t - q) * (qt * p + a2) / (t * (t - 1)), t)
    if g == "r3":
        q = _nonzero(q, "q")
        return PVIState((a3, a4, a2, a0, a1), t / q, -q * (p * q + a2) / t, t)
    if g == "r4":
        return backlund_apply("r3", backlund_apply("r1", state))
    raise InvalidIndex(f"unknown generator {g!r}")


def apply_word(word, state: PVIState) -> PVIState:
    for g in word:
        state = backlund_apply(g, state)
    return state


def Ti_word(i: int, inverse: bool = False) -> tuple[str, ...]:
    try:
        word = T_WORDS[i]
    except KeyError:
        raise InvalidIndex(f"T_{i} is not defined") from None
    return tuple(reversed(word)) if inverse else word


def lattice_word(l) -> tuple[str, ...]:
    """Word for T_1^l1 T_2^l2 T_3^l3 T_4^l4."""
    word: list[str] = []
    for i, li in zip((1, 2, 3, 4), l):
        word.extend(Ti_word(i, inverse=li < 0) * abs(li))
    return tuple(word)


@lru_cache(maxsize=None)
def lattice_state(l: tuple[int, int, int, int]) -> PVIState:
    return apply_word(lattice_word(l), picard_seed())


def q_lattice(l) -> RatZeta:
    """q_{l1 l2 l3 l4}, the image of q under X o T_1^l1 T_2^l2 T_3^l3 T_4^l4."""
    return lattice_state(tuple(int(v) for v in l)).q


def l0_of(l) -> int:
    l1, l2, l3, l4 = l
    return -(l1 + 2 * l2 + l3 + l4)


# derivatives in t via the chain rule in zeta

DELTA_FACTOR = Z * (Z + 1) * (Z - 1) * (Z + 2) / (2 * (2 * Z + 1) ** 2)


def delta(f: RatZeta) -> RatZeta:
    """t(t-1) d/dt expressed through d/dzeta."""
    return DELTA_FACTOR * f.derivative()


def ddt(f: RatZeta) -> RatZeta:
    return delta(f) / (T_OF_ZETA * (T_OF_ZETA - 1))


def pvi_residual(q: RatZeta, params, t: RatZeta = T_OF_ZETA) -> RatZeta:
    """Left minus right side of Painleve VI for q(t) with (alpha, beta, gamma, delta) = params."""
    al, be, ga, de = (Fraction(v) for v in params)
    q1 = ddt(q)
    q2 = ddt(q1)
    rhs = (
        (1 / q + 1 / (q - 1) + 1 / (q - t)) * q1 * q1 / 2
        - (1 / t + 1 / (t - 1) + 1 / (q - t)) * q1
        + q * (q - 1) * (q - t) / (t * t * (t - 1) ** 2) * (al + be * t / (q * q) + ga * (t - 1) / (q - 1) ** 2 + de * t * (t - 1) / (q - t) ** 2)
    )
    return q2 - rhs


def lattice_params(l) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    l1, l2, l3, l4 = l
    l0 = l0_of(l)
    return Fraction(l1 * l1, 2), Fraction(-l4 * l4, 2), Fraction(l3 * l3, 2), Fraction(1 - l0 * l0, 2)


def hamiltonian(state: PVIState) -> RatZeta:
    a0, a1, a2, a3, a4 = state.alpha
    q, p, t = state.q, state.p, state.t
    return (
        q * (q - 1) * (q - t) * p * p
        - ((a0 - 1) * q * (q - 1) + a3 * q * (q - t) + a4 * (q - 1) * (q - t)) * p
        + a2 * (a1 + a2) * (q - t)
    )


def modified_hamiltonian(state: PVIState) -> RatZeta:
    a0, a1, a2, a3, a4 = state.alpha
    t = state.t
    b = a0 - 1
    return (
        hamiltonian(state)
        + t / 12 * (2 * b * b - a1 * a1 + 2 * a3 * a3 - a4 * a4 + 6 * b * a3)
        + (t - 1) / 12 * (2 * b * b - a1 * a1 - a3 * a3 + 2 * a4 * a4 + 6 * b * a4)
    )


def casimir(alpha) -> Fraction:
    a0, a1, _, a3, a4 = alpha
    return (a0 - 1) ** 2 + a1 * a1 + a3 * a3 + a4 * a4


def b_params(alpha) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    a0, a1, _, a3, a4 = alpha
    return (a3 + a4) / 2, (a4 - a3) / 2, (a0 + a1 - 1) / 2, (a0 - a1 - 1) / 2


def evi_residual(state: PVIState) -> RatZeta:
    """Left minus right side of the E_VI equation for h = h_0 - C(2t-1)/24."""
    t = state.t
    h = modified_hamiltonian(state) - casimir(state.alpha) / 24 * (2 * t - 1)
    b1, b2, b3, b4 = b_params(state.alpha)
    h1 = ddt(h)
    h2 = ddt(h1)
    lhs = h1 * (t * (t - 1) * h2) ** 2 + (h1 * (2 * h - (2 * t - 1) * h1) + b1 * b2 * b3 * b4) ** 2
    rhs = (h1 + b1 * b1) * (h1 + b2 * b2) * (h1 + b3 * b3) * (h1 + b4 * b4)
    return lhs - rhs


def hamilton_residuals(state: PVIState) -> tuple[RatZeta, RatZeta]:
    """t(t-1) dq/dt - dH/dp and t(t-1) dp/dt + dH/dq on the state."""
    a0, a1, a2, a3, a4 = state.alpha
    q, p, t = state.q, state.p, state.t
    dHdp = 2 * q * (q - 1) * (q - t) * p - ((a0 - 1) * q * (q - 1) + a3 * q * (q - t) + a4 * (q - 1) * (q - t))
    dq_cubic = (q - 1) * (q - t) + q * (q - t) + q * (q - 1)
    dHdq = dq_cubic * p * p - ((a0 - 1) * (2 * q - 1) + a3 * (2 * q - t) + a4 * (2 * q - 1 - t)) * p + a2 * (a1 + a2)
    return delta(q) - dHdp, delta(p) + dHdq
