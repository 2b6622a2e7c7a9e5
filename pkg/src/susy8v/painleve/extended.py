"""Backlund transformations extended to u, v and the tau functions tau_0..tau_4.

Images of the extra generators are monomials c * e^{pi i r / 12} * u^a v^b prod tau_j^e_j
with c in Q(zeta), so the whole orbit is tracked exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import DegenerateState, InvalidIndex
from ..exact import RatZeta
from .backlund import PVIState, backlund_apply, lattice_word, picard_seed

TAU_GENERATORS = ("u", "v", "tau0", "tau1", "tau2", "tau3", "tau4")

MINUS, I = 12, 6


@dataclass(frozen=True)
class TauMonomial:
    coeff: RatZeta
    root24: int
    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "root24", self.root24 % 24)
        if self.coeff.is_zero():
            raise DegenerateState("a tau image vanished")

    @classmethod
    def gen(cls, name: str) -> TauMonomial:
        exps = [0] * len(TAU_GENERATORS)
        exps[TAU_GENERATORS.index(name)] = 1
        return cls(RatZeta(1), 0, tuple(exps))

    @classmethod
    def scalar(cls, coeff, root24: int = 0) -> TauMonomial:
        return cls(RatZeta.coerce(coeff), root24, (0,) * len(TAU_GENERATORS))

    def __mul__(self, other: TauMonomial) -> TauMonomial:
        if not isinstance(other, TauMonomial):
            other = TauMonomial.scalar(other)
        return TauMonomial(self.coeff * other.coeff, self.root24 + other.root24, tuple(a + b for a, b in zip(self.exps, other.exps)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TauMonomial:
        return TauMonomial(self.coeff**e, self.root24 * e, tuple(a * e for a in self.exps))

    def __truediv__(self, other) -> TauMonomial:
        if not isinstance(other, TauMonomial):
            other = TauMonomial.scalar(other)
        return self * other**-1

    def exponent(self, name: str) -> int:
        return self.exps[TAU_GENERATORS.index(name)]


@dataclass(frozen=True)
class ExtendedState:
    base: PVIState
    images: tuple[TauMonomial, ...]

    def __getitem__(self, name: str) -> TauMonomial:
        return self.images[TAU_GENERATORS.index(name)]


def extended_seed() -> ExtendedState:
    return ExtendedState(picard_seed(), tuple(TauMonomial.gen(g) for g in TAU_GENERATORS))


def _tau_rows(g: str, s: ExtendedState) -> dict[str, TauMonomial]:
    q, p, t = s.base.q, s.base.p, s.base.t
    u, v = s["u"], s["v"]
    tau = [s[f"tau{j}"] for j in range(5)]
    if g == "s0":
        return {"tau0": TauMonomial.scalar(t - q, I) * tau[2] / (u**2 * v**2 * tau[0])}
    if g == "s1":
        return {"tau1": TauMonomial.scalar(1, I) * u * v * tau[2] / tau[1]}
    if g == "s2":
        return {"tau2": p * tau[0] * tau[1] * tau[3] * tau[4] / tau[2]}
    if g == "s3":
        return {"tau3": (1 - q) * tau[2] / (u * tau[3])}
    if g == "s4":
        return {"tau4": q * tau[2] / (v * tau[4])}
    if g == "r1":
        return {
            "v": v * TauMonomial.scalar(1, MINUS),
            "tau0": tau[1],
            "tau1": tau[0],
            "tau2": (q - t) * tau[2] / (u**3 * v**3),
            "tau3": tau[4],
            "tau4": tau[3],
        }
    if g == "r3":
        return {
            "u": u * TauMonomial.scalar(1, MINUS),
            "tau0": tau[3],
            "tau1": tau[4],
            "tau2": TauMonomial.scalar(q, I) * tau[2] / (u * v**2),
            "tau3": tau[0],
            "tau4": tau[1],
        }
    raise InvalidIndex(f"no extended row for {g!r}")


def extended_apply(g: str, state: ExtendedState) -> ExtendedState:
    if g == "r4":
        return extended_apply("r3", extended_apply("r1", state))
    rows = _tau_rows(g, state)
    images = tuple(rows.get(name, state[name]) for name in TAU_GENERATORS)
    return ExtendedState(backlund_apply(g, state.base), images)


@lru_cache(maxsize=None)
def extended_lattice_state(l: tuple[int, int, int, int]) -> ExtendedState:
    state = extended_seed()
    for g in lattice_word(l):
        state = extended_apply(g, state)
    return state


def tau_lattice(l) -> TauMonomial:
    """tau_{l1 l2 l3 l4} = T_1^l1 T_2^l2 T_3^l3 T_4^l4 tau_0 as a monomial over Q(zeta)."""
    return extended_lattice_state(tuple(int(v) for v in l))["tau0"]
