"""Modular realisation of the Picard tau functions and the checks built on it."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath

from ..errors import MissingDependency, PrecisionExhausted
from ..exact import RatZeta
from ..painleve.backlund import apply_word, l0_of, modified_hamiltonian, picard_seed
from ..painleve.extended import TAU_GENERATORS, TauMonomial, tau_lattice
from ..painleve.tau import TauExponent, klr_map, tau_normalizer
from ..tsystem.tnk import tk
from ..tsystem.yseq import Yseq
from .evaluate import eval_ratzeta
from .theta import DEFAULT_DIGITS, phis, t_of, workprec, zeta_of

# images of the modular generators T(tau) = tau + 1 and U(tau) = (tau - 1)/(3 tau - 2)
MAT_T = ((1, 1), (0, 1))
MAT_U = ((1, -1), (3, -2))


def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _matpow(a, e: int):
    out = ((1, 0), (0, 1))
    for _ in range(e):
        out = _matmul(out, a)
    return out


MODULAR_T1 = _matpow(_matmul(MAT_U, _matpow(MAT_T, 3)), 3)
MODULAR_T3 = _matpow(_matmul(_matpow(MAT_T, 3), MAT_U), 3)


# a generator of Gamma_0(6, 2) with a moderate image of the standard sample points
GAMMA_SAMPLE = ((1, 0), (6, 1))


def mobius(mat, tau):
    (a, b), (c, d) = mat
    return (a * tau + b) / (c * tau + d)


def _inverse(mat):
    (a, b), (c, d) = mat
    return ((d, -b), (-c, a))


def in_gamma(mat) -> bool:
    """Membership in Gamma_0(6, 2): c = 0 mod 6 and b = 0 mod 2."""
    (_, b), (c, _) = mat
    return c % 6 == 0 and b % 2 == 0


def coset_representative(mat, bound: int = 6):
    """A short r in Gamma_0(3) with mat r^{-1} in Gamma_0(6, 2).

    Functions invariant under Gamma_0(6, 2) take the same value at mat.tau and r.tau,
    and r.tau stays far from the real axis, which keeps the theta products short.
    """
    best = None
    rng = range(-bound, bound + 1)
    for c in rng:
        if c % 3:
            continue
        for d in rng:
            for a in rng:
                for b in rng:
                    if a * d - b * c != 1:
                        continue
                    r = ((a, b), (c, d))
                    if in_gamma(_matmul(mat, _inverse(r))):
                        key = (c * c + d * d, r)
                        if best is None or key < best:
                            best = key
    if best is None:
        raise ValueError(f"no coset representative within {bound}")
    return best[1]


def seed_values(tau, digits: int = DEFAULT_DIGITS) -> dict:
    """X(u), X(v), X(tau_j), zeta and t at one modular point."""
    return dict(_seed_values(mpmath.mpmathify(tau), digits, mpmath.mp.dps))


# keyed on the ambient precision too, since Taylor expansions revisit the same points
@lru_cache(maxsize=4096)
def _seed_values(tau, digits: int, dps: int) -> tuple:
    f1, f2, f3, f4, f5 = phis(tau, digits)
    two3 = mpmath.cbrt(2)
    i = mpmath.mpc(0, 1)
    values = {
        "u": f1**2 * f3**4 / (two3**2 * f5**4),
        "v": -(two3**4) * f2**2 * f4**4 / f5**4,
        "tau0": 1 / f5,
        "tau1": -f3 * f4 / f5**2,
        "tau2": i * f5**4 / (two3**2 * f1**2 * f2**2 * f3**2 * f4**2),
        "tau3": mpmath.expjpi(mpmath.mpf(1) / 4) * f5 / f3,
        "tau4": mpmath.expjpi(mpmath.mpf(3) / 4) * f5 / f4,
        "zeta": zeta_of(tau, digits),
        "t": t_of(tau, digits),
    }
    return tuple(values.items())


def eval_monomial(mono: TauMonomial, seeds: dict):
    acc = eval_ratzeta(mono.coeff, seeds["zeta"]) * mpmath.expjpi(mpmath.mpf(mono.root24) / 12)
    for name, e in zip(TAU_GENERATORS, mono.exps):
        if e:
            acc *= seeds[name] ** e
    return acc


def eval_normalizer(phi: TauExponent, seeds: dict):
    acc = eval_ratzeta(phi.coeff, seeds["zeta"]) * mpmath.expjpi(mpmath.mpf(phi.root24) / 12)
    acc *= mpmath.cbrt(2) ** phi.pow2third
    acc *= seeds["u"] ** phi.powU * seeds["v"] ** phi.powV
    for j, e in enumerate(phi.powTau):
        acc *= seeds[f"tau{j}"] ** e
    return acc


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def hamiltonians() -> tuple[RatZeta, ...]:
    """X(h_0), ..., X(h_4) for the Picard seed."""
    seed = picard_seed()
    h0 = modified_hamiltonian(seed)
    h1 = modified_hamiltonian(apply_word(("r1",), seed))
    h3 = modified_hamiltonian(apply_word(("r3",), seed))
    h4 = modified_hamiltonian(apply_word(("r4",), seed))
    s1h1 = modified_hamiltonian(apply_word(("s1", "r1"), seed))
    t = seed.t
    h2 = h1 + s1h1 - t / 3 + Fraction(1, 6)
    return h0, h1, h2, h3, h4


def delta_log(f, tau, digits: int):
    """t(t-1) d/dt log f at tau, differentiating along tau."""
    t = t_of(tau, digits)
    df = mpmath.diff(f, tau)
    dt = mpmath.diff(lambda s: t_of(s, digits), tau)
    return t * (t - 1) * df / (f(tau) * dt)


def tep_check(tau, digits: int = DEFAULT_DIGITS) -> dict:
    """Residuals of the modular realisation of the seed tau functions."""
    with workprec(digits):
        tau = mpmath.mpmathify(tau)
        seeds = seed_values(tau, digits)
        zeta, t = seeds["zeta"], seeds["t"]
        res = {}
        res["t=u^2v^4"] = _rel(seeds["u"] ** 2 * seeds["v"] ** 4, t)
        res["1-t=u^4v^2"] = _rel(seeds["u"] ** 4 * seeds["v"] ** 2, 1 - t)
        res["delta u"] = _rel(delta_log(lambda s: seed_values(s, digits)["u"], tau, digits), (t + 1) / 6)
        res["delta v"] = _rel(delta_log(lambda s: seed_values(s, digits)["v"], tau, digits), (t - 2) / 6)
        for j, h in enumerate(hamiltonians()):
            lhs = delta_log(lambda s, j=j: seed_values(s, digits)[f"tau{j}"], tau, digits)
            res[f"delta tau{j}"] = _rel(lhs, eval_ratzeta(h, zeta))
        seed = picard_seed()
        moved = mobius(GAMMA_SAMPLE, tau)
        res["gamma zeta"] = _rel(zeta_of(moved, digits), zeta)
        for name, mat, fq, ft in (
            ("t1", MODULAR_T1, lambda q: 1 / q, lambda x: 1 / x),
            ("t3", MODULAR_T3, lambda q: 1 - q, lambda x: 1 - x),
        ):
            image = mobius(coset_representative(mat), tau)
            zeta2 = zeta_of(image, digits)
            res[f"{name} q"] = _rel(eval_ratzeta(seed.q, zeta2), fq(eval_ratzeta(seed.q, zeta)))
            res[f"{name} t"] = _rel(t_of(image, digits), ft(t))
        return {"residuals": res, "residual": max(res.values())}


def trt_value(l, tau, store=None, digits: int = DEFAULT_DIGITS):
    """(X(tau_l), X(phi_l) * Y-product * t^(k)) at tau."""
    k = klr_map(l)
    if store is not None:
        if k not in store:
            raise MissingDependency(f"t^{k} is not in the lattice")
        tkv = store.get(k)
    else:
        tkv = tk(k)
    seeds = seed_values(tau, digits)
    y = 1
    for kj in k:
        y *= Yseq(kj)
    lhs = eval_monomial(tau_lattice(l), seeds)
    rhs = eval_normalizer(tau_normalizer(l), seeds) * eval_ratzeta(tkv * y, seeds["zeta"])
    return lhs, rhs


def qd_constants(l):
    """(C, G(t) as a pair (a, b) with G = a t + b) after the shift alpha_j -> alpha_j - l_j."""
    l1, l2, l3, l4 = l
    a0, a1, a2, a3, a4 = Fraction(-l0_of(l)), Fraction(-l1), Fraction(1, 2) - l2, Fraction(-l3), Fraction(-l4)
    c = (a0 - 1) ** 2 + a1**2 + a3**2 + a4**2
    ga = (a4 - a3) * (a3 + a4) * (a0 + a1 - 1) * (a0 - a1 - 1)
    gb = (a3 - a1) * (a3 + a1) * (a0 + a4 - 1) * (a0 - a4 - 1)
    return c, (ga, gb)


# Taylor jets: lists of coefficients c_0..c_N of f(tau0 + h)


def _jmul(a, b):
    n = min(len(a), len(b))
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def _jdiv(a, b):
    n = min(len(a), len(b))
    out = []
    for k in range(n):
        out.append((a[k] - sum(out[i] * b[k - i] for i in range(k))) / b[0])
    return out


def _jder(a):
    return [(k + 1) * a[k + 1] for k in range(len(a) - 1)]


def _jconst(c, n: int):
    return [c] + [mpmath.mpf(0)] * (n - 1)


def _jpow(a, e: int):
    out = _jconst(mpmath.mpf(1), len(a))
    for _ in range(abs(e)):
        out = _jmul(out, a)
    return out if e >= 0 else _jdiv(_jconst(mpmath.mpf(1), len(a)), out)


def _jpoly(coeffs, x):
    out = _jconst(mpmath.mpf(0), len(x))
    for c in reversed(coeffs):
        out = _jmul(out, x)
        out[0] += c
    return out


def _jratzeta(r: RatZeta, zeta_jet):
    num, den = r.coeff_lists()
    to_mp = lambda c: mpmath.mpf(int(c))
    return _jdiv(_jpoly([to_mp(c) for c in num], zeta_jet), _jpoly([to_mp(c) for c in den], zeta_jet))


def seed_jets(tau, order: int, digits: int) -> dict:
    """Taylor coefficients in tau of every seed value, to the given order."""
    return dict(_seed_jets(mpmath.mpmathify(tau), order, digits, mpmath.mp.dps))


@lru_cache(maxsize=64)
def _seed_jets(tau, order: int, digits: int, dps: int) -> tuple:
    names = ("zeta", "t") + TAU_GENERATORS
    return tuple((name, mpmath.taylor(lambda s, name=name: seed_values(s, digits)[name], tau, order)) for name in names)


def monomial_jet(mono: TauMonomial, jets: dict):
    """Taylor coefficients of X(mono) assembled from the seed jets."""
    out = _jratzeta(mono.coeff, jets["zeta"])
    phase = mpmath.expjpi(mpmath.mpf(mono.root24) / 12)
    out = [phase * c for c in out]
    for name, e in zip(TAU_GENERATORS, mono.exps):
        if e:
            out = _jmul(out, _jpow(jets[name], e))
    return out


def delta_jets(fj, tj, order: int):
    """[delta^0 f, ..., delta^order f] from Taylor coefficients of f and t, with delta = t(t-1) d/dt."""
    # delta = g d/dtau with g = t(t-1)/t'
    g = _jdiv(_jmul(tj, [c - (1 if i == 0 else 0) for i, c in enumerate(tj)]), _jder(tj))
    out = [fj[0]]
    cur = fj
    for _ in range(order):
        cur = _jmul(g, _jder(cur))
        out.append(cur[0])
    return out


def qd_residual(fj, tj, c, g):
    """Relative residual of the fourth-order bilinear equation, given Taylor jets of f and t."""
    d0, d1, d2, d3, d4 = delta_jets(fj, tj, 4)
    t = tj[0]
    G = g[0] * t + g[1]
    c = mpmath.mpf(c.numerator) / c.denominator
    terms = [
        d4 * d0,
        -4 * d3 * d1,
        2 * (1 - 2 * t) * d3 * d0,
        3 * d2**2,
        -2 * (1 - 2 * t) * d2 * d1,
        -((c - 6) * t * (t - 1) + c - 3) / 3 * d2 * d0,
        (c * (t**2 - t + 1) - 3) / 3 * d1**2,
        c * t * (t - 1) * (2 * t - 1) / 6 * d1 * d0,
        -t * (t - 1) * G / 8 * d0**2,
    ]
    return abs(mpmath.fsum(terms)) / max(abs(x) for x in terms)


def trt_qd_check(l, tau, store=None, digits: int = DEFAULT_DIGITS) -> dict:
    """Relative residuals of the tau identification and of the bilinear equation for tau_l."""
    with workprec(digits):
        tau = mpmath.mpmathify(tau)
        l = tuple(int(v) for v in l)
        lhs, rhs = trt_value(l, tau, store, digits)
        trt = _rel(lhs, rhs)
        mono = tau_lattice(l)
        c, g = qd_constants(l)
        jets = seed_jets(tau, 5, digits)
        g_num = tuple(mpmath.mpf(x.numerator) / x.denominator for x in g)
        qd = qd_residual(monomial_jet(mono, jets), jets["t"], c, g_num)
        if not (mpmath.isfinite(trt) and mpmath.isfinite(qd)):
            raise PrecisionExhausted(f"non-finite residual for l={l}")
        return {"l": l, "trt": trt, "qd": qd}
